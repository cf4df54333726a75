#pragma once

// Verification suites behind the command-line tool. Every function is
// deterministic for fixed arguments and returns one or more reports.

#include <cstdint>
#include <string>
#include <vector>

#include "ghzact/activation.hpp"
#include "ghzact/io.hpp"
#include "ghzact/seesaw.hpp"

namespace ghzact {

inline constexpr const char* kVersion = "0.1.0";

enum class Status { pass, fail, inconclusive };
std::string to_string(Status s);

struct Report {
  std::string check;
  Json params = Json::object();
  Status status = Status::fail;
  Json details = Json::object();

  bool passed() const { return status == Status::pass; }
  /// Key order check, params, status, details, version (then runtime_ms if given).
  Json to_json(std::optional<double> runtime_ms = std::nullopt) const;
  /// One status line plus the scalar details, indented.
  std::string to_text() const;
};

inline Status status_of(bool ok) { return ok ? Status::pass : Status::fail; }

/// Δ(𝕀) = 𝕀, Δ(Φ) = Φ, the catalog states and `trials` random states; one
/// report per state comparing the closed form with the protocol mixture.
std::vector<Report> check_depolarization(std::size_t n, std::size_t trials, std::uint64_t seed);
/// Symbolic PPT verdict against exact PSD of every admissible partial transpose.
Report check_ppt(std::size_t n, std::size_t trials, std::uint64_t seed);
Report check_jamiolkowski(std::size_t n);
Report check_lemma1(std::size_t n, const LambdaParam& lambda);
Report check_cone(std::size_t n);
Report check_lemma2(const SeparableMap& omega, const LambdaParam& lambda);
/// Random (ρ, σ) pairs on qubit ℋ_n with `z_count` operators Z each.
Report check_filter_identity(std::size_t n, std::size_t trials, std::size_t z_count, std::uint64_t seed);
/// Random witness instances comparing tr(σᵀW) with the contracted condition.
Report check_witness_consistency(std::size_t n, std::size_t trials, std::uint64_t seed);
Report check_shifts();
Report check_dominance(std::size_t n, std::size_t trials, std::uint64_t seed);

/// Witness built from ρ on H ⊗ K evaluated on σ. Inconclusive when the
/// premise E(ρ) <= λ is refuted by the exact lower bound.
Report witness_report(const RMatrix& rho_hk, const RMatrix& sigma, const std::vector<std::size_t>& h_dims,
                      const LambdaParam& lambda);
/// Exact GHZ fidelity after the filter; multi-term maps also run the dominance check.
/// Heuristic, non-guaranteed search for a fully separable ρ whose witness
/// detects σ; `pass` when one is found, `inconclusive` otherwise.
Report activation_search_report(const RMatrix& sigma, const std::vector<std::size_t>& h_dims, const LambdaParam& lambda,
                                std::size_t trials, std::uint64_t seed);
Report fidelity_report(const RMatrix& state, const SeparableMap& filter);
Report seesaw_report(const RMatrix& state, const std::vector<std::size_t>& dims, const SeesawOptions& opts);
/// V-form of an arbitrary H-form system; throws GuardExceeded.
Report enumerate_report(const LinearSystem& system);
Report catalog_report(std::size_t n);

}  // namespace ghzact
