#pragma once

// Verification pipelines for the two structural lemmas about Δ∘Ω∘Δ maps:
// the full inequality system, its symmetry reduction to ten unknowns,
// uniqueness of Θ^sol for λ > 1/2, the λ = 1/2 cone, and the block
// decomposition of (𝕀 ⊗ Δ)∘Ω∘Δ.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ghzact/channels.hpp"
#include "ghzact/linear_system.hpp"
#include "ghzact/polylp.hpp"

namespace ghzact {

/// Threshold λ ∈ [1/2, 1).
class LambdaParam {
 public:
  explicit LambdaParam(Rational value);
  static LambdaParam parse(const std::string& text) { return LambdaParam(parse_rational(text)); }
  const Rational& value() const { return value_; }

 private:
  Rational value_;
};

/// g_N = 2^{N-1} - 1, the number of even non-zero strings.
Rational g_coefficient(std::size_t n);

/// Order: ++, +-, -+, --, +2, -2, 2+, 2-, 22, 24.
inline constexpr std::array<const char*, 10> kReducedNames{"T(+,+)", "T(+,-)", "T(-,+)", "T(-,-)", "T(+,2)",
                                                           "T(-,2)", "T(2,+)", "T(2,-)", "T(2,2)", "T(2,4)"};

struct ReducedTheta {
  std::array<Rational, 10> values{};

  static ReducedTheta from_point(std::span<const Rational> point);
  std::vector<Rational> point() const { return {values.begin(), values.end()}; }
  friend bool operator==(const ReducedTheta&, const ReducedTheta&) = default;
};

/// (1,0,0,1,0,0,0,0,2,0)
ReducedTheta reduced_theta_sol();

/// Non-negativity, the PPT families and the three output-bound families.
LinearSystem lemma1_full_system(std::size_t n, const LambdaParam& lambda);

/// Average of Θ_{π(r)π(r′)} over all permutations π of the even labels.
ThetaCoeffs group_average(const ThetaCoeffs& coeffs);
/// Explicit sum over all (2^{N-1}-1)! permutations; only for small N.
ThetaCoeffs group_average_bruteforce(const ThetaCoeffs& coeffs);
bool is_invariant(const ThetaCoeffs& coeffs);
/// Reads the ten numbers of an invariant Θ (n >= 3 uses labels 2 and 4;
/// n = 2 reports Θ_24 = 0).
ReducedTheta reduce(const ThetaCoeffs& coeffs);
/// Invariant Θ with the given ten numbers.
ThetaCoeffs embed(const ReducedTheta& reduced, std::size_t n);

/// The ten-unknown system with g_N substituted. For n = 2 there is a single
/// even string, Θ_24 has no counterpart and is pinned to 0, and the
/// x ≠ x′ families are absent.
LinearSystem reduced_system(std::size_t n, const LambdaParam& lambda);
/// The same system obtained mechanically by substituting the invariant
/// embedding into lemma1_full_system.
LinearSystem reduced_system_by_substitution(std::size_t n, const LambdaParam& lambda);

/// The 20 bounds 1 <= Θ++, Θ-- <= 1, 2 <= Θ22 <= 2, 0 <= others <= 0,
/// each as a LinearInequality over kReducedNames with a readable label.
std::vector<std::pair<std::string, LinearInequality>> bounding_inequalities();

struct UniquenessReport {
  std::size_t n = 0;
  Rational lambda;
  Polyhedron polyhedron;
  bool enumeration_unique = false;
  std::vector<std::string> target_labels;
  std::vector<std::optional<FarkasCertificate>> certificates;
  bool certificates_complete = false;
  std::size_t inequality_count = 0;

  bool pass() const { return enumeration_unique && certificates_complete; }
};

/// Requires λ > 1/2.
UniquenessReport verify_unique_solution(std::size_t n, const LambdaParam& lambda);

struct ConeReport {
  std::size_t n = 0;
  Polyhedron polyhedron;
  bool vertex_is_sol = false;
  /// Reduced images of Θ^[r] = P_r ⊗ (P_+ + P_-) for r = +, -, x.
  std::vector<std::vector<Rational>> generator_images;
  /// ray index -> non-negative weights on generator_images reproducing it.
  std::vector<std::optional<std::vector<Rational>>> ray_decompositions;
  bool rays_within_generator_cone = false;
  /// Ray set equals the generator images up to positive scaling.
  bool rays_equal_generators = false;
  /// Every generator direction is reached by the cone (generator ∈ cone of rays).
  std::vector<bool> generator_is_recession_direction;
  /// The vertex sends (½𝕀 − P_+) to itself and every ray sends it to 0.
  bool fixed_output = false;
  /// n > 2: solution set coincides with the n = 2 cone.
  std::optional<bool> matches_two_party_cone;

  bool pass() const;
};

ConeReport half_lambda_cone(std::size_t n);

/// Applies the map encoded by coefficients: Z ↦ Σ Θ_rr′ tr(P_r′ Z) P_r.
RMatrix apply_coefficients(const ThetaCoeffs& coeffs, const RMatrix& z);

struct Lemma2Report {
  std::size_t n = 0;
  std::vector<std::size_t> h_dims;
  Rational lambda;
  RMatrix output;  // (𝕀_H ⊗ Δ_K)∘Ω∘Δ(λ𝕀 − Φ) on H ⊗ K
  std::vector<GhzIndex> labels;
  /// σ_r on H. The P_x blocks carry the depolarization weight c_x = 2, so
  /// σ⊗(λ𝕀 − Φ) yields σ_r = σ for every r.
  std::vector<RMatrix> sigma;
  std::vector<Rational> sigma_traces;
  bool form_matches = false;  // output == (λ-1)σ_+⊗P_+ + λΣ_{r≠+} c_r σ_r⊗P_r
  bool all_equal = false;
  bool product_form = false;  // output == σ ⊗ (λ𝕀 − Φ)
};

/// Ω maps N qubits to parties with local space H_n ⊗ K_n (H_n first,
/// K_n a qubit), so every output dimension must be even.
Lemma2Report lemma2_decompose(const SeparableMap& omega, const LambdaParam& lambda);

}  // namespace ghzact
