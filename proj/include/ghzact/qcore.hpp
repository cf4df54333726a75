#pragma once

// N-qubit combinatorics: bit strings, the GHZ label set {+, -, 2, 4, …,
// 2^N-2} and the projector family P_r, plus the named states of the
// catalog.

#include <cstdint>
#include <string>
#include <vector>

#include "ghzact/exactmat.hpp"

namespace ghzact {

/// N-bit string x_1…x_N stored as the binary number with x_1 most significant.
struct BitString {
  std::size_t n = 0;
  std::uint64_t bits = 0;

  BitString complement() const { return {n, bits ^ ((std::uint64_t{1} << n) - 1)}; }
  /// Even strings have x_N = 0.
  bool is_even() const { return (bits & 1u) == 0; }
  int bit(std::size_t party) const { return static_cast<int>((bits >> (n - 1 - party)) & 1u); }
  std::string str() const;
};

/// Label r of a GHZ-diagonal projector: +, -, or an even non-zero string x.
struct GhzIndex {
  enum class Kind { plus, minus, even };
  Kind kind = Kind::plus;
  std::uint64_t x = 0;

  static GhzIndex plus() { return {Kind::plus, 0}; }
  static GhzIndex minus() { return {Kind::minus, 0}; }
  static GhzIndex even(std::uint64_t x) { return {Kind::even, x}; }

  bool is_even() const { return kind == Kind::even; }
  /// "+", "-", or the decimal value of x.
  std::string label() const;
  /// Weight c_r in Δ(ϱ) = Σ_r c_r tr(P_r ϱ) P_r: 1 for ±, 2 for even strings.
  Rational depolarization_weight() const { return is_even() ? 2 : 1; }

  friend bool operator==(const GhzIndex&, const GhzIndex&) = default;
};

/// Ordered label set: +, -, then even strings ascending. Requires n >= 2.
std::vector<GhzIndex> ghz_indices(std::size_t n);
/// Number of even non-zero strings, 2^{n-1} - 1.
std::size_t even_count(std::size_t n);
/// Position of a label in ghz_indices(n).
std::size_t index_position(const GhzIndex& r, std::size_t n);
GhzIndex parse_ghz_index(const std::string& label, std::size_t n);

struct ProjectorFamily {
  std::size_t n = 0;
  std::vector<GhzIndex> labels;
  std::vector<RMatrix> projectors;

  const RMatrix& at(const GhzIndex& r) const { return projectors[index_position(r, n)]; }
  std::size_t size() const { return labels.size(); }
};

/// Projector onto (|0…0⟩ + |1…1⟩)/√2.
RMatrix ghz_projector(std::size_t n);
/// {P_+, P_-, P_x}, P_x = ½(|x⟩⟨x| + |x̄⟩⟨x̄|).
ProjectorFamily projector_family(std::size_t n);
/// Cached shared instance of projector_family(n).
const ProjectorFamily& cached_family(std::size_t n);

/// Three-qubit state proportional to the projector onto the orthocomplement
/// of the shifts unextendible product basis.
RMatrix shifts_state();
/// The four shifts basis vectors with unnormalized |±⟩ = |0⟩ ± |1⟩.
std::vector<std::vector<Rational>> shifts_upb_vectors();
RMatrix all_zero_state(std::size_t n);
RMatrix max_mixed_state(std::size_t n);

/// Catalog lookup for "ghz", "all-zero", "shifts", "max-mixed".
RMatrix catalog_state(const std::string& name, std::size_t n);
std::vector<std::string> catalog_names();

}  // namespace ghzact
