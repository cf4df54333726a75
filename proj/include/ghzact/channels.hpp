#pragma once

// Separable completely positive maps in product-Kraus form and the
// Jamiołkowski correspondence.
//
// Convention: Ω(Z) = tr_in(Θ (𝕀_out ⊗ Zᵀ)), with Θ acting on out ⊗ in
// (all output parties first, then all input parties) and built from the
// unnormalized maximally entangled vector Σ_i |i⟩|i⟩.

#include <functional>
#include <vector>

#include "ghzact/exactmat.hpp"
#include "ghzact/qcore.hpp"

namespace ghzact {

/// weight · (M_1 ⊗ … ⊗ M_N) ρ (M_1 ⊗ … ⊗ M_N)ᵀ
struct KrausTerm {
  Rational weight = 1;
  std::vector<RMatrix> factors;
};

class SeparableMap {
 public:
  SeparableMap() = default;
  SeparableMap(std::vector<std::size_t> input_dims, std::vector<std::size_t> output_dims);

  /// Local factor n must be output_dims[n] × input_dims[n]; weight >= 0.
  void add_term(KrausTerm term);

  static SeparableMap identity(const std::vector<std::size_t>& dims);
  /// The real Pauli steps of the depolarization protocol as a product-Kraus
  /// mixture. The closing phase step is complex and not representable here.
  static SeparableMap pauli_protocol(std::size_t n);

  std::size_t parties() const { return input_dims_.size(); }
  const std::vector<std::size_t>& input_dims() const { return input_dims_; }
  const std::vector<std::size_t>& output_dims() const { return output_dims_; }
  SubsystemShape input_shape() const { return SubsystemShape(input_dims_); }
  SubsystemShape output_shape() const { return SubsystemShape(output_dims_); }
  const std::vector<KrausTerm>& terms() const { return terms_; }
  bool is_qubit_to_qubit() const;

  /// The full Kraus operator M_1 ⊗ … ⊗ M_N of term k.
  RMatrix kraus_operator(std::size_t k) const;

 private:
  std::vector<std::size_t> input_dims_;
  std::vector<std::size_t> output_dims_;
  std::vector<KrausTerm> terms_;
};

/// Σ_k w_k K_k ρ K_kᵀ (unnormalized).
RMatrix apply_map(const SeparableMap& omega, const RMatrix& rho);
/// Single term of a map.
RMatrix apply_term(const SeparableMap& omega, std::size_t k, const RMatrix& rho);

/// Θ on out ⊗ in with Ω(Z) = tr_in(Θ(𝕀 ⊗ Zᵀ)).
RMatrix jamiolkowski_state(const SeparableMap& omega);
/// Same correspondence for any linear map given by its action:
/// Θ[(a,i),(b,j)] = Ω(|i⟩⟨j|)(a, b).
RMatrix jamiolkowski_of(const std::function<RMatrix(const RMatrix&)>& omega, std::size_t out_dim, std::size_t in_dim);
/// Inverse direction: evaluates tr_in(Θ(𝕀 ⊗ Zᵀ)).
RMatrix channel_from_theta(const RMatrix& theta, std::size_t out_dim, std::size_t in_dim, const RMatrix& z);

/// Coefficients Θ_rr′ of a Θ of the form Σ Θ_rr′ P_r ⊗ P_r′; row index r is
/// the output label, column index r′ the input label.
struct ThetaCoeffs {
  std::size_t n = 0;
  std::vector<GhzIndex> labels;
  std::vector<Rational> values;  // row-major, labels.size()²

  explicit ThetaCoeffs(std::size_t parties = 2);

  std::size_t size() const { return labels.size(); }
  Rational& at(std::size_t r, std::size_t c) { return values[r * labels.size() + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return values[r * labels.size() + c]; }
  Rational& at(const GhzIndex& r, const GhzIndex& c) { return at(index_position(r, n), index_position(c, n)); }
  const Rational& at(const GhzIndex& r, const GhzIndex& c) const {
    return at(index_position(r, n), index_position(c, n));
  }
  bool all_nonnegative() const;

  friend bool operator==(const ThetaCoeffs& a, const ThetaCoeffs& b) { return a.n == b.n && a.values == b.values; }
};

/// Θ^sol: 1 on (+,+) and (-,-), 2 on (x,x), 0 elsewhere.
ThetaCoeffs theta_sol(std::size_t n);
/// Σ_{r,r′} Θ_rr′ P_r ⊗ P_r′ on out ⊗ in.
RMatrix theta_matrix(const ThetaCoeffs& coeffs);
/// Coefficients of (Δ ⊗ Δ)(Θ) in the P_r ⊗ P_r′ family.
ThetaCoeffs coefficients_of(const RMatrix& theta, std::size_t n);
/// Θ coefficients of Δ∘Ω∘Δ. Requires an N-qubit to N-qubit map.
ThetaCoeffs sandwich_coeffs(const SeparableMap& omega);
/// (Δ ⊗ Δ)(Θ) applied to a 2N-qubit operator on out ⊗ in.
RMatrix depolarize_both(const RMatrix& theta, std::size_t n);

}  // namespace ghzact
