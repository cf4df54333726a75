#pragma once

// The LOCC depolarization map Δ onto span{P_r}: closed form, the explicit
// (N+1)-step randomized protocol, and per-subset application.

#include <cstdint>
#include <vector>

#include "ghzact/exactmat.hpp"
#include "ghzact/qcore.hpp"

namespace ghzact {

/// U|i⟩ = sign(i)|perm(i)⟩. Products of Pauli X/Z are of this form.
struct SignedPermutation {
  std::vector<std::size_t> perm;
  std::vector<int> sign;

  static SignedPermutation identity(std::size_t dim);
  /// this ∘ other (apply `other` first).
  SignedPermutation compose(const SignedPermutation& other) const;
  /// U ρ Uᵀ.
  RMatrix conjugate(const RMatrix& rho) const;
  RMatrix matrix() const;
};

/// One protocol branch per choice of step-1 flip, the N-1 σ_z⊗σ_z steps and
/// the final bits y_2…y_N; 2^N · 2^{N-1} unitaries in fixed order.
std::vector<SignedPermutation> protocol_branches(std::size_t n);
/// Local Pauli factor per party for each branch (same order as above).
std::vector<std::vector<RMatrix>> protocol_branch_factors(std::size_t n);

/// Δ(ϱ) = Σ_r ϱ_r P_r with ϱ_± = tr(P_± ϱ), ϱ_x = 2 tr(P_x ϱ).
RMatrix delta_closed(const RMatrix& rho, std::size_t n);
/// Coefficients ϱ_r in ghz_indices order.
std::vector<Rational> delta_coefficients(const RMatrix& rho, std::size_t n);
/// Uniform mixture over the Pauli branches above only. Every branch is a real
/// even-weight σ_z string (possibly after ⊗σ_x), so coherences |x⟩⟨x̄| with
/// x ≠ 0…0 survive and this differs from Δ on generic inputs.
RMatrix delta_pauli_steps(const RMatrix& rho, std::size_t n);
/// Local phase randomization ⊗_n diag(1, i^{k_n}) averaged over every
/// k ∈ Z_4^N with Σ k_n ≡ 0 (mod 4). Each branch is complex; the average is
/// evaluated exactly and its imaginary part is checked to vanish.
RMatrix phase_twirl(const RMatrix& rho, std::size_t n);
/// Number of phase-step branches, 4^{N-1}.
std::size_t phase_branch_count(std::size_t n);
/// Full protocol: Pauli steps followed by the phase step.
RMatrix delta_protocol(const RMatrix& rho, std::size_t n);

/// Applies Δ on the joint space of each subset (parties in each subset must
/// be qubits, |S_m| >= 2, subsets disjoint); parties outside every subset
/// are untouched.
RMatrix delta_subset(const RMatrix& rho, const SubsystemShape& shape,
                     const std::vector<std::vector<std::size_t>>& partition);

struct DepolarizeReport {
  RMatrix input;
  RMatrix closed_form_output;
  RMatrix protocol_output;
  RMatrix pauli_steps_output;
  std::vector<GhzIndex> labels;
  std::vector<Rational> coefficients;

  bool consistent() const { return closed_form_output == protocol_output; }
};

DepolarizeReport depolarize_report(const RMatrix& rho, std::size_t n);

}  // namespace ghzact
