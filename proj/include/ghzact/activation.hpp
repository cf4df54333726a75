#pragma once

// Single-copy GHZ fidelity under product filters, the activation filter M̃,
// the witness W = tr_K[ρ(λ𝕀 − Φ)] and the partition quantity Q.
//
// Space conventions: a state "on H ⊗ K" is grouped (H_1…H_N then
// K_1…K_N, K_n a qubit). The filter M̃ acts per party on H_n ⊗ J_n ⊗ K_n
// in that order.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ghzact/channels.hpp"
#include "ghzact/lemmas.hpp"

namespace ghzact {

/// Disjoint subsets S_1…S_M of {0…n-1}, each with at least two parties; the
/// remaining parties form R.
struct PartitionSpec {
  std::size_t n = 0;
  std::vector<std::vector<std::size_t>> subsets;

  /// Throws std::invalid_argument on overlap, out-of-range parties or |S_m| < 2.
  void validate() const;
  std::vector<std::size_t> rest() const;
};

struct FilterResult {
  RMatrix filtered_state;  // unnormalized
  Rational success_weight;
  Rational fidelity;
};

/// Applies the single product Kraus operator (with its weight) and reads the
/// GHZ fidelity of the qubit output. Throws on zero success weight.
FilterResult fidelity_after_filter(const RMatrix& rho, const KrausTerm& filter);
/// Same for a full separable map.
FilterResult fidelity_after_map(const RMatrix& rho, const SeparableMap& omega);

struct DominanceReport {
  Rational mixture_fidelity;
  /// Empty for terms with zero success weight.
  std::vector<std::optional<Rational>> term_fidelities;
  Rational best_single;
  bool holds = false;
};

/// Multi-term fidelity never exceeds the best single-term fidelity.
DominanceReport single_kraus_dominance_check(const RMatrix& rho, const SeparableMap& omega);

/// Failure branch replaced by |0…0⟩: p·f + (1 − p)/2. Requires 0 < p <= 1.
Rational deterministic_upgrade(const Rational& fidelity, const Rational& success_probability);

/// M̃_n = ⟨φ_{H_n J_n}| ⊗ 𝕀_{K_n}. Factors use the unnormalized vector Σ_i |ii⟩
/// and the weight carries Π_n 1/d_n, so the filter equals the one built from
/// normalized φ.
KrausTerm tilde_filter(const std::vector<std::size_t>& h_dims);

/// ρ_{JK} ⊗ σ_H rearranged party-major with local order H_n J_n K_n.
RMatrix filter_input_state(const RMatrix& rho_jk, const RMatrix& sigma_h, const std::vector<std::size_t>& h_dims);

/// tr[ρ(σᵀ ⊗ Z)] for ρ on J ⊗ K (grouped), σ on J, Z on K.
Rational contracted_overlap(const RMatrix& rho_jk, const RMatrix& sigma, const RMatrix& z);

struct FilterIdentityReport {
  std::vector<Rational> lhs;  // tr[M̃(ρ⊗σ)M̃ᵀ Z]
  std::vector<Rational> rhs;  // tr[ρ(σᵀ ⊗ Z)]
  std::optional<Rational> nu;
  Rational expected_nu;  // Π_n 1/d_n
  bool pass = false;
};

/// PASS iff one positive ν satisfies lhs = ν·rhs for every Z in the batch.
FilterIdentityReport verify_filter_identity(const RMatrix& rho_jk, const RMatrix& sigma_h, const std::vector<RMatrix>& zs,
                                            const std::vector<std::size_t>& h_dims);

/// Exact lower bound on E(ρ) for ρ on H ⊗ K: the best of 1/2 and the local
/// filters ⟨a|_H ⊗ 𝕀_K over computational product vectors a, plus 𝕀_H.
Rational e_lower_bound(const RMatrix& rho_hk, const std::vector<std::size_t>& h_dims);

enum class PremiseStatus { violated, unrefuted };

struct Witness {
  RMatrix matrix;
  Rational lambda;
  std::vector<std::size_t> h_dims;
  /// Lower bound on E(ρ); the witness premise E(ρ) <= λ fails when it exceeds λ.
  Rational e_bound;
  PremiseStatus premise = PremiseStatus::unrefuted;

  bool valid() const { return premise != PremiseStatus::violated; }
  /// tr(σᵀ W)
  Rational value(const RMatrix& sigma) const;
  bool detects(const RMatrix& sigma) const { return value(sigma) < 0; }
};

Witness witness_from_rho(const RMatrix& rho_hk, const std::vector<std::size_t>& h_dims, const LambdaParam& lambda);
/// tr[ρ(σᵀ ⊗ (λ𝕀 − Φ))]
Rational condition_value(const RMatrix& rho_hk, const RMatrix& sigma, const std::vector<std::size_t>& h_dims,
                         const LambdaParam& lambda);

/// (2e + 1)/3 for e in [1/2, 1].
Rational teleport_fidelity(const Rational& e);

/// 𝕀_R ⊗ Φ_{S_1} ⊗ … ⊗ Φ_{S_M} on n qubits in natural party order.
RMatrix q_target_operator(const PartitionSpec& partition);
/// tr[ϱ·target]/tr ϱ
Rational q_fidelity(const RMatrix& state, const PartitionSpec& partition);

struct QTrivialBound {
  Rational bound;     // 2^{-M}
  Rational achieved;  // fidelity of the certifying strategy
  std::string strategy;
};

/// Every party prepares |0⟩; evaluated exactly against the target operator.
QTrivialBound q_trivial_bound(const PartitionSpec& partition);

struct ActivationCandidate {
  std::size_t trial = 0;
  RMatrix rho;  // on H ⊗ K, fully separable across parties
  Rational condition;
  /// GHZ fidelity of M̃(ρ ⊗ σ)M̃ᵀ; exceeds λ exactly when condition < 0.
  Rational filtered_fidelity;
};

struct ActivationSearch {
  std::size_t trials = 0;
  std::optional<ActivationCandidate> best;
  bool found = false;
};

/// Heuristic, non-guaranteed search for ρ with E(ρ) <= λ whose witness
/// detects σ. Candidates are mixtures of products of vectors on H_n ⊗ K_n
/// (fully separable across parties, so E(ρ) = 1/2 <= λ); trial 0 is the
/// product of local maximally entangled vectors.
ActivationSearch search_activation(const RMatrix& sigma, const std::vector<std::size_t>& h_dims,
                                   const LambdaParam& lambda, std::size_t trials, std::uint64_t seed);

}  // namespace ghzact
