#pragma once

// Floating-point lower bound on E(ρ) by alternating over local filters.
// Heuristic: the reported value is a lower bound, never E itself.

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "ghzact/exactmat.hpp"

namespace ghzact {

struct SeesawOptions {
  std::size_t iters = 50;
  std::size_t restarts = 8;
  std::uint64_t seed = 0;
  /// A sweep may not lower the objective by more than this.
  double slack = 1e-12;
};

struct SeesawRun {
  std::uint64_t seed = 0;
  double best = 0;
  /// Objective before the first sweep, then after each sweep.
  std::vector<double> history;
  bool monotone = true;
  std::vector<Eigen::MatrixXd> filters;
};

struct SeesawResult {
  /// max(1/2, best objective): preparing |0…0⟩ always reaches 1/2.
  double lower_bound = 0;
  double best_objective = 0;
  std::vector<SeesawRun> runs;
  bool monotone = true;
};

/// ρ is real symmetric on party-major local dims (each >= 1), output qubit per party.
/// Restart 0 starts from [𝕀_2 | 0] on every party; restart k > 0 from a random
/// filter seeded by (seed, k). Restarts run concurrently; the result depends only
/// on the inputs. Throws std::invalid_argument on a non-PSD or traceless ρ.
SeesawResult seesaw_estimate(const Eigen::MatrixXd& rho, const std::vector<std::size_t>& dims,
                             const SeesawOptions& opts);

/// Objective tr(MρMᵀΦ)/tr(MρMᵀ) for M = ⊗ filters; 0 when the denominator vanishes.
double filter_objective(const Eigen::MatrixXd& rho, const std::vector<std::size_t>& dims,
                        const std::vector<Eigen::MatrixXd>& filters);

Eigen::MatrixXd to_eigen(const RMatrix& m);

}  // namespace ghzact
