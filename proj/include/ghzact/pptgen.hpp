#pragma once

// PPT conditions for GHZ-diagonal two-copy operators Θ = Σ Θ_rr′ P_r ⊗ P_r′,
// generated symbolically and cross-checked against exact PSD tests of the
// partial transposes.
//
// Family names used in tags (x = x_S is the string of the transposed
// subset S, y ranges over the other even strings):
//   ppt-A  |Θ++ − Θ+- + Θ-+ − Θ--| − Θ+x − Θ-x <= 0
//   ppt-B  |Θ++ + Θ+- − Θ-+ − Θ--| − Θx+ − Θx- <= 0
//   ppt-C  |Θ+y − Θ-y| − Θxy <= 0
//   ppt-D  |Θy+ − Θy-| − Θyx <= 0
//   ppt-E  |Θ+x − Θ-x + Θx+ − Θx-| − Θ++ + Θ+- + Θ-+ − Θ-- − Θxx <= 0
//   ppt-F  |Θ+x − Θ-x − Θx+ + Θx-| + Θ++ − Θ+- − Θ-+ + Θ-- − Θxx <= 0

#include <string>
#include <vector>

#include "ghzact/channels.hpp"
#include "ghzact/linear_system.hpp"

namespace ghzact {

/// "T(r,c)" for output label r and input label c.
std::string theta_variable(const GhzIndex& r, const GhzIndex& c);
/// All Θ variables in row-major label order.
std::vector<std::string> theta_variables(std::size_t n);
/// ThetaCoeffs values as a point in theta_variables order.
std::vector<Rational> as_point(const ThetaCoeffs& coeffs);
ThetaCoeffs from_point(std::span<const Rational> point, std::size_t n);

/// Subsets S ⊆ {0…n-2}, S ≠ ∅ (the last party is never transposed); each
/// maps to the even string x_S.
std::vector<std::vector<std::size_t>> admissible_subsets(std::size_t n);
std::uint64_t subset_string(const std::vector<std::size_t>& subset, std::size_t n);

/// The PPT families for one transposed subset; tags are "ppt-A" … "ppt-F",
/// labels carry the subset string.
void add_ppt_families(LinearSystem& system, std::size_t n, std::uint64_t xs);
/// Full system over Θ_rr′: non-negativity plus every subset's families.
LinearSystem ppt_system(std::size_t n);

struct SubsetVerdict {
  std::vector<std::size_t> subset;
  bool symbolic_ppt = false;
  bool direct_ppt = false;
};

struct PptCrosscheck {
  std::vector<SubsetVerdict> subsets;
  bool agree() const;
  bool ppt() const;
};

/// Evaluates the symbolic families and psd_check of Θ^{T_S} (transposing
/// both copies of each party in S) for every admissible S. Throws
/// std::invalid_argument on negative coefficients.
PptCrosscheck ppt_crosscheck(const ThetaCoeffs& coeffs);

}  // namespace ghzact
