#include "ghzact/pptgen.hpp"

#include <algorithm>
#include <stdexcept>

namespace ghzact {

std::string theta_variable(const GhzIndex& r, const GhzIndex& c) { return "T(" + r.label() + "," + c.label() + ")"; }

std::vector<std::string> theta_variables(std::size_t n) {
  std::vector<std::string> out;
  const auto labels = ghz_indices(n);
  for (const auto& r : labels)
    for (const auto& c : labels) out.push_back(theta_variable(r, c));
  return out;
}

std::vector<Rational> as_point(const ThetaCoeffs& coeffs) { return coeffs.values; }

ThetaCoeffs from_point(std::span<const Rational> point, std::size_t n) {
  ThetaCoeffs t(n);
  if (point.size() != t.values.size()) throw std::invalid_argument("point has wrong dimension for Θ coefficients");
  t.values.assign(point.begin(), point.end());
  return t;
}

std::vector<std::vector<std::size_t>> admissible_subsets(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t p = 0; p + 1 < n; ++p)
      if ((mask >> p) & 1u) s.push_back(p);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [n](const auto& a, const auto& b) {
    return subset_string(a, n) < subset_string(b, n);
  });
  return out;
}

std::uint64_t subset_string(const std::vector<std::size_t>& subset, std::size_t n) {
  std::uint64_t x = 0;
  for (auto p : subset) x |= std::uint64_t{1} << (n - 1 - p);
  return x;
}

void add_ppt_families(LinearSystem& sys, std::size_t n, std::uint64_t xs) {
  const auto P = GhzIndex::plus(), M = GhzIndex::minus(), X = GhzIndex::even(xs);
  auto v = [](const GhzIndex& a, const GhzIndex& b) { return theta_variable(a, b); };
  const Rational one = 1, neg = -1;
  const std::string at = "[x=" + X.label() + "]";

  sys.add_absolute({{v(P, P), one}, {v(P, M), neg}, {v(M, P), one}, {v(M, M), neg}},
                   {{v(P, X), neg}, {v(M, X), neg}}, 0, "ppt-A", "ppt-A" + at);
  sys.add_absolute({{v(P, P), one}, {v(P, M), one}, {v(M, P), neg}, {v(M, M), neg}},
                   {{v(X, P), neg}, {v(X, M), neg}}, 0, "ppt-B", "ppt-B" + at);
  for (const auto& y : ghz_indices(n)) {
    if (!y.is_even() || y.x == xs) continue;
    const std::string aty = "[x=" + X.label() + ",y=" + y.label() + "]";
    sys.add_absolute({{v(P, y), one}, {v(M, y), neg}}, {{v(X, y), neg}}, 0, "ppt-C", "ppt-C" + aty);
    sys.add_absolute({{v(y, P), one}, {v(y, M), neg}}, {{v(y, X), neg}}, 0, "ppt-D", "ppt-D" + aty);
  }
  sys.add_absolute({{v(P, X), one}, {v(M, X), neg}, {v(X, P), one}, {v(X, M), neg}},
                   {{v(P, P), neg}, {v(P, M), one}, {v(M, P), one}, {v(M, M), neg}, {v(X, X), neg}}, 0, "ppt-E",
                   "ppt-E" + at);
  sys.add_absolute({{v(P, X), one}, {v(M, X), neg}, {v(X, P), neg}, {v(X, M), one}},
                   {{v(P, P), one}, {v(P, M), neg}, {v(M, P), neg}, {v(M, M), one}, {v(X, X), neg}}, 0, "ppt-F",
                   "ppt-F" + at);
}

LinearSystem ppt_system(std::size_t n) {
  LinearSystem sys(theta_variables(n));
  for (const auto& name : sys.variables()) sys.add({{name, Rational(-1)}}, 0, "positivity", name + ">=0");
  for (const auto& s : admissible_subsets(n)) add_ppt_families(sys, n, subset_string(s, n));
  return sys;
}

bool PptCrosscheck::agree() const {
  return std::all_of(subsets.begin(), subsets.end(), [](const auto& s) { return s.symbolic_ppt == s.direct_ppt; });
}

bool PptCrosscheck::ppt() const {
  return std::all_of(subsets.begin(), subsets.end(), [](const auto& s) { return s.symbolic_ppt && s.direct_ppt; });
}

PptCrosscheck ppt_crosscheck(const ThetaCoeffs& coeffs) {
  if (!coeffs.all_nonnegative()) throw std::invalid_argument("ppt_crosscheck: coefficients must be non-negative");
  const std::size_t n = coeffs.n;
  const auto point = as_point(coeffs);
  const RMatrix theta = theta_matrix(coeffs);
  const auto shape = SubsystemShape::qubits(2 * n);
  PptCrosscheck report;
  for (const auto& s : admissible_subsets(n)) {
    LinearSystem fam(theta_variables(n));
    add_ppt_families(fam, n, subset_string(s, n));
    std::vector<std::size_t> both = s;
    for (auto p : s) both.push_back(p + n);
    SubsetVerdict v;
    v.subset = s;
    v.symbolic_ppt = fam.satisfied_by(point);
    v.direct_ppt = psd_check(partial_transpose(theta, shape, both)).is_psd();
    report.subsets.push_back(std::move(v));
  }
  return report;
}

}  // namespace ghzact
