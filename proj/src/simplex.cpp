#include <stdexcept>

#include "ghzact/polylp.hpp"

namespace ghzact {

std::optional<std::vector<Rational>> solve_nonnegative(const RMatrix& a, const std::vector<Rational>& b) {
  const std::size_t m = a.rows(), k = a.cols();
  if (b.size() != m) throw std::invalid_argument("solve_nonnegative: rhs length mismatch");
  if (m == 0) return std::vector<Rational>(k, Rational(0));

  std::vector<int> flip(m, 1);
  for (std::size_t i = 0; i < m; ++i)
    if (b[i] < 0) flip[i] = -1;

  // Reuse existing unit columns as the starting basis where possible.
  std::vector<long> basis(m, -1);
  std::vector<bool> column_used(k, false);
  for (std::size_t j = 0; j < k; ++j) {
    long row = -1;
    bool unit = true;
    for (std::size_t i = 0; i < m && unit; ++i) {
      const Rational v = flip[i] * a(i, j);
      if (v == 0) continue;
      if (v == 1 && row < 0)
        row = static_cast<long>(i);
      else
        unit = false;
    }
    if (unit && row >= 0 && basis[static_cast<std::size_t>(row)] < 0) {
      basis[static_cast<std::size_t>(row)] = static_cast<long>(j);
      column_used[j] = true;
    }
  }
  std::vector<std::size_t> artificial_rows;
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < 0) artificial_rows.push_back(i);
  const std::size_t cols = k + artificial_rows.size();

  // Tableau rows: [coefficients | rhs].
  RMatrix t(m, cols + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < k; ++j)
      if (a(i, j) != 0) t(i, j) = flip[i] * a(i, j);
    t(i, cols) = flip[i] * b[i];
  }
  std::vector<Rational> cost(cols, Rational(0));
  for (std::size_t q = 0; q < artificial_rows.size(); ++q) {
    const std::size_t i = artificial_rows[q];
    t(i, k + q) = 1;
    basis[i] = static_cast<long>(k + q);
    cost[k + q] = 1;
  }

  // Reduced costs d_j = c_j − Σ_i c_{basis(i)} t(i, j), last entry is −objective.
  std::vector<Rational> d(cols + 1, Rational(0));
  for (std::size_t j = 0; j <= cols; ++j) {
    Rational s = j < cols ? cost[j] : Rational(0);
    for (std::size_t i = 0; i < m; ++i)
      if (cost[static_cast<std::size_t>(basis[i])] != 0 && t(i, j) != 0) s -= t(i, j);
    d[j] = s;
  }

  for (;;) {
    // Bland: lowest-index improving column.
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (d[j] < 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t(i, enter) <= 0) continue;
      Rational ratio = t(i, cols) / t(i, enter);
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        best = ratio;
        leave = i;
      }
    }
    if (leave == m) throw std::logic_error("phase-1 simplex is unbounded, which cannot happen");

    const Rational piv = t(leave, enter);
    for (std::size_t j = 0; j <= cols; ++j)
      if (t(leave, j) != 0) t(leave, j) /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t(i, enter) == 0) continue;
      const Rational f = t(i, enter);
      for (std::size_t j = 0; j <= cols; ++j)
        if (t(leave, j) != 0) t(i, j) -= f * t(leave, j);
    }
    if (d[enter] != 0) {
      const Rational f = d[enter];
      for (std::size_t j = 0; j <= cols; ++j)
        if (t(leave, j) != 0) d[j] -= f * t(leave, j);
    }
    basis[leave] = static_cast<long>(enter);
  }

  if (d[cols] != 0) return std::nullopt;  // −objective: positive artificial mass remains
  std::vector<Rational> y(k, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    if (static_cast<std::size_t>(basis[i]) < k) y[static_cast<std::size_t>(basis[i])] = t(i, cols);
  return y;
}

LpResult lp_feasible(const LinearSystem& system) {
  const std::size_t m = system.size(), n = system.dimension();
  LpResult result;
  if (m == 0) {
    result.feasible = true;
    result.point.assign(n, Rational(0));
    return result;
  }
  // a·(u − v) + s = −c with u, v, s >= 0.
  RMatrix a(m, 2 * n + m);
  std::vector<Rational> b(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& row = system.row(i);
    for (std::size_t j = 0; j < n; ++j) {
      a(i, j) = row.coefficients[j];
      a(i, n + j) = -row.coefficients[j];
    }
    a(i, 2 * n + i) = 1;
    b[i] = -row.constant;
  }
  if (auto y = solve_nonnegative(a, b)) {
    result.feasible = true;
    result.point.resize(n);
    for (std::size_t j = 0; j < n; ++j) result.point[j] = (*y)[j] - (*y)[n + j];
    return result;
  }
  // Dual certificate: Σ y_i a_i = 0, Σ y_i c_i = 1, y >= 0.
  RMatrix dual(n + 1, m);
  std::vector<Rational> rhs(n + 1, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) dual(j, i) = system.row(i).coefficients[j];
    dual(n, i) = system.row(i).constant;
  }
  rhs[n] = 1;
  auto y = solve_nonnegative(dual, rhs);
  if (!y) throw std::logic_error("infeasible system without a Farkas certificate");
  result.multipliers = std::move(*y);
  return result;
}

bool verify(const LpResult& result, const LinearSystem& system) {
  if (result.feasible) return result.point.size() == system.dimension() && system.satisfied_by(result.point);
  if (result.multipliers.size() != system.size()) return false;
  std::vector<Rational> combo(system.dimension(), Rational(0));
  Rational constant = 0;
  for (std::size_t i = 0; i < system.size(); ++i) {
    if (result.multipliers[i] < 0) return false;
    for (std::size_t j = 0; j < system.dimension(); ++j)
      combo[j] += result.multipliers[i] * system.row(i).coefficients[j];
    constant += result.multipliers[i] * system.row(i).constant;
  }
  for (const auto& c : combo)
    if (c != 0) return false;
  return constant > 0;
}

std::optional<FarkasCertificate> farkas_combination(const LinearInequality& target, const LinearSystem& system) {
  const std::size_t m = system.size(), n = system.dimension();
  if (target.coefficients.size() != n) throw std::invalid_argument("farkas_combination: variable universe mismatch");
  RMatrix a(n + 1, m + 1);
  std::vector<Rational> b(n + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(j, i) = system.row(i).coefficients[j];
    a(n, i) = system.row(i).constant;
  }
  a(n, m) = -1;  // the tautology −1 <= 0
  for (std::size_t j = 0; j < n; ++j) b[j] = target.coefficients[j];
  b[n] = target.constant;
  auto y = solve_nonnegative(a, b);
  if (!y) return std::nullopt;
  FarkasCertificate cert;
  cert.slack = (*y)[m];
  y->pop_back();
  cert.multipliers = std::move(*y);
  cert.target = target;
  if (!recombines(cert, system)) throw std::logic_error("Farkas certificate failed exact recombination");
  return cert;
}

bool recombines(const FarkasCertificate& cert, const LinearSystem& system) {
  if (cert.multipliers.size() != system.size() || cert.slack < 0) return false;
  std::vector<Rational> combo(system.dimension(), Rational(0));
  Rational constant = -cert.slack;
  for (std::size_t i = 0; i < system.size(); ++i) {
    if (cert.multipliers[i] < 0) return false;
    if (cert.multipliers[i] == 0) continue;
    for (std::size_t j = 0; j < system.dimension(); ++j)
      combo[j] += cert.multipliers[i] * system.row(i).coefficients[j];
    constant += cert.multipliers[i] * system.row(i).constant;
  }
  return combo == cert.target.coefficients && constant == cert.target.constant;
}

}  // namespace ghzact
