#pragma once

// Independent reference computations used only by the tests. They share no
// code with the library paths they check.

#include <vector>

#include "ghzact/exactmat.hpp"

namespace oracle {

using ghzact::RMatrix;
using ghzact::Rational;

/// Coefficients of det(tI − A), highest degree first (Faddeev–LeVerrier).
inline std::vector<Rational> characteristic_polynomial(const RMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<Rational> c(n + 1);
  c[0] = 1;
  RMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    RMatrix next = a * m;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[k - 1];
    m = next;
    c[k] = -(a * m).trace() / static_cast<long>(k);
  }
  return c;
}

/// A symmetric matrix has only real eigenvalues, so it is PSD iff det(tI − A)
/// has no negative root, iff (Descartes) the coefficients of p(−t) never change sign.
inline bool psd_by_descartes(const RMatrix& a) {
  const auto c = characteristic_polynomial(a);
  const std::size_t n = c.size() - 1;
  int sign = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    // coefficient of t^{n-k} in p(−t) is c_k (−1)^{n−k}
    Rational v = (n - k) % 2 == 0 ? c[k] : Rational(-c[k]);
    const int s = sgn(v);
    if (s == 0) continue;
    if (sign != 0 && s != sign) return false;
    sign = s;
  }
  return true;
}

/// Entry of a tensor-product index in mixed radix, most significant first.
inline std::vector<std::size_t> digits(std::size_t index, const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> d(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    d[k] = index % dims[k];
    index /= dims[k];
  }
  return d;
}

inline std::size_t index_of(const std::vector<std::size_t>& d, const std::vector<std::size_t>& dims) {
  std::size_t index = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) index = index * dims[k] + d[k];
  return index;
}

}  // namespace oracle
