#include "ghzact/exactmat.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ghzact {

Rational parse_rational(const std::string& text) {
  auto is_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("malformed rational literal: '" + text + "'");
  mpz_class n(num[0] == '+' ? num.substr(1) : num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw std::invalid_argument("zero denominator in rational literal: '" + text + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

RMatrix::RMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

RMatrix::RMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw std::invalid_argument("RMatrix: entry count != rows*cols");
}

RMatrix::RMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("RMatrix: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RMatrix RMatrix::identity(std::size_t n) {
  RMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RMatrix RMatrix::column(const std::vector<Rational>& v) { return RMatrix(v.size(), 1, v); }

RMatrix RMatrix::outer(std::span<const Rational> u, std::span<const Rational> v) {
  RMatrix m(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = u[i] * v[j];
  }
  return m;
}

RMatrix RMatrix::diagonal(const std::vector<Rational>& d) {
  RMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

bool RMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool RMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q == 0; });
}

RMatrix RMatrix::transpose() const {
  RMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Rational RMatrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace of non-square matrix");
  Rational t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

std::size_t RMatrix::rank() const {
  RMatrix m = *this;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t p = r;
    while (p < rows_ && m(p, c) == 0) ++p;
    if (p == rows_) continue;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(m(r, j), m(p, j));
    for (std::size_t i = r + 1; i < rows_; ++i) {
      if (m(i, c) == 0) continue;
      Rational f = m(i, c) / m(r, c);
      for (std::size_t j = c; j < cols_; ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

RMatrix& RMatrix::operator+=(const RMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

RMatrix& RMatrix::operator-=(const RMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

RMatrix& RMatrix::operator*=(const Rational& s) {
  for (auto& q : data_) q *= s;
  return *this;
}

RMatrix operator*(const RMatrix& a, const RMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  RMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b(k, j) != 0) c(i, j) += aik * b(k, j);
    }
  return c;
}

bool operator==(const RMatrix& a, const RMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Rational hs_inner(const RMatrix& a, const RMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("hs_inner: shape mismatch");
  Rational s = 0;
  for (std::size_t k = 0; k < a.data().size(); ++k)
    if (a.data()[k] != 0 && b.data()[k] != 0) s += a.data()[k] * b.data()[k];
  return s;
}

Rational trace_of_product(const RMatrix& a, const RMatrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) throw std::invalid_argument("trace_of_product: shape mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (a(i, k) != 0 && b(k, i) != 0) s += a(i, k) * b(k, i);
  return s;
}

Rational quadratic_form(const RMatrix& a, std::span<const Rational> v) {
  if (!a.is_square() || a.rows() != v.size()) throw std::invalid_argument("quadratic_form: shape mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    Rational row = 0;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) row += a(i, j) * v[j];
    s += v[i] * row;
  }
  return s;
}

RMatrix tensor(const RMatrix& a, const RMatrix& b) {
  RMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Rational& aij = a(i, j);
      if (aij == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (b(k, l) != 0) c(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return c;
}

RMatrix tensor(std::span<const RMatrix> factors) {
  if (factors.empty()) return RMatrix::identity(1);
  RMatrix acc = factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) acc = tensor(acc, factors[k]);
  return acc;
}

SubsystemShape::SubsystemShape(std::vector<std::size_t> d) : dims(std::move(d)) {
  for (auto x : dims)
    if (x < 1) throw std::invalid_argument("SubsystemShape: zero local dimension");
}

std::size_t SubsystemShape::total() const {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

void SubsystemShape::check(const RMatrix& a) const {
  if (!a.is_square() || a.rows() != total())
    throw std::invalid_argument("operator of size " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                " does not match subsystem shape of total dimension " + std::to_string(total()));
}

namespace {

std::vector<std::size_t> digits(std::size_t index, const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> d(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    d[k] = index % dims[k];
    index /= dims[k];
  }
  return d;
}

std::size_t compose(const std::vector<std::size_t>& d, const std::vector<std::size_t>& dims) {
  std::size_t index = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) index = index * dims[k] + d[k];
  return index;
}

void check_parties(const SubsystemShape& shape, const std::vector<std::size_t>& parties) {
  std::vector<bool> seen(shape.parties(), false);
  for (auto p : parties) {
    if (p >= shape.parties()) throw std::invalid_argument("party index out of range");
    if (seen[p]) throw std::invalid_argument("repeated party index");
    seen[p] = true;
  }
}

}  // namespace

RMatrix partial_trace(const RMatrix& a, const SubsystemShape& shape, const std::vector<std::size_t>& keep) {
  shape.check(a);
  check_parties(shape, keep);
  std::vector<bool> kept(shape.parties(), false);
  for (auto p : keep) kept[p] = true;
  std::vector<std::size_t> keep_dims, keep_order;
  for (std::size_t p = 0; p < shape.parties(); ++p)
    if (kept[p]) {
      keep_dims.push_back(shape.dims[p]);
      keep_order.push_back(p);
    }
  std::size_t out_dim = 1;
  for (auto d : keep_dims) out_dim *= d;
  RMatrix out(out_dim, out_dim);
  const std::size_t n = shape.total();
  std::vector<std::size_t> kd(keep_order.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto di = digits(i, shape.dims);
    for (std::size_t j = 0; j < n; ++j) {
      if (a(i, j) == 0) continue;
      const auto dj = digits(j, shape.dims);
      bool diag = true;
      for (std::size_t p = 0; p < shape.parties() && diag; ++p)
        if (!kept[p] && di[p] != dj[p]) diag = false;
      if (!diag) continue;
      for (std::size_t k = 0; k < keep_order.size(); ++k) kd[k] = di[keep_order[k]];
      const std::size_t oi = compose(kd, keep_dims);
      for (std::size_t k = 0; k < keep_order.size(); ++k) kd[k] = dj[keep_order[k]];
      const std::size_t oj = compose(kd, keep_dims);
      out(oi, oj) += a(i, j);
    }
  }
  return out;
}

RMatrix partial_transpose(const RMatrix& a, const SubsystemShape& shape, const std::vector<std::size_t>& parties) {
  shape.check(a);
  check_parties(shape, parties);
  const std::size_t n = shape.total();
  RMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto di = digits(i, shape.dims);
    for (std::size_t j = 0; j < n; ++j) {
      if (a(i, j) == 0) continue;
      auto dj = digits(j, shape.dims);
      auto ei = di;
      for (auto p : parties) {
        ei[p] = dj[p];
        dj[p] = di[p];
      }
      out(compose(ei, shape.dims), compose(dj, shape.dims)) = a(i, j);
    }
  }
  return out;
}

RMatrix permute_subsystems(const RMatrix& a, const SubsystemShape& shape, const std::vector<std::size_t>& order) {
  shape.check(a);
  if (order.size() != shape.parties()) throw std::invalid_argument("permute_subsystems: order is not a permutation");
  check_parties(shape, order);
  std::vector<std::size_t> new_dims(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) new_dims[k] = shape.dims[order[k]];
  const std::size_t n = shape.total();
  std::vector<std::size_t> map(n);
  std::vector<std::size_t> nd(order.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto di = digits(i, shape.dims);
    for (std::size_t k = 0; k < order.size(); ++k) nd[k] = di[order[k]];
    map[i] = compose(nd, new_dims);
  }
  RMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a(i, j) != 0) out(map[i], map[j]) = a(i, j);
  return out;
}

RMatrix party_major_to_grouped(const RMatrix& a, const std::vector<std::size_t>& first_dims,
                               const std::vector<std::size_t>& second_dims) {
  const std::size_t n = first_dims.size();
  if (second_dims.size() != n) throw std::invalid_argument("party_major_to_grouped: party count mismatch");
  std::vector<std::size_t> dims, order;
  for (std::size_t p = 0; p < n; ++p) {
    dims.push_back(first_dims[p]);
    dims.push_back(second_dims[p]);
  }
  for (std::size_t p = 0; p < n; ++p) order.push_back(2 * p);
  for (std::size_t p = 0; p < n; ++p) order.push_back(2 * p + 1);
  return permute_subsystems(a, SubsystemShape(dims), order);
}

RMatrix grouped_to_party_major(const RMatrix& a, const std::vector<std::size_t>& first_dims,
                               const std::vector<std::size_t>& second_dims) {
  const std::size_t n = first_dims.size();
  if (second_dims.size() != n) throw std::invalid_argument("grouped_to_party_major: party count mismatch");
  std::vector<std::size_t> dims(first_dims), order;
  dims.insert(dims.end(), second_dims.begin(), second_dims.end());
  for (std::size_t p = 0; p < n; ++p) {
    order.push_back(p);
    order.push_back(n + p);
  }
  return permute_subsystems(a, SubsystemShape(dims), order);
}

PsdCertificate psd_check(const RMatrix& a) {
  if (!a.is_symmetric()) throw std::invalid_argument("psd_check: input is not symmetric");
  const std::size_t n = a.rows();
  PsdCertificate cert;
  // Invariant: s(i,j) == basis[i]ᵀ A basis[j] for every still-active i, j.
  RMatrix s = a;
  std::vector<std::vector<Rational>> basis(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) basis[i][i] = 1;
  std::vector<bool> active(n, true);

  auto fail = [&](std::vector<Rational> w) {
    cert.verdict = PsdVerdict::not_psd;
    cert.witness = std::move(w);
    return cert;
  };

  for (std::size_t step = 0; step < n; ++step) {
    std::optional<std::size_t> pivot;
    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i]) continue;
      if (s(i, i) < 0) return fail(basis[i]);
      if (s(i, i) > 0 && !pivot) pivot = i;
    }
    if (!pivot) {
      // All remaining diagonal entries vanish: any nonzero residual entry
      // yields a direction with negative curvature.
      for (std::size_t i = 0; i < n; ++i) {
        if (!active[i]) continue;
        for (std::size_t j = i + 1; j < n; ++j) {
          if (!active[j] || s(i, j) == 0) continue;
          std::vector<Rational> w = basis[i];
          const int sign = s(i, j) > 0 ? 1 : -1;
          for (std::size_t k = 0; k < n; ++k) w[k] -= sign * basis[j][k];
          cert.pivot_log.push_back(0);
          return fail(std::move(w));
        }
      }
      break;
    }
    const std::size_t p = *pivot;
    const Rational piv = s(p, p);
    cert.pivot_log.push_back(piv);
    active[p] = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i] || s(i, p) == 0) continue;
      const Rational f = s(i, p) / piv;
      for (std::size_t j = 0; j < n; ++j)
        if (active[j] && s(p, j) != 0) s(i, j) -= f * s(p, j);
      for (std::size_t k = 0; k < n; ++k)
        if (basis[p][k] != 0) basis[i][k] -= f * basis[p][k];
    }
    for (std::size_t i = 0; i < n; ++i)
      if (active[i]) s(p, i) = s(i, p) = 0;
  }
  return cert;
}

}  // namespace ghzact
