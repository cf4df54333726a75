#pragma once

// Exact rational scalars and dense real matrices.
//
// Every operator handled by the exact path is real in the computational
// basis, so RMatrix stores rationals only. Tensor factors follow one global
// convention: party 0 is the most significant index.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ghzact {

using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" (decimal integers). The result is canonical.
Rational parse_rational(const std::string& text);
/// Canonical rendering: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

class RMatrix {
 public:
  RMatrix() = default;
  RMatrix(std::size_t rows, std::size_t cols);
  RMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  RMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RMatrix identity(std::size_t n);
  static RMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  /// Column vector.
  static RMatrix column(const std::vector<Rational>& v);
  /// Outer product u vᵀ of two equal-length vectors.
  static RMatrix outer(std::span<const Rational> u, std::span<const Rational> v);
  /// Diagonal matrix.
  static RMatrix diagonal(const std::vector<Rational>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;
  bool is_zero() const;

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Rational> data() const { return data_; }
  std::span<Rational> data() { return data_; }

  RMatrix transpose() const;
  Rational trace() const;
  std::size_t rank() const;

  RMatrix& operator+=(const RMatrix& o);
  RMatrix& operator-=(const RMatrix& o);
  RMatrix& operator*=(const Rational& s);

  friend RMatrix operator+(RMatrix a, const RMatrix& b) { return a += b; }
  friend RMatrix operator-(RMatrix a, const RMatrix& b) { return a -= b; }
  friend RMatrix operator*(RMatrix a, const Rational& s) { return a *= s; }
  friend RMatrix operator*(const Rational& s, RMatrix a) { return a *= s; }
  friend RMatrix operator*(const RMatrix& a, const RMatrix& b);
  friend bool operator==(const RMatrix& a, const RMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// tr(aᵀ b), the Hilbert–Schmidt product for real matrices.
Rational hs_inner(const RMatrix& a, const RMatrix& b);
/// tr(a b) without forming the product.
Rational trace_of_product(const RMatrix& a, const RMatrix& b);
/// vᵀ a v.
Rational quadratic_form(const RMatrix& a, std::span<const Rational> v);

/// Kronecker product; the index of `a` is the more significant one.
RMatrix tensor(const RMatrix& a, const RMatrix& b);
RMatrix tensor(std::span<const RMatrix> factors);

/// Local dimensions d_0…d_{N-1} of a multipartite operator.
struct SubsystemShape {
  std::vector<std::size_t> dims;

  SubsystemShape() = default;
  explicit SubsystemShape(std::vector<std::size_t> d);
  static SubsystemShape qubits(std::size_t n) { return SubsystemShape(std::vector<std::size_t>(n, 2)); }

  std::size_t parties() const { return dims.size(); }
  std::size_t total() const;
  /// Throws std::invalid_argument unless `a` is square with side total().
  void check(const RMatrix& a) const;
};

/// Traces out every party not listed in `keep`; kept parties stay in
/// ascending order.
RMatrix partial_trace(const RMatrix& a, const SubsystemShape& shape, const std::vector<std::size_t>& keep);

/// Transposes the indices of the listed parties only.
RMatrix partial_transpose(const RMatrix& a, const SubsystemShape& shape, const std::vector<std::size_t>& parties);

/// Reorders tensor factors: factor k of the result is factor order[k] of `a`.
RMatrix permute_subsystems(const RMatrix& a, const SubsystemShape& shape, const std::vector<std::size_t>& order);

/// Reorders party-major (H_1 K_1 … H_N K_N) into grouped (H_1…H_N K_1…K_N).
RMatrix party_major_to_grouped(const RMatrix& a, const std::vector<std::size_t>& first_dims,
                               const std::vector<std::size_t>& second_dims);
RMatrix grouped_to_party_major(const RMatrix& a, const std::vector<std::size_t>& first_dims,
                               const std::vector<std::size_t>& second_dims);

enum class PsdVerdict { psd, not_psd };

struct PsdCertificate {
  PsdVerdict verdict = PsdVerdict::psd;
  /// Set for not_psd: witnessᵀ A witness < 0.
  std::optional<std::vector<Rational>> witness;
  std::vector<Rational> pivot_log;

  bool is_psd() const { return verdict == PsdVerdict::psd; }
};

/// Exact positive-semidefiniteness decision by pivoted symmetric
/// elimination. Throws std::invalid_argument for non-symmetric input.
PsdCertificate psd_check(const RMatrix& a);

}  // namespace ghzact
