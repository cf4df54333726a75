#include "ghzact/channels.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ghzact/depolarize.hpp"

namespace ghzact {

namespace {

std::size_t product(const std::vector<std::size_t>& dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

}  // namespace

SeparableMap::SeparableMap(std::vector<std::size_t> input_dims, std::vector<std::size_t> output_dims)
    : input_dims_(std::move(input_dims)), output_dims_(std::move(output_dims)) {
  if (input_dims_.size() != output_dims_.size() || input_dims_.empty())
    throw std::invalid_argument("SeparableMap: input and output party counts differ");
}

void SeparableMap::add_term(KrausTerm term) {
  if (term.factors.size() != parties()) throw std::invalid_argument("Kraus term has wrong number of local factors");
  if (term.weight < 0) throw std::invalid_argument("Kraus term weight must be non-negative");
  for (std::size_t n = 0; n < parties(); ++n)
    if (term.factors[n].rows() != output_dims_[n] || term.factors[n].cols() != input_dims_[n])
      throw std::invalid_argument("Kraus factor " + std::to_string(n) + " has shape " +
                                  std::to_string(term.factors[n].rows()) + "x" +
                                  std::to_string(term.factors[n].cols()) + ", expected " +
                                  std::to_string(output_dims_[n]) + "x" + std::to_string(input_dims_[n]));
  terms_.push_back(std::move(term));
}

SeparableMap SeparableMap::identity(const std::vector<std::size_t>& dims) {
  SeparableMap m(dims, dims);
  KrausTerm t;
  for (auto d : dims) t.factors.push_back(RMatrix::identity(d));
  m.add_term(std::move(t));
  return m;
}

SeparableMap SeparableMap::pauli_protocol(std::size_t n) {
  SeparableMap m(std::vector<std::size_t>(n, 2), std::vector<std::size_t>(n, 2));
  auto factors = protocol_branch_factors(n);
  const Rational w(1, static_cast<unsigned long>(factors.size()));
  for (auto& f : factors) m.add_term({w, std::move(f)});
  return m;
}

bool SeparableMap::is_qubit_to_qubit() const {
  auto two = [](std::size_t d) { return d == 2; };
  return std::all_of(input_dims_.begin(), input_dims_.end(), two) &&
         std::all_of(output_dims_.begin(), output_dims_.end(), two);
}

RMatrix SeparableMap::kraus_operator(std::size_t k) const { return tensor(std::span(terms_.at(k).factors)); }

RMatrix apply_term(const SeparableMap& omega, std::size_t k, const RMatrix& rho) {
  omega.input_shape().check(rho);
  const RMatrix K = omega.kraus_operator(k);
  return (K * rho * K.transpose()) * omega.terms()[k].weight;
}

RMatrix apply_map(const SeparableMap& omega, const RMatrix& rho) {
  omega.input_shape().check(rho);
  const std::size_t d = product(omega.output_dims());
  RMatrix out(d, d);
  for (std::size_t k = 0; k < omega.terms().size(); ++k) out += apply_term(omega, k, rho);
  return out;
}

RMatrix jamiolkowski_state(const SeparableMap& omega) {
  const std::size_t dout = product(omega.output_dims());
  const std::size_t din = product(omega.input_dims());
  RMatrix theta(dout * din, dout * din);
  for (std::size_t k = 0; k < omega.terms().size(); ++k) {
    const RMatrix K = omega.kraus_operator(k);
    const Rational& w = omega.terms()[k].weight;
    // Θ += w · vec(K) vec(K)ᵀ with vec(K)[(a, i)] = K(a, i).
    std::vector<std::size_t> support;
    for (std::size_t t = 0; t < K.data().size(); ++t)
      if (K.data()[t] != 0) support.push_back(t);
    for (auto s : support)
      for (auto t : support) theta(s, t) += w * K.data()[s] * K.data()[t];
  }
  return theta;
}

RMatrix jamiolkowski_of(const std::function<RMatrix(const RMatrix&)>& omega, std::size_t out_dim, std::size_t in_dim) {
  RMatrix theta(out_dim * in_dim, out_dim * in_dim);
  for (std::size_t i = 0; i < in_dim; ++i)
    for (std::size_t j = 0; j < in_dim; ++j) {
      RMatrix e(in_dim, in_dim);
      e(i, j) = 1;
      const RMatrix img = omega(e);
      if (img.rows() != out_dim || img.cols() != out_dim) throw std::invalid_argument("jamiolkowski_of: wrong output dimension");
      for (std::size_t a = 0; a < out_dim; ++a)
        for (std::size_t b = 0; b < out_dim; ++b)
          if (img(a, b) != 0) theta(a * in_dim + i, b * in_dim + j) = img(a, b);
    }
  return theta;
}

RMatrix channel_from_theta(const RMatrix& theta, std::size_t out_dim, std::size_t in_dim, const RMatrix& z) {
  if (theta.rows() != out_dim * in_dim || !theta.is_square())
    throw std::invalid_argument("channel_from_theta: Θ has wrong dimension");
  if (z.rows() != in_dim || z.cols() != in_dim) throw std::invalid_argument("channel_from_theta: Z has wrong dimension");
  RMatrix out(out_dim, out_dim);
  // out(a, b) = Σ_{i,j} Θ[(a,i),(b,j)] Zᵀ(j, i) = Σ Θ[(a,i),(b,j)] Z(i, j)
  for (std::size_t a = 0; a < out_dim; ++a)
    for (std::size_t b = 0; b < out_dim; ++b) {
      Rational s = 0;
      for (std::size_t i = 0; i < in_dim; ++i)
        for (std::size_t j = 0; j < in_dim; ++j) {
          const Rational& t = theta(a * in_dim + i, b * in_dim + j);
          if (t != 0 && z(i, j) != 0) s += t * z(i, j);
        }
      out(a, b) = s;
    }
  return out;
}

ThetaCoeffs::ThetaCoeffs(std::size_t parties) : n(parties), labels(ghz_indices(parties)) {
  values.assign(labels.size() * labels.size(), Rational(0));
}

bool ThetaCoeffs::all_nonnegative() const {
  return std::all_of(values.begin(), values.end(), [](const Rational& q) { return q >= 0; });
}

ThetaCoeffs theta_sol(std::size_t n) {
  ThetaCoeffs t(n);
  for (std::size_t r = 0; r < t.size(); ++r) t.at(r, r) = t.labels[r].is_even() ? 2 : 1;
  return t;
}

RMatrix theta_matrix(const ThetaCoeffs& coeffs) {
  const auto& fam = cached_family(coeffs.n);
  const std::size_t d = std::size_t{1} << coeffs.n;
  RMatrix theta(d * d, d * d);
  for (std::size_t r = 0; r < coeffs.size(); ++r)
    for (std::size_t c = 0; c < coeffs.size(); ++c)
      if (coeffs.at(r, c) != 0) theta += tensor(fam.projectors[r], fam.projectors[c]) * coeffs.at(r, c);
  return theta;
}

ThetaCoeffs coefficients_of(const RMatrix& theta, std::size_t n) {
  const auto& fam = cached_family(n);
  const std::size_t d = std::size_t{1} << n;
  if (!theta.is_square() || theta.rows() != d * d) throw std::invalid_argument("coefficients_of: Θ has wrong dimension");
  struct Entry {
    std::size_t i, j;
    Rational v;
  };
  std::vector<std::vector<Entry>> sparse(fam.size());
  for (std::size_t k = 0; k < fam.size(); ++k)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (fam.projectors[k](i, j) != 0) sparse[k].push_back({i, j, fam.projectors[k](i, j)});
  ThetaCoeffs out(n);
  for (std::size_t r = 0; r < fam.size(); ++r)
    for (std::size_t c = 0; c < fam.size(); ++c) {
      // tr((P_r ⊗ P_c) Θ)
      Rational s = 0;
      for (const auto& e : sparse[r])
        for (const auto& f : sparse[c]) {
          const Rational& t = theta(e.j * d + f.j, e.i * d + f.i);
          if (t != 0) s += e.v * f.v * t;
        }
      out.at(r, c) = fam.labels[r].depolarization_weight() * fam.labels[c].depolarization_weight() * s;
    }
  return out;
}

ThetaCoeffs sandwich_coeffs(const SeparableMap& omega) {
  if (!omega.is_qubit_to_qubit()) throw std::invalid_argument("sandwich_coeffs: map must act on qubits only");
  return coefficients_of(jamiolkowski_state(omega), omega.parties());
}

RMatrix depolarize_both(const RMatrix& theta, std::size_t n) {
  std::vector<std::size_t> out_parties(n), in_parties(n);
  std::iota(out_parties.begin(), out_parties.end(), std::size_t{0});
  std::iota(in_parties.begin(), in_parties.end(), n);
  return delta_subset(theta, SubsystemShape::qubits(2 * n), {out_parties, in_parties});
}

}  // namespace ghzact
