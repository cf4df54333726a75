#include "ghzact/random.hpp"

#include <algorithm>

namespace ghzact {

namespace {

std::vector<Rational> nonzero_vector(std::size_t dim, Rng& rng) {
  std::vector<Rational> v(dim);
  do
    for (auto& x : v) x = random_int(rng, -2, 2);
  while (std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; }));
  return v;
}

}  // namespace

long random_int(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

RMatrix random_state(std::size_t dim, Rng& rng, std::size_t terms) {
  RMatrix out(dim, dim);
  for (std::size_t t = 0; t < std::max<std::size_t>(terms, 1); ++t) {
    const auto v = nonzero_vector(dim, rng);
    out += RMatrix::outer(v, v) * Rational(random_int(rng, 1, 3));
  }
  return out * (1 / out.trace());
}

RMatrix random_symmetric(std::size_t dim, Rng& rng, long range) {
  RMatrix out(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i; j < dim; ++j) {
      Rational q(random_int(rng, -range, range), random_int(rng, 1, 3));
      q.canonicalize();
      out(i, j) = out(j, i) = q;
    }
  return out;
}

ThetaCoeffs random_coefficients(std::size_t n, Rng& rng) {
  if (random_int(rng, 0, 1) == 1) {
    const std::vector<std::size_t> qubits(n, 2);
    return sandwich_coeffs(random_separable_map(qubits, qubits, static_cast<std::size_t>(random_int(rng, 1, 3)), rng));
  }
  ThetaCoeffs c = theta_sol(n);
  for (auto& v : c.values) v = random_int(rng, 0, 3);
  return c;
}

SeparableMap random_separable_map(const std::vector<std::size_t>& input_dims,
                                  const std::vector<std::size_t>& output_dims, std::size_t terms, Rng& rng) {
  SeparableMap map(input_dims, output_dims);
  for (std::size_t t = 0; t < terms; ++t) {
    KrausTerm term;
    term.weight = random_int(rng, 1, 3);
    for (std::size_t p = 0; p < input_dims.size(); ++p) {
      RMatrix f(output_dims[p], input_dims[p]);
      do
        for (auto& x : f.data()) x = random_int(rng, -2, 2);
      while (f.is_zero());
      term.factors.push_back(std::move(f));
    }
    map.add_term(std::move(term));
  }
  return map;
}

}  // namespace ghzact
