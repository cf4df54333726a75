#include <doctest.h>

#include "ghzact/depolarize.hpp"
#include "ghzact/pptgen.hpp"
#include "ghzact/random.hpp"

using namespace ghzact;

namespace {

SeparableMap qubit_map(std::size_t n) { return SeparableMap(std::vector<std::size_t>(n, 2), std::vector<std::size_t>(n, 2)); }

}  // namespace

TEST_SUITE("channels") {
  TEST_CASE("apply_map examples") {
    Rng rng(1);
    const RMatrix rho = random_state(8, rng);
    CHECK(apply_map(SeparableMap::identity({2, 2, 2}), rho) == rho);

    SeparableMap proj = qubit_map(2);
    const RMatrix zero{{1, 0}, {0, 0}};
    proj.add_term({1, {zero, zero}});
    RMatrix corner(4, 4);
    corner(0, 0) = Rational(1, 2);
    CHECK(apply_map(proj, ghz_projector(2)) == corner);

    const SeparableMap two = random_separable_map({2, 3}, {2, 2}, 2, rng);
    const RMatrix in = random_state(6, rng);
    RMatrix expect(4, 4);
    for (const auto& t : two.terms()) {
      const RMatrix k = tensor(t.factors[0], t.factors[1]);
      expect += k * in * k.transpose() * t.weight;
    }
    CHECK(apply_map(two, in) == expect);
    CHECK_THROWS_AS(apply_map(two, rho), std::invalid_argument);
  }

  TEST_CASE("Jamiolkowski round trip") {
    Rng rng(2);
    for (std::size_t n = 2; n <= 3; ++n) {
      const SeparableMap omega = random_separable_map(std::vector<std::size_t>(n, 2), std::vector<std::size_t>(n, 2), 2, rng);
      const RMatrix theta = jamiolkowski_state(omega);
      const std::size_t d = std::size_t{1} << n;
      for (int k = 0; k < 4; ++k) {
        const RMatrix z = random_symmetric(d, rng);
        CHECK(channel_from_theta(theta, d, d, z) == apply_map(omega, z));
      }
      CHECK(psd_check(theta).is_psd());
    }
  }

  TEST_CASE("identity channel gives the unnormalized maximally entangled projector") {
    const RMatrix theta = jamiolkowski_state(SeparableMap::identity({2, 2}));
    std::vector<Rational> v(16, Rational(0));
    for (std::size_t i = 0; i < 4; ++i) v[i * 4 + i] = 1;
    CHECK(theta == RMatrix::outer(v, v));
  }

  TEST_CASE("depolarization map has Jamiolkowski state Theta_sol") {
    for (std::size_t n = 2; n <= 4; ++n) {
      const std::size_t d = std::size_t{1} << n;
      const RMatrix theta = jamiolkowski_of([n](const RMatrix& z) { return delta_protocol(z, n); }, d, d);
      CHECK(theta == theta_matrix(theta_sol(n)));
      CHECK(coefficients_of(theta, n) == theta_sol(n));
      CHECK(jamiolkowski_of([n](const RMatrix& z) { return delta_closed(z, n); }, d, d) == theta);
    }
  }

  TEST_CASE("Pauli steps alone keep extra GHZ-basis coherence") {
    const RMatrix theta = jamiolkowski_state(SeparableMap::pauli_protocol(2));
    CHECK(theta != theta_matrix(theta_sol(2)));
    CHECK(theta == jamiolkowski_of([](const RMatrix& z) { return delta_pauli_steps(z, 2); }, 4, 4));
  }

  TEST_CASE("constant preparation of P_- via its Theta") {
    Rng rng(3);
    const RMatrix pm = projector_family(2).at(GhzIndex::minus());
    const RMatrix theta = tensor(pm, RMatrix::identity(4));
    for (int k = 0; k < 5; ++k) {
      const RMatrix z = random_symmetric(4, rng);
      CHECK(channel_from_theta(theta, 4, 4, z) == pm * z.trace());
    }
  }

  TEST_CASE("sandwich coefficients") {
    CHECK(sandwich_coeffs(SeparableMap::pauli_protocol(3)) == theta_sol(3));
    CHECK(sandwich_coeffs(SeparableMap::identity({2, 2, 2})) == theta_sol(3));

    SeparableMap prep = qubit_map(2);
    // |00><ab| for every a, b prepares |00> regardless of input
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        RMatrix fa(2, 2), fb(2, 2);
        fa(0, a) = 1;
        fb(0, b) = 1;
        prep.add_term({1, {fa, fb}});
      }
    const ThetaCoeffs c = sandwich_coeffs(prep);
    RMatrix rebuilt = theta_matrix(c);
    CHECK(rebuilt == depolarize_both(jamiolkowski_state(prep), 2));
    CHECK(c.all_nonnegative());
  }

  TEST_CASE("Jamiolkowski states of separable maps are PPT on every bipartition") {
    Rng rng(4);
    const SeparableMap omega = random_separable_map({2, 2}, {2, 2}, 3, rng);
    const RMatrix theta = jamiolkowski_state(omega);
    // parties of Θ: out_0 out_1 in_0 in_1; party n owns {out_n, in_n}
    const auto shape = SubsystemShape::qubits(4);
    CHECK(psd_check(partial_transpose(theta, shape, {0, 2})).is_psd());
    CHECK(psd_check(partial_transpose(theta, shape, {1, 3})).is_psd());
  }

  TEST_CASE("reconstruction of random depolarized Theta") {
    Rng rng(6);
    const SeparableMap omega = random_separable_map({2, 2, 2}, {2, 2, 2}, 2, rng);
    CHECK(theta_matrix(sandwich_coeffs(omega)) == depolarize_both(jamiolkowski_state(omega), 3));
  }
}
