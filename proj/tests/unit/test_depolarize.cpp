#include <doctest.h>

#include "ghzact/depolarize.hpp"
#include "ghzact/random.hpp"

using namespace ghzact;

TEST_SUITE("depolarize") {
  TEST_CASE("identity and GHZ are fixed points") {
    for (std::size_t n = 2; n <= 5; ++n) {
      const RMatrix id = RMatrix::identity(std::size_t{1} << n);
      CHECK(delta_closed(id, n) == id);
      CHECK(delta_closed(ghz_projector(n), n) == ghz_projector(n));
      CHECK(delta_protocol(ghz_projector(n), n) == ghz_projector(n));
    }
    CHECK(delta_protocol(RMatrix::identity(8), 3) == RMatrix::identity(8));
  }

  TEST_CASE("single projectors") {
    const ProjectorFamily fam = projector_family(2);
    CHECK(delta_closed(fam.at(GhzIndex::minus()), 2) == fam.at(GhzIndex::minus()));
    RMatrix e01(4, 4);
    e01(1, 1) = 1;
    CHECK(delta_closed(e01, 2) == fam.at(GhzIndex::even(0b10)));
    CHECK(delta_protocol(e01, 2) == fam.at(GhzIndex::even(0b10)));
  }

  TEST_CASE("protocol branch count") {
    for (std::size_t n = 2; n <= 4; ++n) {
      CHECK(protocol_branches(n).size() == (std::size_t{1} << n) * (std::size_t{1} << (n - 1)));
      CHECK(phase_branch_count(n) == std::size_t{1} << (2 * n - 2));
    }
  }

  TEST_CASE("real coherence between x and its complement needs the phase step") {
    // |01><10| + |10><01| is invariant under every Pauli step but lies outside span{P_r}.
    RMatrix c(4, 4);
    c(1, 2) = 1;
    c(2, 1) = 1;
    CHECK(delta_pauli_steps(c, 2) == c);
    CHECK(delta_closed(c, 2).is_zero());
    CHECK(delta_protocol(c, 2).is_zero());
    // The coherence between 0...0 and 1...1 is kept by both.
    RMatrix g(8, 8);
    g(0, 7) = 1;
    g(7, 0) = 1;
    CHECK(phase_twirl(g, 3) == g);
  }

  TEST_CASE("closed form equals protocol mixture on random symmetric inputs") {
    Rng rng(5);
    for (std::size_t n = 2; n <= 4; ++n)
      for (int t = 0; t < 6; ++t) {
        const RMatrix rho = random_symmetric(std::size_t{1} << n, rng);
        const RMatrix out = delta_closed(rho, n);
        CHECK(out == delta_protocol(rho, n));
        CHECK(out.trace() == rho.trace());
        CHECK(delta_closed(out, n) == out);
      }
  }

  TEST_CASE("PSD inputs stay PSD") {
    Rng rng(8);
    for (int t = 0; t < 5; ++t) CHECK(psd_check(delta_closed(random_state(8, rng), 3)).is_psd());
  }

  TEST_CASE("delta_subset") {
    Rng rng(9);
    const RMatrix rho = random_state(16, rng);
    const auto shape = SubsystemShape::qubits(4);
    CHECK(delta_subset(rho, shape, {{0, 1, 2, 3}}) == delta_closed(rho, 4));
    CHECK(delta_subset(rho, shape, {}) == rho);
    const RMatrix pair = tensor(ghz_projector(2), ghz_projector(2));
    CHECK(delta_subset(pair, shape, {{0, 1}, {2, 3}}) == pair);
    // blockwise action on a non-contiguous subset
    const RMatrix a = random_state(4, rng), b = random_state(4, rng);
    const RMatrix mixed = permute_subsystems(tensor(a, b), shape, {0, 2, 1, 3});
    const RMatrix expect = permute_subsystems(tensor(delta_closed(a, 2), b), shape, {0, 2, 1, 3});
    CHECK(delta_subset(mixed, shape, {{0, 2}}) == expect);
    CHECK_THROWS_AS(delta_subset(rho, shape, {{0}}), std::invalid_argument);
    CHECK_THROWS_AS(delta_subset(rho, shape, {{0, 1}, {1, 2}}), std::invalid_argument);
  }
}
