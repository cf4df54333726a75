#include <doctest.h>

#include "ghzact/qcore.hpp"
#include "oracles.hpp"

using namespace ghzact;

TEST_SUITE("qcore") {
  TEST_CASE("GHZ projector entries") {
    const RMatrix p2 = ghz_projector(2);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        const bool corner = (i == 0 || i == 3) && (j == 0 || j == 3);
        CHECK(p2(i, j) == (corner ? Rational(1, 2) : Rational(0)));
      }
    const RMatrix p3 = ghz_projector(3);
    CHECK(p3(0, 7) == Rational(1, 2));
    CHECK(p3(7, 7) == Rational(1, 2));
    CHECK(p3(1, 1) == 0);
    for (std::size_t n = 2; n <= 6; ++n) CHECK(ghz_projector(n).trace() == 1);
    CHECK_THROWS_AS(ghz_projector(1), std::invalid_argument);
  }

  TEST_CASE("label set is +, -, then non-zero even strings ascending") {
    const auto labels = ghz_indices(3);
    REQUIRE(labels.size() == 5);
    CHECK(labels[0].label() == "+");
    CHECK(labels[1].label() == "-");
    CHECK(labels[2].x == 2);
    CHECK(labels[3].x == 4);
    CHECK(labels[4].x == 6);
    CHECK(even_count(4) == 7);
    CHECK(BitString{3, 0b010}.is_even());
    CHECK(!BitString{3, 0b011}.is_even());
    CHECK(BitString{3, 0b010}.complement().bits == 0b101);
  }

  TEST_CASE("projector family: count, orthogonality, completeness, idempotence") {
    for (std::size_t n = 2; n <= 5; ++n) {
      const ProjectorFamily fam = projector_family(n);
      CHECK(fam.size() == (std::size_t{1} << (n - 1)) + 1);
      const std::size_t d = std::size_t{1} << n;
      RMatrix sum(d, d);
      for (std::size_t r = 0; r < fam.size(); ++r) {
        const RMatrix& p = fam.projectors[r];
        CHECK(p.is_symmetric());
        CHECK(p.trace() == 1);
        if (fam.labels[r].is_even()) {
          CHECK((p * 2) * (p * 2) == p * 2);
          CHECK(p.rank() == 2);
        } else {
          CHECK(p * p == p);
        }
        for (std::size_t s = r + 1; s < fam.size(); ++s) CHECK(trace_of_product(p, fam.projectors[s]) == 0);
        sum += p;
      }
      CHECK(sum * 2 - fam.at(GhzIndex::plus()) - fam.at(GhzIndex::minus()) == RMatrix::identity(d));
      CHECK(fam.at(GhzIndex::plus()) == ghz_projector(n));
    }
  }

  TEST_CASE("even projector is half the sum of |x><x| and its complement") {
    const ProjectorFamily fam = projector_family(3);
    const RMatrix& p = fam.at(GhzIndex::even(0b010));
    CHECK(p(2, 2) == Rational(1, 2));
    CHECK(p(5, 5) == Rational(1, 2));
    CHECK(p(2, 5) == 0);
  }

  TEST_CASE("shifts state") {
    const RMatrix s = shifts_state();
    CHECK(s.trace() == 1);
    CHECK(s.rank() == 4);
    CHECK(psd_check(s).is_psd());
    for (const auto& v : shifts_upb_vectors()) CHECK((s * RMatrix::column(v)).is_zero());
    for (std::size_t p = 0; p < 3; ++p) CHECK(psd_check(partial_transpose(s, SubsystemShape::qubits(3), {p})).is_psd());
    // the UPB is cyclic, so the state is invariant under cyclic party shifts
    CHECK(permute_subsystems(s, SubsystemShape::qubits(3), {1, 2, 0}) == s);
  }

  TEST_CASE("all-zero and maximally mixed states") {
    CHECK(trace_of_product(all_zero_state(3), ghz_projector(3)) == Rational(1, 2));
    for (std::size_t n = 2; n <= 4; ++n) {
      CHECK(all_zero_state(n).trace() == 1);
      for (std::size_t p = 0; p < n; ++p)
        CHECK(partial_trace(all_zero_state(n), SubsystemShape::qubits(n), {p}) == (RMatrix{{1, 0}, {0, 0}}));
    }
    CHECK(max_mixed_state(2) == RMatrix::identity(4) * Rational(1, 4));
  }

  TEST_CASE("catalog") {
    CHECK(catalog_names() == std::vector<std::string>{"ghz", "all-zero", "shifts", "max-mixed"});
    CHECK(catalog_state("shifts", 3) == shifts_state());
    CHECK_THROWS_AS(catalog_state("shifts", 4), std::invalid_argument);
    CHECK_THROWS_AS(catalog_state("nope", 2), std::invalid_argument);
  }
}
