#include <doctest.h>

#include "ghzact/pptgen.hpp"
#include "ghzact/random.hpp"

using namespace ghzact;

namespace {

ThetaCoeffs zero_coeffs(std::size_t n) {
  ThetaCoeffs c = theta_sol(n);
  for (auto& v : c.values) v = 0;
  return c;
}

// The family with Θ_{x_S,y} in the second absolute-value row too (both
// rows indexed x then x′).
bool literal_family_d_holds(const ThetaCoeffs& c, std::uint64_t xs) {
  const GhzIndex p = GhzIndex::plus(), m = GhzIndex::minus(), x = GhzIndex::even(xs);
  for (const auto& y : ghz_indices(c.n)) {
    if (!y.is_even() || y.x == xs) continue;
    if (abs(c.at(y, p) - c.at(y, m)) - c.at(x, y) > 0) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("pptgen") {
  TEST_CASE("variable universe") {
    for (std::size_t n = 2; n <= 4; ++n) {
      const std::size_t k = (std::size_t{1} << (n - 1)) + 1;
      CHECK(theta_variables(n).size() == k * k);
      CHECK(ppt_system(n).dimension() == k * k);
    }
    CHECK(theta_variables(2).front() == "T(+,+)");
    CHECK(admissible_subsets(3).size() == 3);
    CHECK(subset_string({0}, 3) == 0b100);
    CHECK(subset_string({0, 1}, 3) == 0b110);
  }

  TEST_CASE("system rows are canonical and unique") {
    const LinearSystem s = ppt_system(3);
    const auto set = s.canonical_set();
    CHECK(set.size() == s.size());
    for (const auto& row : s.rows()) CHECK(row == row.canonical());
  }

  TEST_CASE("worked examples") {
    for (std::size_t n = 2; n <= 4; ++n) {
      CHECK(ppt_system(n).satisfied_by(as_point(theta_sol(n))));
      const PptCrosscheck cc = ppt_crosscheck(theta_sol(n));
      CHECK(cc.agree());
      CHECK(cc.ppt());
    }
    ThetaCoeffs pp = zero_coeffs(2);
    pp.at(GhzIndex::plus(), GhzIndex::plus()) = 1;
    CHECK(!ppt_system(2).satisfied_by(as_point(pp)));
    CHECK(ppt_crosscheck(pp).agree());
    CHECK(!ppt_crosscheck(pp).ppt());

    ThetaCoeffs xx = zero_coeffs(3);
    xx.at(GhzIndex::even(2), GhzIndex::even(2)) = 1;
    CHECK(ppt_system(3).satisfied_by(as_point(xx)));
    CHECK(ppt_crosscheck(xx).ppt());

    ThetaCoeffs pm = zero_coeffs(2);
    pm.at(GhzIndex::plus(), GhzIndex::minus()) = 1;
    CHECK(ppt_crosscheck(pm).agree());
  }

  TEST_CASE("symbolic and direct PPT verdicts agree on random coefficients") {
    Rng rng(21);
    for (std::size_t n = 2; n <= 3; ++n) {
      int ppt = 0;
      for (int t = 0; t < 50; ++t) {
        const PptCrosscheck cc = ppt_crosscheck(random_coefficients(n, rng));
        CHECK(cc.agree());
        ppt += cc.ppt();
      }
      CHECK(ppt > 5);
      CHECK(ppt < 45);
    }
  }

  TEST_CASE("negative coefficients are rejected") {
    ThetaCoeffs c = theta_sol(2);
    c.values[1] = -1;
    CHECK_THROWS_AS(ppt_crosscheck(c), std::invalid_argument);
  }

  TEST_CASE("same index order in both rows disagrees with PSD on asymmetric coefficients") {
    Rng rng(4);
    int literal_wrong = 0;
    for (int t = 0; t < 200 && literal_wrong == 0; ++t) {
      const ThetaCoeffs c = random_coefficients(3, rng);
      const PptCrosscheck cc = ppt_crosscheck(c);
      for (const auto& s : cc.subsets) {
        CHECK(s.symbolic_ppt == s.direct_ppt);
        // every other family holds here, so the literal row alone decides
        if (s.direct_ppt && !literal_family_d_holds(c, subset_string(s.subset, 3))) ++literal_wrong;
      }
    }
    CHECK(literal_wrong > 0);
  }
}
