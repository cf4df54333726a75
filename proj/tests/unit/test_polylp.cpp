#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <set>

#include "ghzact/lemmas.hpp"
#include "ghzact/polylp.hpp"
#include "ghzact/random.hpp"

using namespace ghzact;

namespace {

LinearSystem make_system(std::size_t dim, const std::vector<std::pair<std::vector<long>, long>>& rows) {
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < dim; ++i) vars.push_back("x" + std::to_string(i));
  LinearSystem s(vars);
  for (const auto& [a, c] : rows) {
    LinearInequality ineq;
    for (auto v : a) ineq.coefficients.emplace_back(v);
    ineq.constant = c;
    s.add(ineq);
  }
  return s;
}

// Unique solution of the square system, if any (exact Gauss–Jordan).
std::optional<std::vector<Rational>> solve_square(RMatrix a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) std::swap(a(col, j), a(piv, j));
    std::swap(b[col], b[piv]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      const Rational f = a(r, col) / a(col, col);
      for (std::size_t j = 0; j < n; ++j) a(r, j) -= f * a(col, j);
      b[r] -= f * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a(i, i);
  return x;
}

// Vertices of a bounded polyhedron by intersecting every d-subset of rows.
std::set<std::vector<Rational>> brute_force_vertices(const LinearSystem& s) {
  const std::size_t d = s.dimension(), m = s.size();
  std::set<std::vector<Rational>> out;
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(d), true);
  do {
    RMatrix a(d, d);
    std::vector<Rational> b;
    std::size_t r = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (pick[i]) {
        for (std::size_t j = 0; j < d; ++j) a(r, j) = s.row(i).coefficients[j];
        b.push_back(-s.row(i).constant);
        ++r;
      }
    if (auto x = solve_square(a, b); x && s.satisfied_by(*x)) out.insert(*x);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

}  // namespace

TEST_SUITE("polylp") {
  TEST_CASE("lp_feasible examples") {
    const LinearSystem s1 = make_system(1, {{{-1}, 0}, {{1}, 0}});
    const LpResult r1 = lp_feasible(s1);
    CHECK(r1.feasible);
    CHECK(r1.point == std::vector<Rational>{0});

    const LinearSystem s2 = make_system(1, {{{-1}, 1}, {{1}, 0}});
    const LpResult r2 = lp_feasible(s2);
    CHECK(!r2.feasible);
    CHECK(r2.multipliers == std::vector<Rational>{1, 1});
    CHECK(verify(r2, s2));

    CHECK(lp_feasible(make_system(2, {})).feasible);
  }

  TEST_CASE("lp_feasible on the reduced systems") {
    const LpResult r2 = lp_feasible(reduced_system(2, LambdaParam(Rational(3, 4))));
    CHECK(r2.feasible);
    CHECK(verify(r2, reduced_system(2, LambdaParam(Rational(3, 4)))));
    // the three-party system has the single feasible point Θ^sol
    const LpResult r3 = lp_feasible(reduced_system(3, LambdaParam(Rational(3, 4))));
    REQUIRE(r3.feasible);
    CHECK(r3.point == reduced_theta_sol().point());
  }

  TEST_CASE("random feasibility results verify") {
    Rng rng(2);
    int infeasible = 0;
    for (int t = 0; t < 40; ++t) {
      std::vector<std::pair<std::vector<long>, long>> rows;
      for (int i = 0; i < 6; ++i) rows.push_back({{random_int(rng, -3, 3), random_int(rng, -3, 3), random_int(rng, -3, 3)}, random_int(rng, -2, 4)});
      const LinearSystem s = make_system(3, rows);
      const LpResult r = lp_feasible(s);
      CHECK(verify(r, s));
      infeasible += !r.feasible;
    }
    CHECK(infeasible > 0);
  }

  TEST_CASE("enumeration examples") {
    const LinearSystem square = make_system(2, {{{-1, 0}, 0}, {{0, -1}, 0}, {{1, 0}, -1}, {{0, 1}, -1}});
    const Polyhedron p = enumerate_polyhedron(square);
    CHECK(p.vertices.size() == 4);
    CHECK(p.rays.empty());

    const LinearSystem orthant = make_system(3, {{{-1, 0, 0}, 0}, {{0, -1, 0}, 0}, {{0, 0, -1}, 0}});
    const Polyhedron q = enumerate_polyhedron(orthant);
    CHECK(q.vertices == std::vector<std::vector<Rational>>{{0, 0, 0}});
    CHECK(q.rays.size() == 3);
    CHECK(generators_satisfy(q, orthant));

    const Polyhedron line = enumerate_polyhedron(make_system(2, {{{0, 1}, 0}, {{0, -1}, 0}}));
    CHECK(line.lineality.size() == 1);
  }

  TEST_CASE("double description agrees with brute-force enumeration") {
    Rng rng(7);
    for (int t = 0; t < 30; ++t) {
      const std::size_t d = 2 + static_cast<std::size_t>(t % 3);
      std::vector<std::pair<std::vector<long>, long>> rows;
      for (std::size_t i = 0; i < d; ++i) {
        std::vector<long> lo(d, 0), hi(d, 0);
        lo[i] = -1;
        hi[i] = 1;
        rows.push_back({lo, -3});
        rows.push_back({hi, -3});
      }
      for (int k = 0; k < 4; ++k) {
        std::vector<long> a(d);
        for (auto& v : a) v = random_int(rng, -3, 3);
        rows.push_back({a, random_int(rng, -4, 1)});
      }
      const LinearSystem s = make_system(d, rows);
      const Polyhedron p = enumerate_polyhedron(s);
      const std::set<std::vector<Rational>> dd(p.vertices.begin(), p.vertices.end());
      CHECK(dd == brute_force_vertices(s));
      CHECK(p.rays.empty());
      if (!p.empty()) {
        // H ↔ V round trip
        const Polyhedron back = enumerate_polyhedron(h_form(p, s.variables()));
        CHECK(std::set<std::vector<Rational>>(back.vertices.begin(), back.vertices.end()) == dd);
        CHECK(generators_satisfy(p, s));
      }
    }
  }

  TEST_CASE("Farkas certificates") {
    const LinearSystem s = make_system(2, {{{1, 0}, -1}, {{0, 1}, -2}, {{-1, 0}, 0}});
    LinearInequality same = s.row(0);
    auto unit = farkas_combination(same, s);
    REQUIRE(unit);
    CHECK(recombines(*unit, s));
    LinearInequality sum{{1, 1}, -3};
    auto c = farkas_combination(sum, s);
    REQUIRE(c);
    CHECK(recombines(*c, s));
    LinearInequality loose{{1, 1}, -5};
    CHECK(farkas_combination(loose, s).has_value());
    LinearInequality wrong{{1, 1}, -2};
    CHECK(!farkas_combination(wrong, s).has_value());
    CHECK_THROWS_AS(farkas_combination(LinearInequality{{1}, 0}, s), std::invalid_argument);
  }

  TEST_CASE("bounds of the reduced system at lambda 3/4") {
    const LinearSystem s = reduced_system(2, LambdaParam(Rational(3, 4)));
    const auto bounds = bounding_inequalities();
    const auto it = std::find_if(bounds.begin(), bounds.end(), [](const auto& b) { return b.first == "T(+,+)<=1"; });
    REQUIRE(it != bounds.end());
    auto cert = farkas_combination(it->second, s);
    REQUIRE(cert);
    CHECK(recombines(*cert, s));
  }

  TEST_CASE("enumeration guard") {
    std::vector<std::pair<std::vector<long>, long>> rows{{std::vector<long>(25, 1), 0}};
    const LinearSystem big = make_system(25, rows);
    CHECK_THROWS_AS(enumerate_polyhedron(big), GuardExceeded);
    CHECK_THROWS_AS(enumerate_polyhedron(make_system(3, {}), 2), GuardExceeded);
    setenv("ARTIFACT_MAX_DIM", "7", 1);
    CHECK(max_enumeration_dim() == 7);
    unsetenv("ARTIFACT_MAX_DIM");
    CHECK(max_enumeration_dim() == 20);
  }

  TEST_CASE("primitive directions") {
    CHECK(primitive_direction({Rational(2, 3), Rational(4, 3)}) == std::vector<Rational>{1, 2});
    CHECK(primitive_direction({Rational(-3), Rational(6)}) == std::vector<Rational>{-1, 2});
  }
}
