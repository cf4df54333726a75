#include <doctest.h>

#include "ghzact/random.hpp"
#include "oracles.hpp"

using namespace ghzact;

TEST_SUITE("exactmat") {
  TEST_CASE("rational parsing is canonical and round-trips") {
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-4/2")) == "-2");
    CHECK(to_string(parse_rational("0/7")) == "0");
    CHECK(parse_rational(to_string(Rational(-22, 7))) == Rational(-22, 7));
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  }

  TEST_CASE("tensor follows party 0 most significant") {
    const RMatrix a{{1, 2}, {3, 4}}, b{{0, 1}, {1, 0}};
    const RMatrix t = tensor(a, b);
    CHECK(t(0, 1) == 1);
    CHECK(t(1, 0) == 1);
    CHECK(t(2, 3) == 4);
    CHECK(t(3, 0) == 3);
  }

  TEST_CASE("partial trace and transpose match index contractions") {
    Rng rng(3);
    const std::vector<std::size_t> dims{2, 3, 2};
    const RMatrix a = random_state(12, rng);
    const SubsystemShape shape(dims);
    const RMatrix pt = partial_trace(a, shape, {0, 2});
    RMatrix expect(4, 4);
    for (std::size_t i = 0; i < 12; ++i)
      for (std::size_t j = 0; j < 12; ++j) {
        const auto di = oracle::digits(i, dims), dj = oracle::digits(j, dims);
        if (di[1] == dj[1]) expect(di[0] * 2 + di[2], dj[0] * 2 + dj[2]) += a(i, j);
      }
    CHECK(pt == expect);

    const RMatrix tt = partial_transpose(a, shape, {1});
    bool ok = true;
    for (std::size_t i = 0; i < 12; ++i)
      for (std::size_t j = 0; j < 12; ++j) {
        auto di = oracle::digits(i, dims), dj = oracle::digits(j, dims);
        std::swap(di[1], dj[1]);
        ok = ok && tt(i, j) == a(oracle::index_of(di, dims), oracle::index_of(dj, dims));
      }
    CHECK(ok);
    CHECK(partial_transpose(partial_transpose(a, shape, {0, 2}), shape, {1}) == a.transpose());
  }

  TEST_CASE("permute_subsystems moves tensor factors") {
    const RMatrix a{{1, 2}, {3, 4}}, b = RMatrix::identity(3), c{{0, 1}, {5, 0}};
    const RMatrix abc = tensor(tensor(a, b), c);
    const RMatrix cab = tensor(tensor(c, a), b);
    CHECK(permute_subsystems(abc, SubsystemShape({2, 3, 2}), {2, 0, 1}) == cab);
  }

  TEST_CASE("grouping helpers are inverse and reorder products") {
    const RMatrix h1{{1, 2}, {3, 4}}, k1{{0, 1}, {1, 0}}, h2 = RMatrix::identity(3), k2{{2, 0}, {0, 5}};
    const RMatrix party_major = tensor(tensor(h1, k1), tensor(h2, k2));
    const RMatrix grouped = tensor(tensor(h1, h2), tensor(k1, k2));
    CHECK(party_major_to_grouped(party_major, {2, 3}, {2, 2}) == grouped);
    CHECK(grouped_to_party_major(grouped, {2, 3}, {2, 2}) == party_major);
  }

  TEST_CASE("psd_check agrees with the Descartes characteristic-polynomial oracle") {
    Rng rng(11);
    int psd = 0, not_psd = 0;
    for (int t = 0; t < 120; ++t) {
      const std::size_t dim = 1 + static_cast<std::size_t>(t % 6);
      RMatrix a = t % 2 == 0 ? random_state(dim, rng, 1 + t % 4) : random_symmetric(dim, rng);
      const PsdCertificate cert = psd_check(a);
      CHECK(cert.is_psd() == oracle::psd_by_descartes(a));
      if (cert.is_psd()) {
        ++psd;
      } else {
        ++not_psd;
        REQUIRE(cert.witness.has_value());
        CHECK(quadratic_form(a, *cert.witness) < 0);
      }
    }
    CHECK(psd > 20);
    CHECK(not_psd > 20);
  }

  TEST_CASE("psd_check edge cases") {
    CHECK(psd_check(RMatrix(3, 3)).is_psd());
    CHECK(psd_check(RMatrix{{0, 1}, {1, 0}}).verdict == PsdVerdict::not_psd);
    CHECK(psd_check(RMatrix{{1, 1}, {1, 1}}).is_psd());
    CHECK(!psd_check(RMatrix{{0, 0}, {0, -1}}).is_psd());
    CHECK_THROWS_AS(psd_check(RMatrix{{0, 1}, {2, 0}}), std::invalid_argument);
  }

  TEST_CASE("rank and trace") {
    CHECK(RMatrix::identity(4).rank() == 4);
    CHECK(RMatrix{{1, 2}, {2, 4}}.rank() == 1);
    CHECK(RMatrix{{1, 2}, {3, 4}}.trace() == 5);
  }
}
