#include "motivic/zeta.hpp"

#include <cstdint>

#include "doctest.h"
#include "motivic/errors.hpp"
#include "motivic/resolution.hpp"

using motivic::contact_empty;
using motivic::denef_coefficient;
using motivic::Error;
using motivic::ErrorCode;
using motivic::Laurent;
using motivic::rational_expansion_coefficient;
using motivic::ResolutionGraph;
using motivic::zeta_rational;
using motivic::zeta_series;

namespace {
const Laurent L = Laurent::lefschetz();
}

TEST_CASE("cusp contact-order classes") {
  const auto g = ResolutionGraph::resolve_pq(2, 3);

  CHECK(denef_coefficient(g, 5, true) == Laurent::zero());
  CHECK(denef_coefficient(g, 0, true) == Laurent::zero());

  // frozen against the finite-field jet oracle: (q-1)q^3 at every prime
  CHECK(denef_coefficient(g, 2, true) == L.pow(4) - L.pow(3));
  CHECK(denef_coefficient(g, 3, true) == L.pow(5) - L.pow(4));
  CHECK(denef_coefficient(g, 4, true) == L.pow(6) - L.pow(5));
  // three singleton strata collapse to a single (L-1)L^8 term
  CHECK(denef_coefficient(g, 6, true) == L.pow(9) - L.pow(8));
  // the strict-transform edge carries the first (L-1)^2 contribution
  CHECK(denef_coefficient(g, 7, true) == (L - Laurent::one()).pow(2) * L.pow(8));
}

TEST_CASE("contact emptiness") {
  const auto g = ResolutionGraph::resolve_pq(2, 3);
  CHECK(contact_empty(g, 5, true));
  CHECK(contact_empty(g, 1, true));
  CHECK_FALSE(contact_empty(g, 6, true));
  for (int64_t n = 1; n <= 12; ++n)
    CHECK(contact_empty(g, n, true) == (n == 1 || n == 5));

  const auto g25 = ResolutionGraph::resolve_pq(2, 5);
  CHECK(g25.threshold() == 10);
  for (int64_t n = 10; n <= 25; ++n) CHECK_FALSE(contact_empty(g25, n, true));
}

TEST_CASE("emptiness matches vanishing classes") {
  for (auto [p, q] : {std::pair<int64_t, int64_t>{2, 3}, {2, 5}, {3, 4}}) {
    const auto g = ResolutionGraph::resolve_pq(p, q);
    for (bool origin : {true, false})
      for (int64_t n = 1; n <= 20; ++n)
        CHECK(denef_coefficient(g, n, origin).is_zero() == contact_empty(g, n, origin));
  }
}

TEST_CASE("rational form expansion agrees with per-order classes") {
  for (auto [p, q] : {std::pair<int64_t, int64_t>{2, 3}, {2, 5}, {3, 4}}) {
    const auto g = ResolutionGraph::resolve_pq(p, q);
    for (bool origin : {true, false}) {
      const auto rz = zeta_rational(g, origin);
      for (int64_t n = 1; n <= 15; ++n)
        CHECK(rational_expansion_coefficient(rz, n) == denef_coefficient(g, n, origin));
    }
  }
}

TEST_CASE("rational term structure") {
  const auto g = ResolutionGraph::resolve_pq(2, 3);
  // origin strata: three singletons, two exceptional edges, and the
  // strict-transform edge
  CHECK(zeta_rational(g, true).terms.size() == 6);
  // global mode adds the strict-transform singleton
  CHECK(zeta_rational(g, false).terms.size() == 7);
  // empty graph has no terms at all
  const auto empty = ResolutionGraph::load_graph(R"({"divisors": [], "edges": []})");
  CHECK(zeta_rational(empty, true).terms.empty());
  CHECK(denef_coefficient(empty, 3, true) == Laurent::zero());
}

TEST_CASE("series convention") {
  const auto g = ResolutionGraph::resolve_pq(2, 3);
  const auto series = zeta_series(g, 5, true);
  CHECK(series.convention.kappa == motivic::kKappaOrigin);
  CHECK(series.convention.origin_only);
  CHECK_FALSE(series.convention.calibrated);
  CHECK(series.coefficient(5) == Laurent::zero());
  CHECK(series.coefficient(1) == Laurent::zero());
  // coefficient n is the truncation class shifted down by 2(n+1)+kappa
  CHECK(series.coefficient(2) == denef_coefficient(g, 2, true).shifted(-8));

  CHECK_THROWS_AS(zeta_series(g, 5, true, std::nullopt, true), Error);
  const auto calibrated = zeta_series(g, 5, true, 2, true);
  CHECK(calibrated.convention.calibrated);

  const auto achievable = g.achievable_orders(true, 12);
  const auto s12 = zeta_series(g, 12, true);
  for (int64_t n = 1; n <= 12; ++n)
    CHECK(s12.coefficient(n).is_zero() == (achievable.count(n) == 0));
}
