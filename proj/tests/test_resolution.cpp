#include "motivic/resolution.hpp"

#include <cstdint>

#include "doctest.h"
#include "motivic/errors.hpp"

using motivic::Divisor;
using motivic::Error;
using motivic::ErrorCode;
using motivic::Laurent;
using motivic::ResolutionGraph;
using motivic::Stratum;

namespace {

std::vector<std::pair<int64_t, int64_t>> divisor_data(const ResolutionGraph& g) {
  std::vector<std::pair<int64_t, int64_t>> out;
  for (const auto& d : g.divisors()) out.emplace_back(d.N, d.nu);
  return out;
}

}  // namespace

TEST_CASE("cusp resolution") {
  const auto g = ResolutionGraph::resolve_pq(2, 3);
  CHECK(divisor_data(g) ==
        std::vector<std::pair<int64_t, int64_t>>{{2, 1}, {3, 2}, {6, 4}, {1, 0}});
  CHECK(g.divisors().back().strict_transform);
  CHECK_FALSE(g.divisors().back().over_origin);

  // strict transform is a leaf on the N = 6 divisor
  const int strict_id = g.divisors().back().id;
  CHECK(g.degree(strict_id) == 1);
  CHECK(g.has_edge(strict_id, 3));
  CHECK(g.edges().size() == 3);
  CHECK(g.has_edge(1, 3));
  CHECK(g.has_edge(2, 3));
  CHECK(g.threshold() == 6);
}

TEST_CASE("further resolutions") {
  const auto g25 = ResolutionGraph::resolve_pq(2, 5);
  CHECK(divisor_data(g25) ==
        std::vector<std::pair<int64_t, int64_t>>{{2, 1}, {4, 2}, {5, 3}, {10, 6}, {1, 0}});
  CHECK(g25.threshold() == 10);

  const auto g34 = ResolutionGraph::resolve_pq(3, 4);
  CHECK(divisor_data(g34) ==
        std::vector<std::pair<int64_t, int64_t>>{{3, 1}, {4, 2}, {8, 4}, {12, 6}, {1, 0}});
  CHECK(g34.threshold() == 12);
}

TEST_CASE("pq invariants") {
  for (auto [p, q] : {std::pair<int64_t, int64_t>{2, 3}, {2, 5}, {2, 7}, {3, 4}, {3, 5},
                      {4, 5}, {5, 7}}) {
    const auto g = ResolutionGraph::resolve_pq(p, q);

    // log canonical threshold: min (nu+1)/N over exceptional divisors
    mpq_class lct;
    bool first = true;
    for (const auto& d : g.divisors()) {
      if (d.strict_transform) continue;
      mpq_class r(d.nu + 1, d.N);
      r.canonicalize();
      if (first || r < lct) lct = r;
      first = false;
    }
    mpq_class expected(p + q, p * q);
    expected.canonicalize();
    CHECK(lct == expected);

    // final divisor identities
    int64_t max_n = 0, max_nu = 0;
    for (const auto& d : g.divisors())
      if (d.N > max_n) {
        max_n = d.N;
        max_nu = d.nu;
      }
    CHECK(max_n == p * q);
    CHECK(max_nu == p + q - 1);

    // tree with the strict transform as a leaf on the last divisor
    CHECK(g.edges().size() == g.divisors().size() - 1);

    // stratification telescopes to the class of the union: L+1 per
    // exceptional component, L for the affine strict transform, one
    // deducted per intersection point counted twice
    Laurent sum;
    for (const auto& d : g.divisors()) sum += g.stratum_class(Stratum{{d.id}});
    sum += Laurent::monomial(0, static_cast<long>(g.edges().size()));
    const Laurent whole =
        Laurent::monomial(0, static_cast<long>(g.divisors().size())) *
            (Laurent::lefschetz() + Laurent::one()) -
        Laurent::one() -
        Laurent::monomial(0, static_cast<long>(g.edges().size()));
    CHECK(sum == whole);
  }
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(ResolutionGraph::resolve_pq(4, 6), Error);
  CHECK_THROWS_AS(ResolutionGraph::resolve_pq(1, 3), Error);
  CHECK_THROWS_AS(ResolutionGraph::resolve_pq(3, 3), Error);
}

TEST_CASE("round trip") {
  for (auto [p, q] : {std::pair<int64_t, int64_t>{2, 3}, {3, 5}}) {
    const auto g = ResolutionGraph::resolve_pq(p, q);
    const auto back = ResolutionGraph::load_graph(g.to_json());
    CHECK(back == g);
  }
}

TEST_CASE("load_graph validation") {
  // a divisor claiming class L+1 while having two edges
  const std::string bad_class = R"({
    "divisors": [
      {"id": 1, "N": 2, "nu": 1},
      {"id": 2, "N": 3, "nu": 2},
      {"id": 3, "N": 6, "nu": 4}
    ],
    "edges": [[1, 2], [1, 3]],
    "classes": {"1": [[0, "1"], [1, "1"]]}
  })";
  try {
    ResolutionGraph::load_graph(bad_class);
    FAIL("expected InvariantViolation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvariantViolation);
  }

  // a strict transform with nonzero discrepancy
  const std::string bad_strict = R"({
    "divisors": [
      {"id": 1, "N": 2, "nu": 1},
      {"id": 2, "N": 1, "nu": 1, "strict": true}
    ],
    "edges": [[1, 2]]
  })";
  try {
    ResolutionGraph::load_graph(bad_strict);
    FAIL("expected InvariantViolation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvariantViolation);
  }

  CHECK_THROWS_AS(ResolutionGraph::load_graph("not json"), Error);
  CHECK_THROWS_AS(ResolutionGraph::load_graph(R"({"edges": []})"), Error);
}

TEST_CASE("achievable orders") {
  const auto cusp = ResolutionGraph::resolve_pq(2, 3);
  const auto orders = cusp.achievable_orders(true, 7);
  CHECK(orders == std::set<int64_t>{2, 3, 4, 6, 7});

  const auto upto20 = cusp.achievable_orders(true, 20);
  for (int64_t n = 6; n <= 20; ++n) CHECK(upto20.count(n) == 1);
  CHECK(upto20.count(1) == 0);
  CHECK(upto20.count(5) == 0);

  // the strict-transform singleton contributes in the global mode only
  const auto global = cusp.achievable_orders(false, 5);
  CHECK(global.count(1) == 1);
  CHECK(global.count(5) == 1);
}

TEST_CASE("dot rendering") {
  const auto g = ResolutionGraph::resolve_pq(2, 3);
  const auto dot = g.to_dot();
  CHECK(dot.find("graph resolution {") != std::string::npos);
  CHECK(dot.find("(6,4)") != std::string::npos);
  CHECK(dot.find("--") != std::string::npos);
}
