#include "motivic/semigroup.hpp"

#include <cstdint>
#include <functional>

#include "doctest.h"
#include "motivic/errors.hpp"

using motivic::Error;
using motivic::ErrorCode;
using motivic::NumericalSemigroup;
using motivic::SemigroupIdeal;

namespace {

NumericalSemigroup cusp_semigroup() { return NumericalSemigroup::from_generators({2, 3}); }
NumericalSemigroup example_semigroup() {
  // value semigroup of K[[t^4, t^6 + t^7]]
  return NumericalSemigroup::from_generators({4, 6, 13});
}

ErrorCode thrown_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::BadInput;
}

}  // namespace

TEST_CASE("from_generators canonical data") {
  const auto g = cusp_semigroup();
  CHECK(g.holes() == std::vector<int64_t>{1});
  CHECK(g.delta() == 1);
  CHECK(g.conductor() == 2);

  const auto e = example_semigroup();
  CHECK(e.holes() == std::vector<int64_t>{1, 2, 3, 5, 7, 9, 11, 15});
  CHECK(e.delta() == 8);
  CHECK(e.conductor() == 16);
  CHECK(e.generators() == std::vector<int64_t>{4, 6, 13});

  CHECK(thrown_code([] { NumericalSemigroup::from_generators({4, 6}); }) ==
        ErrorCode::GcdNotOne);
  CHECK(thrown_code([] { NumericalSemigroup::from_generators({}); }) == ErrorCode::Empty);

  // non-minimal input reduces to the minimal system
  const auto r = NumericalSemigroup::from_generators({2, 3, 4, 7});
  CHECK(r.generators() == std::vector<int64_t>{2, 3});
}

TEST_CASE("from_holes") {
  CHECK(NumericalSemigroup::from_holes({1}).generators() == std::vector<int64_t>{2, 3});
  CHECK(NumericalSemigroup::from_holes({1, 2, 3, 5, 7, 9, 11, 15}).generators() ==
        std::vector<int64_t>{4, 6, 13});
  CHECK(thrown_code([] { NumericalSemigroup::from_holes({2}); }) == ErrorCode::NotASemigroup);
  // no holes at all: the full monoid
  CHECK(NumericalSemigroup::from_holes({}).generators() == std::vector<int64_t>{1});
}

TEST_CASE("membership and symmetry") {
  const auto e = example_semigroup();
  CHECK(e.contains(0));
  CHECK(e.contains(13));
  CHECK_FALSE(e.contains(15));
  CHECK(e.contains(16));
  CHECK(e.contains(1000));
  CHECK_FALSE(e.contains(-4));

  for (auto [p, q] : {std::pair<int64_t, int64_t>{2, 3}, {2, 7}, {3, 5}, {4, 9}, {5, 7}}) {
    const auto g = NumericalSemigroup::from_generators({p, q});
    CHECK(g.delta() == (p - 1) * (q - 1) / 2);
    CHECK(g.conductor() == (p - 1) * (q - 1));
    for (int64_t m = 0; m < g.conductor(); ++m)
      CHECK(g.contains(m) != g.contains(g.conductor() - 1 - m));
  }
}

TEST_CASE("shifted hole hits") {
  const auto e = example_semigroup();
  CHECK(e.shifted_hole_hits(4) == 3);
  CHECK(cusp_semigroup().shifted_hole_hits(0) == 0);
  const auto ideal = SemigroupIdeal::from_generators(e, {8, 13});
  CHECK(e.shifted_hole_hits(8, ideal) == 4);
}

TEST_CASE("ideal construction") {
  const auto g = cusp_semigroup();
  const auto a = SemigroupIdeal::from_generators(g, {2, 4});
  CHECK(a.min_generators() == std::vector<int64_t>{2});
  CHECK(a.codimension() == 1);
  CHECK(a.missing() == std::vector<int64_t>{0});

  const auto e = example_semigroup();
  const auto b = SemigroupIdeal::from_generators(e, {8, 13});
  CHECK(b.min_generators() == std::vector<int64_t>{8, 13});
  CHECK(b.codimension() == 4);

  CHECK(thrown_code([&] { SemigroupIdeal::from_generators(cusp_semigroup(), {1}); }) ==
        ErrorCode::NotAMember);
}

TEST_CASE("ideal conductor") {
  const auto g = cusp_semigroup();
  CHECK(SemigroupIdeal::from_generators(g, {0}).conductor() == 2);
  CHECK(SemigroupIdeal::from_generators(g, {5}).conductor() == 7);
  CHECK(SemigroupIdeal::from_generators(g, {2, 3}).conductor() == 2);
}

TEST_CASE("independence") {
  const auto g = cusp_semigroup();
  CHECK(motivic::is_independent(g, {2, 3}));
  CHECK_FALSE(motivic::is_independent(g, {2, 4}));
  CHECK_FALSE(motivic::is_independent(g, {3, 3}));
  const auto e = example_semigroup();
  CHECK(motivic::is_independent(e, {8, 13}));
  CHECK(motivic::is_independent(e, {6, 8}));
  CHECK_FALSE(motivic::is_independent(e, {4, 8}));
}

TEST_CASE("ideal enumeration") {
  const auto g = cusp_semigroup();

  const auto none = enumerate_ideals(g, 0);
  REQUIRE(none.size() == 1);
  CHECK(none[0].min_generators() == std::vector<int64_t>{0});

  const auto one = enumerate_ideals(g, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].min_generators() == std::vector<int64_t>{2, 3});
  CHECK(one[0].missing() == std::vector<int64_t>{0});

  // frozen by the exhaustive co-ideal search: exactly the principal ideal
  // (3) and the two-generator ideal (4,5)
  const auto three = enumerate_ideals(g, 3);
  REQUIRE(three.size() == 2);
  CHECK(three[0].min_generators() == std::vector<int64_t>{3});
  CHECK(three[1].min_generators() == std::vector<int64_t>{4, 5});

  for (int64_t n = 0; n <= 8; ++n) {
    const auto ideals = enumerate_ideals(g, n);
    const auto raised = enumerate_ideals_bounded(
        g, n, g.conductor() + (n + 1) * g.max_generator() + g.max_generator());
    CHECK(ideals.size() == raised.size());
    for (const auto& ideal : ideals) {
      CHECK(ideal.codimension() == n);
      CHECK(motivic::is_independent(g, ideal.min_generators()));
      if (!ideal.missing().empty())
        CHECK(ideal.missing().back() <= g.conductor() + n * g.max_generator());
    }
  }
}

TEST_CASE("ideal enumeration budget") {
  const auto g = cusp_semigroup();
  CHECK(thrown_code([&] { enumerate_ideals(g, 6, 3); }) == ErrorCode::BudgetExceeded);
}
