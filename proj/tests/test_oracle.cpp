#include "motivic/jet_oracle.hpp"

#include <cstdint>

#include "doctest.h"
#include "motivic/errors.hpp"
#include "motivic/resolution.hpp"
#include "motivic/zeta.hpp"

using motivic::calibrate;
using motivic::count_jets;
using motivic::count_jets_stratified;
using motivic::CurvePoly;
using motivic::denef_coefficient;
using motivic::Error;
using motivic::ErrorCode;
using motivic::ResolutionGraph;

TEST_CASE("hand-counted cusp jets") {
  const auto f = CurvePoly::pq(2, 3);
  // contact order 2 forces only a nonzero first x-coefficient: (q-1)q^3
  CHECK(count_jets(f, 2, 2, true).raw_count == 8);
  CHECK(count_jets(f, 3, 2, true).raw_count == 54);
  // the empty fifth contact locus
  CHECK(count_jets(f, 2, 5, true).raw_count == 0);
  CHECK(count_jets(f, 3, 5, true).raw_count == 0);

  const auto report = count_jets(f, 2, 2, true);
  CHECK(report.ambient_log == 4);
  CHECK(report.ratio == mpq_class(8, 16));

  // with free constant terms the smooth points of the curve contribute
  // (q-1)^2 q^2 more jets: (q-1)q^2(2q-1)
  CHECK(count_jets(f, 2, 2, false).raw_count == 12);
  CHECK(count_jets(f, 2, 2, false).ambient_log == 6);
}

TEST_CASE("stratified counts") {
  const auto f = CurvePoly::pq(2, 3);
  CHECK(count_jets_stratified(f, 2, 2, 1).raw_count == 8);
  CHECK(count_jets_stratified(f, 2, 2, 2).raw_count == 0);

  for (int64_t q : {2, 3})
    for (int64_t n = 1; n <= 5; ++n) {
      uint64_t sum = 0;
      for (int64_t k = 1; k <= n; ++k)
        sum += count_jets_stratified(f, q, n, k).raw_count;
      CHECK(sum == count_jets(f, q, n, true).raw_count);
    }
}

TEST_CASE("parallel determinism") {
  const auto f = CurvePoly::pq(2, 5);
  const auto one = count_jets(f, 2, 5, true, motivic::kDefaultJetCap, 1);
  const auto three = count_jets(f, 2, 5, true, motivic::kDefaultJetCap, 3);
  const auto five = count_jets(f, 2, 5, true, motivic::kDefaultJetCap, 5);
  CHECK(one.raw_count == three.raw_count);
  CHECK(one.raw_count == five.raw_count);
}

TEST_CASE("oracle matches contact-order classes") {
  for (auto [p, q] : {std::pair<int64_t, int64_t>{2, 3}, {2, 5}, {3, 4}}) {
    const auto f = CurvePoly::pq(p, q);
    const auto g = ResolutionGraph::resolve_pq(p, q);
    for (int64_t prime : {2, 3})
      for (int64_t n = 1; n <= (prime == 2 ? 7 : 5); ++n) {
        const auto count = count_jets(f, prime, n, true);
        const auto eval = denef_coefficient(g, n, true).evaluate(prime);
        CHECK(mpq_class(static_cast<unsigned long>(count.raw_count)) == eval);
      }
  }
}

TEST_CASE("calibration") {
  for (auto [p, q] : {std::pair<int64_t, int64_t>{2, 3}, {2, 5}}) {
    const auto f = CurvePoly::pq(p, q);
    const auto g = ResolutionGraph::resolve_pq(p, q);
    CHECK(calibrate(g, f, {2, 3}, {2, 3, 4, 6}, true) == motivic::kKappaOrigin);
    CHECK(calibrate(g, f, {2}, {2, 3, 4}, false) == motivic::kKappaGlobal);
  }

  const auto f = CurvePoly::pq(2, 3);
  const auto g = ResolutionGraph::resolve_pq(2, 3);
  try {
    calibrate(g, f, {2}, {});
    FAIL("expected Underdetermined");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Underdetermined);
  }
  try {
    calibrate(g, f, {2}, {5});  // only an empty locus: nothing to fit
    FAIL("expected Underdetermined");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Underdetermined);
  }
  // the (2,3) graph against the (2,5) curve disagrees beyond any shift
  const auto wrong = CurvePoly::pq(2, 5);
  try {
    calibrate(g, wrong, {2}, {2, 3, 4});
    FAIL("expected Inconsistent");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Inconsistent);
  }
}

TEST_CASE("argument validation") {
  const auto f = CurvePoly::pq(2, 3);
  CHECK_THROWS_AS(count_jets(f, 4, 2, true), Error);   // not prime
  CHECK_THROWS_AS(count_jets(f, 11, 2, true), Error);  // prime but too large
  CHECK_THROWS_AS(count_jets(f, 2, 10, true, 1000), Error);  // cap
  CHECK_THROWS_AS(count_jets_stratified(f, 2, 3, 0), Error);
  CHECK_THROWS_AS(count_jets_stratified(f, 2, 3, 4), Error);

  CurvePoly bad;
  bad.terms.push_back({0, 0, 1});
  CHECK_THROWS_AS(count_jets(bad, 2, 2, true), Error);
}
