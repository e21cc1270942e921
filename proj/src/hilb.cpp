#include "motivic/hilb.hpp"

#include <algorithm>

#include "motivic/errors.hpp"

namespace motivic {

IndependentTuple IndependentTuple::make(const NumericalSemigroup& gamma,
                                        std::vector<int64_t> values) {
  if (values.empty()) fail(ErrorCode::Empty, "tuple is empty");
  std::sort(values.begin(), values.end());
  for (int64_t v : values)
    if (!gamma.contains(v))
      fail(ErrorCode::NotAMember, std::to_string(v) + " is not in the semigroup");
  if (!is_independent(gamma, values))
    fail(ErrorCode::InvariantViolation, "tuple is not independent");
  return IndependentTuple{std::move(values)};
}

Laurent principal_class(const NumericalSemigroup& gamma, int64_t n) {
  if (n < 0) fail(ErrorCode::BadRange, "colength must be non-negative");
  if (!gamma.contains(n)) return Laurent::zero();
  return Laurent::monomial(static_cast<long>(gamma.shifted_hole_hits(n)), 1);
}

int64_t tuple_length(const NumericalSemigroup& gamma, const IndependentTuple& tuple) {
  const auto& v = tuple.values;
  const int64_t n1 = v.front();
  // Gaps of U_i ((n_i - n1) + Γ) all lie below (n_k - n1) + c(Γ).
  const int64_t bound = v.back() - n1 + gamma.conductor();
  int64_t gaps = 0;
  for (int64_t x = 0; x < bound; ++x) {
    bool covered = false;
    for (int64_t ni : v)
      if (gamma.contains(x - (ni - n1))) {
        covered = true;
        break;
      }
    if (!covered) ++gaps;
  }
  return n1 - gamma.delta() + gaps;
}

std::vector<IndependentTuple> enumerate_tuples(const NumericalSemigroup& gamma, int64_t n,
                                               int64_t k, uint64_t cap) {
  if (n < 1 || k < 1) fail(ErrorCode::BadRange, "require n >= 1 and k >= 1");
  const int64_t bound = gamma.conductor() + (n + 1) * gamma.max_generator();
  std::vector<int64_t> members = gamma.members_upto(bound);
  members.erase(members.begin());  // drop 0: it generates all of Γ

  std::vector<IndependentTuple> out;
  std::vector<int64_t> cur;
  uint64_t nodes = 0;

  // Codimension of the ideal generated by the current partial tuple;
  // it only shrinks as entries are added, so partial < n prunes.
  auto partial_codim = [&](int64_t limit) {
    const int64_t b = cur.front() + gamma.conductor();
    int64_t gaps = 0;
    for (int64_t x = 0; x < b; ++x) {
      if (!gamma.contains(x)) continue;
      bool covered = false;
      for (int64_t ni : cur)
        if (gamma.contains(x - ni)) {
          covered = true;
          break;
        }
      if (!covered && ++gaps > limit) return gaps;
    }
    return gaps;
  };

  auto dfs = [&](auto&& self, size_t start) -> void {
    if (++nodes > cap) fail(ErrorCode::BudgetExceeded, "tuple enumeration exceeded cap");
    if (static_cast<int64_t>(cur.size()) == k) {
      IndependentTuple t{cur};
      if (tuple_length(gamma, t) == n) out.push_back(std::move(t));
      return;
    }
    for (size_t i = start; i < members.size(); ++i) {
      const int64_t v = members[i];
      bool indep = true;
      for (int64_t u : cur)
        if (gamma.contains(v - u)) {
          indep = false;
          break;
        }
      if (!indep) continue;
      cur.push_back(v);
      if (partial_codim(n) >= n) self(self, i + 1);
      cur.pop_back();
    }
  };
  dfs(dfs, 0);
  std::sort(out.begin(), out.end());
  return out;
}

Laurent tuple_summand(const NumericalSemigroup& gamma, const IndependentTuple& tuple) {
  const SemigroupIdeal ideal = SemigroupIdeal::from_generators(gamma, tuple.values);
  int64_t e = 0;
  for (int64_t v : tuple.values)
    e += gamma.shifted_hole_hits(v) - gamma.shifted_hole_hits(v, ideal);
  return Laurent::monomial(static_cast<long>(e), 1);
}

Laurent fixed_generator_class_with_correction(const NumericalSemigroup& gamma,
                                              const IndependentTuple& tuple,
                                              const Laurent& correction) {
  return tuple_summand(gamma, tuple) * correction;
}

HilbClassReport fixed_generator_class(const NumericalSemigroup& gamma, int64_t n, int64_t k,
                                      uint64_t cap) {
  HilbClassReport report;
  report.n = n;
  report.k = k;
  report.exact = gamma.generators().size() == 2;
  for (auto& tuple : enumerate_tuples(gamma, n, k, cap)) {
    Laurent s = tuple_summand(gamma, tuple);
    report.total += s;
    report.tuples.emplace_back(std::move(tuple), std::move(s));
  }
  report.euler = static_cast<int64_t>(report.tuples.size());
  return report;
}

}  // namespace motivic
