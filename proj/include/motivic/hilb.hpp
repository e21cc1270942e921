#ifndef MOTIVIC_HILB_HPP
#define MOTIVIC_HILB_HPP

#include <cstdint>
#include <vector>

#include "motivic/laurent.hpp"
#include "motivic/semigroup.hpp"

namespace motivic {

/// Sorted valuations n_1 < ... < n_k of a minimal generating set;
/// independence (no n_i reachable from another inside Γ) is validated
/// at construction.
struct IndependentTuple {
  std::vector<int64_t> values;

  static IndependentTuple make(const NumericalSemigroup& gamma, std::vector<int64_t> values);
  size_t k() const { return values.size(); }
  bool operator==(const IndependentTuple& o) const { return values == o.values; }
  bool operator<(const IndependentTuple& o) const { return values < o.values; }
};

/// Motivic class of the one-generator locus at colength n:
/// L^(|{n+H} ∩ Γ|) when n is a member, zero otherwise.
Laurent principal_class(const NumericalSemigroup& gamma, int64_t n);

/// Colength of any ideal whose minimal generators have these valuations,
/// computed as n_1 - delta + |N \ U_i ((n_i - n_1) + Γ)|.
int64_t tuple_length(const NumericalSemigroup& gamma, const IndependentTuple& tuple);

/// All independent k-tuples of members with tuple_length = n, entries
/// bounded by c(Γ) + (n+1)·max(gen); ordered by increasing n_1 then
/// lexicographically. Exact enumeration of the Hilbert cells for
/// two-generator semigroups; a combinatorial model otherwise.
std::vector<IndependentTuple> enumerate_tuples(const NumericalSemigroup& gamma, int64_t n,
                                               int64_t k, uint64_t cap = 50'000'000);

/// L^e with e = Σ_i |{n_i+H} ∩ Γ| - Σ_i |{n_i+H} ∩ Γ_n̄|, where Γ_n̄ is
/// the semigroup ideal generated by the tuple. Always a power of L with
/// e >= 0 since Γ_n̄ ⊆ Γ.
Laurent tuple_summand(const NumericalSemigroup& gamma, const IndependentTuple& tuple);

/// tuple_summand times an externally supplied correction class.
Laurent fixed_generator_class_with_correction(const NumericalSemigroup& gamma,
                                              const IndependentTuple& tuple,
                                              const Laurent& correction);

struct HilbClassReport {
  int64_t n = 0;
  int64_t k = 0;
  std::vector<std::pair<IndependentTuple, Laurent>> tuples;  // tuple, summand
  Laurent total;
  int64_t euler = 0;
  /// True when Γ has two minimal generators, where the cell model is an
  /// exact decomposition; advisory otherwise.
  bool exact = false;
};

/// Motivic class of the locus of colength-n ideals with k minimal
/// generators, summed over the independent-tuple cells.
HilbClassReport fixed_generator_class(const NumericalSemigroup& gamma, int64_t n, int64_t k,
                                      uint64_t cap = 50'000'000);

}  // namespace motivic

#endif  // MOTIVIC_HILB_HPP
