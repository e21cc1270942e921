#ifndef MOTIVIC_SEMIGROUP_HPP
#define MOTIVIC_SEMIGROUP_HPP

#include <cstdint>
#include <vector>

namespace motivic {

class SemigroupIdeal;

/// A numerical semigroup: cofinite additive submonoid of the naturals,
/// stored as minimal generators plus a membership table over
/// [0, conductor + 2*max(generators)]. Immutable after construction.
class NumericalSemigroup {
 public:
  /// Canonical semigroup generated by `gens`. Throws Empty / GcdNotOne.
  static NumericalSemigroup from_generators(std::vector<int64_t> gens);

  /// Semigroup whose gap set is exactly `holes`. Throws NotASemigroup
  /// when the complement of the holes is not closed under addition.
  static NumericalSemigroup from_holes(std::vector<int64_t> holes);

  bool contains(int64_t x) const;

  const std::vector<int64_t>& generators() const { return generators_; }
  const std::vector<int64_t>& holes() const { return holes_; }
  int64_t delta() const { return static_cast<int64_t>(holes_.size()); }
  int64_t conductor() const { return conductor_; }
  int64_t max_generator() const { return generators_.back(); }
  int64_t min_generator() const { return generators_.front(); }

  /// Members of the semigroup in [0, bound], ascending.
  std::vector<int64_t> members_upto(int64_t bound) const;

  /// |{n + h : h in holes} ∩ Γ|.
  int64_t shifted_hole_hits(int64_t n) const;
  /// |{n + h : h in holes} ∩ Δ| for a semigroup ideal Δ over this Γ.
  int64_t shifted_hole_hits(int64_t n, const SemigroupIdeal& target) const;

  bool operator==(const NumericalSemigroup& o) const {
    return generators_ == o.generators_;
  }

 private:
  NumericalSemigroup() = default;
  void build_from_table(std::vector<bool> table);

  std::vector<int64_t> generators_;  // unique minimal system, ascending
  std::vector<int64_t> holes_;       // ascending
  int64_t conductor_ = 0;
  std::vector<bool> table_;  // membership on [0, table_.size())
};

/// A semigroup ideal Δ ⊆ Γ with Δ + Γ ⊆ Δ, stored as minimal generators
/// plus the finite set Γ \ Δ.
class SemigroupIdeal {
 public:
  /// Ideal generated by `values` inside Γ; the generator list is
  /// minimalized. Throws NotAMember when a value is outside Γ.
  static SemigroupIdeal from_generators(const NumericalSemigroup& gamma,
                                        std::vector<int64_t> values);

  bool contains(int64_t x) const;

  const NumericalSemigroup& parent() const { return *parent_; }
  const std::vector<int64_t>& min_generators() const { return min_generators_; }
  /// Γ \ Δ, ascending.
  const std::vector<int64_t>& missing() const { return missing_; }
  int64_t codimension() const { return static_cast<int64_t>(missing_.size()); }
  /// Least member past which Δ has no gaps.
  int64_t conductor() const { return conductor_; }

 private:
  SemigroupIdeal() = default;
  friend std::vector<SemigroupIdeal> enumerate_ideals_bounded(const NumericalSemigroup&, int64_t,
                                                              int64_t, uint64_t);

  static SemigroupIdeal from_missing(const NumericalSemigroup& gamma,
                                     std::vector<int64_t> missing);

  const NumericalSemigroup* parent_ = nullptr;
  std::vector<int64_t> min_generators_;
  std::vector<int64_t> missing_;
  int64_t conductor_ = 0;
};

/// True iff no entry lies in the ideal generated by the others,
/// i.e. n_i - n_j is never in Γ for i != j. Entries must be members.
bool is_independent(const NumericalSemigroup& gamma, const std::vector<int64_t>& values);

/// All semigroup ideals Δ ⊆ Γ with |Γ \ Δ| = n, enumerated exhaustively
/// over Γ ∩ [0, c(Γ) + (n+1)·max(gen)], returned in lexicographic order
/// of the missing set. Throws BudgetExceeded past `cap` search nodes.
std::vector<SemigroupIdeal> enumerate_ideals(const NumericalSemigroup& gamma, int64_t n,
                                             uint64_t cap = 50'000'000);

/// Same search with an explicit element bound; the property suite uses
/// this to confirm the default bound is already saturated.
std::vector<SemigroupIdeal> enumerate_ideals_bounded(const NumericalSemigroup& gamma, int64_t n,
                                                     int64_t bound, uint64_t cap = 50'000'000);

}  // namespace motivic

#endif  // MOTIVIC_SEMIGROUP_HPP
