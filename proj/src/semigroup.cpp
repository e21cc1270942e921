#include "motivic/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "motivic/errors.hpp"

namespace motivic {

namespace {

int64_t gcd_all(const std::vector<int64_t>& v) {
  int64_t g = 0;
  for (int64_t x : v) g = std::gcd(g, x);
  return g;
}

// Membership table of the submonoid generated by gens on [0, bound].
std::vector<bool> closure_table(const std::vector<int64_t>& gens, int64_t bound) {
  std::vector<bool> t(static_cast<size_t>(bound) + 1, false);
  t[0] = true;
  for (int64_t i = 1; i <= bound; ++i)
    for (int64_t g : gens)
      if (i >= g && t[static_cast<size_t>(i - g)]) {
        t[static_cast<size_t>(i)] = true;
        break;
      }
  return t;
}

}  // namespace

void NumericalSemigroup::build_from_table(std::vector<bool> table) {
  table_ = std::move(table);
  conductor_ = 0;
  for (size_t i = 0; i < table_.size(); ++i)
    if (!table_[i]) conductor_ = static_cast<int64_t>(i) + 1;
  holes_.clear();
  for (int64_t i = 0; i < conductor_; ++i)
    if (!table_[static_cast<size_t>(i)]) holes_.push_back(i);
  // Minimal generators: members m > 0 that are not a sum of two smaller
  // positive members. Any minimal generator is < conductor + min member.
  generators_.clear();
  int64_t min_member = conductor_ == 0 ? 1 : 0;
  for (int64_t m = 1; m < static_cast<int64_t>(table_.size()); ++m)
    if (table_[static_cast<size_t>(m)]) {
      min_member = m;
      break;
    }
  const int64_t gen_bound = conductor_ + min_member;
  for (int64_t m = 1; m <= gen_bound && m < static_cast<int64_t>(table_.size()); ++m) {
    if (!table_[static_cast<size_t>(m)]) continue;
    bool minimal = true;
    for (int64_t x = 1; x < m; ++x)
      if (table_[static_cast<size_t>(x)] && table_[static_cast<size_t>(m - x)]) {
        minimal = false;
        break;
      }
    if (minimal) generators_.push_back(m);
  }
}

NumericalSemigroup NumericalSemigroup::from_generators(std::vector<int64_t> gens) {
  if (gens.empty()) fail(ErrorCode::Empty, "generator list is empty");
  for (int64_t g : gens)
    if (g <= 0) fail(ErrorCode::BadInput, "generators must be positive");
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (gcd_all(gens) != 1) fail(ErrorCode::GcdNotOne, "gcd of the generators is not 1");

  // Grow the table until a run of min(gens) consecutive members appears,
  // which certifies the conductor; then rebuild with the spec margin.
  const int64_t mn = gens.front(), mx = gens.back();
  int64_t bound = std::max<int64_t>(mn * mx + 2 * mx + 2, 16);
  for (;;) {
    auto t = closure_table(gens, bound);
    int64_t run = 0, conductor = -1;
    for (int64_t i = 0; i <= bound; ++i) {
      run = t[static_cast<size_t>(i)] ? run + 1 : 0;
      if (run >= mn) {
        conductor = i - run + 1;
        break;
      }
    }
    if (conductor >= 0) {
      NumericalSemigroup s;
      s.build_from_table(closure_table(gens, conductor + 2 * mx));
      return s;
    }
    bound *= 2;
  }
}

NumericalSemigroup NumericalSemigroup::from_holes(std::vector<int64_t> holes) {
  std::sort(holes.begin(), holes.end());
  holes.erase(std::unique(holes.begin(), holes.end()), holes.end());
  for (int64_t h : holes)
    if (h <= 0) fail(ErrorCode::BadInput, "holes must be positive");
  const int64_t max_hole = holes.empty() ? 0 : holes.back();
  // Sums above 2*max_hole + 2 exceed every hole, so closure is checkable
  // on a finite window.
  const int64_t bound = 2 * max_hole + 2;
  std::vector<bool> t(static_cast<size_t>(bound) + 1, true);
  for (int64_t h : holes) t[static_cast<size_t>(h)] = false;
  for (int64_t a = 1; a <= bound; ++a) {
    if (!t[static_cast<size_t>(a)]) continue;
    for (int64_t b = a; a + b <= bound; ++b) {
      if (!t[static_cast<size_t>(b)]) continue;
      if (!t[static_cast<size_t>(a + b)])
        fail(ErrorCode::NotASemigroup,
             "complement not closed under addition: " + std::to_string(a) + "+" +
                 std::to_string(b) + " is a hole");
    }
  }
  NumericalSemigroup s;
  s.build_from_table(std::move(t));
  // Re-derive with the canonical margin so both constructors agree.
  return from_generators(s.generators_);
}

bool NumericalSemigroup::contains(int64_t x) const {
  if (x < 0) return false;
  if (x >= conductor_) return true;
  return table_[static_cast<size_t>(x)];
}

std::vector<int64_t> NumericalSemigroup::members_upto(int64_t bound) const {
  std::vector<int64_t> out;
  for (int64_t x = 0; x <= bound; ++x)
    if (contains(x)) out.push_back(x);
  return out;
}

int64_t NumericalSemigroup::shifted_hole_hits(int64_t n) const {
  int64_t c = 0;
  for (int64_t h : holes_)
    if (contains(n + h)) ++c;
  return c;
}

int64_t NumericalSemigroup::shifted_hole_hits(int64_t n, const SemigroupIdeal& target) const {
  int64_t c = 0;
  for (int64_t h : holes_)
    if (target.contains(n + h)) ++c;
  return c;
}

SemigroupIdeal SemigroupIdeal::from_generators(const NumericalSemigroup& gamma,
                                               std::vector<int64_t> values) {
  if (values.empty()) fail(ErrorCode::Empty, "ideal generator list is empty");
  for (int64_t v : values)
    if (!gamma.contains(v))
      fail(ErrorCode::NotAMember, std::to_string(v) + " is not in the semigroup");
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  // Minimality: drop v when v - u lands in Γ for another generator u.
  std::vector<int64_t> min_gens;
  for (size_t i = 0; i < values.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < values.size() && !redundant; ++j)
      if (j != i && gamma.contains(values[i] - values[j])) redundant = true;
    if (!redundant) min_gens.push_back(values[i]);
  }

  SemigroupIdeal d;
  d.parent_ = &gamma;
  d.min_generators_ = std::move(min_gens);
  // Every element of Γ \ Δ is < ν_1 + c(Γ): past that, x - ν_1 is a member.
  const int64_t scan = d.min_generators_.front() + gamma.conductor();
  for (int64_t x = 0; x < scan; ++x)
    if (gamma.contains(x) && !d.contains(x)) d.missing_.push_back(x);
  d.conductor_ = std::max(gamma.conductor(),
                          d.missing_.empty() ? int64_t{0} : d.missing_.back() + 1);
  return d;
}

bool SemigroupIdeal::contains(int64_t x) const {
  for (int64_t v : min_generators_)
    if (parent_->contains(x - v)) return true;
  return false;
}

SemigroupIdeal SemigroupIdeal::from_missing(const NumericalSemigroup& gamma,
                                            std::vector<int64_t> missing) {
  // Δ = Γ \ missing; recover the minimal generators from the table.
  const int64_t bound =
      (missing.empty() ? 0 : missing.back()) + gamma.conductor() + gamma.max_generator() + 1;
  std::set<int64_t> gone(missing.begin(), missing.end());
  std::vector<int64_t> members;
  for (int64_t x = 0; x <= bound; ++x)
    if (gamma.contains(x) && !gone.count(x)) members.push_back(x);
  std::vector<int64_t> gens;
  for (int64_t v : members) {
    bool minimal = true;
    for (int64_t u : members) {
      if (u >= v) break;
      if (gamma.contains(v - u)) {
        minimal = false;
        break;
      }
    }
    if (minimal) gens.push_back(v);
  }
  SemigroupIdeal d = from_generators(gamma, gens);
  return d;
}

bool is_independent(const NumericalSemigroup& gamma, const std::vector<int64_t>& values) {
  if (values.empty()) return false;
  for (int64_t v : values)
    if (!gamma.contains(v)) return false;
  for (size_t i = 0; i < values.size(); ++i)
    for (size_t j = 0; j < values.size(); ++j)
      if (i != j && gamma.contains(values[i] - values[j])) return false;
  return true;
}

std::vector<SemigroupIdeal> enumerate_ideals(const NumericalSemigroup& gamma, int64_t n,
                                             uint64_t cap) {
  if (n < 0) fail(ErrorCode::BadRange, "codimension must be non-negative");
  return enumerate_ideals_bounded(gamma, n, gamma.conductor() + (n + 1) * gamma.max_generator(),
                                  cap);
}

std::vector<SemigroupIdeal> enumerate_ideals_bounded(const NumericalSemigroup& gamma, int64_t n,
                                                     int64_t bound, uint64_t cap) {
  std::vector<SemigroupIdeal> out;
  if (n == 0) {
    out.push_back(SemigroupIdeal::from_generators(gamma, {0}));
    return out;
  }
  // Enumerate the missing sets M = Γ \ Δ: the down-sets of size n of the
  // divisibility order on Γ ∩ [0, B]. Numeric order is a linear extension,
  // so a DFS that only adds an element once all its generator-predecessors
  // are present visits each down-set exactly once.
  const std::vector<int64_t> members = gamma.members_upto(bound);
  const std::vector<int64_t>& gens = gamma.generators();

  std::vector<int64_t> current;
  std::set<int64_t> in_current;
  std::vector<std::vector<int64_t>> found;
  uint64_t nodes = 0;

  auto addable = [&](int64_t y) {
    for (int64_t g : gens) {
      const int64_t p = y - g;
      if (gamma.contains(p) && !in_current.count(p)) return false;
    }
    return true;
  };

  // current always starts with 0 (every nonempty missing set contains 0).
  auto dfs = [&](auto&& self, size_t idx) -> void {
    if (++nodes > cap) fail(ErrorCode::BudgetExceeded, "ideal enumeration exceeded cap");
    if (static_cast<int64_t>(current.size()) == n) {
      found.push_back(current);
      return;
    }
    for (size_t i = idx; i < members.size(); ++i) {
      const int64_t y = members[i];
      // Nothing above max(current) + max(gen) can ever become addable.
      if (!current.empty() && y > current.back() + gamma.max_generator() &&
          y > gamma.conductor() + gamma.max_generator())
        break;
      if (!addable(y)) continue;
      current.push_back(y);
      in_current.insert(y);
      self(self, i + 1);
      in_current.erase(y);
      current.pop_back();
    }
  };
  dfs(dfs, 0);

  std::sort(found.begin(), found.end());
  out.reserve(found.size());
  for (auto& m : found) out.push_back(SemigroupIdeal::from_missing(gamma, std::move(m)));
  return out;
}

}  // namespace motivic
