#ifndef MOTIVIC_RESOLUTION_HPP
#define MOTIVIC_RESOLUTION_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "motivic/laurent.hpp"

namespace motivic {

struct Divisor {
  int id = 0;
  int64_t N = 0;   // multiplicity of the pulled-back curve equation
  int64_t nu = 0;  // discrepancy
  bool strict_transform = false;
  bool over_origin = true;
};

/// Strata of a simple-normal-crossing configuration on a surface are
/// exactly the single divisors and their pairwise intersection points.
struct Stratum {
  std::vector<int> ids;  // size 1 or 2, ascending
  bool operator<(const Stratum& o) const { return ids < o.ids; }
  bool operator==(const Stratum& o) const { return ids == o.ids; }
  std::string key() const;  // "3" or "1-3"
};

/// Combinatorics of an embedded resolution of a plane curve germ:
/// exceptional divisors plus the strict transform, SNC incidence,
/// and the motivic classes of the open strata.
class ResolutionGraph {
 public:
  /// Resolution of the (p,q)-curve x^p - y^q by iterated point blow-ups.
  /// Throws BadRange / NotCoprime.
  static ResolutionGraph resolve_pq(int64_t p, int64_t q);

  /// Parse and validate a serialized graph. Throws SchemaError /
  /// InvariantViolation (naming the failed invariant).
  static ResolutionGraph load_graph(const std::string& json_text);

  const std::vector<Divisor>& divisors() const { return divisors_; }
  const std::set<std::pair<int, int>>& edges() const { return edges_; }
  const Divisor& divisor(int id) const;
  int degree(int id) const;
  bool has_edge(int a, int b) const;

  /// [E_J^o] for a singleton or edge stratum.
  const Laurent& stratum_class(const Stratum& s) const;
  /// All strata; origin_only drops the strict-transform singleton (the
  /// one stratum lying over smooth points of the curve).
  std::vector<Stratum> strata(bool origin_only) const;

  /// max over all divisors of N_i.
  int64_t threshold() const;

  /// All n <= n_max of the form Σ_{j in J} k_j N_j with k_j >= 1 over
  /// the (filtered) strata.
  std::set<int64_t> achievable_orders(bool origin_only, int64_t n_max) const;

  std::string to_json() const;
  std::string to_dot() const;

  bool operator==(const ResolutionGraph& o) const;

  /// Check all structural invariants; throws InvariantViolation.
  void validate() const;

 private:
  std::vector<Divisor> divisors_;
  std::set<std::pair<int, int>> edges_;
  std::map<Stratum, Laurent> classes_;

  Laurent expected_singleton_class(const Divisor& d) const;
  void fill_default_classes();
};

}  // namespace motivic

#endif  // MOTIVIC_RESOLUTION_HPP
