#ifndef MOTIVIC_JET_ORACLE_HPP
#define MOTIVIC_JET_ORACLE_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "motivic/resolution.hpp"

namespace motivic {

/// Bivariate integer polynomial with vanishing constant term, stored as
/// sparse (i, j, coefficient) terms for x^i y^j.
struct CurvePoly {
  struct Term {
    int i = 0;
    int j = 0;
    int64_t c = 0;
  };
  std::vector<Term> terms;

  /// x^p - y^q.
  static CurvePoly pq(int64_t p, int64_t q);
  /// Throws BadInput unless f(0,0) = 0.
  void validate() const;
};

struct JetCountReport {
  int64_t q = 0;
  int64_t n = 0;
  bool origin_only = true;
  std::optional<int64_t> k_stratum;
  uint64_t raw_count = 0;
  int ambient_log = 0;       // log_q of the enumerated space size
  mpq_class ratio;           // raw_count / q^ambient_log
};

inline constexpr uint64_t kDefaultJetCap = 100'000'000;

/// Count truncations mod t^(n+1) of coordinate pairs (x(t), y(t)) with
/// f(x, y) ≡ c·t^n, c ≠ 0; constant terms forced to zero when
/// origin_only. Exact; embarrassingly parallel over index chunks with a
/// total independent of the partition. Throws NonPrime / CapExceeded.
JetCountReport count_jets(const CurvePoly& f, int64_t q, int64_t n, bool origin_only,
                          uint64_t cap = kDefaultJetCap, int threads = 1);

/// Same, restricted to jets whose coordinate pair vanishes mod t^k but
/// not mod t^(k+1). Requires 1 <= k <= n.
JetCountReport count_jets_stratified(const CurvePoly& f, int64_t q, int64_t n, int64_t k,
                                     uint64_t cap = kDefaultJetCap, int threads = 1);

/// The unique integer kappa with
///   raw_count(q, n) = denef_coefficient(n)(q) · q^(kappa - 2(n+1) + ambient_log)
/// across every tested pair. Throws Inconsistent (listing the failing
/// pairs) or Underdetermined (every tested count zero).
int calibrate(const ResolutionGraph& graph, const CurvePoly& f,
              const std::vector<int64_t>& q_list, const std::vector<int64_t>& n_list,
              bool origin_only, uint64_t cap = kDefaultJetCap, int threads = 1);

}  // namespace motivic

#endif  // MOTIVIC_JET_ORACLE_HPP
