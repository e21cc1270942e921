#ifndef MOTIVIC_ZETA_HPP
#define MOTIVIC_ZETA_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "motivic/laurent.hpp"
#include "motivic/resolution.hpp"

namespace motivic {

/// Frozen level shifts relating the stratum formula to raw jet counts;
/// reproduced by jet_oracle calibration on every bundled curve.
inline constexpr int kKappaOrigin = 2;
inline constexpr int kKappaGlobal = 0;

/// Class of the (n+1)-truncated n-th contact locus from the resolution:
///   L^(2n) · Σ_{J≠∅} (L-1)^{|J|} [E_J^o] Σ_{k_j≥1, Σ k_j N_j = n}
///       L^(-Σ k_j (ν_j + 1))
/// over singleton and edge strata, filtered by origin_only. Zero exactly
/// when no stratum solves the constraint.
Laurent denef_coefficient(const ResolutionGraph& graph, int64_t n, bool origin_only);

/// True iff n is not an achievable contact order, equivalently
/// denef_coefficient(n) = 0.
bool contact_empty(const ResolutionGraph& graph, int64_t n, bool origin_only);

struct ZetaConvention {
  int kappa = 0;
  bool origin_only = true;
  bool calibrated = false;  // true when kappa came from a jet-oracle run
};

/// Truncated zeta series: coefficient n is denef_coefficient(n) divided
/// by L^(2(n+1)+kappa), with the normalization convention recorded.
struct ZetaSeries {
  int64_t t_max = 0;
  std::vector<Laurent> coefficients;  // index 0 holds n = 1
  ZetaConvention convention;

  const Laurent& coefficient(int64_t n) const { return coefficients.at(static_cast<size_t>(n - 1)); }
};

/// Throws UncalibratedConvention when strict and no kappa is supplied;
/// otherwise an unset kappa falls back to the frozen constants above.
ZetaSeries zeta_series(const ResolutionGraph& graph, int64_t t_max, bool origin_only,
                       std::optional<int> kappa = std::nullopt, bool strict = false);

/// One term per nonempty stratum J of the closed rational form: the
/// prefactor (L-1)^(|J|-1) [E_J^o] and the (N_j, ν_j) pair per j in J.
struct RationalZetaTerm {
  Stratum stratum;
  Laurent prefactor;
  std::vector<std::pair<int64_t, int64_t>> factors;  // (N_j, nu_j)
};

struct RationalZeta {
  std::vector<RationalZetaTerm> terms;
  bool origin_only = true;
};

RationalZeta zeta_rational(const ResolutionGraph& graph, bool origin_only);

/// Order-n coefficient of the rational form expanded as truncated
/// geometric series, normalized to match denef_coefficient: each factor
/// contributes Σ_{k≥1} L^(-k(ν_j+1)) T^(k N_j), each term carries one
/// extra (L-1), and the result is scaled by L^(2n).
Laurent rational_expansion_coefficient(const RationalZeta& rz, int64_t n);

}  // namespace motivic

#endif  // MOTIVIC_ZETA_HPP
