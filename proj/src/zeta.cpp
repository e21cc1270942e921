#include "motivic/zeta.hpp"

#include "motivic/errors.hpp"

namespace motivic {

namespace {

// Σ over {k_j >= 1, Σ k_j N_j = n} of L^(-Σ k_j (nu_j + 1)) for a
// singleton or pair stratum.
Laurent partition_sum(const ResolutionGraph& graph, const Stratum& s, int64_t n) {
  Laurent acc;
  if (s.ids.size() == 1) {
    const auto& d = graph.divisor(s.ids[0]);
    if (n % d.N == 0) {
      const int64_t k = n / d.N;
      acc += Laurent::monomial(static_cast<long>(-k * (d.nu + 1)), 1);
    }
  } else {
    const auto& a = graph.divisor(s.ids[0]);
    const auto& b = graph.divisor(s.ids[1]);
    for (int64_t ka = 1; ka * a.N < n; ++ka) {
      const int64_t rem = n - ka * a.N;
      if (rem % b.N == 0) {
        const int64_t kb = rem / b.N;
        acc += Laurent::monomial(static_cast<long>(-(ka * (a.nu + 1) + kb * (b.nu + 1))), 1);
      }
    }
  }
  return acc;
}

}  // namespace

Laurent denef_coefficient(const ResolutionGraph& graph, int64_t n, bool origin_only) {
  if (n < 1) return Laurent::zero();
  const Laurent lm1 = Laurent::lefschetz() - Laurent::one();
  Laurent total;
  for (const auto& s : graph.strata(origin_only)) {
    const Laurent inner = partition_sum(graph, s, n);
    if (inner.is_zero()) continue;
    total += lm1.pow(s.ids.size()) * graph.stratum_class(s) * inner;
  }
  return total.shifted(static_cast<long>(2 * n));
}

bool contact_empty(const ResolutionGraph& graph, int64_t n, bool origin_only) {
  if (n < 1) fail(ErrorCode::BadRange, "contact order must be >= 1");
  return !graph.achievable_orders(origin_only, n).count(n);
}

ZetaSeries zeta_series(const ResolutionGraph& graph, int64_t t_max, bool origin_only,
                       std::optional<int> kappa, bool strict) {
  if (t_max < 1) fail(ErrorCode::BadRange, "t_max must be >= 1");
  if (!kappa && strict)
    fail(ErrorCode::UncalibratedConvention, "no level shift supplied in strict mode");
  ZetaSeries z;
  z.t_max = t_max;
  z.convention.origin_only = origin_only;
  z.convention.calibrated = kappa.has_value();
  z.convention.kappa = kappa.value_or(origin_only ? kKappaOrigin : kKappaGlobal);
  z.coefficients.reserve(static_cast<size_t>(t_max));
  for (int64_t n = 1; n <= t_max; ++n) {
    const long down = static_cast<long>(2 * (n + 1) + z.convention.kappa);
    z.coefficients.push_back(denef_coefficient(graph, n, origin_only).shifted(-down));
  }
  return z;
}

RationalZeta zeta_rational(const ResolutionGraph& graph, bool origin_only) {
  RationalZeta rz;
  rz.origin_only = origin_only;
  const Laurent lm1 = Laurent::lefschetz() - Laurent::one();
  for (const auto& s : graph.strata(origin_only)) {
    RationalZetaTerm term;
    term.stratum = s;
    term.prefactor = lm1.pow(s.ids.size() - 1) * graph.stratum_class(s);
    for (int id : s.ids) {
      const auto& d = graph.divisor(id);
      term.factors.emplace_back(d.N, d.nu);
    }
    rz.terms.push_back(std::move(term));
  }
  return rz;
}

Laurent rational_expansion_coefficient(const RationalZeta& rz, int64_t n) {
  if (n < 1) return Laurent::zero();
  const Laurent lm1 = Laurent::lefschetz() - Laurent::one();
  Laurent total;
  for (const auto& term : rz.terms) {
    // Coefficient of T^n in Π_j Σ_{k>=1} (L^{-(nu_j+1)} T^{N_j})^k.
    Laurent inner;
    if (term.factors.size() == 1) {
      const auto& [N, nu] = term.factors[0];
      if (n % N == 0) inner = Laurent::monomial(static_cast<long>(-(n / N) * (nu + 1)), 1);
    } else {
      const auto& [Na, nua] = term.factors[0];
      const auto& [Nb, nub] = term.factors[1];
      for (int64_t ka = 1; ka * Na < n; ++ka) {
        const int64_t rem = n - ka * Na;
        if (rem % Nb == 0)
          inner += Laurent::monomial(
              static_cast<long>(-(ka * (nua + 1) + (rem / Nb) * (nub + 1))), 1);
      }
    }
    if (inner.is_zero()) continue;
    total += lm1 * term.prefactor * inner;
  }
  return total.shifted(static_cast<long>(2 * n));
}

}  // namespace motivic
