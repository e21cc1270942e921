#include "motivic/checks.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "motivic/errors.hpp"
#include "motivic/hilb.hpp"
#include "motivic/jet_oracle.hpp"
#include "motivic/laurent.hpp"
#include "motivic/resolution.hpp"
#include "motivic/semigroup.hpp"
#include "motivic/zeta.hpp"

namespace motivic {

namespace {

const std::vector<std::pair<int64_t, int64_t>> kPqGrid = {{2, 3}, {2, 5}, {3, 4}, {3, 5}};

void record(std::vector<CheckResult>& out, const std::string& property,
            const std::string& params, bool pass, const std::string& detail = "") {
  out.push_back({property, params, pass, pass ? "" : detail});
}

std::string pq_name(int64_t p, int64_t q) {
  return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

void suite_semigroup(std::vector<CheckResult>& out, const CheckOptions& opt) {
  for (auto [p, q] : kPqGrid) {
    const auto gamma = NumericalSemigroup::from_generators({p, q});
    const std::string tag = pq_name(p, q);

    record(out, "delta formula", tag, gamma.delta() == (p - 1) * (q - 1) / 2,
           "delta = " + std::to_string(gamma.delta()));
    record(out, "conductor formula", tag, gamma.conductor() == (p - 1) * (q - 1),
           "conductor = " + std::to_string(gamma.conductor()));

    bool symmetric = true;
    for (int64_t m = 0; m < gamma.conductor(); ++m)
      if (gamma.contains(m) == gamma.contains(gamma.conductor() - 1 - m)) symmetric = false;
    record(out, "symmetry", tag, symmetric);

    const auto rebuilt = NumericalSemigroup::from_holes(gamma.holes());
    record(out, "holes round trip", tag, rebuilt.generators() == gamma.generators());

    for (int64_t n = 0; n <= std::min<int64_t>(opt.n_max, 6); ++n) {
      const auto ideals = enumerate_ideals(gamma, n, opt.cap);
      const int64_t default_bound = gamma.conductor() + (n + 1) * gamma.max_generator();
      const auto raised =
          enumerate_ideals_bounded(gamma, n, default_bound + gamma.max_generator(), opt.cap);
      record(out, "ideal enumeration bound stability", tag + " n=" + std::to_string(n),
             ideals.size() == raised.size(),
             std::to_string(ideals.size()) + " vs " + std::to_string(raised.size()));

      bool independent = true, bounded = true;
      for (const auto& ideal : ideals) {
        if (!is_independent(gamma, ideal.min_generators())) independent = false;
        if (!ideal.missing().empty() &&
            ideal.missing().back() > gamma.conductor() + n * gamma.max_generator())
          bounded = false;
      }
      record(out, "ideal minimal generators independent", tag + " n=" + std::to_string(n),
             independent);
      record(out, "missing set bound soundness", tag + " n=" + std::to_string(n), bounded);
    }
  }
}

void suite_hilb(std::vector<CheckResult>& out, const CheckOptions& opt) {
  for (auto [p, q] : kPqGrid) {
    const auto gamma = NumericalSemigroup::from_generators({p, q});
    const std::string tag = pq_name(p, q);

    for (int64_t n = 1; n <= opt.n_max; ++n) {
      int64_t euler_sum = 0;
      bool lengths_agree = true;
      for (int64_t k = 1; k <= p; ++k) {
        const auto report = fixed_generator_class(gamma, n, k, opt.cap);
        euler_sum += report.euler;

        record(out, "positivity", tag + " n=" + std::to_string(n) + " k=" + std::to_string(k),
               report.total.has_nonnegative_coefficients(), report.total.to_string());
        record(out, "euler specialization",
               tag + " n=" + std::to_string(n) + " k=" + std::to_string(k),
               report.total.evaluate(1) == report.euler);
        if (k == 1)
          record(out, "principal consistency", tag + " n=" + std::to_string(n),
                 report.total == principal_class(gamma, n));

        for (const auto& [tuple, summand] : report.tuples) {
          const auto ideal = SemigroupIdeal::from_generators(gamma, tuple.values);
          if (tuple_length(gamma, tuple) != ideal.codimension()) lengths_agree = false;
        }
      }
      record(out, "length oracle", tag + " n=" + std::to_string(n), lengths_agree,
             "tuple length disagrees with table-scan codimension");

      const auto ideals = enumerate_ideals(gamma, n, opt.cap);
      record(out, "cell count vs ideal count", tag + " n=" + std::to_string(n),
             euler_sum == static_cast<int64_t>(ideals.size()),
             std::to_string(euler_sum) + " vs " + std::to_string(ideals.size()));
    }
  }
}

void suite_resolution(std::vector<CheckResult>& out, const CheckOptions&) {
  for (auto [p, q] : kPqGrid) {
    const auto graph = ResolutionGraph::resolve_pq(p, q);
    const std::string tag = pq_name(p, q);

    mpq_class lct((unsigned long)1, (unsigned long)1);
    bool first = true;
    int64_t max_n = 0;
    int max_id = 0;
    for (const auto& d : graph.divisors()) {
      if (d.strict_transform) continue;
      mpq_class ratio(d.nu + 1, d.N);
      ratio.canonicalize();
      if (first || ratio < lct) lct = ratio;
      first = false;
      if (d.N > max_n) {
        max_n = d.N;
        max_id = d.id;
      }
    }
    mpq_class expected(p + q, p * q);
    expected.canonicalize();
    record(out, "log canonical threshold", tag, lct == expected,
           lct.get_str() + " vs " + expected.get_str());
    record(out, "final multiplicity", tag, max_n == p * q);

    int64_t last_nu = 0;
    for (const auto& d : graph.divisors())
      if (d.id == max_id) last_nu = d.nu;
    record(out, "final discrepancy", tag, last_nu == p + q - 1);

    const size_t n_div = graph.divisors().size();
    record(out, "tree shape", tag, graph.edges().size() == n_div - 1);

    int strict_id = 0;
    for (const auto& d : graph.divisors())
      if (d.strict_transform) strict_id = d.id;
    record(out, "strict transform leaf on max divisor", tag,
           graph.degree(strict_id) == 1 && graph.has_edge(strict_id, max_id));

    // Stratification telescopes back to the class of the whole divisor:
    // each component contributes L+1 (or L for the affine strict
    // transform) and every intersection point was counted twice.
    Laurent sum;
    long strict_count = 0;
    for (const auto& d : graph.divisors()) {
      sum += graph.stratum_class(Stratum{{d.id}});
      if (d.strict_transform) ++strict_count;
    }
    sum += Laurent::monomial(0, static_cast<long>(graph.edges().size()));
    Laurent whole = Laurent::monomial(0, static_cast<long>(n_div)) *
                        (Laurent::lefschetz() + Laurent::one()) -
                    Laurent::monomial(0, strict_count) -
                    Laurent::monomial(0, static_cast<long>(graph.edges().size()));
    record(out, "stratum classes telescope", tag, sum == whole);

    const auto reloaded = ResolutionGraph::load_graph(graph.to_json());
    record(out, "serialization round trip", tag, reloaded == graph);
  }
}

void suite_zeta(std::vector<CheckResult>& out, const CheckOptions& opt) {
  for (auto [p, q] : kPqGrid) {
    const auto graph = ResolutionGraph::resolve_pq(p, q);
    const std::string tag = pq_name(p, q);
    const int64_t t_max = std::max<int64_t>(opt.n_max, 12);

    for (bool origin : {true, false}) {
      const auto rz = zeta_rational(graph, origin);
      const auto achievable = graph.achievable_orders(origin, t_max);
      bool rational_ok = true, empty_ok = true, vanish_ok = true;
      const auto series = zeta_series(graph, t_max, origin);
      for (int64_t n = 1; n <= t_max; ++n) {
        const Laurent direct = denef_coefficient(graph, n, origin);
        if (rational_expansion_coefficient(rz, n) != direct) rational_ok = false;
        if (direct.is_zero() != contact_empty(graph, n, origin)) empty_ok = false;
        if (series.coefficient(n).is_zero() != !achievable.count(n)) vanish_ok = false;
      }
      const std::string mode = origin ? " origin" : " global";
      record(out, "rational form matches per-order classes", tag + mode, rational_ok);
      record(out, "emptiness coherence", tag + mode, empty_ok);
      record(out, "series vanishes off achievable orders", tag + mode, vanish_ok);
    }

    bool above_threshold = true;
    for (int64_t n = graph.threshold(); n <= graph.threshold() + 10; ++n)
      if (contact_empty(graph, n, true)) above_threshold = false;
    record(out, "non-empty from threshold on", tag, above_threshold);
  }
}

void suite_oracle(std::vector<CheckResult>& out, const CheckOptions& opt) {
  const std::vector<std::pair<int64_t, int64_t>> curves = {{2, 3}, {2, 5}};
  for (auto [p, q] : curves) {
    const auto graph = ResolutionGraph::resolve_pq(p, q);
    const auto f = CurvePoly::pq(p, q);
    const std::string tag = pq_name(p, q);

    bool partition = true, zero_coherent = true;
    for (int64_t n = 1; n <= 5; ++n) {
      const auto total = count_jets(f, 2, n, true, opt.jet_cap, opt.threads);
      uint64_t sum = 0;
      for (int64_t k = 1; k <= n; ++k)
        sum += count_jets_stratified(f, 2, n, k, opt.jet_cap, opt.threads).raw_count;
      if (sum != total.raw_count) partition = false;
      if ((total.raw_count == 0) != contact_empty(graph, n, true)) zero_coherent = false;
    }
    record(out, "stratified counts partition the total", tag, partition);
    record(out, "zero counts match contact emptiness", tag, zero_coherent);

    const auto single = count_jets(f, 2, 4, true, opt.jet_cap, 1);
    const auto multi = count_jets(f, 2, 4, true, opt.jet_cap, 3);
    record(out, "parallel determinism", tag, single.raw_count == multi.raw_count);

    const int kappa = calibrate(graph, f, {2, 3}, {2, 3, 4}, true, opt.jet_cap, opt.threads);
    record(out, "calibration fixes the frozen level shift", tag, kappa == kKappaOrigin,
           "kappa = " + std::to_string(kappa));
  }
}

}  // namespace

std::vector<CheckResult> run_suite(const std::string& suite, const CheckOptions& options) {
  std::vector<CheckResult> out;
  if (suite == "semigroup")
    suite_semigroup(out, options);
  else if (suite == "hilb")
    suite_hilb(out, options);
  else if (suite == "resolution")
    suite_resolution(out, options);
  else if (suite == "zeta")
    suite_zeta(out, options);
  else if (suite == "oracle")
    suite_oracle(out, options);
  else if (suite == "all") {
    suite_semigroup(out, options);
    suite_hilb(out, options);
    suite_resolution(out, options);
    suite_zeta(out, options);
    suite_oracle(out, options);
  } else {
    fail(ErrorCode::UnknownSuite, "no suite named '" + suite + "'");
  }
  return out;
}

}  // namespace motivic
