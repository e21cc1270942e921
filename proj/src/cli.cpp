#include "motivic/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json_util.hpp"
#include "motivic/checks.hpp"
#include "motivic/errors.hpp"
#include "motivic/hilb.hpp"
#include "motivic/jet_oracle.hpp"
#include "motivic/resolution.hpp"
#include "motivic/semigroup.hpp"
#include "motivic/zeta.hpp"

namespace motivic {

namespace {

using nlohmann::ordered_json;

std::vector<int64_t> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t pos = 0;
      out.push_back(std::stoll(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      fail(ErrorCode::BadInput, "cannot parse " + what + " entry '" + item + "'");
    }
  }
  if (out.empty()) fail(ErrorCode::BadInput, what + " list is empty");
  return out;
}

/// "pq:2,3" | "gens:4,6,13" | "holes:1,2,3,5".
NumericalSemigroup parse_semigroup(const std::string& desc) {
  const auto colon = desc.find(':');
  if (colon == std::string::npos)
    fail(ErrorCode::BadInput, "semigroup descriptor needs a pq:/gens:/holes: prefix");
  const std::string kind = desc.substr(0, colon);
  const auto values = parse_int_list(desc.substr(colon + 1), kind);
  if (kind == "pq") {
    if (values.size() != 2) fail(ErrorCode::BadInput, "pq descriptor needs two entries");
    return NumericalSemigroup::from_generators({values[0], values[1]});
  }
  if (kind == "gens") return NumericalSemigroup::from_generators(values);
  if (kind == "holes") return NumericalSemigroup::from_holes(values);
  fail(ErrorCode::BadInput, "unknown semigroup descriptor '" + kind + "'");
}

std::pair<int64_t, int64_t> parse_pq(const std::string& text) {
  const auto values = parse_int_list(text, "pq");
  if (values.size() != 2) fail(ErrorCode::BadInput, "expected p,q");
  return {values[0], values[1]};
}

uint64_t default_cap() {
  if (const char* env = std::getenv("MOTIVIC_CAP")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      fail(ErrorCode::BadInput, "MOTIVIC_CAP is not a number");
    }
  }
  return kDefaultJetCap;
}

ordered_json semigroup_json(const NumericalSemigroup& gamma) {
  ordered_json j;
  j["generators"] = gamma.generators();
  j["holes"] = gamma.holes();
  j["delta"] = gamma.delta();
  j["conductor"] = gamma.conductor();
  return j;
}

ordered_json ideal_json(const SemigroupIdeal& ideal) {
  ordered_json j;
  j["min_generators"] = ideal.min_generators();
  j["codimension"] = ideal.codimension();
  j["conductor"] = ideal.conductor();
  j["missing"] = ideal.missing();
  return j;
}

ordered_json hilb_json(const HilbClassReport& report) {
  ordered_json j;
  j["n"] = report.n;
  j["k"] = report.k;
  j["tuples"] = ordered_json::array();
  for (const auto& [tuple, summand] : report.tuples) {
    ordered_json tj;
    tj["values"] = tuple.values;
    tj["summand"] = laurent_to_json_terms(summand);
    j["tuples"].push_back(tj);
  }
  j["total"] = laurent_to_json_terms(report.total);
  j["euler"] = report.euler;
  j["exact"] = report.exact;
  return j;
}

ordered_json jet_report_json(const JetCountReport& report) {
  ordered_json j;
  j["q"] = report.q;
  j["n"] = report.n;
  j["origin_only"] = report.origin_only;
  if (report.k_stratum)
    j["k_stratum"] = *report.k_stratum;
  else
    j["k_stratum"] = nullptr;
  j["raw_count"] = report.raw_count;
  j["ambient_log"] = report.ambient_log;
  j["ratio"] = report.ratio.get_str();
  return j;
}

ordered_json zeta_json(const ResolutionGraph& graph, const ZetaSeries& series,
                       const RationalZeta& rational) {
  ordered_json j;
  j["convention"] = {{"kappa", series.convention.kappa},
                     {"origin_only", series.convention.origin_only}};
  j["coefficients"] = ordered_json::array();
  for (int64_t n = 1; n <= series.t_max; ++n) {
    ordered_json cj;
    cj["n"] = n;
    cj["poly"] = laurent_to_json_terms(series.coefficient(n));
    j["coefficients"].push_back(cj);
  }
  j["rational"] = ordered_json::array();
  for (const auto& term : rational.terms) {
    ordered_json tj;
    tj["stratum"] = term.stratum.key();
    tj["prefactor"] = laurent_to_json_terms(term.prefactor);
    tj["factors"] = ordered_json::array();
    for (const auto& [N, nu] : term.factors) tj["factors"].push_back({N, nu});
    j["rational"].push_back(tj);
  }
  (void)graph;
  return j;
}

ResolutionGraph graph_from_options(const std::string& pq_text, const std::string& graph_file) {
  if (!pq_text.empty() && !graph_file.empty())
    fail(ErrorCode::BadInput, "give either --pq or --graph, not both");
  if (!pq_text.empty()) {
    const auto [p, q] = parse_pq(pq_text);
    return ResolutionGraph::resolve_pq(p, q);
  }
  if (!graph_file.empty()) {
    std::ifstream in(graph_file);
    if (!in) fail(ErrorCode::BadInput, "cannot open graph file '" + graph_file + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return ResolutionGraph::load_graph(buffer.str());
  }
  fail(ErrorCode::BadInput, "a curve is required: --pq p,q or --graph file");
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants of unibranch plane curve singularities"};
  app.require_subcommand(1);

  std::string semigroup_desc, curve_desc, format = "json", suite, graph_file, pq_text;
  std::string tuple_text, correction_text, q_list_text, n_list_text;
  int64_t n = 0, k = 0, t_max = 0, q_value = 0, k_stratum = 0;
  bool origin_only = false, strict = false;
  int threads = 1;
  uint64_t cap = default_cap();
  std::optional<int> kappa;

  auto* sg = app.add_subcommand("semigroup", "Numerical-semigroup data");
  sg->add_option("--semigroup", semigroup_desc, "pq:/gens:/holes: descriptor")->required();
  sg->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  auto* ideals_cmd = app.add_subcommand("ideals", "Semigroup ideals of a fixed codimension");
  ideals_cmd->add_option("--semigroup", semigroup_desc)->required();
  ideals_cmd->add_option("--n", n, "codimension")->required();
  ideals_cmd->add_option("--cap", cap);
  ideals_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  auto* hilb_cmd = app.add_subcommand("hilb", "Fixed-generator Hilbert-scheme classes");
  hilb_cmd->add_option("--semigroup", semigroup_desc)->required();
  hilb_cmd->add_option("--n", n, "colength");
  hilb_cmd->add_option("--k", k, "number of generators");
  hilb_cmd->add_option("--tuple", tuple_text, "explicit generator valuations");
  hilb_cmd->add_option("--correction", correction_text,
                       "correction class as JSON term list, e.g. [[-2,1]]");
  hilb_cmd->add_option("--cap", cap);
  hilb_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text", "latex"}));

  auto* resolve_cmd = app.add_subcommand("resolve", "Embedded-resolution combinatorics");
  resolve_cmd->add_option("--pq", pq_text);
  resolve_cmd->add_option("--graph", graph_file, "resolution graph JSON file");
  resolve_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "dot", "text"}));

  auto* zeta_cmd = app.add_subcommand("zeta", "Truncated and rational zeta data");
  zeta_cmd->add_option("--pq", pq_text);
  zeta_cmd->add_option("--graph", graph_file);
  zeta_cmd->add_option("--tmax", t_max)->required();
  zeta_cmd->add_flag("--origin-only", origin_only);
  zeta_cmd->add_option("--kappa", kappa, "explicit level shift");
  zeta_cmd->add_flag("--strict", strict, "error when no level shift is supplied");
  zeta_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  auto* oracle_cmd = app.add_subcommand("oracle", "Finite-field jet counting");
  auto* count_cmd = oracle_cmd->add_subcommand("count", "Count contact-order-n jets");
  count_cmd->add_option("--curve", curve_desc, "pq:p,q")->required();
  count_cmd->add_option("--q", q_value, "field size")->required();
  count_cmd->add_option("--n", n, "contact order")->required();
  count_cmd->add_flag("--origin-only", origin_only);
  count_cmd->add_option("--k", k_stratum, "restrict to coordinate vanishing order k");
  count_cmd->add_option("--cap", cap);
  count_cmd->add_option("--threads", threads);

  auto* cal_cmd = oracle_cmd->add_subcommand("calibrate", "Fit the level shift");
  cal_cmd->add_option("--curve", curve_desc, "pq:p,q")->required();
  cal_cmd->add_option("--q", q_list_text, "comma-separated primes")->required();
  cal_cmd->add_option("--n", n_list_text, "comma-separated orders")->required();
  cal_cmd->add_flag("--origin-only", origin_only);
  cal_cmd->add_option("--cap", cap);
  cal_cmd->add_option("--threads", threads);

  auto* check_cmd = app.add_subcommand("check", "Run a property suite");
  check_cmd->add_option("--suite", suite)->required();
  check_cmd->add_option("--nmax", n, "grid size");
  check_cmd->add_option("--cap", cap);
  check_cmd->add_option("--threads", threads);
  check_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (sg->parsed()) {
      const auto gamma = parse_semigroup(semigroup_desc);
      if (format == "text") {
        out << "generators:";
        for (auto g : gamma.generators()) out << " " << g;
        out << "\nholes:";
        for (auto h : gamma.holes()) out << " " << h;
        out << "\ndelta: " << gamma.delta() << "\nconductor: " << gamma.conductor() << "\n";
      } else {
        out << semigroup_json(gamma).dump(2) << "\n";
      }
    } else if (ideals_cmd->parsed()) {
      const auto gamma = parse_semigroup(semigroup_desc);
      const auto ideals = enumerate_ideals(gamma, n, cap);
      if (format == "text") {
        for (const auto& ideal : ideals) {
          out << "ideal:";
          for (auto g : ideal.min_generators()) out << " " << g;
          out << " | codimension " << ideal.codimension() << " conductor "
              << ideal.conductor() << "\n";
        }
        out << ideals.size() << " ideals of codimension " << n << "\n";
      } else {
        ordered_json j;
        j["n"] = n;
        j["count"] = ideals.size();
        j["ideals"] = ordered_json::array();
        for (const auto& ideal : ideals) j["ideals"].push_back(ideal_json(ideal));
        out << j.dump(2) << "\n";
      }
    } else if (hilb_cmd->parsed()) {
      const auto gamma = parse_semigroup(semigroup_desc);
      if (!tuple_text.empty()) {
        const auto values = parse_int_list(tuple_text, "tuple");
        const auto tuple = IndependentTuple::make(gamma, values);
        Laurent correction = Laurent::one();
        if (!correction_text.empty())
          correction = laurent_from_json_terms(ordered_json::parse(correction_text, nullptr,
                                                                   true));
        const Laurent cls = fixed_generator_class_with_correction(gamma, tuple, correction);
        if (format == "latex") {
          out << cls.to_latex() << "\n";
        } else if (format == "text") {
          out << cls.to_string() << "\n";
        } else {
          ordered_json j;
          j["tuple"] = tuple.values;
          j["summand"] = laurent_to_json_terms(tuple_summand(gamma, tuple));
          j["correction"] = laurent_to_json_terms(correction);
          j["class"] = laurent_to_json_terms(cls);
          out << j.dump(2) << "\n";
        }
      } else {
        if (n < 1 || k < 1) fail(ErrorCode::BadRange, "hilb requires --n and --k (each >= 1)");
        const auto report = fixed_generator_class(gamma, n, k, cap);
        if (format == "latex") {
          out << report.total.to_latex() << "\n";
        } else if (format == "text") {
          for (const auto& [tuple, summand] : report.tuples) {
            out << "tuple:";
            for (auto v : tuple.values) out << " " << v;
            out << " | summand " << summand.to_string() << "\n";
          }
          out << "total: " << report.total.to_string() << "\neuler: " << report.euler
              << "\nexact: " << (report.exact ? "true" : "false") << "\n";
        } else {
          out << hilb_json(report).dump(2) << "\n";
        }
      }
    } else if (resolve_cmd->parsed()) {
      const auto graph = graph_from_options(pq_text, graph_file);
      if (format == "dot") {
        out << graph.to_dot();
      } else if (format == "text") {
        for (const auto& d : graph.divisors()) {
          out << (d.strict_transform ? "strict" : "E" + std::to_string(d.id)) << ": N=" << d.N
              << " nu=" << d.nu << " degree=" << graph.degree(d.id) << "\n";
        }
        out << "threshold: " << graph.threshold() << "\n";
      } else {
        out << graph.to_json() << "\n";
      }
    } else if (zeta_cmd->parsed()) {
      const auto graph = graph_from_options(pq_text, graph_file);
      const auto series = zeta_series(graph, t_max, origin_only, kappa, strict);
      const auto rational = zeta_rational(graph, origin_only);
      if (format == "text") {
        out << "kappa: " << series.convention.kappa
            << " origin_only: " << (origin_only ? "true" : "false") << "\n";
        for (int64_t i = 1; i <= t_max; ++i)
          out << "n=" << i << ": " << series.coefficient(i).to_string() << "\n";
      } else {
        out << zeta_json(graph, series, rational).dump(2) << "\n";
      }
    } else if (count_cmd->parsed()) {
      const auto colon = curve_desc.find(':');
      if (colon == std::string::npos || curve_desc.substr(0, colon) != "pq")
        fail(ErrorCode::BadInput, "oracle curves use the pq:p,q descriptor");
      const auto [p, q] = parse_pq(curve_desc.substr(colon + 1));
      const auto f = CurvePoly::pq(p, q);
      JetCountReport report;
      if (count_cmd->count("--k") > 0)
        report = count_jets_stratified(f, q_value, n, k_stratum, cap, threads);
      else
        report = count_jets(f, q_value, n, origin_only, cap, threads);
      out << jet_report_json(report).dump(2) << "\n";
    } else if (cal_cmd->parsed()) {
      const auto colon = curve_desc.find(':');
      if (colon == std::string::npos || curve_desc.substr(0, colon) != "pq")
        fail(ErrorCode::BadInput, "oracle curves use the pq:p,q descriptor");
      const auto [p, q] = parse_pq(curve_desc.substr(colon + 1));
      const auto f = CurvePoly::pq(p, q);
      const auto graph = ResolutionGraph::resolve_pq(p, q);
      const auto q_list = parse_int_list(q_list_text, "q");
      const auto n_list = parse_int_list(n_list_text, "n");
      const int fitted = calibrate(graph, f, q_list, n_list, origin_only, cap, threads);
      ordered_json j;
      j["kappa"] = fitted;
      j["origin_only"] = origin_only;
      j["q"] = q_list;
      j["n"] = n_list;
      out << j.dump(2) << "\n";
    } else if (check_cmd->parsed()) {
      CheckOptions options;
      if (n > 0) options.n_max = n;
      options.cap = cap;
      options.jet_cap = cap;
      options.threads = threads;
      const auto results = run_suite(suite, options);
      size_t failed = 0;
      if (format == "json") {
        ordered_json j;
        j["suite"] = suite;
        j["results"] = ordered_json::array();
        for (const auto& r : results) {
          if (!r.pass) ++failed;
          ordered_json rj;
          rj["property"] = r.property;
          rj["params"] = r.params;
          rj["pass"] = r.pass;
          if (!r.pass) rj["detail"] = r.detail;
          j["results"].push_back(rj);
        }
        j["failed"] = failed;
        out << j.dump(2) << "\n";
      } else {
        for (const auto& r : results) {
          if (!r.pass) ++failed;
          out << (r.pass ? "[PASS] " : "[FAIL] ") << r.property << " (" << r.params << ")";
          if (!r.pass && !r.detail.empty()) out << " -- " << r.detail;
          out << "\n";
        }
        out << (results.size() - failed) << "/" << results.size() << " properties passed\n";
      }
      return failed == 0 ? 0 : 1;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::UnknownSuite ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace motivic
