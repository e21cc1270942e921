#include "motivic/resolution.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "json_util.hpp"
#include "motivic/errors.hpp"

namespace motivic {

using nlohmann::ordered_json;

std::string Stratum::key() const {
  std::string s = std::to_string(ids[0]);
  if (ids.size() == 2) s += "-" + std::to_string(ids[1]);
  return s;
}

const Divisor& ResolutionGraph::divisor(int id) const {
  for (const auto& d : divisors_)
    if (d.id == id) return d;
  fail(ErrorCode::BadInput, "no divisor with id " + std::to_string(id));
}

int ResolutionGraph::degree(int id) const {
  int deg = 0;
  for (const auto& [a, b] : edges_)
    if (a == id || b == id) ++deg;
  return deg;
}

bool ResolutionGraph::has_edge(int a, int b) const {
  if (a > b) std::swap(a, b);
  return edges_.count({a, b}) > 0;
}

const Laurent& ResolutionGraph::stratum_class(const Stratum& s) const {
  auto it = classes_.find(s);
  if (it == classes_.end()) fail(ErrorCode::BadInput, "no stratum " + s.key());
  return it->second;
}

std::vector<Stratum> ResolutionGraph::strata(bool origin_only) const {
  std::vector<Stratum> out;
  for (const auto& d : divisors_) {
    if (origin_only && !d.over_origin) continue;
    out.push_back(Stratum{{d.id}});
  }
  for (const auto& [a, b] : edges_) {
    // An intersection point lies over the origin as soon as one of the
    // divisors through it does.
    if (origin_only && !divisor(a).over_origin && !divisor(b).over_origin) continue;
    out.push_back(Stratum{{a, b}});
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Exceptional components are projective lines, so the open stratum has
// class L + 1 - degree; the strict transform is the affine normalization
// of the germ, so its open stratum has class L - degree.
Laurent ResolutionGraph::expected_singleton_class(const Divisor& d) const {
  const long chi = d.strict_transform ? 0 : 1;
  return Laurent::lefschetz() + Laurent::monomial(0, chi - degree(d.id));
}

void ResolutionGraph::fill_default_classes() {
  for (const auto& d : divisors_) {
    Stratum s{{d.id}};
    if (!classes_.count(s)) classes_.emplace(s, expected_singleton_class(d));
  }
  for (const auto& [a, b] : edges_) {
    Stratum s{{a, b}};
    if (!classes_.count(s)) classes_.emplace(s, Laurent::one());
  }
}

ResolutionGraph ResolutionGraph::resolve_pq(int64_t p, int64_t q) {
  if (p < 2 || q <= p) fail(ErrorCode::BadRange, "require 2 <= p < q");
  if (std::gcd(p, q) != 1) fail(ErrorCode::NotCoprime, "p and q must be coprime");

  ResolutionGraph g;
  // Chart-level blow-up bookkeeping for the germ u^A = v^B. The center of
  // the next blow-up lies on {u=0} and/or {v=0} when a divisor has been
  // recorded there; its N and nu are the sums over those divisors plus
  // the current multiplicity min(A, B) and 1 respectively.
  int64_t A = p, B = q;
  int du = 0, dv = 0;  // divisor ids through the current point; 0 = none
  int next_id = 1;

  auto blow_up = [&]() {
    const int64_t m = std::min(A, B);
    Divisor e;
    e.id = next_id++;
    e.N = m;
    e.nu = 1;
    if (du) {
      e.N += g.divisor(du).N;
      e.nu += g.divisor(du).nu;
    }
    if (dv) {
      e.N += g.divisor(dv).N;
      e.nu += g.divisor(dv).nu;
    }
    g.divisors_.push_back(e);
    if (du && dv) {
      // The blow-up separates the two divisors through the center.
      g.edges_.erase({std::min(du, dv), std::max(du, dv)});
    }
    for (int d : {du, dv})
      if (d) g.edges_.insert({std::min(d, e.id), std::max(d, e.id)});
    return e.id;
  };

  while (!(A == 1 && B == 1)) {
    const int id = blow_up();
    if (A < B) {
      B -= A;
      dv = id;  // the new exceptional divisor is {v=0} at the next point
    } else {
      A -= B;
      du = id;
    }
  }
  // Last blow-up separates the final tangency; the strict transform ends
  // up transversal to this divisor alone.
  const int last = blow_up();
  Divisor strict;
  strict.id = next_id++;
  strict.N = 1;
  strict.nu = 0;
  strict.strict_transform = true;
  strict.over_origin = false;
  g.divisors_.push_back(strict);
  g.edges_.insert({last, strict.id});

  g.fill_default_classes();
  g.validate();
  return g;
}

int64_t ResolutionGraph::threshold() const {
  int64_t n = 0;
  for (const auto& d : divisors_) n = std::max(n, d.N);
  return n;
}

std::set<int64_t> ResolutionGraph::achievable_orders(bool origin_only, int64_t n_max) const {
  std::set<int64_t> out;
  for (const auto& s : strata(origin_only)) {
    if (s.ids.size() == 1) {
      const int64_t N = divisor(s.ids[0]).N;
      for (int64_t k = 1; k * N <= n_max; ++k) out.insert(k * N);
    } else {
      const int64_t Na = divisor(s.ids[0]).N, Nb = divisor(s.ids[1]).N;
      for (int64_t ka = 1; ka * Na < n_max; ++ka)
        for (int64_t kb = 1; ka * Na + kb * Nb <= n_max; ++kb) out.insert(ka * Na + kb * Nb);
    }
  }
  return out;
}

void ResolutionGraph::validate() const {
  auto violation = [](const std::string& inv) {
    fail(ErrorCode::InvariantViolation, inv);
  };
  if (divisors_.empty()) return;
  std::set<int> ids;
  for (const auto& d : divisors_) {
    if (!ids.insert(d.id).second) violation("duplicate divisor id " + std::to_string(d.id));
    if (d.N <= 0) violation("divisor " + std::to_string(d.id) + " has non-positive N");
    if (d.nu < 0) violation("divisor " + std::to_string(d.id) + " has negative nu");
    if (d.strict_transform && (d.N != 1 || d.nu != 0))
      violation("strict transform must have N = 1, nu = 0");
  }
  for (const auto& [a, b] : edges_) {
    if (a >= b) violation("edge endpoints must be ordered and distinct");
    if (!ids.count(a) || !ids.count(b)) violation("edge references unknown divisor");
  }
  for (const auto& d : divisors_) {
    auto it = classes_.find(Stratum{{d.id}});
    if (it == classes_.end())
      violation("missing stratum class for divisor " + std::to_string(d.id));
    if (it->second != expected_singleton_class(d))
      violation("divisor " + std::to_string(d.id) + " class differs from " +
                (d.strict_transform ? "L - degree" : "L + 1 - degree"));
  }
  for (const auto& [a, b] : edges_) {
    auto it = classes_.find(Stratum{{a, b}});
    if (it == classes_.end())
      violation("missing stratum class for edge " + Stratum{{a, b}}.key());
    if (it->second != Laurent::one())
      violation("edge " + Stratum{{a, b}}.key() + " class must be 1");
  }
}

std::string ResolutionGraph::to_json() const {
  ordered_json j;
  j["divisors"] = ordered_json::array();
  for (const auto& d : divisors_) {
    ordered_json dj;
    dj["id"] = d.id;
    dj["N"] = d.N;
    dj["nu"] = d.nu;
    dj["strict"] = d.strict_transform;
    dj["over_origin"] = d.over_origin;
    j["divisors"].push_back(dj);
  }
  j["edges"] = ordered_json::array();
  for (const auto& [a, b] : edges_) j["edges"].push_back({a, b});
  ordered_json classes = ordered_json::object();
  for (const auto& [s, cls] : classes_) classes[s.key()] = laurent_to_json_terms(cls);
  j["classes"] = classes;
  return j.dump(2);
}

ResolutionGraph ResolutionGraph::load_graph(const std::string& json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const std::exception& e) {
    fail(ErrorCode::SchemaError, std::string("invalid JSON: ") + e.what());
  }
  ResolutionGraph g;
  try {
    if (!j.contains("divisors")) fail(ErrorCode::SchemaError, "missing 'divisors'");
    for (const auto& dj : j.at("divisors")) {
      Divisor d;
      d.id = dj.at("id").get<int>();
      d.N = dj.at("N").get<int64_t>();
      d.nu = dj.at("nu").get<int64_t>();
      d.strict_transform = dj.value("strict", false);
      d.over_origin = dj.value("over_origin", !d.strict_transform);
      g.divisors_.push_back(d);
    }
    if (j.contains("edges"))
      for (const auto& ej : j.at("edges")) {
        int a = ej.at(0).get<int>(), b = ej.at(1).get<int>();
        if (a > b) std::swap(a, b);
        g.edges_.insert({a, b});
      }
    if (j.contains("classes"))
      for (const auto& [key, terms] : j.at("classes").items()) {
        Stratum s;
        auto dash = key.find('-');
        if (dash == std::string::npos) {
          s.ids = {std::stoi(key)};
        } else {
          int a = std::stoi(key.substr(0, dash)), b = std::stoi(key.substr(dash + 1));
          if (a > b) std::swap(a, b);
          s.ids = {a, b};
        }
        g.classes_.emplace(s, laurent_from_json_terms(terms));
      }
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    fail(ErrorCode::SchemaError, std::string("malformed graph document: ") + e.what());
  }
  g.fill_default_classes();
  g.validate();
  return g;
}

std::string ResolutionGraph::to_dot() const {
  std::ostringstream out;
  out << "graph resolution {\n";
  for (const auto& d : divisors_) {
    out << "  E" << d.id << " [label=\"" << (d.strict_transform ? "C~" : "E") << d.id << " ("
        << d.N << "," << d.nu << ")\"";
    if (d.strict_transform) out << " shape=box";
    out << "];\n";
  }
  for (const auto& [a, b] : edges_) out << "  E" << a << " -- E" << b << ";\n";
  out << "}\n";
  return out.str();
}

bool ResolutionGraph::operator==(const ResolutionGraph& o) const {
  if (edges_ != o.edges_) return false;
  if (divisors_.size() != o.divisors_.size()) return false;
  for (size_t i = 0; i < divisors_.size(); ++i) {
    const auto& a = divisors_[i];
    const auto& b = o.divisors_[i];
    if (a.id != b.id || a.N != b.N || a.nu != b.nu ||
        a.strict_transform != b.strict_transform || a.over_origin != b.over_origin)
      return false;
  }
  return classes_ == o.classes_;
}

}  // namespace motivic
