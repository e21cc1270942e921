#include "motivic/jet_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

#include "motivic/errors.hpp"
#include "motivic/zeta.hpp"

namespace motivic {

CurvePoly CurvePoly::pq(int64_t p, int64_t q) {
  if (p < 1 || q < 1) fail(ErrorCode::BadRange, "exponents must be positive");
  CurvePoly f;
  f.terms.push_back({static_cast<int>(p), 0, 1});
  f.terms.push_back({0, static_cast<int>(q), -1});
  return f;
}

void CurvePoly::validate() const {
  if (terms.empty()) fail(ErrorCode::BadInput, "curve polynomial is empty");
  for (const auto& t : terms)
    if (t.i < 0 || t.j < 0) fail(ErrorCode::BadInput, "negative exponent in curve polynomial");
  int64_t constant = 0;
  for (const auto& t : terms)
    if (t.i == 0 && t.j == 0) constant += t.c;
  if (constant != 0) fail(ErrorCode::BadInput, "curve polynomial must vanish at the origin");
}

namespace {

bool is_small_prime(int64_t q) { return q == 2 || q == 3 || q == 5 || q == 7; }

// Truncated series arithmetic mod (q, t^(n+1)) on small int vectors.
struct TruncSeries {
  static void mul(const std::vector<int32_t>& a, const std::vector<int32_t>& b,
                  std::vector<int32_t>& out, int32_t q) {
    const size_t n = a.size();
    std::fill(out.begin(), out.end(), 0);
    for (size_t i = 0; i < n; ++i) {
      const int32_t av = a[i];
      if (av == 0) continue;
      for (size_t j = 0; j + i < n; ++j) out[i + j] = (out[i + j] + av * b[j]) % q;
    }
  }
};

struct EnumSpec {
  int64_t q = 0;
  int64_t n = 0;
  int coeffs_per_coord = 0;  // number of free coefficients per coordinate
  int first_exponent = 0;    // 0 when constant terms are free, 1 otherwise
};

uint64_t pow_u64(int64_t base, int exp) {
  uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= static_cast<uint64_t>(base);
  return r;
}

// Count jets with f-contact exactly n in a contiguous block of the flat
// odometer index space; optional stratum filter on min coordinate order.
uint64_t count_block(const CurvePoly& f, const EnumSpec& spec, uint64_t begin, uint64_t end,
                     std::optional<int64_t> k_stratum) {
  const int32_t q = static_cast<int32_t>(spec.q);
  const size_t len = static_cast<size_t>(spec.n) + 1;
  const int m = spec.coeffs_per_coord;

  int max_i = 0, max_j = 0;
  for (const auto& t : f.terms) {
    max_i = std::max(max_i, t.i);
    max_j = std::max(max_j, t.j);
  }

  std::vector<int32_t> x(len, 0), y(len, 0);
  std::vector<std::vector<int32_t>> xp(static_cast<size_t>(max_i) + 1,
                                       std::vector<int32_t>(len, 0));
  std::vector<std::vector<int32_t>> yp(static_cast<size_t>(max_j) + 1,
                                       std::vector<int32_t>(len, 0));
  std::vector<int32_t> acc(len, 0), tmp(len, 0);
  std::vector<int32_t> digits(static_cast<size_t>(2 * m), 0);

  uint64_t count = 0;
  for (uint64_t idx = begin; idx < end; ++idx) {
    uint64_t rest = idx;
    for (int d = 0; d < 2 * m; ++d) {
      digits[static_cast<size_t>(d)] = static_cast<int32_t>(rest % static_cast<uint64_t>(q));
      rest /= static_cast<uint64_t>(q);
    }
    std::fill(x.begin(), x.end(), 0);
    std::fill(y.begin(), y.end(), 0);
    for (int d = 0; d < m; ++d) {
      x[static_cast<size_t>(spec.first_exponent + d)] = digits[static_cast<size_t>(d)];
      y[static_cast<size_t>(spec.first_exponent + d)] = digits[static_cast<size_t>(m + d)];
    }

    if (k_stratum) {
      auto ord = [&](const std::vector<int32_t>& v) {
        for (size_t i = 0; i < v.size(); ++i)
          if (v[i]) return static_cast<int64_t>(i);
        return static_cast<int64_t>(v.size()) + 1;
      };
      if (std::min(ord(x), ord(y)) != *k_stratum) continue;
    }

    // Power tables up to the needed exponents.
    xp[0].assign(len, 0);
    xp[0][0] = 1;
    for (int e = 1; e <= max_i; ++e) TruncSeries::mul(xp[static_cast<size_t>(e - 1)], x, xp[static_cast<size_t>(e)], q);
    yp[0].assign(len, 0);
    yp[0][0] = 1;
    for (int e = 1; e <= max_j; ++e) TruncSeries::mul(yp[static_cast<size_t>(e - 1)], y, yp[static_cast<size_t>(e)], q);

    std::fill(acc.begin(), acc.end(), 0);
    for (const auto& t : f.terms) {
      TruncSeries::mul(xp[static_cast<size_t>(t.i)], yp[static_cast<size_t>(t.j)], tmp, q);
      const int32_t c = static_cast<int32_t>(((t.c % q) + q) % q);
      if (c == 0) continue;
      for (size_t i = 0; i < len; ++i) acc[i] = (acc[i] + c * tmp[i]) % q;
    }

    bool exact = acc[len - 1] != 0;
    for (size_t i = 0; i + 1 < len && exact; ++i)
      if (acc[i] != 0) exact = false;
    if (exact) ++count;
  }
  return count;
}

JetCountReport run_count(const CurvePoly& f, int64_t q, int64_t n, bool origin_only,
                         std::optional<int64_t> k_stratum, uint64_t cap, int threads) {
  f.validate();
  if (!is_small_prime(q)) fail(ErrorCode::NonPrime, "q must be a prime <= 7");
  if (n < 1) fail(ErrorCode::BadRange, "contact order must be >= 1");
  if (k_stratum && (*k_stratum < 1 || *k_stratum > n))
    fail(ErrorCode::BadRange, "stratum index must satisfy 1 <= k <= n");

  EnumSpec spec;
  spec.q = q;
  spec.n = n;
  spec.first_exponent = origin_only ? 1 : 0;
  spec.coeffs_per_coord = static_cast<int>(origin_only ? n : n + 1);

  const int ambient_log = 2 * spec.coeffs_per_coord;
  const double size_estimate = std::pow(static_cast<double>(q), ambient_log);
  if (size_estimate > static_cast<double>(cap))
    fail(ErrorCode::CapExceeded,
         "enumeration size q^" + std::to_string(ambient_log) + " exceeds the cap");
  const uint64_t total = pow_u64(q, ambient_log);

  const int workers = std::max(1, threads);
  std::vector<uint64_t> partial(static_cast<size_t>(workers), 0);
  if (workers == 1) {
    partial[0] = count_block(f, spec, 0, total, k_stratum);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      const uint64_t begin = total / workers * w + std::min<uint64_t>(w, total % workers);
      const uint64_t end =
          total / workers * (w + 1) + std::min<uint64_t>(w + 1, total % workers);
      pool.emplace_back([&, w, begin, end] {
        partial[static_cast<size_t>(w)] = count_block(f, spec, begin, end, k_stratum);
      });
    }
    for (auto& t : pool) t.join();
  }

  JetCountReport report;
  report.q = q;
  report.n = n;
  report.origin_only = origin_only;
  report.k_stratum = k_stratum;
  for (uint64_t c : partial) report.raw_count += c;
  report.ambient_log = ambient_log;
  mpz_class denom = 1;
  for (int i = 0; i < ambient_log; ++i) denom *= q;
  report.ratio = mpq_class(mpz_class(static_cast<unsigned long>(report.raw_count)), denom);
  report.ratio.canonicalize();
  return report;
}

}  // namespace

JetCountReport count_jets(const CurvePoly& f, int64_t q, int64_t n, bool origin_only,
                          uint64_t cap, int threads) {
  return run_count(f, q, n, origin_only, std::nullopt, cap, threads);
}

JetCountReport count_jets_stratified(const CurvePoly& f, int64_t q, int64_t n, int64_t k,
                                     uint64_t cap, int threads) {
  return run_count(f, q, n, true, k, cap, threads);
}

int calibrate(const ResolutionGraph& graph, const CurvePoly& f,
              const std::vector<int64_t>& q_list, const std::vector<int64_t>& n_list,
              bool origin_only, uint64_t cap, int threads) {
  std::optional<int> kappa;
  std::ostringstream failures;
  bool inconsistent = false;

  for (int64_t q : q_list)
    for (int64_t n : n_list) {
      const JetCountReport report = count_jets(f, q, n, origin_only, cap, threads);
      const Laurent denef = denef_coefficient(graph, n, origin_only);
      const mpq_class eval = denef.evaluate(mpq_class(q));
      const mpq_class raw(static_cast<unsigned long>(report.raw_count));

      if (eval == 0 || raw == 0) {
        if (eval != raw) {
          inconsistent = true;
          failures << " (q=" << q << ", n=" << n << ": count " << raw.get_str()
                   << " vs class value " << eval.get_str() << ")";
        }
        continue;  // both zero: consistent with every shift
      }
      // raw = eval * q^(kappa - 2(n+1) + ambient_log): solve for kappa and
      // demand an exact integer power.
      mpq_class ratio = raw / eval;
      ratio.canonicalize();
      std::optional<int> shift;
      for (int s = -64; s <= 64; ++s) {
        mpq_class p = 1;
        for (int i = 0; i < std::abs(s); ++i) p *= q;
        if (s < 0) p = 1 / p;
        if (ratio == p) {
          shift = s;
          break;
        }
      }
      if (!shift) {
        inconsistent = true;
        failures << " (q=" << q << ", n=" << n << ": ratio " << ratio.get_str()
                 << " is not a power of q)";
        continue;
      }
      const int k = *shift + static_cast<int>(2 * (n + 1)) - report.ambient_log;
      if (!kappa) {
        kappa = k;
      } else if (*kappa != k) {
        inconsistent = true;
        failures << " (q=" << q << ", n=" << n << ": shift " << k << " vs " << *kappa << ")";
      }
    }

  if (inconsistent)
    fail(ErrorCode::Inconsistent, "no single level shift fits:" + failures.str());
  if (!kappa)
    fail(ErrorCode::Underdetermined, "every tested count was zero");
  return *kappa;
}

}  // namespace motivic
