#ifndef MOTIVIC_CHECKS_HPP
#define MOTIVIC_CHECKS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace motivic {

struct CheckResult {
  std::string property;
  std::string params;
  bool pass = false;
  std::string detail;  // non-empty on failure
};

struct CheckOptions {
  int64_t n_max = 10;
  uint64_t cap = 50'000'000;
  uint64_t jet_cap = 100'000'000;
  int threads = 1;
};

/// Run the named property suite (semigroup | hilb | resolution | zeta |
/// oracle | all) over the desk-scale default grid. Throws UnknownSuite.
std::vector<CheckResult> run_suite(const std::string& suite, const CheckOptions& options = {});

inline bool all_pass(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace motivic

#endif  // MOTIVIC_CHECKS_HPP
