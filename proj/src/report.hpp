#pragma once

// Named verification results and report assembly helpers.

#include <cstdint>
#include <string>
#include <vector>

namespace hkm {

enum class CheckStatus { kPass, kFail, kIndeterminate };

struct CheckReport {
  std::string name;
  CheckStatus status = CheckStatus::kIndeterminate;
  double max_error = 0.0;
  double tolerance = 0.0;
  int samples = 0;
  std::uint64_t seed = 0;
  std::string notes;
};

const char* to_string(CheckStatus s);

// Builds a report whose status follows max_error <= tolerance.
CheckReport make_report(std::string name, double max_error, double tolerance,
                        int samples, std::uint64_t seed,
                        std::string notes = {});

// Associative merge: max over errors, fail dominates, notes concatenated.
CheckReport merge(const CheckReport& a, const CheckReport& b);

bool all_passed(const std::vector<CheckReport>& checks);

}  // namespace hkm
