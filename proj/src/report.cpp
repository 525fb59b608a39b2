#include "report.hpp"

#include <algorithm>

namespace hkm {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kFail:
      return "fail";
    case CheckStatus::kIndeterminate:
      return "indeterminate";
  }
  return "indeterminate";
}

CheckReport make_report(std::string name, double max_error, double tolerance,
                        int samples, std::uint64_t seed, std::string notes) {
  CheckReport r;
  r.name = std::move(name);
  r.max_error = max_error;
  r.tolerance = tolerance;
  r.samples = samples;
  r.seed = seed;
  r.notes = std::move(notes);
  r.status =
      max_error <= tolerance ? CheckStatus::kPass : CheckStatus::kFail;
  return r;
}

CheckReport merge(const CheckReport& a, const CheckReport& b) {
  CheckReport r = a;
  r.max_error = std::max(a.max_error, b.max_error);
  r.samples = a.samples + b.samples;
  if (a.status == CheckStatus::kFail || b.status == CheckStatus::kFail) {
    r.status = CheckStatus::kFail;
  } else if (a.status == CheckStatus::kIndeterminate ||
             b.status == CheckStatus::kIndeterminate) {
    r.status = CheckStatus::kIndeterminate;
  }
  if (!b.notes.empty()) {
    r.notes = r.notes.empty() ? b.notes : r.notes + "; " + b.notes;
  }
  return r;
}

bool all_passed(const std::vector<CheckReport>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckReport& c) {
    return c.status == CheckStatus::kPass;
  });
}

}  // namespace hkm
