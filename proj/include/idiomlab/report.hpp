#pragma once

#include <string>
#include <vector>

namespace idiomlab {

// One verified property: a stable identifier, an outcome, and a witness or
// explanatory note (filled on failures and skips, often on passes too).
struct CheckResult {
  enum class Status { pass, fail, skip };

  std::string id;
  Status status = Status::pass;
  std::string witness;
};

inline const char* status_name(CheckResult::Status s) {
  switch (s) {
    case CheckResult::Status::pass: return "pass";
    case CheckResult::Status::fail: return "fail";
    case CheckResult::Status::skip: return "skip";
  }
  return "?";
}

inline bool any_failed(const std::vector<CheckResult>& checks) {
  for (const auto& c : checks)
    if (c.status == CheckResult::Status::fail) return true;
  return false;
}

}  // namespace idiomlab
