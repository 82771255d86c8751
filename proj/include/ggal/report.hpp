#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "ggal/subspace.hpp"

namespace ggal {

inline nlohmann::json subspace_json(const Subspace& s) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < s.dim(); ++i) rows.push_back(s.basis_row(i));
  return {{"dim", s.dim()}, {"basis", rows}};
}

enum class Status { Pass, Fail, NotApplicable };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    default: return "not-applicable";
  }
}

struct CheckResult {
  std::string name;
  Status status = Status::Pass;
  nlohmann::json details;
};

struct Report {
  std::string command;
  std::string instance_path;
  unsigned prime = 0;
  std::vector<CheckResult> checks;
  nlohmann::json timing_ms = nlohmann::json::object();

  int failures() const {
    int n = 0;
    for (const auto& c : checks) n += c.status == Status::Fail;
    return n;
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["format"] = "ggal-report v1";
    j["command"] = command;
    j["instance"] = instance_path;
    j["p"] = prime;
    j["failures"] = failures();
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks)
      j["checks"].push_back({{"name", c.name}, {"status", to_string(c.status)}, {"details", c.details}});
    j["timing_ms"] = timing_ms;
    return j;
  }
};

}  // namespace ggal
