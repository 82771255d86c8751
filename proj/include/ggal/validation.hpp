#pragma once

#include <string>
#include <vector>

namespace ggal {

struct Violation {
  std::string axiom;    // short tag, e.g. "inverse-law"
  std::string witness;  // human-readable counterexample
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string axiom, std::string witness) {
    violations.push_back({std::move(axiom), std::move(witness)});
  }
  bool has(const std::string& axiom) const {
    for (const auto& v : violations)
      if (v.axiom == axiom) return true;
    return false;
  }
};

}  // namespace ggal
