#pragma once

#include <optional>
#include <string>

#include "ggal/galois.hpp"

namespace ggal {

/// Parsed `ggal-instance v1` file: prime, structure constants, groupoid
/// tables, action data and an optional Galois coordinate system. Parsing is
/// syntactic (shape and prime checks); axiom validation is separate.
struct InstanceData {
  Action act;
  std::optional<Coordinates> coords;
};

InstanceData parse_instance_file(const std::string& path, std::optional<u32> p_override = {});

struct LoadResult {
  InstanceData data;
  ValidationReport groupoid_report, action_report;
  bool ok() const { return groupoid_report.ok() && action_report.ok(); }
};

/// Parse plus full axiom validation; parse errors throw, axiom violations
/// land in the reports.
LoadResult load_instance(const std::string& path, std::optional<u32> p_override = {});

}  // namespace ggal
