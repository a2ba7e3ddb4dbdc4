#pragma once

#include <string>
#include <vector>

#include "k3twist/catalog.hpp"

namespace k3twist {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::string entry;
  std::vector<CheckResult> checks;
  double elapsed_ms = 0;

  bool all_pass() const;
  /// Names of the failing checks.
  std::vector<std::string> failures() const;
};

/// Runs every check of an entry; failures are report lines, never exceptions.
Report verify_entry(const CatalogEntry& entry);

/// {entry, checks: [{name, pass, detail}], elapsed_ms}
std::string report_json(const Report& report, int indent = -1);
std::string reports_json(const std::vector<Report>& reports, int indent = 2);
std::string report_text(const Report& report);

}  // namespace k3twist
