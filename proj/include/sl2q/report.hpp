#pragma once

#include <string>
#include <vector>

namespace sl2q {

struct Check {
  std::string suite, check;
  double residual = 0, tolerance = 0;
  bool pass = false;
  double seconds = 0;
  std::string note;  // optional, omitted from the output when empty
};

struct Report {
  std::vector<Check> checks;
  void add(Check c) { checks.push_back(std::move(c)); }
  void append(const Report& r) { checks.insert(checks.end(), r.checks.begin(), r.checks.end()); }
  bool all_pass() const;
};

// Keys in the fixed order suite, check, residual, tolerance, pass, seconds[, note].
std::string report_json(const Report& r, bool with_timing = true);
std::string report_csv(const Report& r, bool with_timing = true);
Report parse_report_json(const std::string& text);
// Format chosen from the extension (.json or .csv); throws std::runtime_error on I/O failure.
void emit_report(const Report& r, const std::string& path, bool with_timing = true);

}  // namespace sl2q
