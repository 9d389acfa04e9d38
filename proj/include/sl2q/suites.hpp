#pragma once

#include "sl2q/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sl2q {

struct SuiteConfig {
  std::string suite = "all";
  std::string nu = "1/3";  // exact rational p/q, used numerically by the grid suite
  int ell = 3;             // Moyal-side parameter of the composite map, nu = 1/ell
  int grid_n = 256;
  double half_width = 8;
  double tau_max = 15;
  int boundary = 64;
  uint64_t seed = 1;
  std::string report;
  std::string flow_csv;
  std::string spectrum_csv;
  std::string branch = "O1";
  bool parallel = false;
  bool timing = true;
};

const std::vector<std::string>& suite_names();

// key = value lines, '#' comments; keys match the SuiteConfig fields (grid_n, half_width, ...).
void apply_config_file(const std::string& path, SuiteConfig& cfg);
void validate(const SuiteConfig& cfg);

// Runs one named suite, or every suite for "all". Throws std::invalid_argument for unknown names.
Report run_suite(const SuiteConfig& cfg);

}  // namespace sl2q
