#include "sl2q/suites.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

int main(int argc, char** argv) {
  sl2q::SuiteConfig cfg;
  std::string config_path;
  bool list = false, no_timing = false;
  int ell = 0, grid_n = 0, boundary = 0;
  double tau_max = 0, half_width = 0;
  std::string nu, branch;
  uint64_t seed = 0;

  CLI::App app{"Verification suites for the Moyal star product and the SL(2,R) quantization chain"};
  app.add_option("--config", config_path, "key = value configuration file; flags override it");
  app.add_option("--suite", cfg.suite, "suite name or 'all'");
  app.add_option("--nu", nu, "deformation parameter as an exact rational p/q (grid suite)");
  app.add_option("--ell", ell, "Moyal-side parameter of the composite map (nu = 1/ell)");
  app.add_option("--grid-n", grid_n, "grid size for the grid suite (power of two)");
  app.add_option("--half-width", half_width, "grid half width L");
  app.add_option("--tau-max", tau_max, "spectral cutoff for the intertwiner suite");
  app.add_option("--boundary", boundary, "boundary circle points for the intertwiner suite");
  app.add_option("--branch", branch, "orbit branch of the composite map (O1 or O2)");
  app.add_option("--seed", seed, "random seed");
  app.add_option("--report", cfg.report, "write the report (.json or .csv)");
  app.add_option("--flow-csv", cfg.flow_csv, "write E/H/F flow trajectories (flows suite)");
  app.add_option("--spectrum-csv", cfg.spectrum_csv, "write spectral data of one l=2 profile (plancherel suite)");
  app.add_flag("--parallel", cfg.parallel, "run independent suites concurrently");
  app.add_flag("--no-timing", no_timing, "zero the seconds field so reports are byte-identical");
  app.add_flag("--list", list, "list suite names and exit");
  CLI11_PARSE(app, argc, argv);

  if (list) {
    for (const auto& s : sl2q::suite_names()) std::cout << s << '\n';
    return 0;
  }
  try {
    std::string suite_flag = cfg.suite, report = cfg.report, flow = cfg.flow_csv, spec = cfg.spectrum_csv;
    bool par = cfg.parallel;
    if (!config_path.empty()) {
      sl2q::apply_config_file(config_path, cfg);
      if (app.count("--suite")) cfg.suite = suite_flag;
      if (app.count("--report")) cfg.report = report;
      if (app.count("--flow-csv")) cfg.flow_csv = flow;
      if (app.count("--spectrum-csv")) cfg.spectrum_csv = spec;
      if (par) cfg.parallel = true;
    }
    if (app.count("--nu")) cfg.nu = nu;
    if (app.count("--ell")) cfg.ell = ell;
    if (app.count("--grid-n")) cfg.grid_n = grid_n;
    if (app.count("--half-width")) cfg.half_width = half_width;
    if (app.count("--tau-max")) cfg.tau_max = tau_max;
    if (app.count("--boundary")) cfg.boundary = boundary;
    if (app.count("--branch")) cfg.branch = branch;
    if (app.count("--seed")) cfg.seed = seed;
    if (no_timing) cfg.timing = false;

    sl2q::Report r = sl2q::run_suite(cfg);
    for (const auto& c : r.checks) {
      std::printf("%-4s %-11s %-72s residual %.3e  tol %.1e  %.2fs\n", c.pass ? "PASS" : "FAIL", c.suite.c_str(),
                  c.check.c_str(), c.residual, c.tolerance, c.seconds);
      if (!c.note.empty()) std::printf("     %s\n", c.note.c_str());
    }
    if (!cfg.report.empty()) sl2q::emit_report(r, cfg.report, cfg.timing);
    return r.all_pass() ? 0 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
