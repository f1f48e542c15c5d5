// qnb: quantum-noise budget for a gravitational-wave interferometer combined
// with a negative-effective-mass spin oscillator through two-mode squeezed
// light. Emits spectral-density curves (CSV/JSON) and solves the spin-system
// matching/balancing design.

#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qnb/run.hpp"

namespace {

qnb::Scenario parse_scenario(const std::string& s) {
  if (s == "advligo") return qnb::Scenario::kAdvLigo;
  if (s == "prototype10m") return qnb::Scenario::kPrototype10m;
  if (s == "custom") return qnb::Scenario::kCustom;
  throw CLI::ValidationError("--scenario",
                             "must be advligo, prototype10m, or custom");
}

qnb::CurveSelection parse_curves(const std::string& list) {
  qnb::CurveSelection sel{false, false, false, false};
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "sql") sel.sql = true;
    else if (item == "interferometer") sel.interferometer = true;
    else if (item == "hybrid") sel.hybrid = true;
    else if (item == "susceptibility") sel.susceptibility = true;
    else
      throw CLI::ValidationError(
          "--curves", "unknown curve \"" + item +
                          "\" (expected sql, interferometer, hybrid, "
                          "susceptibility)");
  }
  return sel;
}

qnb::SweepKernel parse_kernel(const std::string& s) {
  if (s == "scalar") return qnb::SweepKernel::kScalar;
  if (s == "avx2") return qnb::SweepKernel::kAvx2;
  if (s == "auto") return qnb::SweepKernel::kAuto;
  throw CLI::ValidationError("--kernel", "must be scalar, avx2, or auto");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Quantum-noise budget of a GW interferometer hybridized with a "
      "negative-mass spin oscillator via two-mode squeezed light"};
  app.require_subcommand(0, 1);

  std::string scenario = "advligo";
  std::string config_path;
  double fmin = 1.0, fmax = 1e4;
  int points = 1000;
  std::string curves = "sql,interferometer,hybrid";
  bool no_losses = false;
  double squeezing_r = -1.0;
  bool squeezing_set = false;
  std::string format = "csv";
  std::string output = "-";
  std::string kernel = "auto";

  app.add_option("--scenario", scenario,
                 "Parameter set: advligo, prototype10m, custom")
      ->capture_default_str();
  app.add_option("--config", config_path,
                 "JSON parameter file (required for --scenario custom)");
  app.add_option("--fmin", fmin, "Lowest analysis frequency, Hz")
      ->capture_default_str();
  app.add_option("--fmax", fmax, "Highest analysis frequency, Hz")
      ->capture_default_str();
  app.add_option("--points", points, "Grid points (log spacing)")
      ->capture_default_str();
  app.add_option("--curves", curves,
                 "Comma list of sql, interferometer, hybrid, susceptibility")
      ->capture_default_str();
  app.add_flag("--no-losses", no_losses,
               "Ideal run: unit efficiencies, lossless cavities, undamped "
               "spin; presets re-match Gamma_S");
  auto* sq = app.add_option("--squeezing-r", squeezing_r,
                            "Override the two-mode squeezing factor r");
  app.add_option("--format", format, "Output format: csv or json")
      ->capture_default_str();
  app.add_option("--output", output, "Output path (- = stdout)")
      ->capture_default_str();
  app.add_option("--kernel", kernel, "Sweep kernel: scalar, avx2, auto")
      ->capture_default_str();

  CLI::App* des = app.add_subcommand(
      "design", "Solve the spin-system matching and back-action balance");
  std::string d_scenario = "advligo";
  std::string d_config;
  double d_depth = qnb::kPresetSinglePassDepth;
  des->add_option("--scenario", d_scenario,
                  "Parameter set: advligo, prototype10m, custom")
      ->capture_default_str();
  des->add_option("--config", d_config, "JSON parameter file for custom");
  des->add_option("--single-pass-depth", d_depth,
                  "Single-pass resonant optical depth of the ensemble")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);
  squeezing_set = sq->count() > 0;

  try {
    if (des->parsed()) {
      qnb::DesignRequest req;
      req.scenario = parse_scenario(d_scenario);
      if (!d_config.empty()) req.config_path = d_config;
      req.single_pass_depth = d_depth;
      const qnb::DesignResult res = qnb::design(req);
      for (const std::string& w : res.warnings)
        std::cerr << "warning: " << w << "\n";
      std::cout << res.rendered;
      return 0;
    }

    qnb::RunRequest req;
    req.scenario = parse_scenario(scenario);
    if (!config_path.empty()) req.config_path = config_path;
    req.grid = {fmin, fmax, points};
    req.curves = parse_curves(curves);
    req.losses_enabled = !no_losses;
    if (squeezing_set) req.squeezing_override_r = squeezing_r;
    req.format = format == "json" ? qnb::OutputFormat::kJson
               : format == "csv" ? qnb::OutputFormat::kCsv
                                 : throw CLI::ValidationError(
                                       "--format", "must be csv or json");
    req.output_path = output;
    req.kernel = parse_kernel(kernel);

    const qnb::RunResult res = qnb::run(req);
    for (const std::string& w : res.warnings)
      std::cerr << "warning: " << w << "\n";
    if (req.output_path == "-") std::cout << res.rendered;
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
