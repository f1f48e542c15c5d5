#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qnb/matching.hpp"
#include "qnb/params.hpp"
#include "qnb/sweep.hpp"

namespace qnb {

enum class Scenario { kAdvLigo, kPrototype10m, kCustom };

enum class OutputFormat { kCsv, kJson };

struct CurveSelection {
  bool sql = true;
  bool interferometer = true;
  bool hybrid = true;
  bool susceptibility = false;
};

struct RunRequest {
  Scenario scenario = Scenario::kAdvLigo;
  std::optional<std::string> config_path;
  FrequencyGrid grid;
  CurveSelection curves;
  bool losses_enabled = true;
  std::optional<double> squeezing_override_r;
  OutputFormat format = OutputFormat::kCsv;
  std::string output_path = "-"; // "-" = stdout
  SweepKernel kernel = SweepKernel::kAuto;
};

struct RunResult {
  NoiseSpectrum spectrum;
  std::string rendered;               // the emitted file contents
  std::vector<std::string> warnings;  // for the caller's warning stream
  ScenarioParams params;              // the parameters actually used
};

/// Resolve scenario parameters (preset or config file), honoring the loss
/// toggle and squeezing override.
ScenarioParams resolve_scenario(Scenario s,
                                const std::optional<std::string>& config_path,
                                bool losses_enabled,
                                std::optional<double> squeezing_override_r);

/// Full sweep + serialization. Writes output_path unless it is "-"
/// (the caller then prints `rendered`). Throws on invalid requests with a
/// diagnostic naming the offending key or flag.
RunResult run(const RunRequest& request);

struct DesignRequest {
  Scenario scenario = Scenario::kAdvLigo;
  std::optional<std::string> config_path;
  double single_pass_depth = kPresetSinglePassDepth;
};

struct DesignResult {
  SpinDesign design;
  std::string rendered;
  std::vector<std::string> warnings;
};

/// The `design` subcommand: matching + balancing report for a scenario.
DesignResult design(const DesignRequest& request);

std::string render_csv(const NoiseSpectrum& s, const CurveSelection& curves);
std::string render_json(const NoiseSpectrum& s, const CurveSelection& curves,
                        const std::string& scenario_name);

const char* scenario_name(Scenario s);

} // namespace qnb
