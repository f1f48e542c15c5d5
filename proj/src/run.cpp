#include "qnb/run.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qnb {

namespace {

std::string fmt9(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.8e", v); // 9 significant digits
  return buf;
}

struct Column {
  const char* name;
  const std::vector<double>* data;
};

std::vector<Column> select_columns(const NoiseSpectrum& s,
                                   const CurveSelection& curves) {
  std::vector<Column> cols;
  cols.push_back({"f_Hz", &s.f_hz});
  if (curves.sql) cols.push_back({"sqrt_S_sql", &s.S_sql_x});
  if (curves.interferometer) cols.push_back({"sqrt_S_ifo", &s.S_ifo_x});
  if (curves.hybrid) {
    cols.push_back({"sqrt_S_hybrid", &s.S_hybrid_x});
    cols.push_back({"gain_db", &s.gain_db});
  }
  if (curves.susceptibility) {
    cols.push_back({"abs_chi", &s.abs_chi});
    cols.push_back({"abs_chi_S", &s.abs_chi_S});
  }
  return cols;
}

// density columns are emitted as amplitude spectral densities, m/sqrt(Hz)
bool is_sqrt_column(const char* name) {
  return std::string(name).rfind("sqrt_", 0) == 0;
}

double cell_value(const Column& col, size_t i) {
  const double v = (*col.data)[i];
  return is_sqrt_column(col.name) ? std::sqrt(v) : v;
}

} // namespace

std::string render_csv(const NoiseSpectrum& s, const CurveSelection& curves) {
  const std::vector<Column> cols = select_columns(s, curves);
  std::ostringstream out;
  for (size_t c = 0; c < cols.size(); ++c)
    out << (c ? "," : "") << cols[c].name;
  out << "\n";
  for (size_t i = 0; i < s.f_hz.size(); ++i) {
    for (size_t c = 0; c < cols.size(); ++c)
      out << (c ? "," : "") << fmt9(cell_value(cols[c], i));
    out << "\n";
  }
  return out.str();
}

std::string render_json(const NoiseSpectrum& s, const CurveSelection& curves,
                        const std::string& scenario) {
  // hand-rolled so both formats carry the identical 9-digit decimal tokens
  const std::vector<Column> cols = select_columns(s, curves);
  std::ostringstream out;
  out << "{\n  \"scenario\": \"" << scenario << "\",\n  \"columns\": [";
  for (size_t c = 0; c < cols.size(); ++c)
    out << (c ? ", " : "") << '"' << cols[c].name << '"';
  out << "],\n  \"rows\": [\n";
  for (size_t i = 0; i < s.f_hz.size(); ++i) {
    out << "    [";
    for (size_t c = 0; c < cols.size(); ++c)
      out << (c ? ", " : "") << fmt9(cell_value(cols[c], i));
    out << (i + 1 < s.f_hz.size() ? "],\n" : "]\n");
  }
  out << "  ]\n}\n";
  return out.str();
}

const char* scenario_name(Scenario s) {
  switch (s) {
    case Scenario::kAdvLigo: return "advligo";
    case Scenario::kPrototype10m: return "prototype10m";
    case Scenario::kCustom: return "custom";
  }
  return "?";
}

ScenarioParams resolve_scenario(Scenario s,
                                const std::optional<std::string>& config_path,
                                bool losses_enabled,
                                std::optional<double> squeezing_override_r) {
  ScenarioParams p;
  switch (s) {
    case Scenario::kAdvLigo:
      p = advanced_ligo_preset();
      break;
    case Scenario::kPrototype10m:
      p = prototype_10m_preset();
      break;
    case Scenario::kCustom:
      if (!config_path)
        throw std::invalid_argument("custom scenario requires --config <path>");
      p = load_config(*config_path);
      break;
  }
  if (!losses_enabled)
    p = remove_losses(std::move(p), /*redesign_spin=*/s != Scenario::kCustom);
  if (squeezing_override_r) {
    p.squeeze.squeeze_factor_r = *squeezing_override_r;
    p.squeeze.validate();
  }
  return p;
}

RunResult run(const RunRequest& request) {
  RunResult result;
  if (request.scenario != Scenario::kCustom && request.config_path)
    result.warnings.push_back("--config is ignored unless --scenario custom");
  result.params = resolve_scenario(request.scenario, request.config_path,
                                   request.losses_enabled,
                                   request.squeezing_override_r);
  result.spectrum = sweep(result.params, request.grid, request.kernel);
  result.rendered =
      request.format == OutputFormat::kCsv
          ? render_csv(result.spectrum, request.curves)
          : render_json(result.spectrum, request.curves,
                        scenario_name(request.scenario));
  if (request.output_path != "-") {
    std::ofstream out(request.output_path, std::ios::binary);
    if (!out)
      throw std::invalid_argument("cannot write output file \"" +
                                  request.output_path + "\"");
    out << result.rendered;
  }
  return result;
}

DesignResult design(const DesignRequest& request) {
  ScenarioParams p = resolve_scenario(request.scenario, request.config_path,
                                      /*losses_enabled=*/true, std::nullopt);
  DesignResult result;
  result.design = design_spin_system(
      p.ifo.normalized_power_Theta(), p.ifo.half_bandwidth_kappa_I,
      p.ifo.eta_I2(), p.spin.larmor_Omega_S, p.spin.linewidth_gamma_S,
      p.spin.intracavity_loss_A_S, request.single_pass_depth);
  const SpinDesign& d = result.design;
  if (d.T_S_exceeds_unity)
    result.warnings.push_back(
        "balanced T_S exceeds 1 (unphysical transmissivity; parameters "
        "inconsistent)");

  std::ostringstream out;
  out << "scenario:             " << scenario_name(request.scenario) << "\n";
  out << "Theta_s3:             " << fmt9(p.ifo.normalized_power_Theta())
      << "\n";
  out << "kappa_I_Hz:           "
      << fmt9(p.ifo.half_bandwidth_kappa_I / kTwoPi) << "\n";
  out << "Omega_S_Hz:           " << fmt9(p.spin.larmor_Omega_S / kTwoPi)
      << "\n";
  out << "gamma_S_Hz:           " << fmt9(p.spin.linewidth_gamma_S / kTwoPi)
      << "\n";
  out << "Gamma_S_Hz:           " << fmt9(d.Gamma_S_matched / kTwoPi) << "\n";
  out << "theta_s2:             " << fmt9(d.theta_matched) << "\n";
  out << "d0:                   " << fmt9(d.d0_matched) << "\n";
  out << "single_pass_depth:    " << fmt9(d.single_pass_depth) << "\n";
  out << "theta_SP_s2:          " << fmt9(d.theta_SP) << "\n";
  out << "T_S:                  " << fmt9(d.T_S) << "\n";
  out << "finesse:              " << fmt9(d.finesse) << "\n";
  out << "Gamma_S_balanced_Hz:  " << fmt9(d.Gamma_S_balanced / kTwoPi) << "\n";
  out << "d0_balanced:          " << fmt9(d.d0_balanced) << "\n";
  out << "balance_residual_rel: " << fmt9(d.balance_residual_rel) << "\n";
  result.rendered = out.str();
  return result;
}

} // namespace qnb
