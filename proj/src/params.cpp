#include "qnb/params.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qnb/matching.hpp"

namespace qnb {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

void require_positive(double v, const char* name) {
  require(std::isfinite(v) && v > 0.0, std::string(name) + " must be positive");
}

void require_efficiency(double v, const char* name) {
  require(std::isfinite(v) && v > 0.0 && v <= 1.0,
          std::string(name) + " must lie in (0, 1]");
}

} // namespace

double normalized_power(double omega_o, double I_c, double m, double L) {
  require_positive(omega_o, "omega_o");
  require_positive(I_c, "I_c");
  require_positive(m, "m");
  require_positive(L, "L");
  return 8.0 * omega_o * I_c / (m * kSpeedOfLight * L);
}

double InterferometerParams::normalized_power_Theta() const {
  return normalized_power(laser_angular_frequency_omega_o,
                          circulating_power_I_c, mirror_mass_m, arm_length_L);
}

double InterferometerParams::kappa_loss() const {
  return kSpeedOfLight * roundtrip_loss_A_I / (4.0 * arm_length_L);
}

double InterferometerParams::kappa_coupling() const {
  return half_bandwidth_kappa_I - kappa_loss();
}

double InterferometerParams::eta_I2() const {
  return kappa_coupling() / half_bandwidth_kappa_I;
}

void InterferometerParams::validate() const {
  require_positive(arm_length_L, "arm_length_L");
  require_positive(mirror_mass_m, "mirror_mass_m");
  require_positive(half_bandwidth_kappa_I, "half_bandwidth_kappa_I");
  require_positive(circulating_power_I_c, "circulating_power_I_c");
  require_positive(laser_angular_frequency_omega_o,
                   "laser_angular_frequency_omega_o");
  require(std::isfinite(roundtrip_loss_A_I) && roundtrip_loss_A_I >= 0.0 &&
              roundtrip_loss_A_I < 1.0,
          "roundtrip_loss_A_I must lie in [0, 1)");
  require_efficiency(input_efficiency_eta_I1, "input_efficiency_eta_I1");
  require_efficiency(output_efficiency_eta_I3, "output_efficiency_eta_I3");
  // a cavity whose bandwidth is dominated by loss has no usable coupling port
  require(kappa_loss() < half_bandwidth_kappa_I,
          "roundtrip_loss_A_I: derived kappa_Il exceeds kappa_I "
          "(loss-dominated cavity)");
}

double SpinParams::eta_S2() const {
  return coupling_T_S / (coupling_T_S + intracavity_loss_A_S);
}

double SpinParams::theta() const {
  return larmor_Omega_S * readout_rate_Gamma_S;
}

double SpinParams::finesse() const {
  return kTwoPi / (coupling_T_S + intracavity_loss_A_S);
}

double SpinParams::theta_single_pass() const {
  return theta() * (coupling_T_S + intracavity_loss_A_S) / 4.0;
}

void SpinParams::validate() const {
  require_positive(larmor_Omega_S, "larmor_Omega_S");
  require(std::isfinite(linewidth_gamma_S) && linewidth_gamma_S >= 0.0,
          "linewidth_gamma_S must be non-negative");
  require_positive(readout_rate_Gamma_S, "readout_rate_Gamma_S");
  require(std::isfinite(coupling_T_S) && coupling_T_S > 0.0 &&
              coupling_T_S <= 1.0,
          "coupling_T_S must lie in (0, 1]");
  require(std::isfinite(intracavity_loss_A_S) && intracavity_loss_A_S >= 0.0 &&
              intracavity_loss_A_S < 1.0,
          "intracavity_loss_A_S must lie in [0, 1)");
  require_efficiency(input_efficiency_eta_S1, "input_efficiency_eta_S1");
  require_efficiency(output_efficiency_eta_S3, "output_efficiency_eta_S3");
}

double SqueezeParams::cosh2r() const { return std::cosh(2.0 * squeeze_factor_r); }
double SqueezeParams::sinh2r() const { return std::sinh(2.0 * squeeze_factor_r); }
double SqueezeParams::tanh2r() const { return std::tanh(2.0 * squeeze_factor_r); }

void SqueezeParams::validate() const {
  require(std::isfinite(squeeze_factor_r) && squeeze_factor_r >= 0.0,
          "squeeze_factor_r must be non-negative");
}

void ScenarioParams::validate() const {
  ifo.validate();
  spin.validate();
  squeeze.validate();
}

std::vector<double> FrequencyGrid::frequencies() const {
  validate();
  std::vector<double> f(static_cast<size_t>(n_points));
  const double lmin = std::log(f_min_hz);
  const double lmax = std::log(f_max_hz);
  const double step = (lmax - lmin) / (n_points - 1);
  for (int i = 0; i < n_points; ++i) f[i] = std::exp(lmin + i * step);
  f.front() = f_min_hz;
  f.back() = f_max_hz;
  return f;
}

void FrequencyGrid::validate() const {
  require(std::isfinite(f_min_hz) && f_min_hz > 0.0, "f_min must be positive");
  require(std::isfinite(f_max_hz) && f_max_hz > f_min_hz,
          "f_max must exceed f_min");
  require(n_points >= 2, "points must be at least 2");
}

namespace {

// Shared loss budget of both scenarios: 2.5% in/out per channel, 0.01%
// interferometer roundtrip, 0.3% spin-cavity roundtrip.
constexpr double kEtaIn = 0.975;
constexpr double kEtaOut = 0.975;
constexpr double kLossAI = 1e-4;
constexpr double kLossAS = 3e-3;

ScenarioParams make_preset(double L, double m, double kappa_I_hz, double I_c,
                           double spin_freq_hz) {
  ScenarioParams p;
  p.ifo.arm_length_L = L;
  p.ifo.mirror_mass_m = m;
  p.ifo.half_bandwidth_kappa_I = kTwoPi * kappa_I_hz;
  p.ifo.circulating_power_I_c = I_c;
  p.ifo.laser_angular_frequency_omega_o =
      kTwoPi * kSpeedOfLight / kDefaultLaserWavelength;
  p.ifo.roundtrip_loss_A_I = kLossAI;
  p.ifo.input_efficiency_eta_I1 = kEtaIn;
  p.ifo.output_efficiency_eta_I3 = kEtaOut;

  p.spin.larmor_Omega_S = kTwoPi * spin_freq_hz;
  p.spin.linewidth_gamma_S = kTwoPi * spin_freq_hz;
  p.spin.intracavity_loss_A_S = kLossAS;
  p.spin.input_efficiency_eta_S1 = kEtaIn;
  p.spin.output_efficiency_eta_S3 = kEtaOut;

  const SpinDesign d = design_spin_system(
      p.ifo.normalized_power_Theta(), p.ifo.half_bandwidth_kappa_I,
      p.ifo.eta_I2(), p.spin.larmor_Omega_S, p.spin.linewidth_gamma_S, kLossAS,
      kPresetSinglePassDepth);
  p.spin.readout_rate_Gamma_S = snap_angular_to_hz(d.Gamma_S_balanced);
  p.spin.coupling_T_S = d.T_S;

  p.squeeze.squeeze_factor_r = 0.5 * std::log(15.0); // e^{2r} = 15

  p.validate();
  return p;
}

} // namespace

ScenarioParams advanced_ligo_preset() {
  return make_preset(4000.0, 40.0, 500.0, 840e3, 3.0);
}

ScenarioParams prototype_10m_preset() {
  return make_preset(10.0, 0.1, 2000.0, 1e3, 30.0);
}

ScenarioParams remove_losses(ScenarioParams p, bool redesign_spin) {
  p.ifo.roundtrip_loss_A_I = 0.0;
  p.ifo.input_efficiency_eta_I1 = 1.0;
  p.ifo.output_efficiency_eta_I3 = 1.0;
  p.spin.intracavity_loss_A_S = 0.0;
  p.spin.linewidth_gamma_S = 0.0; // undamped spin: no zero-point force noise
  p.spin.input_efficiency_eta_S1 = 1.0;
  p.spin.output_efficiency_eta_S3 = 1.0;
  if (redesign_spin) {
    p.spin.readout_rate_Gamma_S = snap_angular_to_hz(
        matched_gamma_S(p.ifo.normalized_power_Theta(),
                        p.ifo.half_bandwidth_kappa_I, p.spin.larmor_Omega_S));
    p.spin.coupling_T_S = 1.0; // irrelevant once A_S = 0
  }
  p.validate();
  return p;
}

// --- config I/O ---

double hz_for_exact_roundtrip(double omega) {
  // collect the neighbors of omega/2pi whose product reproduces omega, then
  // prefer the one with the shortest decimal form (presets print as 500, not
  // 499.99999999999994)
  const double h0 = omega / kTwoPi;
  double best = h0;
  size_t best_len = std::string::npos;
  double up = h0, down = h0;
  auto consider = [&](double h) {
    if (h * kTwoPi != omega) return;
    const size_t len = nlohmann::json(h).dump().size();
    if (len < best_len) {
      best = h;
      best_len = len;
    }
  };
  consider(h0);
  for (int k = 0; k < 3; ++k) {
    up = std::nextafter(up, std::numeric_limits<double>::infinity());
    down = std::nextafter(down, -std::numeric_limits<double>::infinity());
    consider(up);
    consider(down);
  }
  return best;
}

double snap_angular_to_hz(double omega) {
  return (omega / kTwoPi) * kTwoPi;
}

namespace {

using json = nlohmann::json;

const char* const kKnownKeys[] = {
    "arm_length_L",
    "mirror_mass_m",
    "half_bandwidth_kappa_I",
    "circulating_power_I_c",
    "laser_angular_frequency_omega_o",
    "roundtrip_loss_A_I",
    "input_efficiency_eta_I1",
    "output_efficiency_eta_I3",
    "larmor_Omega_S",
    "linewidth_gamma_S",
    "readout_rate_Gamma_S",
    "coupling_T_S",
    "intracavity_loss_A_S",
    "input_efficiency_eta_S1",
    "output_efficiency_eta_S3",
    "squeeze_factor_r",
};

double take_number(const json& j, const char* key) {
  if (!j.contains(key))
    throw std::invalid_argument(std::string("config: missing key \"") + key +
                                "\"");
  const json& v = j.at(key);
  if (!v.is_number())
    throw std::invalid_argument(std::string("config: key \"") + key +
                                "\" must be a number");
  return v.get<double>();
}

} // namespace

ScenarioParams parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config: not valid JSON: ") +
                                e.what());
  }
  if (!j.is_object())
    throw std::invalid_argument("config: top level must be a JSON object");

  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : kKnownKeys) known = known || (it.key() == k);
    if (!known)
      throw std::invalid_argument("config: unknown key \"" + it.key() + "\"");
  }

  ScenarioParams p;
  p.ifo.arm_length_L = take_number(j, "arm_length_L");
  p.ifo.mirror_mass_m = take_number(j, "mirror_mass_m");
  p.ifo.half_bandwidth_kappa_I =
      kTwoPi * take_number(j, "half_bandwidth_kappa_I");
  p.ifo.circulating_power_I_c = take_number(j, "circulating_power_I_c");
  p.ifo.laser_angular_frequency_omega_o =
      take_number(j, "laser_angular_frequency_omega_o");
  p.ifo.roundtrip_loss_A_I = take_number(j, "roundtrip_loss_A_I");
  p.ifo.input_efficiency_eta_I1 = take_number(j, "input_efficiency_eta_I1");
  p.ifo.output_efficiency_eta_I3 = take_number(j, "output_efficiency_eta_I3");

  p.spin.larmor_Omega_S = kTwoPi * take_number(j, "larmor_Omega_S");
  p.spin.linewidth_gamma_S = kTwoPi * take_number(j, "linewidth_gamma_S");
  p.spin.readout_rate_Gamma_S = kTwoPi * take_number(j, "readout_rate_Gamma_S");
  p.spin.coupling_T_S = take_number(j, "coupling_T_S");
  p.spin.intracavity_loss_A_S = take_number(j, "intracavity_loss_A_S");
  p.spin.input_efficiency_eta_S1 = take_number(j, "input_efficiency_eta_S1");
  p.spin.output_efficiency_eta_S3 = take_number(j, "output_efficiency_eta_S3");

  p.squeeze.squeeze_factor_r = take_number(j, "squeeze_factor_r");

  p.validate();
  return p;
}

ScenarioParams load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("config: cannot open \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string config_to_json(const ScenarioParams& p) {
  json j = json::object();
  j["arm_length_L"] = p.ifo.arm_length_L;
  j["mirror_mass_m"] = p.ifo.mirror_mass_m;
  j["half_bandwidth_kappa_I"] =
      hz_for_exact_roundtrip(p.ifo.half_bandwidth_kappa_I);
  j["circulating_power_I_c"] = p.ifo.circulating_power_I_c;
  j["laser_angular_frequency_omega_o"] = p.ifo.laser_angular_frequency_omega_o;
  j["roundtrip_loss_A_I"] = p.ifo.roundtrip_loss_A_I;
  j["input_efficiency_eta_I1"] = p.ifo.input_efficiency_eta_I1;
  j["output_efficiency_eta_I3"] = p.ifo.output_efficiency_eta_I3;
  j["larmor_Omega_S"] = hz_for_exact_roundtrip(p.spin.larmor_Omega_S);
  j["linewidth_gamma_S"] = hz_for_exact_roundtrip(p.spin.linewidth_gamma_S);
  j["readout_rate_Gamma_S"] =
      hz_for_exact_roundtrip(p.spin.readout_rate_Gamma_S);
  j["coupling_T_S"] = p.spin.coupling_T_S;
  j["intracavity_loss_A_S"] = p.spin.intracavity_loss_A_S;
  j["input_efficiency_eta_S1"] = p.spin.input_efficiency_eta_S1;
  j["output_efficiency_eta_S3"] = p.spin.output_efficiency_eta_S3;
  j["squeeze_factor_r"] = p.squeeze.squeeze_factor_r;
  return j.dump(2) + "\n";
}

void save_config(const ScenarioParams& p, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("config: cannot write \"" + path + "\"");
  out << config_to_json(p);
}

} // namespace qnb
