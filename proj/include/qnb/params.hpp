#pragma once

#include <string>
#include <vector>

#include "qnb/constants.hpp"

namespace qnb {

/// Interferometer arm cavity and optical-loss parameters.
///
/// Frequencies are stored as angular frequencies (rad/s). The config file
/// boundary speaks ordinary Hz; see config.cpp for the conversion rules.
struct InterferometerParams {
  double arm_length_L = 0.0;                   // m
  double mirror_mass_m = 0.0;                  // kg
  double half_bandwidth_kappa_I = 0.0;         // rad/s
  double circulating_power_I_c = 0.0;          // W
  double laser_angular_frequency_omega_o = 0.0; // rad/s
  double roundtrip_loss_A_I = 0.0;             // fraction per roundtrip
  double input_efficiency_eta_I1 = 1.0;
  double output_efficiency_eta_I3 = 1.0;

  /// Theta = 8 omega_o I_c / (m c L), s^-3
  double normalized_power_Theta() const;
  /// kappa_Il = c A_I / (4 L), the loss part of the half-bandwidth
  double kappa_loss() const;
  /// kappa_Ic = kappa_I - kappa_Il, the coupling part
  double kappa_coupling() const;
  /// eta_I2 = kappa_Ic / kappa_I
  double eta_I2() const;

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

/// Spin-oscillator ensemble and its readout cavity.
///
/// gamma_S = 0 and A_S = 0 are permitted and model the idealized undamped,
/// lossless limit (no zero-point force noise, unit cavity reflection).
struct SpinParams {
  double larmor_Omega_S = 0.0;   // rad/s
  double linewidth_gamma_S = 0.0; // rad/s, >= 0
  double readout_rate_Gamma_S = 0.0; // rad/s
  double coupling_T_S = 0.0;     // coupling-mirror power transmissivity
  double intracavity_loss_A_S = 0.0; // roundtrip loss fraction, >= 0
  double input_efficiency_eta_S1 = 1.0;
  double output_efficiency_eta_S3 = 1.0;

  /// eta_S2 = T_S / (T_S + A_S)
  double eta_S2() const;
  /// theta = Omega_S * Gamma_S, s^-2
  double theta() const;
  /// F = 2 pi / (T_S + A_S)
  double finesse() const;
  /// theta_SP = theta (T_S + A_S) / 4, single-pass coupling
  double theta_single_pass() const;

  void validate() const;
};

/// Two-mode squeezing strength of the entangled probe pair.
struct SqueezeParams {
  double squeeze_factor_r = 0.0; // dimensionless, >= 0

  double cosh2r() const;
  double sinh2r() const;
  double tanh2r() const;

  void validate() const;
};

/// One full simulation parameter set.
struct ScenarioParams {
  InterferometerParams ifo;
  SpinParams spin;
  SqueezeParams squeeze;

  void validate() const;
};

/// Logarithmic analysis-frequency grid. Never contains 0 Hz.
struct FrequencyGrid {
  double f_min_hz = 1.0;
  double f_max_hz = 1e4;
  int n_points = 1000;

  std::vector<double> frequencies() const;
  void validate() const;
};

double normalized_power(double omega_o, double I_c, double m, double L);

/// Single-pass resonant optical depth assumed by the presets when solving
/// for the spin-cavity coupling (a 10 cm room-temperature cell).
inline constexpr double kPresetSinglePassDepth = 6.0;

/// Advanced LIGO scenario: 4 km arms, 40 kg mirrors, 840 kW circulating,
/// kappa_I = 2pi x 500 Hz, spin oscillator at 2pi x 3 Hz, e^{2r} = 15.
/// Spin Gamma_S and T_S come from the matching solver (back-action balance).
ScenarioParams advanced_ligo_preset();

/// 10 m prototype scenario: 0.1 kg mirrors, 1 kW, kappa_I = 2pi x 2000 Hz,
/// spin oscillator at 2pi x 30 Hz.
ScenarioParams prototype_10m_preset();

/// Idealized copy: unit efficiencies, no intracavity loss, undamped spin.
/// If redesign_spin is set, Gamma_S is re-solved from the lossless matching
/// condition (presets); otherwise the existing Gamma_S/T_S are kept (custom).
ScenarioParams remove_losses(ScenarioParams p, bool redesign_spin);

// --- config file (flat JSON object, keys = field names, frequencies in Hz) ---

ScenarioParams load_config(const std::string& path);
ScenarioParams parse_config(const std::string& json_text);
std::string config_to_json(const ScenarioParams& p);
void save_config(const ScenarioParams& p, const std::string& path);

/// Hz representation whose parse reproduces omega bit-exactly, when one
/// exists within 3 ulp of omega/2pi (preferring the shortest decimal form).
double hz_for_exact_roundtrip(double omega);

/// Nearest angular frequency exactly representable as 2pi x (Hz double).
/// Solver outputs are snapped onto this lattice (a <= 1 ulp change) so that
/// any parameter set survives the Hz config format bit-exactly.
double snap_angular_to_hz(double omega);

} // namespace qnb
