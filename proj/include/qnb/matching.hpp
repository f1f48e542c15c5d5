#pragma once

namespace qnb {

/// Gamma_S solving Theta chi / kappa_I = -theta chi_S in the in-band,
/// above-resonance limit (both susceptibilities -> 1/Omega^2):
/// Gamma_S = Theta / (kappa_I Omega_S).
double matched_gamma_S(double Theta, double kappa_I, double Omega_S);

/// Residual of the frequency-independent back-action balance,
///   eta_S2 theta/(2 eta_S2 - 1) - eta_I2 Theta/((2 eta_I2 - 1) kappa_I).
/// Zero at balance. Throws for loss-dominated cavities (eta <= 1/2).
double frequency_independent_condition(double theta, double Theta,
                                       double kappa_I, double eta_I2,
                                       double eta_S2);

/// Positive root of T_S^2 - 2 b T_S - A_S^2 = 0 with
/// b = ((2 eta_I2 - 1)/eta_I2) (2 kappa_I theta_SP / Theta):
/// the coupling-mirror transmissivity that balances the back actions for a
/// given single-pass coupling theta_SP and intracavity loss A_S.
/// A_S = 0 gives the degenerate root 2b. A result > 1 is returned as-is
/// (caller should warn, not fail).
double balance_transmissivity(double theta_SP, double A_S, double Theta,
                              double kappa_I, double eta_I2);

/// Microscopic description of the atomic ensemble and its probe.
struct SpinMicrophysics {
  double finesse_F = 0.0;
  double cross_section_sigma = 0.0;   // m^2
  double atom_number_N_a = 0.0;
  double beam_area_A = 0.0;           // m^2
  double optical_linewidth_gamma_opt = 0.0; // rad/s
  double detuning_Delta_opt = 0.0;    // rad/s
  double photon_flux_Phi = 0.0;       // 1/s, may be zero (probe off)

  void validate() const;
};

struct SpinRates {
  double d0 = 0.0;      // cavity-enhanced resonant optical depth
  double gamma_S = 0.0; // rad/s
  double Gamma_S = 0.0; // rad/s
};

/// d0 = (2F/pi)(sigma N_a / A); gamma_S = (sigma/A)(gamma_opt^2 Phi /
/// Delta_opt^2); Gamma_S = gamma_S d0.
SpinRates spin_rates_from_microphysics(const SpinMicrophysics& mp);

/// Full spin-system design for a given interferometer: the matched readout
/// rate, and the balanced (T_S, theta) pair for a given single-pass depth.
struct SpinDesign {
  double Gamma_S_matched = 0.0;  // rad/s, from matched_gamma_S
  double theta_matched = 0.0;    // s^-2
  double d0_matched = 0.0;       // Gamma_S_matched / gamma_S
  double single_pass_depth = 0.0;
  double theta_SP = 0.0;         // s^-2
  double T_S = 0.0;
  double finesse = 0.0;
  double theta_balanced = 0.0;   // s^-2
  double Gamma_S_balanced = 0.0; // rad/s
  double d0_balanced = 0.0;
  double balance_residual_rel = 0.0;
  bool T_S_exceeds_unity = false;
};

SpinDesign design_spin_system(double Theta, double kappa_I, double eta_I2,
                              double Omega_S, double gamma_S, double A_S,
                              double single_pass_depth);

} // namespace qnb
