#include "qnb/matching.hpp"

#include <cmath>
#include <stdexcept>

#include "qnb/constants.hpp"

namespace qnb {

double matched_gamma_S(double Theta, double kappa_I, double Omega_S) {
  if (!(Theta > 0.0 && kappa_I > 0.0 && Omega_S > 0.0))
    throw std::invalid_argument("matched_gamma_S: arguments must be positive");
  return Theta / (kappa_I * Omega_S);
}

double frequency_independent_condition(double theta, double Theta,
                                       double kappa_I, double eta_I2,
                                       double eta_S2) {
  if (!(eta_I2 > 0.5) || !(eta_S2 > 0.5))
    throw std::domain_error(
        "frequency_independent_condition: loss-dominated cavity (eta <= 1/2)");
  return eta_S2 * theta / (2.0 * eta_S2 - 1.0) -
         eta_I2 * Theta / ((2.0 * eta_I2 - 1.0) * kappa_I);
}

double balance_transmissivity(double theta_SP, double A_S, double Theta,
                              double kappa_I, double eta_I2) {
  // A_S = 0 degenerates the quadratic to T_S = 2b
  if (!(theta_SP > 0.0 && A_S >= 0.0 && Theta > 0.0 && kappa_I > 0.0))
    throw std::invalid_argument(
        "balance_transmissivity: arguments must be positive");
  if (!(eta_I2 > 0.5))
    throw std::domain_error(
        "balance_transmissivity: loss-dominated interferometer (eta_I2 <= 1/2)");
  const double b =
      (2.0 * eta_I2 - 1.0) / eta_I2 * 2.0 * kappa_I * theta_SP / Theta;
  return b + std::sqrt(b * b + A_S * A_S);
}

void SpinMicrophysics::validate() const {
  const bool ok = finesse_F > 0.0 && cross_section_sigma > 0.0 &&
                  atom_number_N_a > 0.0 && beam_area_A > 0.0 &&
                  optical_linewidth_gamma_opt > 0.0 && detuning_Delta_opt > 0.0 &&
                  photon_flux_Phi >= 0.0;
  if (!ok)
    throw std::invalid_argument(
        "SpinMicrophysics: fields must be positive (photon flux may be zero)");
}

SpinRates spin_rates_from_microphysics(const SpinMicrophysics& mp) {
  mp.validate();
  SpinRates r;
  r.d0 = 2.0 * mp.finesse_F / kPi * mp.cross_section_sigma * mp.atom_number_N_a /
         mp.beam_area_A;
  r.gamma_S = mp.cross_section_sigma / mp.beam_area_A *
              mp.optical_linewidth_gamma_opt * mp.optical_linewidth_gamma_opt *
              mp.photon_flux_Phi / (mp.detuning_Delta_opt * mp.detuning_Delta_opt);
  r.Gamma_S = r.gamma_S * r.d0;
  return r;
}

SpinDesign design_spin_system(double Theta, double kappa_I, double eta_I2,
                              double Omega_S, double gamma_S, double A_S,
                              double single_pass_depth) {
  if (!(gamma_S > 0.0))
    throw std::invalid_argument("design_spin_system: gamma_S must be positive");
  if (!(single_pass_depth > 0.0))
    throw std::invalid_argument(
        "design_spin_system: single_pass_depth must be positive");

  SpinDesign d;
  d.Gamma_S_matched = matched_gamma_S(Theta, kappa_I, Omega_S);
  d.theta_matched = Omega_S * d.Gamma_S_matched;
  d.d0_matched = d.Gamma_S_matched / gamma_S;
  d.single_pass_depth = single_pass_depth;
  d.theta_SP = Omega_S * gamma_S * single_pass_depth;
  d.T_S = balance_transmissivity(d.theta_SP, A_S, Theta, kappa_I, eta_I2);
  d.T_S_exceeds_unity = d.T_S > 1.0;
  d.finesse = kTwoPi / (d.T_S + A_S);
  d.theta_balanced = 4.0 * d.theta_SP / (d.T_S + A_S);
  d.Gamma_S_balanced = d.theta_balanced / Omega_S;
  d.d0_balanced = d.Gamma_S_balanced / gamma_S;

  const double eta_S2 = d.T_S / (d.T_S + A_S);
  const double reference =
      eta_I2 * Theta / ((2.0 * eta_I2 - 1.0) * kappa_I);
  d.balance_residual_rel =
      frequency_independent_condition(d.theta_balanced, Theta, kappa_I, eta_I2,
                                      eta_S2) /
      reference;
  return d;
}

} // namespace qnb
