#include "qnb/response.hpp"

#include <cmath>
#include <stdexcept>

namespace qnb {

double free_mass_susceptibility(double Omega) {
  if (Omega == 0.0)
    throw std::domain_error("free_mass_susceptibility: singular at Omega = 0");
  return -1.0 / (Omega * Omega);
}

std::complex<double> spin_susceptibility(double Omega, double Omega_S,
                                         double gamma_S) {
  if (gamma_S < 0.0)
    throw std::invalid_argument("spin_susceptibility: gamma_S must be >= 0");
  const std::complex<double> d =
      std::complex<double>(gamma_S, -Omega) * std::complex<double>(gamma_S, -Omega) +
      Omega_S * Omega_S;
  if (d == std::complex<double>(0.0, 0.0))
    throw std::domain_error(
        "spin_susceptibility: singular (gamma_S = 0 and Omega = +-Omega_S)");
  return -1.0 / d;
}

CavityFactors interferometer_factors(double Omega, double kappa_I,
                                     double kappa_Ic, double kappa_Il) {
  if (std::abs(kappa_Ic + kappa_Il - kappa_I) > 1e-12 * kappa_I)
    throw std::invalid_argument(
        "interferometer_factors: kappa_Ic + kappa_Il must equal kappa_I");
  CavityFactors f;
  f.ell = std::complex<double>(kappa_I, -Omega);
  f.R_I = 2.0 * kappa_Ic / f.ell - 1.0;
  f.T_I = 2.0 * std::sqrt(kappa_Ic * kappa_Il) / f.ell;
  return f;
}

SpinCavityFactors spin_cavity_factors(double T_S, double A_S) {
  if (!(T_S > 0.0) || T_S > 1.0)
    throw std::invalid_argument("spin_cavity_factors: T_S must lie in (0, 1]");
  if (A_S < 0.0 || A_S >= 1.0)
    throw std::invalid_argument("spin_cavity_factors: A_S must lie in [0, 1)");
  const double sum = T_S + A_S;
  return {(T_S - A_S) / sum, 2.0 * std::sqrt(T_S * A_S) / sum};
}

double spin_zero_point_force_psd(double Omega, double gamma_S) {
  return 2.0 * std::abs(Omega) * gamma_S;
}

TransferSet transfer_at(double Omega, const InterferometerParams& ifo,
                        const SpinParams& spin) {
  TransferSet t;
  const CavityFactors cf = interferometer_factors(
      Omega, ifo.half_bandwidth_kappa_I, ifo.kappa_coupling(), ifo.kappa_loss());
  t.ell = cf.ell;
  t.R_I = cf.R_I;
  t.T_I = cf.T_I;
  const SpinCavityFactors sf =
      spin_cavity_factors(spin.coupling_T_S, spin.intracavity_loss_A_S);
  t.R_S = sf.R_S;
  t.T_S_factor = sf.T_S_factor;
  t.chi = free_mass_susceptibility(Omega);
  t.chi_S =
      spin_susceptibility(Omega, spin.larmor_Omega_S, spin.linewidth_gamma_S);
  return t;
}

} // namespace qnb
