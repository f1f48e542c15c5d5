#pragma once

#include <complex>

#include "qnb/params.hpp"

namespace qnb {

/// Per-frequency cavity transfer factors and susceptibilities.
struct TransferSet {
  std::complex<double> ell;  // kappa_I - i Omega, rad/s
  std::complex<double> R_I;  // cavity reflection for the probe
  std::complex<double> T_I;  // leakage into the intracavity loss port
  double R_S = 0.0;          // spin-cavity reflection (frequency-flat)
  double T_S_factor = 0.0;   // spin-cavity loss-port coupling
  double chi = 0.0;          // free-mass susceptibility, s^2
  std::complex<double> chi_S; // spin susceptibility, s^2
};

/// chi = -1/Omega^2. Throws on Omega = 0.
double free_mass_susceptibility(double Omega);

/// chi_S = -[(gamma_S - i Omega)^2 + Omega_S^2]^{-1}.
/// Throws when the denominator vanishes (gamma_S = 0, Omega = +-Omega_S).
std::complex<double> spin_susceptibility(double Omega, double Omega_S,
                                         double gamma_S);

struct CavityFactors {
  std::complex<double> ell, R_I, T_I;
};

/// ell = kappa_I - i Omega; R_I = 2 kappa_Ic/ell - 1;
/// T_I = 2 sqrt(kappa_Ic kappa_Il)/ell.
/// Requires kappa_Ic + kappa_Il = kappa_I to 1e-12 relative.
CavityFactors interferometer_factors(double Omega, double kappa_I,
                                     double kappa_Ic, double kappa_Il);

struct SpinCavityFactors {
  double R_S, T_S_factor;
};

/// R_S = (T_S - A_S)/(T_S + A_S); T_S_factor = 2 sqrt(T_S A_S)/(T_S + A_S).
SpinCavityFactors spin_cavity_factors(double T_S, double A_S);

/// Zero-point force density of the spin oscillator: 2 |Omega| gamma_S
/// (= |Im chi_S^{-1}|).
double spin_zero_point_force_psd(double Omega, double gamma_S);

/// Everything the noise formulas need at one frequency.
TransferSet transfer_at(double Omega, const InterferometerParams& ifo,
                        const SpinParams& spin);

} // namespace qnb
