#pragma once

#include <complex>

#include "qnb/params.hpp"
#include "qnb/response.hpp"

namespace qnb {

/// Normalized input-noise spectral densities set by the two-mode squeezing
/// and the input-path efficiencies.
struct InputSpectra {
  double rho_I = 0.0;
  double rho_S = 0.0;
  double rho_IS = 0.0;
};

/// rho_I = 2 eta_I1 sinh^2 r; rho_S = 2 eta_S1 sinh^2 r;
/// rho_IS = sqrt(eta_I1 eta_S1) sinh 2r.
InputSpectra input_spectra(double r, double eta_I1, double eta_S1);

/// Dimensionless normalized noise densities of the two detector channels
/// and their cross-correlation.
struct SigmaSet {
  double sigma_I = 0.0;
  double sigma_Spin = 0.0;
  std::complex<double> sigma_ISpin;
};

SigmaSet sigma_set(double Omega, const InterferometerParams& ifo,
                   const SpinParams& spin, const InputSpectra& in,
                   const TransferSet& t);

/// Force-referred spectral densities assembled from the sigma factors.
/// S_I is in N^2/Hz; S_Spin is the raw spin-detector output density;
/// S_ISpin carries mixed units so that alpha = -S_ISpin/S_Spin weights the
/// raw spin record into a force.
struct ForcePsds {
  double S_I = 0.0;
  double S_Spin = 0.0;
  std::complex<double> S_ISpin;
};

ForcePsds force_psds(double Omega, const SigmaSet& s,
                     const InterferometerParams& ifo, const SpinParams& spin,
                     const TransferSet& t);

/// alpha = -S_ISpin / S_Spin, the variance-minimizing spin-channel weight.
std::complex<double> optimal_weight(std::complex<double> S_ISpin,
                                    double S_Spin);

/// Standard quantum limit, position-referred: hbar / (m Omega^2), m^2/Hz.
double sql_position_psd(double m, double Omega);

/// Position-referred density of the optimally combined hybrid readout,
/// hbar |ell|^2 (sigma_I - |sigma_ISpin|^2/sigma_Spin) / (4 kappa_Ic Theta m).
double hybrid_position_psd(double Omega, const InterferometerParams& ifo,
                           const SpinParams& spin,
                           const SqueezeParams& squeeze);
double hybrid_position_psd(double Omega, const InterferometerParams& ifo,
                           const SigmaSet& s, const TransferSet& t);

/// Interferometer channel alone, spin ignored, with a single-mode
/// phase-squeezed input of factor r_effective (0 = coherent vacuum, the
/// SQL-limited reference curve).
double interferometer_only_position_psd(double Omega,
                                        const InterferometerParams& ifo,
                                        double r_effective);

/// Leading order in e^r of sigma_I - |sigma_ISpin|^2/sigma_Spin:
///   (eta_I1 e^{2r}/2) |2(R_S eta_I2 kappa_I Theta chi / ell^2
///                        + R_I eta_S2 theta chi_S)|^2
///   / (R_S^2 + 4 eta_S2^2 theta^2 |chi_S|^2)
/// Vanishes exactly when the back actions are balanced.
double leading_order_residual(double Omega, const InterferometerParams& ifo,
                              const SpinParams& spin, double r);

} // namespace qnb
