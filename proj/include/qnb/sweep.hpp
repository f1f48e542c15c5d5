#pragma once

#include <string>
#include <vector>

#include "qnb/params.hpp"

namespace qnb {

/// One spectrum per curve over the analysis grid. All densities are
/// position-referred, m^2/Hz; susceptibility magnitudes in s^2.
struct NoiseSpectrum {
  std::vector<double> f_hz;
  std::vector<double> S_sql_x;
  std::vector<double> S_ifo_x;    // spin ignored, squeezing r_ifo_reference
  std::vector<double> S_hybrid_x; // optimally combined readout
  std::vector<double> gain_db;    // 10 log10(S_ifo_x / S_hybrid_x)
  std::vector<double> abs_chi;
  std::vector<double> abs_chi_S;
};

enum class SweepKernel { kScalar, kAvx2, kAuto };

const char* kernel_name(SweepKernel k);
bool avx2_kernel_available();

/// Densities at a single frequency (the scalar reference path).
struct PointDensities {
  double S_sql, S_ifo, S_hybrid, abs_chi, abs_chi_S;
};
PointDensities densities_at(double f_hz, const ScenarioParams& p,
                            double r_ifo_reference);

/// Frequency sweep over the grid. The AVX2 kernel and the scalar reference
/// compute identical formulas; kAuto picks AVX2 when the CPU supports it.
NoiseSpectrum sweep(const ScenarioParams& p, const FrequencyGrid& grid,
                    SweepKernel kernel = SweepKernel::kAuto,
                    double r_ifo_reference = 0.0);

namespace detail {

/// Frequency-independent scalars consumed by the kernels.
struct SweepConstants {
  double kappa_I, kappa_Ic, kappa_Il, Theta, mass;
  double eta_I1, eta_I2, inv_eta_I3, one_minus_eta_I3_over_eta_I3;
  double Omega_S, gamma_S, theta, eta_S2, R_S, T_S_factor2, inv_eta_S3;
  double rho_I, rho_S, rho_IS;
  double exp_p2r_ref, exp_m2r_ref; // interferometer-only reference squeezing
  double prefactor;                // hbar / (4 kappa_Ic Theta m)
};

SweepConstants make_sweep_constants(const ScenarioParams& p,
                                    double r_ifo_reference);

void sweep_scalar(const SweepConstants& c, const double* f_hz, int n,
                  double* S_sql, double* S_ifo, double* S_hybrid,
                  double* abs_chi, double* abs_chi_S);

#if defined(QNB_HAVE_AVX2)
void sweep_avx2(const SweepConstants& c, const double* f_hz, int n,
                double* S_sql, double* S_ifo, double* S_hybrid,
                double* abs_chi, double* abs_chi_S);
#endif

} // namespace detail

} // namespace qnb
