#pragma once

#include <array>
#include <complex>

#include "qnb/params.hpp"
#include "qnb/response.hpp"

namespace qnb::oracle {

// Input noise modes, one slot per independent stochastic quadrature.
// a_*: the (possibly entangled) probe fields; n_*1: input-path loss vacua;
// n_*2: intracavity loss vacua; n_*3: output-path loss vacua (only the
// detected sine quadrature matters); f_S: spin zero-point force.
enum Mode : int {
  kAIc = 0,
  kAIs,
  kASc,
  kASs,
  kNI1c,
  kNI1s,
  kNI2c,
  kNI2s,
  kNI3,
  kNS1c,
  kNS1s,
  kNS2c,
  kNS2s,
  kNS3,
  kFS,
  kModeCount
};

using Row = std::array<std::complex<double>, kModeCount>;
using Covariance = std::array<std::array<double, kModeCount>, kModeCount>;

/// Coefficients of the two detected sine quadratures over the mode vector,
/// plus the signal-force transfer into the interferometer output.
/// Transcribed term by term from the lossy input/output relations; no
/// algebraic simplification, so it cannot share an error with the closed
/// forms it checks.
struct OutputMap {
  Row b_I{};
  Row b_S{};
  std::complex<double> signal_I; // sqrt(2 kappa_Ic Theta eta_I3 / hbar m) chi/ell
};

OutputMap build_output_map(double Omega, const InterferometerParams& ifo,
                           const SpinParams& spin, const TransferSet& t);

/// Symmetrized input covariance: vacuum blocks 1/2, two-mode-squeezed
/// correlations in the (a_I, a_S) block, f_S at 2|Omega| gamma_S.
Covariance input_covariance(double Omega, const SpinParams& spin, double r);

/// S of the linear combination sum_j row[j] mode_j (quadratic form v* C v).
double row_psd(const Row& row, const Covariance& C);

/// Cross density S[A B] = sum_jk a_j conj(b_k) C_jk.
std::complex<double> row_cross_psd(const Row& a, const Row& b,
                                   const Covariance& C);

/// Force-referred density of (b_I^s / signal_I) + alpha b_S^s.
/// Throws if the covariance produces a negative quadratic form.
double psd_via_covariance(const OutputMap& map, const Covariance& C,
                          std::complex<double> alpha);

/// Minimizer of psd_via_covariance over complex alpha, recovered from
/// finite-difference probes of the quadratic form (no closed forms used).
std::complex<double> numeric_optimal_alpha(const OutputMap& map,
                                           const Covariance& C);

} // namespace qnb::oracle
