#include "qnb/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace qnb::oracle {

OutputMap build_output_map(double Omega, const InterferometerParams& ifo,
                           const SpinParams& spin, const TransferSet& t) {
  using cd = std::complex<double>;
  const double eta_I1 = ifo.input_efficiency_eta_I1;
  const double eta_I3 = ifo.output_efficiency_eta_I3;
  const double eta_S1 = spin.input_efficiency_eta_S1;
  const double eta_S2 = spin.eta_S2();
  const double eta_S3 = spin.output_efficiency_eta_S3;
  const double kappa_Ic = ifo.kappa_coupling();
  const double Theta = ifo.normalized_power_Theta();
  const double theta = spin.theta();

  const double rt_eta_I1 = std::sqrt(eta_I1);
  const double rt_loss_I1 = std::sqrt(1.0 - eta_I1);
  const double rt_eta_I3 = std::sqrt(eta_I3);
  const double rt_eta_S1 = std::sqrt(eta_S1);
  const double rt_loss_S1 = std::sqrt(1.0 - eta_S1);
  const double rt_eta_S3 = std::sqrt(eta_S3);

  // amplitude-quadrature (cosine) back-action transfer of each port
  const cd qba_I = 2.0 * kappa_Ic * Theta * t.chi / (t.ell * t.ell);
  const cd qba_I_internal = t.T_I * Theta * t.chi / t.ell;
  const cd qba_S = 2.0 * eta_S2 * theta * t.chi_S;
  const cd qba_S_internal = t.T_S_factor * theta * t.chi_S;

  OutputMap m;
  m.b_I[kAIs] = rt_eta_I3 * t.R_I * rt_eta_I1;
  m.b_I[kAIc] = rt_eta_I3 * qba_I * rt_eta_I1;
  m.b_I[kNI1s] = rt_eta_I3 * t.R_I * rt_loss_I1;
  m.b_I[kNI1c] = rt_eta_I3 * qba_I * rt_loss_I1;
  m.b_I[kNI2s] = rt_eta_I3 * t.T_I;
  m.b_I[kNI2c] = rt_eta_I3 * qba_I_internal;
  m.b_I[kNI3] = std::sqrt(1.0 - eta_I3);

  m.b_S[kASs] = rt_eta_S3 * t.R_S * rt_eta_S1;
  m.b_S[kASc] = rt_eta_S3 * qba_S * rt_eta_S1;
  m.b_S[kNS1s] = rt_eta_S3 * t.R_S * rt_loss_S1;
  m.b_S[kNS1c] = rt_eta_S3 * qba_S * rt_loss_S1;
  m.b_S[kNS2s] = rt_eta_S3 * t.T_S_factor;
  m.b_S[kNS2c] = rt_eta_S3 * qba_S_internal;
  m.b_S[kNS3] = std::sqrt(1.0 - eta_S3);
  m.b_S[kFS] = rt_eta_S3 * std::sqrt(2.0 * eta_S2 * theta) * t.chi_S;

  m.signal_I = rt_eta_I3 *
               std::sqrt(2.0 * kappa_Ic * Theta / (kHbar * ifo.mirror_mass_m)) *
               t.chi / t.ell;
  (void)Omega;
  return m;
}

Covariance input_covariance(double Omega, const SpinParams& spin, double r) {
  Covariance C{};
  const double c2r = std::cosh(2.0 * r);
  const double s2r = std::sinh(2.0 * r);
  for (int i = kAIc; i <= kASs; ++i) C[i][i] = 0.5 * c2r;
  C[kAIc][kASc] = C[kASc][kAIc] = 0.5 * s2r;
  C[kAIs][kASs] = C[kASs][kAIs] = -0.5 * s2r;
  for (int i = kNI1c; i <= kNS3; ++i) C[i][i] = 0.5;
  C[kFS][kFS] = 2.0 * std::abs(Omega) * spin.linewidth_gamma_S;
  return C;
}

double row_psd(const Row& row, const Covariance& C) {
  return row_cross_psd(row, row, C).real();
}

std::complex<double> row_cross_psd(const Row& a, const Row& b,
                                   const Covariance& C) {
  std::complex<double> s = 0.0;
  for (int j = 0; j < kModeCount; ++j) {
    if (a[j] == std::complex<double>(0.0)) continue;
    for (int k = 0; k < kModeCount; ++k) {
      if (C[j][k] == 0.0) continue;
      s += a[j] * std::conj(b[k]) * C[j][k];
    }
  }
  return s;
}

double psd_via_covariance(const OutputMap& map, const Covariance& C,
                          std::complex<double> alpha) {
  for (int i = 0; i < kModeCount; ++i)
    if (C[i][i] < 0.0)
      throw std::domain_error("psd_via_covariance: covariance not PSD");
  Row v{};
  for (int i = 0; i < kModeCount; ++i)
    v[i] = map.b_I[i] / map.signal_I + alpha * map.b_S[i];
  const std::complex<double> s = row_cross_psd(v, v, C);
  // scale-aware tolerance for the imaginary/negative parts of v* C v
  double scale = 0.0;
  for (int i = 0; i < kModeCount; ++i)
    scale += std::norm(v[i]) * C[i][i];
  if (s.real() < -1e-12 * scale)
    throw std::domain_error("psd_via_covariance: covariance not PSD");
  return s.real();
}

std::complex<double> numeric_optimal_alpha(const OutputMap& map,
                                           const Covariance& C) {
  // S(alpha) is an exact quadratic: S0 + 2 Re(conj(alpha) Sab) + |alpha|^2 Sb.
  // Probe it at 0, +-h, +-ih; on a quadratic the finite differences are exact.
  auto curvature = [&](double h) {
    return (psd_via_covariance(map, C, {h, 0.0}) +
            psd_via_covariance(map, C, {-h, 0.0}) -
            2.0 * psd_via_covariance(map, C, {0.0, 0.0})) /
           (2.0 * h * h);
  };
  const double S0 = psd_via_covariance(map, C, {0.0, 0.0});
  double h = 1.0;
  const double Sb1 = curvature(h);
  if (!(Sb1 > 0.0))
    throw std::domain_error("numeric_optimal_alpha: spin channel density <= 0");
  h = std::sqrt(S0 / Sb1) + 1e-300; // balance the probe against the quadratic
  const double Sb = curvature(h);
  const double re = (psd_via_covariance(map, C, {h, 0.0}) -
                     psd_via_covariance(map, C, {-h, 0.0})) /
                    (4.0 * h);
  const double im = (psd_via_covariance(map, C, {0.0, h}) -
                     psd_via_covariance(map, C, {0.0, -h})) /
                    (4.0 * h);
  return std::complex<double>(-re / Sb, -im / Sb);
}

} // namespace qnb::oracle
