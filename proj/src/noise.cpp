#include "qnb/noise.hpp"

#include <cmath>
#include <stdexcept>

namespace qnb {

InputSpectra input_spectra(double r, double eta_I1, double eta_S1) {
  if (r < 0.0) throw std::invalid_argument("input_spectra: r must be >= 0");
  if (!(eta_I1 > 0.0 && eta_I1 <= 1.0 && eta_S1 > 0.0 && eta_S1 <= 1.0))
    throw std::invalid_argument("input_spectra: efficiencies must lie in (0, 1]");
  const double sh = std::sinh(r);
  InputSpectra in;
  in.rho_I = 2.0 * eta_I1 * sh * sh;
  in.rho_S = 2.0 * eta_S1 * sh * sh;
  in.rho_IS = std::sqrt(eta_I1 * eta_S1) * std::sinh(2.0 * r);
  return in;
}

SigmaSet sigma_set(double /*Omega*/, const InterferometerParams& ifo,
                   const SpinParams& spin, const InputSpectra& in,
                   const TransferSet& t) {
  const double eta_I2 = ifo.eta_I2();
  const double eta_I3 = ifo.output_efficiency_eta_I3;
  const double eta_S2 = spin.eta_S2();
  const double eta_S3 = spin.output_efficiency_eta_S3;
  const double kappa_I = ifo.half_bandwidth_kappa_I;
  const double Theta = ifo.normalized_power_Theta();
  const double theta = spin.theta();

  const double abs_ell2 = std::norm(t.ell);
  const double abs_chi2 = t.chi * t.chi;
  const double abs_chiS2 = std::norm(t.chi_S);

  SigmaSet s;
  s.sigma_I = std::norm(t.R_I) * in.rho_I + 1.0 / eta_I3 +
              4.0 * eta_I2 * kappa_I * kappa_I * Theta * Theta * abs_chi2 /
                  (abs_ell2 * abs_ell2) * (eta_I2 * in.rho_I + 1.0);

  s.sigma_Spin = t.R_S * t.R_S * in.rho_S + 1.0 / eta_S3 +
                 4.0 * eta_S2 * theta * theta * abs_chiS2 *
                     (eta_S2 * in.rho_S + 1.0) +
                 4.0 * eta_S2 * theta * std::abs(t.chi_S.imag());

  const std::complex<double> v =
      2.0 * ifo.kappa_coupling() * Theta * t.chi / (t.ell * t.ell);
  const std::complex<double> q = 2.0 * eta_S2 * theta * t.chi_S;
  s.sigma_ISpin = (-t.R_I * t.R_S + v * std::conj(q)) * in.rho_IS;
  return s;
}

ForcePsds force_psds(double /*Omega*/, const SigmaSet& s,
                     const InterferometerParams& ifo, const SpinParams& spin,
                     const TransferSet& t) {
  if (t.chi == 0.0) throw std::domain_error("force_psds: singular chi");
  const double kappa_Ic = ifo.kappa_coupling();
  const double Theta = ifo.normalized_power_Theta();
  const double m = ifo.mirror_mass_m;
  const double eta_S3 = spin.output_efficiency_eta_S3;

  ForcePsds f;
  f.S_I = kHbar * m * std::norm(t.ell) /
          (4.0 * kappa_Ic * Theta * t.chi * t.chi) * s.sigma_I;
  f.S_Spin = 0.5 * eta_S3 * s.sigma_Spin;
  f.S_ISpin = 0.5 * std::sqrt(kHbar * m * eta_S3 / (2.0 * kappa_Ic * Theta)) *
              (t.ell / t.chi) * s.sigma_ISpin;
  return f;
}

std::complex<double> optimal_weight(std::complex<double> S_ISpin,
                                    double S_Spin) {
  if (!(S_Spin > 0.0))
    throw std::domain_error("optimal_weight: S_Spin must be positive");
  return -S_ISpin / S_Spin;
}

double sql_position_psd(double m, double Omega) {
  if (Omega == 0.0)
    throw std::domain_error("sql_position_psd: singular at Omega = 0");
  if (!(m > 0.0)) throw std::invalid_argument("sql_position_psd: m must be positive");
  return kHbar / (m * Omega * Omega);
}

double hybrid_position_psd(double /*Omega*/, const InterferometerParams& ifo,
                           const SigmaSet& s, const TransferSet& t) {
  const double combo =
      s.sigma_I - std::norm(s.sigma_ISpin) / s.sigma_Spin;
  return kHbar * std::norm(t.ell) /
         (4.0 * ifo.kappa_coupling() * ifo.normalized_power_Theta() *
          ifo.mirror_mass_m) *
         combo;
}

double hybrid_position_psd(double Omega, const InterferometerParams& ifo,
                           const SpinParams& spin,
                           const SqueezeParams& squeeze) {
  const TransferSet t = transfer_at(Omega, ifo, spin);
  const InputSpectra in =
      input_spectra(squeeze.squeeze_factor_r, ifo.input_efficiency_eta_I1,
                    spin.input_efficiency_eta_S1);
  const SigmaSet s = sigma_set(Omega, ifo, spin, in, t);
  return hybrid_position_psd(Omega, ifo, s, t);
}

double interferometer_only_position_psd(double Omega,
                                        const InterferometerParams& ifo,
                                        double r_effective) {
  const CavityFactors cf = interferometer_factors(
      Omega, ifo.half_bandwidth_kappa_I, ifo.kappa_coupling(), ifo.kappa_loss());
  const double chi = free_mass_susceptibility(Omega);
  const double eta_I1 = ifo.input_efficiency_eta_I1;
  const double eta_I3 = ifo.output_efficiency_eta_I3;
  const double kappa_Ic = ifo.kappa_coupling();
  const double Theta = ifo.normalized_power_Theta();
  const double abs_ell2 = std::norm(cf.ell);

  // phase-squeezed single-mode input: sine at e^{-2r}/2, cosine at e^{+2r}/2
  const double shot =
      std::norm(cf.R_I) * (eta_I1 * std::exp(-2.0 * r_effective) + 1.0 - eta_I1);
  const double qba = 4.0 * kappa_Ic * kappa_Ic * Theta * Theta * chi * chi /
                     (abs_ell2 * abs_ell2) *
                     (eta_I1 * std::exp(2.0 * r_effective) + 1.0 - eta_I1);
  const double internal =
      std::norm(cf.T_I) * (1.0 + Theta * Theta * chi * chi / abs_ell2);
  const double sigma = shot + qba + internal + (1.0 - eta_I3) / eta_I3;

  return kHbar * abs_ell2 * sigma /
         (4.0 * kappa_Ic * Theta * ifo.mirror_mass_m);
}

double leading_order_residual(double Omega, const InterferometerParams& ifo,
                              const SpinParams& spin, double r) {
  if (!(r > 0.0))
    throw std::invalid_argument("leading_order_residual: r must be positive");
  const TransferSet t = transfer_at(Omega, ifo, spin);
  const double eta_I2 = ifo.eta_I2();
  const double eta_S2 = spin.eta_S2();
  const double kappa_I = ifo.half_bandwidth_kappa_I;
  const double Theta = ifo.normalized_power_Theta();
  const double theta = spin.theta();

  const std::complex<double> num =
      t.R_S * eta_I2 * kappa_I * Theta * t.chi / (t.ell * t.ell) +
      t.R_I * eta_S2 * theta * t.chi_S;
  const double den =
      t.R_S * t.R_S + 4.0 * eta_S2 * eta_S2 * theta * theta * std::norm(t.chi_S);
  // |uq + vp|^2 = 4 |num|^2 with u = R_I, v = 2 eta_I2 kappa_I Theta chi/ell^2,
  // p = R_S, q = 2 eta_S2 theta chi_S
  return 0.5 * ifo.input_efficiency_eta_I1 * std::exp(2.0 * r) * 4.0 *
         std::norm(num) / den;
}

} // namespace qnb
