#include "qnb/sweep.hpp"

#include <cmath>
#include <stdexcept>

#include "qnb/noise.hpp"
#include "qnb/response.hpp"

namespace qnb {

const char* kernel_name(SweepKernel k) {
  switch (k) {
    case SweepKernel::kScalar: return "scalar";
    case SweepKernel::kAvx2: return "avx2";
    case SweepKernel::kAuto: return "auto";
  }
  return "?";
}

bool avx2_kernel_available() {
#if defined(QNB_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

namespace detail {

SweepConstants make_sweep_constants(const ScenarioParams& p,
                                    double r_ifo_reference) {
  p.validate();
  SweepConstants c;
  c.kappa_I = p.ifo.half_bandwidth_kappa_I;
  c.kappa_Ic = p.ifo.kappa_coupling();
  c.kappa_Il = p.ifo.kappa_loss();
  c.Theta = p.ifo.normalized_power_Theta();
  c.mass = p.ifo.mirror_mass_m;
  c.eta_I1 = p.ifo.input_efficiency_eta_I1;
  c.eta_I2 = p.ifo.eta_I2();
  c.inv_eta_I3 = 1.0 / p.ifo.output_efficiency_eta_I3;
  c.one_minus_eta_I3_over_eta_I3 =
      (1.0 - p.ifo.output_efficiency_eta_I3) / p.ifo.output_efficiency_eta_I3;
  c.Omega_S = p.spin.larmor_Omega_S;
  c.gamma_S = p.spin.linewidth_gamma_S;
  c.theta = p.spin.theta();
  c.eta_S2 = p.spin.eta_S2();
  const SpinCavityFactors sf =
      spin_cavity_factors(p.spin.coupling_T_S, p.spin.intracavity_loss_A_S);
  c.R_S = sf.R_S;
  c.T_S_factor2 = sf.T_S_factor * sf.T_S_factor;
  c.inv_eta_S3 = 1.0 / p.spin.output_efficiency_eta_S3;
  const InputSpectra in =
      input_spectra(p.squeeze.squeeze_factor_r, c.eta_I1,
                    p.spin.input_efficiency_eta_S1);
  c.rho_I = in.rho_I;
  c.rho_S = in.rho_S;
  c.rho_IS = in.rho_IS;
  c.exp_p2r_ref = std::exp(2.0 * r_ifo_reference);
  c.exp_m2r_ref = std::exp(-2.0 * r_ifo_reference);
  c.prefactor = kHbar / (4.0 * c.kappa_Ic * c.Theta * c.mass);
  return c;
}

} // namespace detail

NoiseSpectrum sweep(const ScenarioParams& p, const FrequencyGrid& grid,
                    SweepKernel kernel, double r_ifo_reference) {
  const detail::SweepConstants c =
      detail::make_sweep_constants(p, r_ifo_reference);
  NoiseSpectrum out;
  out.f_hz = grid.frequencies();
  const int n = static_cast<int>(out.f_hz.size());
  out.S_sql_x.resize(n);
  out.S_ifo_x.resize(n);
  out.S_hybrid_x.resize(n);
  out.gain_db.resize(n);
  out.abs_chi.resize(n);
  out.abs_chi_S.resize(n);

  SweepKernel chosen = kernel;
  if (chosen == SweepKernel::kAuto)
    chosen = avx2_kernel_available() ? SweepKernel::kAvx2 : SweepKernel::kScalar;

  if (chosen == SweepKernel::kAvx2) {
#if defined(QNB_HAVE_AVX2)
    if (!avx2_kernel_available())
      throw std::runtime_error("sweep: AVX2 kernel not supported on this CPU");
    detail::sweep_avx2(c, out.f_hz.data(), n, out.S_sql_x.data(),
                       out.S_ifo_x.data(), out.S_hybrid_x.data(),
                       out.abs_chi.data(), out.abs_chi_S.data());
#else
    throw std::runtime_error("sweep: AVX2 kernel not compiled in");
#endif
  } else {
    detail::sweep_scalar(c, out.f_hz.data(), n, out.S_sql_x.data(),
                         out.S_ifo_x.data(), out.S_hybrid_x.data(),
                         out.abs_chi.data(), out.abs_chi_S.data());
  }

  for (int i = 0; i < n; ++i)
    out.gain_db[i] = 10.0 * std::log10(out.S_ifo_x[i] / out.S_hybrid_x[i]);
  return out;
}

PointDensities densities_at(double f_hz, const ScenarioParams& p,
                            double r_ifo_reference) {
  const double Omega = kTwoPi * f_hz;
  const TransferSet t = transfer_at(Omega, p.ifo, p.spin);
  const InputSpectra in =
      input_spectra(p.squeeze.squeeze_factor_r, p.ifo.input_efficiency_eta_I1,
                    p.spin.input_efficiency_eta_S1);
  const SigmaSet s = sigma_set(Omega, p.ifo, p.spin, in, t);
  PointDensities d;
  d.S_sql = sql_position_psd(p.ifo.mirror_mass_m, Omega);
  d.S_ifo = interferometer_only_position_psd(Omega, p.ifo, r_ifo_reference);
  d.S_hybrid = hybrid_position_psd(Omega, p.ifo, s, t);
  d.abs_chi = std::abs(t.chi);
  d.abs_chi_S = std::abs(t.chi_S);
  return d;
}

} // namespace qnb
