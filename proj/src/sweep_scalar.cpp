#include <cmath>
#include <stdexcept>

#include "qnb/sweep.hpp"

namespace qnb::detail {

// Reference kernel: straight-line transcription of the closed-form spectral
// densities, one frequency at a time. The AVX2 variant mirrors this math and
// is equivalence-tested against it.
void sweep_scalar(const SweepConstants& c, const double* f_hz, int n,
                  double* S_sql, double* S_ifo, double* S_hybrid,
                  double* abs_chi, double* abs_chi_S) {
  for (int i = 0; i < n; ++i) {
    const double Omega = kTwoPi * f_hz[i];
    const double Omega2 = Omega * Omega;

    // ell = kappa_I - i Omega
    const double abs_ell2 = c.kappa_I * c.kappa_I + Omega2;
    const double ell2_re = c.kappa_I * c.kappa_I - Omega2;
    const double ell2_im = -2.0 * c.kappa_I * Omega;
    const double abs_ell4 = abs_ell2 * abs_ell2;

    const double chi = -1.0 / Omega2;
    const double chi2 = chi * chi;

    // R_I = (2 kappa_Ic - ell)/ell
    const double tkmk = 2.0 * c.kappa_Ic - c.kappa_I;
    const double RI_re = (tkmk * c.kappa_I - Omega2) / abs_ell2;
    const double RI_im = 2.0 * c.kappa_Ic * Omega / abs_ell2;
    const double abs_RI2 = (tkmk * tkmk + Omega2) / abs_ell2;

    // v = 2 kappa_Ic Theta chi / ell^2
    const double vnum = 2.0 * c.kappa_Ic * c.Theta * chi;
    const double v_re = vnum * ell2_re / abs_ell4;
    const double v_im = -vnum * ell2_im / abs_ell4;

    // chi_S = -1/D, D = (gamma_S - i Omega)^2 + Omega_S^2
    const double D_re = c.gamma_S * c.gamma_S - Omega2 + c.Omega_S * c.Omega_S;
    const double D_im = -2.0 * c.gamma_S * Omega;
    const double abs_D2 = D_re * D_re + D_im * D_im;
    if (abs_D2 == 0.0)
      throw std::domain_error(
          "sweep: spin susceptibility singular on the grid (gamma_S = 0, "
          "Omega = Omega_S)");
    const double chiS_re = -D_re / abs_D2;
    const double chiS_im = D_im / abs_D2;
    const double abs_chiS2 = 1.0 / abs_D2;

    // q = 2 eta_S2 theta chi_S
    const double qs = 2.0 * c.eta_S2 * c.theta;
    const double q_re = qs * chiS_re;
    const double q_im = qs * chiS_im;

    const double qba2 =
        4.0 * c.eta_I2 * c.kappa_I * c.kappa_I * c.Theta * c.Theta * chi2 /
        abs_ell4;
    const double sigma_I =
        abs_RI2 * c.rho_I + c.inv_eta_I3 + qba2 * (c.eta_I2 * c.rho_I + 1.0);

    const double sigma_Spin =
        c.R_S * c.R_S * c.rho_S + c.inv_eta_S3 +
        4.0 * c.eta_S2 * c.theta * c.theta * abs_chiS2 *
            (c.eta_S2 * c.rho_S + 1.0) +
        4.0 * c.eta_S2 * c.theta * std::fabs(chiS_im);

    // sigma_ISpin/rho_IS = -R_I R_S + v conj(q)
    const double w_re = -RI_re * c.R_S + (v_re * q_re + v_im * q_im);
    const double w_im = -RI_im * c.R_S + (v_im * q_re - v_re * q_im);
    const double abs_sigma_IS2 =
        (w_re * w_re + w_im * w_im) * c.rho_IS * c.rho_IS;

    const double combo = sigma_I - abs_sigma_IS2 / sigma_Spin;
    S_hybrid[i] = c.prefactor * abs_ell2 * combo;

    // spin channel ignored, single-mode squeezing at the reference r
    const double shot =
        abs_RI2 * (c.eta_I1 * c.exp_m2r_ref + 1.0 - c.eta_I1);
    const double qba_ref = 4.0 * c.kappa_Ic * c.kappa_Ic * c.Theta * c.Theta *
                           chi2 / abs_ell4 *
                           (c.eta_I1 * c.exp_p2r_ref + 1.0 - c.eta_I1);
    const double TI2 = 4.0 * c.kappa_Ic * c.kappa_Il / abs_ell2;
    const double internal = TI2 * (1.0 + c.Theta * c.Theta * chi2 / abs_ell2);
    const double sigma_ifo =
        shot + qba_ref + internal + c.one_minus_eta_I3_over_eta_I3;
    S_ifo[i] = c.prefactor * abs_ell2 * sigma_ifo;

    S_sql[i] = kHbar / (c.mass * Omega2);
    abs_chi[i] = 1.0 / Omega2;
    abs_chi_S[i] = 1.0 / std::sqrt(abs_D2);
  }
}

} // namespace qnb::detail
