// AVX2 sweep kernel: four frequencies per iteration, same formulas as
// sweep_scalar. Compiled with -mavx2 -mfma; selected at runtime only when
// the CPU reports both features.

#include "qnb/sweep.hpp"

#if defined(QNB_HAVE_AVX2)

#include <immintrin.h>

#include <stdexcept>

namespace qnb::detail {

namespace {

inline __m256d abs_pd(__m256d x) {
  const __m256d sign_mask = _mm256_set1_pd(-0.0);
  return _mm256_andnot_pd(sign_mask, x);
}

struct Packed {
  const SweepConstants& c;

  __m256d two_pi = _mm256_set1_pd(kTwoPi);
  __m256d one = _mm256_set1_pd(1.0);
  __m256d two = _mm256_set1_pd(2.0);
  __m256d kI, kI2, kIc, tkmk, tkmk2, Theta, gS, D_re_const, qs;
  __m256d qba_I_coef, qba_ref_coef, TI2_coef;
  __m256d rho_I, rho_S, rho_IS2;
  __m256d eta_I1, eta_I2, inv_eta_I3, out_loss_I3, eta_S2;
  __m256d R_S, RS2rhoS, spin_qba_coef, spin_zp_coef;
  __m256d exp_m2r, exp_p2r, one_m_eta_I1, prefactor, sql_num;

  explicit Packed(const SweepConstants& cc) : c(cc) {
    kI = _mm256_set1_pd(c.kappa_I);
    kI2 = _mm256_set1_pd(c.kappa_I * c.kappa_I);
    kIc = _mm256_set1_pd(c.kappa_Ic);
    const double t = 2.0 * c.kappa_Ic - c.kappa_I;
    tkmk = _mm256_set1_pd(t);
    tkmk2 = _mm256_set1_pd(t * t);
    Theta = _mm256_set1_pd(c.Theta);
    gS = _mm256_set1_pd(c.gamma_S);
    D_re_const = _mm256_set1_pd(c.gamma_S * c.gamma_S + c.Omega_S * c.Omega_S);
    qs = _mm256_set1_pd(2.0 * c.eta_S2 * c.theta);
    qba_I_coef = _mm256_set1_pd(4.0 * c.eta_I2 * c.kappa_I * c.kappa_I *
                                c.Theta * c.Theta);
    qba_ref_coef =
        _mm256_set1_pd(4.0 * c.kappa_Ic * c.kappa_Ic * c.Theta * c.Theta);
    TI2_coef = _mm256_set1_pd(4.0 * c.kappa_Ic * c.kappa_Il);
    rho_I = _mm256_set1_pd(c.rho_I);
    rho_S = _mm256_set1_pd(c.rho_S);
    rho_IS2 = _mm256_set1_pd(c.rho_IS * c.rho_IS);
    eta_I1 = _mm256_set1_pd(c.eta_I1);
    eta_I2 = _mm256_set1_pd(c.eta_I2);
    inv_eta_I3 = _mm256_set1_pd(c.inv_eta_I3);
    out_loss_I3 = _mm256_set1_pd(c.one_minus_eta_I3_over_eta_I3);
    eta_S2 = _mm256_set1_pd(c.eta_S2);
    R_S = _mm256_set1_pd(c.R_S);
    RS2rhoS = _mm256_set1_pd(c.R_S * c.R_S * c.rho_S + c.inv_eta_S3);
    spin_qba_coef = _mm256_set1_pd(4.0 * c.eta_S2 * c.theta * c.theta);
    spin_zp_coef = _mm256_set1_pd(4.0 * c.eta_S2 * c.theta);
    exp_m2r = _mm256_set1_pd(c.exp_m2r_ref);
    exp_p2r = _mm256_set1_pd(c.exp_p2r_ref);
    one_m_eta_I1 = _mm256_set1_pd(1.0 - c.eta_I1);
    prefactor = _mm256_set1_pd(c.prefactor);
    sql_num = _mm256_set1_pd(kHbar / c.mass);
  }

  // one block of four frequencies; returns false on a spin-resonance hit
  bool block(const double* f, double* S_sql, double* S_ifo, double* S_hybrid,
             double* abs_chi, double* abs_chi_S) const {
    const __m256d fv = _mm256_loadu_pd(f);
    const __m256d Om = _mm256_mul_pd(two_pi, fv);
    const __m256d Om2 = _mm256_mul_pd(Om, Om);
    const __m256d inv_Om2 = _mm256_div_pd(one, Om2);

    const __m256d abs_ell2 = _mm256_add_pd(kI2, Om2);
    const __m256d ell2_re = _mm256_sub_pd(kI2, Om2);
    const __m256d ell2_im =
        _mm256_mul_pd(_mm256_set1_pd(-2.0), _mm256_mul_pd(kI, Om));
    const __m256d abs_ell4 = _mm256_mul_pd(abs_ell2, abs_ell2);

    const __m256d chi = _mm256_sub_pd(_mm256_setzero_pd(), inv_Om2);
    const __m256d chi2 = _mm256_mul_pd(chi, chi);

    // R_I = (2 kappa_Ic - ell)/ell
    const __m256d RI_re =
        _mm256_div_pd(_mm256_fmsub_pd(tkmk, kI, Om2), abs_ell2);
    const __m256d RI_im =
        _mm256_div_pd(_mm256_mul_pd(two, _mm256_mul_pd(kIc, Om)), abs_ell2);
    const __m256d abs_RI2 = _mm256_div_pd(_mm256_add_pd(tkmk2, Om2), abs_ell2);

    // v = 2 kappa_Ic Theta chi / ell^2
    const __m256d vnum =
        _mm256_mul_pd(_mm256_mul_pd(two, _mm256_mul_pd(kIc, Theta)), chi);
    const __m256d v_re = _mm256_div_pd(_mm256_mul_pd(vnum, ell2_re), abs_ell4);
    const __m256d v_im = _mm256_sub_pd(
        _mm256_setzero_pd(),
        _mm256_div_pd(_mm256_mul_pd(vnum, ell2_im), abs_ell4));

    // chi_S = -1/D, D = (gamma_S - i Omega)^2 + Omega_S^2
    const __m256d D_re = _mm256_sub_pd(D_re_const, Om2);
    const __m256d D_im =
        _mm256_mul_pd(_mm256_set1_pd(-2.0), _mm256_mul_pd(gS, Om));
    const __m256d abs_D2 =
        _mm256_fmadd_pd(D_re, D_re, _mm256_mul_pd(D_im, D_im));
    if (_mm256_movemask_pd(_mm256_cmp_pd(abs_D2, _mm256_setzero_pd(),
                                         _CMP_EQ_OQ)) != 0)
      return false;
    const __m256d inv_abs_D2 = _mm256_div_pd(one, abs_D2);
    const __m256d chiS_re =
        _mm256_sub_pd(_mm256_setzero_pd(), _mm256_mul_pd(D_re, inv_abs_D2));
    const __m256d chiS_im = _mm256_mul_pd(D_im, inv_abs_D2);

    const __m256d q_re = _mm256_mul_pd(qs, chiS_re);
    const __m256d q_im = _mm256_mul_pd(qs, chiS_im);

    // sigma_I
    const __m256d qba2 =
        _mm256_div_pd(_mm256_mul_pd(qba_I_coef, chi2), abs_ell4);
    const __m256d sigma_I = _mm256_add_pd(
        _mm256_fmadd_pd(abs_RI2, rho_I, inv_eta_I3),
        _mm256_mul_pd(qba2, _mm256_fmadd_pd(eta_I2, rho_I, one)));

    // sigma_Spin
    const __m256d spin_qba =
        _mm256_mul_pd(_mm256_mul_pd(spin_qba_coef, inv_abs_D2),
                      _mm256_fmadd_pd(eta_S2, rho_S, one));
    const __m256d spin_zp = _mm256_mul_pd(spin_zp_coef, abs_pd(chiS_im));
    const __m256d sigma_Spin =
        _mm256_add_pd(_mm256_add_pd(RS2rhoS, spin_qba), spin_zp);

    // w = -R_I R_S + v conj(q)
    const __m256d w_re = _mm256_fmadd_pd(
        v_im, q_im, _mm256_fmsub_pd(v_re, q_re, _mm256_mul_pd(RI_re, R_S)));
    const __m256d w_im =
        _mm256_sub_pd(_mm256_fmsub_pd(v_im, q_re, _mm256_mul_pd(v_re, q_im)),
                      _mm256_mul_pd(RI_im, R_S));
    const __m256d abs_w2 =
        _mm256_fmadd_pd(w_re, w_re, _mm256_mul_pd(w_im, w_im));
    const __m256d abs_sIS2 = _mm256_mul_pd(abs_w2, rho_IS2);

    const __m256d combo =
        _mm256_sub_pd(sigma_I, _mm256_div_pd(abs_sIS2, sigma_Spin));
    _mm256_storeu_pd(S_hybrid,
                     _mm256_mul_pd(_mm256_mul_pd(prefactor, abs_ell2), combo));

    // interferometer-only reference
    const __m256d shot =
        _mm256_mul_pd(abs_RI2, _mm256_fmadd_pd(eta_I1, exp_m2r, one_m_eta_I1));
    const __m256d qba_ref = _mm256_mul_pd(
        _mm256_div_pd(_mm256_mul_pd(qba_ref_coef, chi2), abs_ell4),
        _mm256_fmadd_pd(eta_I1, exp_p2r, one_m_eta_I1));
    const __m256d TI2 = _mm256_div_pd(TI2_coef, abs_ell2);
    const __m256d internal = _mm256_mul_pd(
        TI2, _mm256_fmadd_pd(_mm256_mul_pd(Theta, Theta),
                             _mm256_div_pd(chi2, abs_ell2), one));
    const __m256d sigma_ifo = _mm256_add_pd(
        _mm256_add_pd(shot, qba_ref), _mm256_add_pd(internal, out_loss_I3));
    _mm256_storeu_pd(
        S_ifo, _mm256_mul_pd(_mm256_mul_pd(prefactor, abs_ell2), sigma_ifo));

    _mm256_storeu_pd(S_sql, _mm256_mul_pd(sql_num, inv_Om2));
    _mm256_storeu_pd(abs_chi, inv_Om2);
    _mm256_storeu_pd(abs_chi_S,
                     _mm256_div_pd(one, _mm256_sqrt_pd(abs_D2)));
    return true;
  }
};

[[noreturn]] void throw_singular() {
  throw std::domain_error(
      "sweep: spin susceptibility singular on the grid (gamma_S = 0, "
      "Omega = Omega_S)");
}

} // namespace

void sweep_avx2(const SweepConstants& c, const double* f_hz, int n,
                double* S_sql, double* S_ifo, double* S_hybrid,
                double* abs_chi, double* abs_chi_S) {
  const Packed p(c);
  int i = 0;
  for (; i + 4 <= n; i += 4) {
    if (!p.block(f_hz + i, S_sql + i, S_ifo + i, S_hybrid + i, abs_chi + i,
                 abs_chi_S + i))
      throw_singular();
  }
  if (i < n) {
    double f[4], a[4], b[4], h[4], x[4], y[4];
    for (int k = 0; k < 4; ++k) f[k] = f_hz[k + i < n ? k + i : n - 1];
    if (!p.block(f, a, b, h, x, y)) throw_singular();
    for (int k = 0; i + k < n; ++k) {
      S_sql[i + k] = a[k];
      S_ifo[i + k] = b[k];
      S_hybrid[i + k] = h[k];
      abs_chi[i + k] = x[k];
      abs_chi_S[i + k] = y[k];
    }
  }
}

} // namespace qnb::detail

#endif // QNB_HAVE_AVX2
