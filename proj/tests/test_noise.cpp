#include <doctest.h>

#include <cmath>
#include <complex>

#include "qnb/noise.hpp"
#include "test_support.hpp"

using namespace qnb;
using cd = std::complex<double>;

namespace {

SigmaSet sigmas_for(const ScenarioParams& p, double Om) {
  const TransferSet t = transfer_at(Om, p.ifo, p.spin);
  const InputSpectra in =
      input_spectra(p.squeeze.squeeze_factor_r, p.ifo.input_efficiency_eta_I1,
                    p.spin.input_efficiency_eta_S1);
  return sigma_set(Om, p.ifo, p.spin, in, t);
}

} // namespace

TEST_CASE("input spectra") {
  const InputSpectra vac = input_spectra(0.0, 0.975, 0.975);
  CHECK(vac.rho_I == 0.0);
  CHECK(vac.rho_S == 0.0);
  CHECK(vac.rho_IS == 0.0);

  // e^{2r} = 15: rho_IS = sinh 2r = (15 - 1/15)/2 = 112/15
  const double r = 0.5 * std::log(15.0);
  const InputSpectra full = input_spectra(r, 1.0, 1.0);
  CHECK(full.rho_IS == doctest::Approx(112.0 / 15.0).epsilon(1e-14));
  CHECK(full.rho_I == doctest::Approx(full.rho_S).epsilon(1e-15));
  // exact two-mode-squeezed marginals: rho + 1 = cosh 2r
  CHECK(full.rho_I + 1.0 == doctest::Approx(113.0 / 15.0).epsilon(1e-14));

  const InputSpectra scaled = input_spectra(r, 0.975, 1.0);
  CHECK(scaled.rho_I == doctest::Approx(0.975 * full.rho_I).epsilon(1e-14));

  CHECK_THROWS_AS(input_spectra(-0.1, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(input_spectra(1.0, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("sigma set limiting forms") {
  SUBCASE("vacuum input, lossless: shot + back-action only") {
    ScenarioParams p = remove_losses(advanced_ligo_preset(), true);
    p.squeeze.squeeze_factor_r = 0.0;
    const double Om = kTwoPi * 100.0;
    const TransferSet t = transfer_at(Om, p.ifo, p.spin);
    const SigmaSet s = sigmas_for(p, Om);
    const double kappa = p.ifo.half_bandwidth_kappa_I;
    const double Theta = p.ifo.normalized_power_Theta();
    const double expected = 1.0 + 4.0 * kappa * kappa * Theta * Theta * t.chi *
                                      t.chi / std::norm(t.ell * t.ell);
    CHECK(s.sigma_I == doctest::Approx(expected).epsilon(1e-13));
    CHECK(std::abs(s.sigma_ISpin) == 0.0);
  }

  SUBCASE("decoupled spin: sigma_Spin = R_S^2 rho_S + 1/eta_S3") {
    ScenarioParams p = advanced_ligo_preset();
    p.spin.readout_rate_Gamma_S = 1e-300; // theta -> 0
    const double Om = kTwoPi * 50.0;
    const TransferSet t = transfer_at(Om, p.ifo, p.spin);
    const InputSpectra in = input_spectra(p.squeeze.squeeze_factor_r,
                                          p.ifo.input_efficiency_eta_I1,
                                          p.spin.input_efficiency_eta_S1);
    const SigmaSet s = sigma_set(Om, p.ifo, p.spin, in, t);
    CHECK(s.sigma_Spin ==
          doctest::Approx(t.R_S * t.R_S * in.rho_S +
                          1.0 / p.spin.output_efficiency_eta_S3)
              .epsilon(1e-13));
  }
}

TEST_CASE("force psds") {
  const ScenarioParams p = advanced_ligo_preset();
  const double Om = kTwoPi * 100.0;
  const TransferSet t = transfer_at(Om, p.ifo, p.spin);

  SUBCASE("no cross-correlation, no cross density") {
    SigmaSet s = sigmas_for(p, Om);
    s.sigma_ISpin = 0.0;
    const ForcePsds f = force_psds(Om, s, p.ifo, p.spin, t);
    CHECK(std::abs(f.S_ISpin) == 0.0);
    CHECK(f.S_I > 0.0);
    CHECK(f.S_Spin > 0.0);
  }

  SUBCASE("S_I carries the closed-form prefactor") {
    const SigmaSet s = sigmas_for(p, Om);
    const ForcePsds f = force_psds(Om, s, p.ifo, p.spin, t);
    const double pref = kHbar * p.ifo.mirror_mass_m * std::norm(t.ell) /
                        (4.0 * p.ifo.kappa_coupling() *
                         p.ifo.normalized_power_Theta() * t.chi * t.chi);
    CHECK(f.S_I == doctest::Approx(pref * s.sigma_I).epsilon(1e-14));
    CHECK(f.S_Spin ==
          doctest::Approx(0.5 * p.spin.output_efficiency_eta_S3 * s.sigma_Spin)
              .epsilon(1e-14));
  }
}

TEST_CASE("optimal weight") {
  CHECK(optimal_weight(cd(0.0, 0.0), 2.0) == cd(0.0, 0.0));
  CHECK_THROWS_AS(optimal_weight(cd(1.0, 0.0), 0.0), std::domain_error);

  SUBCASE("reduces to tanh 2r in the lossless in-band matched limit") {
    ScenarioParams p = remove_losses(advanced_ligo_preset(), true);
    p.squeeze.squeeze_factor_r = 0.5 * std::log(15.0);
    const double Om = kTwoPi * 50.0;
    const TransferSet t = transfer_at(Om, p.ifo, p.spin);
    const SigmaSet s = sigmas_for(p, Om);
    const ForcePsds f = force_psds(Om, s, p.ifo, p.spin, t);
    const cd alpha = optimal_weight(f.S_ISpin, f.S_Spin);
    // refer the force weight back to the detector output
    const cd w = alpha *
                 std::sqrt(2.0 * p.ifo.kappa_coupling() *
                           p.ifo.normalized_power_Theta() *
                           p.ifo.output_efficiency_eta_I3 /
                           (kHbar * p.ifo.mirror_mass_m)) *
                 (t.chi / t.ell);
    CHECK(std::abs(std::abs(w) / p.squeeze.tanh2r() - 1.0) < 0.01);
  }

  // e^{2r} = 15: tanh 2r = 224/226
  SqueezeParams sq{0.5 * std::log(15.0)};
  CHECK(sq.tanh2r() == doctest::Approx(224.0 / 226.0).epsilon(1e-14));
}

TEST_CASE("sql position density") {
  // hbar/(m Omega^2) at 100 Hz, 40 kg
  const double S = sql_position_psd(40.0, kTwoPi * 100.0);
  CHECK(S == doctest::Approx(6.678163e-42).epsilon(1e-6));
  CHECK(std::sqrt(S) == doctest::Approx(2.584214e-21).epsilon(1e-6));
  // 1/Omega^2 scaling
  CHECK(sql_position_psd(40.0, 2.0 * kTwoPi * 100.0) ==
        doctest::Approx(S / 4.0).epsilon(1e-14));
  // force form relates by (m Omega^2)^2
  const double Om = kTwoPi * 100.0;
  const double SF = kHbar * 40.0 * Om * Om;
  CHECK(SF / std::pow(40.0 * Om * Om, 2) == doctest::Approx(S).epsilon(1e-14));
  CHECK_THROWS_AS(sql_position_psd(40.0, 0.0), std::domain_error);
}

TEST_CASE("hybrid equals interferometer-only when r = 0") {
  test::Rng rng(23);
  for (int i = 0; i < 20; ++i) {
    ScenarioParams p = test::random_scenario(rng);
    p.squeeze.squeeze_factor_r = 0.0;
    const double Om = kTwoPi * test::random_frequency_hz(rng);
    const double h = hybrid_position_psd(Om, p.ifo, p.spin, p.squeeze);
    const double s = interferometer_only_position_psd(Om, p.ifo, 0.0);
    CHECK(h == doctest::Approx(s).epsilon(1e-12));
  }
}

TEST_CASE("lossless matched suppression approaches cosh 2r") {
  ScenarioParams p = remove_losses(advanced_ligo_preset(), true);
  p.squeeze.squeeze_factor_r = 0.5 * std::log(15.0);
  const double Om = kTwoPi * 100.0;
  const double hybrid = hybrid_position_psd(Om, p.ifo, p.spin, p.squeeze);
  const double vacuum_ifo = interferometer_only_position_psd(Om, p.ifo, 0.0);
  const double ratio = vacuum_ifo / hybrid;
  CHECK(ratio == doctest::Approx(7.45598).epsilon(1e-4)); // frozen value
  CHECK(std::abs(ratio / (113.0 / 15.0) - 1.0) < 0.02);
}

TEST_CASE("interferometer-only curve touches the SQL from above") {
  ScenarioParams p = remove_losses(advanced_ligo_preset(), true);
  const FrequencyGrid grid{1.0, 1e4, 1000};
  double min_ratio = 1e300;
  double prev_ratio = 0.0;
  bool monotone_above_touch = true;
  double min_f = 0.0;
  const std::vector<double> fs = grid.frequencies();
  for (double f : fs) {
    const double Om = kTwoPi * f;
    const double ratio = interferometer_only_position_psd(Om, p.ifo, 0.0) /
                         sql_position_psd(p.ifo.mirror_mass_m, Om);
    if (ratio < min_ratio) {
      min_ratio = ratio;
      min_f = f;
    }
  }
  CHECK(min_ratio >= 1.0);
  CHECK(min_ratio < 1.01);
  // rises monotonically well above the touch frequency
  for (double f : fs) {
    if (f < 2.0 * min_f) continue;
    const double Om = kTwoPi * f;
    const double ratio = interferometer_only_position_psd(Om, p.ifo, 0.0) /
                         sql_position_psd(p.ifo.mirror_mass_m, Om);
    if (prev_ratio > 0.0 && ratio < prev_ratio) monotone_above_touch = false;
    prev_ratio = ratio;
  }
  CHECK(monotone_above_touch);
}

TEST_CASE("sql bound holds without entanglement, lossless or lossy") {
  for (bool lossless : {true, false}) {
    ScenarioParams p = advanced_ligo_preset();
    if (lossless) p = remove_losses(p, true);
    for (double f : FrequencyGrid{1.0, 1e4, 200}.frequencies()) {
      const double Om = kTwoPi * f;
      CHECK(interferometer_only_position_psd(Om, p.ifo, 0.0) /
                sql_position_psd(p.ifo.mirror_mass_m, Om) >=
            1.0);
    }
  }
}

TEST_CASE("suppression ceiling in the lossless matched band") {
  ScenarioParams p = remove_losses(advanced_ligo_preset(), true);
  p.squeeze.squeeze_factor_r = 0.5 * std::log(15.0);
  const double ceiling = p.squeeze.cosh2r() * (1.0 + 1e-9);
  for (double f : FrequencyGrid{1.0, 50.0, 100}.frequencies()) {
    const double Om = kTwoPi * f;
    const double ratio = interferometer_only_position_psd(Om, p.ifo, 0.0) /
                         hybrid_position_psd(Om, p.ifo, p.spin, p.squeeze);
    CHECK(ratio <= ceiling);
  }
}

TEST_CASE("cross-spectrum bound |sigma_ISpin|^2 <= sigma_I sigma_Spin") {
  test::Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    const ScenarioParams p = test::random_scenario(rng);
    const double Om = kTwoPi * test::random_frequency_hz(rng);
    const SigmaSet s = sigmas_for(p, Om);
    CHECK(std::norm(s.sigma_ISpin) <=
          s.sigma_I * s.sigma_Spin * (1.0 + 1e-12));
  }
}

TEST_CASE("densities are real, positive, and even in Omega") {
  test::Rng rng(37);
  for (int i = 0; i < 30; ++i) {
    const ScenarioParams p = test::random_scenario(rng);
    const double Om = kTwoPi * test::random_frequency_hz(rng);
    const double a = hybrid_position_psd(Om, p.ifo, p.spin, p.squeeze);
    const double b = hybrid_position_psd(-Om, p.ifo, p.spin, p.squeeze);
    CHECK(a > 0.0);
    CHECK(b == doctest::Approx(a).epsilon(1e-13));
  }
}

TEST_CASE("optimal weight is a strict variance minimum") {
  test::Rng rng(41);
  for (int i = 0; i < 50; ++i) {
    const ScenarioParams p = test::random_scenario(rng);
    const double Om = kTwoPi * test::random_frequency_hz(rng);
    const TransferSet t = transfer_at(Om, p.ifo, p.spin);
    const SigmaSet s = sigmas_for(p, Om);
    const ForcePsds f = force_psds(Om, s, p.ifo, p.spin, t);
    const cd a0 = optimal_weight(f.S_ISpin, f.S_Spin);
    auto S_of = [&](cd a) {
      return f.S_I + 2.0 * (std::conj(a) * f.S_ISpin).real() +
             std::norm(a) * f.S_Spin;
    };
    const double base = S_of(a0);
    for (cd a : {a0 * 1.001, a0 * 0.999, a0 * std::polar(1.0, 0.1),
                 a0 * std::polar(1.0, -0.1)}) {
      CHECK(S_of(a) >= base * (1.0 - 1e-12));
    }
  }
}

TEST_CASE("more loss never helps the matched hybrid") {
  // On a balanced working point every loss knob degrades the combined
  // readout. (Detuned or anti-matched parameter sets can violate this:
  // attenuating entangled light that is adding noise can help.)
  for (const ScenarioParams& preset :
       {advanced_ligo_preset(), prototype_10m_preset()}) {
    for (double f : FrequencyGrid{5.0, 1000.0, 40}.frequencies()) {
      const double Om = kTwoPi * f;
      const double base =
          hybrid_position_psd(Om, preset.ifo, preset.spin, preset.squeeze);
      auto check_worse = [&](const ScenarioParams& q) {
        CHECK(hybrid_position_psd(Om, q.ifo, q.spin, q.squeeze) >=
              base * (1.0 - 1e-12));
      };
      ScenarioParams q = preset;
      q.ifo.roundtrip_loss_A_I *= 2.0;
      check_worse(q);
      q = preset;
      q.ifo.input_efficiency_eta_I1 -= 0.025;
      check_worse(q);
      q = preset;
      q.ifo.output_efficiency_eta_I3 -= 0.025;
      check_worse(q);
      q = preset;
      q.spin.input_efficiency_eta_S1 -= 0.025;
      check_worse(q);
      q = preset;
      q.spin.output_efficiency_eta_S3 -= 0.025;
      check_worse(q);
      q = preset;
      q.spin.intracavity_loss_A_S *= 1.5;
      check_worse(q);
    }
  }
}

TEST_CASE("leading-order residual") {
  SUBCASE("balanced, deep in band: residual is driven to zero") {
    // asymptotic window Omega_S, gamma_S << Omega << kappa_I
    ScenarioParams p = advanced_ligo_preset();
    p.ifo.half_bandwidth_kappa_I = kTwoPi * 3000.0;
    p.spin.larmor_Omega_S = kTwoPi * 0.01;
    p.spin.linewidth_gamma_S = kTwoPi * 0.01;
    const SpinDesign d = design_spin_system(
        p.ifo.normalized_power_Theta(), p.ifo.half_bandwidth_kappa_I,
        p.ifo.eta_I2(), p.spin.larmor_Omega_S, p.spin.linewidth_gamma_S,
        p.spin.intracavity_loss_A_S, 2000.0);
    p.spin.readout_rate_Gamma_S = d.Gamma_S_balanced;
    p.spin.coupling_T_S = d.T_S;
    const double Om = kTwoPi * 30.0;
    const double r = p.squeeze.squeeze_factor_r;
    const double lead = leading_order_residual(Om, p.ifo, p.spin, r);
    // compare against the e^{2r} shot-noise scale
    const double scale = 0.5 * std::exp(2.0 * r);
    CHECK(lead / scale < 1e-4);
  }

  SUBCASE("r = 3: matches the exact combination to O(e^{-2r}) of sigma_I") {
    test::Rng rng(47);
    const double r = 3.0;
    for (int i = 0; i < 300; ++i) {
      // validity regime: dominant coupler (A_S << T_S), spin near matched,
      // analysis frequency far above the spin scales
      ScenarioParams p = test::random_scenario(rng);
      p.spin.larmor_Omega_S = kTwoPi * rng.log_uniform(0.3, 1.0);
      p.spin.linewidth_gamma_S = kTwoPi * rng.log_uniform(0.3, 1.0);
      p.spin.coupling_T_S = rng.uniform(0.05, 0.5);
      p.spin.intracavity_loss_A_S =
          p.spin.coupling_T_S * rng.log_uniform(1e-3, 0.1);
      p.spin.readout_rate_Gamma_S =
          matched_gamma_S(p.ifo.normalized_power_Theta(),
                          p.ifo.half_bandwidth_kappa_I,
                          p.spin.larmor_Omega_S) *
          rng.log_uniform(0.5, 2.0);
      p.squeeze.squeeze_factor_r = r;
      const double Om = kTwoPi * rng.log_uniform(50.0, 500.0);

      const TransferSet t = transfer_at(Om, p.ifo, p.spin);
      const InputSpectra in = input_spectra(r, p.ifo.input_efficiency_eta_I1,
                                            p.spin.input_efficiency_eta_S1);
      const SigmaSet s = sigma_set(Om, p.ifo, p.spin, in, t);
      const double exact = s.sigma_I - std::norm(s.sigma_ISpin) / s.sigma_Spin;
      const double lead = leading_order_residual(Om, p.ifo, p.spin, r);
      if (exact > 1e-3 * s.sigma_I)
        CHECK(std::abs(lead - exact) / s.sigma_I < 0.05);
    }
  }

  SUBCASE("advanced ligo preset at 100 Hz, r = 3") {
    ScenarioParams p = advanced_ligo_preset();
    p.squeeze.squeeze_factor_r = 3.0;
    const double Om = kTwoPi * 100.0;
    const TransferSet t = transfer_at(Om, p.ifo, p.spin);
    const InputSpectra in = input_spectra(3.0, p.ifo.input_efficiency_eta_I1,
                                          p.spin.input_efficiency_eta_S1);
    const SigmaSet s = sigma_set(Om, p.ifo, p.spin, in, t);
    const double exact = s.sigma_I - std::norm(s.sigma_ISpin) / s.sigma_Spin;
    const double lead = leading_order_residual(Om, p.ifo, p.spin, 3.0);
    CHECK(std::abs(lead - exact) / s.sigma_I < 0.005);
  }

  CHECK_THROWS_AS(leading_order_residual(kTwoPi * 100.0,
                                         advanced_ligo_preset().ifo,
                                         advanced_ligo_preset().spin, 0.0),
                  std::invalid_argument);
}
