#pragma once

#include <cmath>
#include <random>

#include "qnb/matching.hpp"
#include "qnb/params.hpp"

namespace qnb::test {

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(uint64_t seed) : eng(seed) {}
  double uniform(double a, double b) {
    return std::uniform_real_distribution<double>(a, b)(eng);
  }
  double log_uniform(double a, double b) {
    return std::pow(10.0, uniform(std::log10(a), std::log10(b)));
  }
};

/// A random physically sensible parameter set: circulating power is back-set
/// from a drawn Theta so the back-action scale lands in the analysis band,
/// and the spin readout rate sits within half a decade of matched.
inline ScenarioParams random_scenario(Rng& rng) {
  ScenarioParams p;
  p.ifo.arm_length_L = rng.log_uniform(10.0, 4000.0);
  p.ifo.mirror_mass_m = rng.log_uniform(0.1, 40.0);
  p.ifo.half_bandwidth_kappa_I = kTwoPi * rng.log_uniform(200.0, 3000.0);
  p.ifo.laser_angular_frequency_omega_o =
      kTwoPi * kSpeedOfLight / kDefaultLaserWavelength;
  const double Theta = rng.log_uniform(3e7, 3e10);
  p.ifo.circulating_power_I_c =
      Theta * p.ifo.mirror_mass_m * kSpeedOfLight * p.ifo.arm_length_L /
      (8.0 * p.ifo.laser_angular_frequency_omega_o);
  // keep kappa_Il below 30% of kappa_I
  p.ifo.roundtrip_loss_A_I =
      rng.log_uniform(1e-3, 1.0) * 0.3 * 4.0 * p.ifo.arm_length_L *
      p.ifo.half_bandwidth_kappa_I / kSpeedOfLight;
  p.ifo.input_efficiency_eta_I1 = rng.uniform(0.9, 1.0);
  p.ifo.output_efficiency_eta_I3 = rng.uniform(0.9, 1.0);

  p.spin.larmor_Omega_S = kTwoPi * rng.log_uniform(1.0, 30.0);
  p.spin.linewidth_gamma_S = kTwoPi * rng.log_uniform(1.0, 30.0);
  p.spin.readout_rate_Gamma_S = snap_angular_to_hz(
      matched_gamma_S(Theta, p.ifo.half_bandwidth_kappa_I,
                      p.spin.larmor_Omega_S) *
      rng.log_uniform(0.3, 3.0));
  p.spin.coupling_T_S = rng.uniform(0.02, 0.6);
  p.spin.intracavity_loss_A_S = rng.log_uniform(1e-4, 0.05);
  p.spin.input_efficiency_eta_S1 = rng.uniform(0.9, 1.0);
  p.spin.output_efficiency_eta_S3 = rng.uniform(0.9, 1.0);

  p.squeeze.squeeze_factor_r = rng.uniform(0.0, 1.5);
  p.validate();
  return p;
}

inline double random_frequency_hz(Rng& rng) {
  return rng.log_uniform(3.0, 5000.0);
}

} // namespace qnb::test
