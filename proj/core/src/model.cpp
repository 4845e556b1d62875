#include "berrymag/model.hpp"

#include <cmath>
#include <numbers>

#include "berrymag/errors.hpp"

namespace berrymag {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

// Literature values for the NV center and the 14N nucleus. These are
// configuration defaults. gyro ratios are gamma/2pi in Hz/T.
constexpr double k_gyro_n14_hz = 3.077e6;     // 14N nuclear
constexpr double k_gyro_e_hz = 2.8024e10;     // NV electron
constexpr double k_quad_q_hz = -4.945e6;      // 14N quadrupole coupling
constexpr double k_hyperfine_apar_hz = -2.162e6;
constexpr double k_hyperfine_aperp_hz = -2.62e6;
constexpr double k_zero_field_d_hz = 2.87e9;

// Operating point: theta = beta with cos(theta) = 0.05, so the critical
// drive ratio is -0.05 and |omega_alpha| = 0.05 |omega_gamma|.
constexpr double k_default_cos_theta = 0.05;

}  // namespace

double derive_q_prime(const HyperfineConstants& h) {
  if (h.D == 0.0) throw ZeroDivisor("derive_q_prime: D = 0");
  return h.Q + h.A_perp * h.A_perp / h.D;
}

double omega_alpha_eff(const RotationParams& r, double b_lab, double gyro) {
  return r.omega_alpha - gyro * b_lab;
}

double rotation_period(const RotationParams& r) {
  if (r.omega_gamma == 0.0)
    throw InvalidConfig("rotation_period: omega_gamma = 0, period undefined");
  return two_pi / std::abs(r.omega_gamma);
}

Preset preset(PresetKind kind) {
  Preset p;
  p.hyperfine = HyperfineConstants{
      two_pi * k_quad_q_hz,
      two_pi * k_hyperfine_apar_hz,
      two_pi * k_hyperfine_aperp_hz,
      two_pi * k_zero_field_d_hz,
  };

  const double theta = std::acos(k_default_cos_theta);

  switch (kind) {
    case PresetKind::nv14n: {
      p.species.label = "nv14n";
      p.species.gyro_ratio = two_pi * k_gyro_n14_hz;
      // The spectra and phases only depend on quad_split through its
      // magnitude pattern, so the preset carries |Q'|.
      p.species.quad_split = std::abs(derive_q_prime(p.hyperfine));
      break;
    }
    case PresetKind::electron: {
      p.species.label = "electron";
      p.species.gyro_ratio = two_pi * k_gyro_e_hz;
      p.species.quad_split = two_pi * k_zero_field_d_hz;
      break;
    }
  }

  p.rotation.omega_gamma = p.species.quad_split / 2.0;  // chi = 1 exactly
  p.rotation.theta = theta;
  p.rotation.beta = theta;
  // Critical ratio -cos(theta)/cos(theta - beta) = -cos(theta).
  p.rotation.omega_alpha = -k_default_cos_theta * p.rotation.omega_gamma;
  return p;
}

ScenarioConfig default_scenario(PresetKind kind) {
  const Preset p = preset(kind);
  ScenarioConfig s;
  s.species = p.species;
  s.rotation = p.rotation;
  return s;
}

std::vector<std::string> validate_scenario(const ScenarioConfig& s) {
  if (s.species.gyro_ratio == 0.0)
    throw InvalidConfig("scenario: gyro_ratio must be nonzero");
  if (s.species.quad_split == 0.0)
    throw InvalidConfig("scenario: quad_split must be nonzero");
  if (s.rotation.omega_gamma == 0.0)
    throw InvalidConfig("scenario: omega_gamma = 0, rotation period undefined");
  if (s.steps_per_period < 100)
    throw InvalidConfig("scenario: steps_per_period must be >= 100");
  if (!(s.measurement_time > 0.0))
    throw InvalidConfig("scenario: measurement_time must be > 0");
  if (s.spin_count < 1)
    throw InvalidConfig("scenario: spin_count must be >= 1");
  if (!(s.gap_floor > 0.0))
    throw InvalidConfig("scenario: gap_floor must be > 0");
  if (!(s.epsilon_threshold > 0.0))
    throw InvalidConfig("scenario: epsilon_threshold must be > 0");

  std::vector<std::string> warnings;
  const double zeeman = std::abs(s.species.gyro_ratio * s.b_lab);
  const double w_alpha = std::abs(s.rotation.omega_alpha);
  const double w_gamma = std::abs(s.rotation.omega_gamma);
  const double q_abs = std::abs(s.species.quad_split);

  if (zeeman > 0.0 && zeeman >= 0.1 * w_alpha) {
    warnings.push_back(
        "lab field too strong for the linear-response regime: "
        "|gyro*B| >= 0.1*|omega_alpha|");
  }
  if (w_alpha > q_abs) {
    warnings.push_back("omega_alpha exceeds |quad_split|; spin-1 treatment marginal");
  }
  if (w_gamma > q_abs) {
    warnings.push_back("omega_gamma exceeds |quad_split|; spin-1 treatment marginal");
  }
  return warnings;
}

}  // namespace berrymag
