#pragma once

// Physical constants, species presets and scenario configuration.
//
// Unit convention: every frequency-like quantity is stored as an angular
// frequency in rad/s. File ingestion (tools/) accepts ordinary frequencies
// in Hz and multiplies by 2*pi exactly once, so no other layer ever touches
// the factor.

#include <cstdint>
#include <string>
#include <vector>

namespace berrymag {

struct SpinSpecies {
  std::string label;
  double gyro_ratio = 0.0;   // rad s^-1 T^-1, signed
  double quad_split = 0.0;   // rad/s, signed; Q' in nuclear mode, D in electron mode
};

struct HyperfineConstants {
  double Q = 0.0;           // rad/s
  double A_parallel = 0.0;  // rad/s
  double A_perp = 0.0;      // rad/s
  double D = 0.0;           // rad/s, must be nonzero
};

// Euler-angle drive: alpha = omega_alpha * t, beta fixed, gamma = omega_gamma * t,
// theta the fixed tilt between the spin axis and the body z axis.
struct RotationParams {
  double omega_alpha = 0.0;  // rad/s, signed
  double omega_gamma = 0.0;  // rad/s, signed, nonzero
  double beta = 0.0;         // rad, stored unreduced
  double theta = 0.0;        // rad, stored unreduced
};

struct ScenarioConfig {
  SpinSpecies species;
  RotationParams rotation;
  double b_lab = 0.0;             // tesla, signed, along the lab z axis
  int steps_per_period = 4096;    // >= 100
  double measurement_time = 1e-2; // seconds
  std::int64_t spin_count = 1;    // >= 1
  double gap_floor = 6.283185307179586;  // rad/s (1 Hz), > 0
  double epsilon_threshold = 0.1;        // dimensionless, > 0
  std::uint64_t seed = 0x5eed5eed;
};

// Q' = Q + A_perp^2 / D. Throws ZeroDivisor when D = 0.
double derive_q_prime(const HyperfineConstants& h);

// omega_alpha' = omega_alpha - gyro * B.
double omega_alpha_eff(const RotationParams& r, double b_lab, double gyro);

inline double omega_alpha_eff(const ScenarioConfig& s) {
  return omega_alpha_eff(s.rotation, s.b_lab, s.species.gyro_ratio);
}

// Rotation period T = 2*pi / |omega_gamma|.
double rotation_period(const RotationParams& r);

enum class PresetKind { nv14n, electron };

struct Preset {
  SpinSpecies species;
  RotationParams rotation;
  HyperfineConstants hyperfine;  // constants the species numbers came from
};

// Literature-default species plus the operating-point rotation drive
// (chi = |Q'/(2 omega_gamma)| = 1; drive at the critical ratio for
// theta = beta = acos(0.05)).
Preset preset(PresetKind kind);

// Full default scenario for a preset: B = 0, T_m = 10 ms, single spin.
ScenarioConfig default_scenario(PresetKind kind);

// Soft validity checks. Returns human-readable warnings; throws InvalidConfig
// when a hard invariant is violated. Never mutates the input.
std::vector<std::string> validate_scenario(const ScenarioConfig& s);

}  // namespace berrymag
