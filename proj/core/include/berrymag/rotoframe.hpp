#pragma once

// Effective magnetic fields in the spin body frame and the resonance
// classification of a rotation drive.
//
// The rotation is equivalent to a static field B0 plus a field B1 rotating
// about it; the lab field enters only through omega_alpha' because it is
// exactly antiparallel to B1. Assembled in one shot:
//
//   gyro * B'(t) = -omega_gamma * (-sin th, 0, cos th) - omega_alpha' * u(t)
//   u(t) = ( -(cos b sin th + sin b cos th cos wg t),
//             sin b sin wg t,
//             cos b cos th - sin b sin th cos wg t )

#include <vector>

#include "berrymag/model.hpp"

namespace berrymag {

struct BodyFieldSample {
  double t = 0.0;   // seconds
  double bx = 0.0;  // tesla
  double by = 0.0;
  double bz = 0.0;
};

struct ResonanceVerdict {
  double lhs = 0.0;            // sign product of b_z at its two extremes
  bool resonant = false;       // lhs <= 0
  double critical_ratio = 0.0; // -cos(theta)/cos(theta-beta), or NaN when singular
};

// B'(t) in tesla in the body frame.
BodyFieldSample effective_field(const ScenarioConfig& s, double t);

// gyro * B'(t) in rad/s; avoids the division for gyro-free consumers.
void effective_field_angular(const ScenarioConfig& s, double t,
                             double& wx, double& wy, double& wz);

// Time derivative of gyro * B'(t) in rad/s^2 (analytic: only the
// cos/sin(omega_gamma t) factors differentiate).
void effective_field_angular_dot(const ScenarioConfig& s, double t,
                                 double& wx_dot, double& wy_dot, double& wz_dot);

// Resonance test: b_z passes through zero somewhere in the period iff
// [ r cos(th+b) + cos th ] * [ r cos(th-b) + cos th ] <= 0, r = w_a'/w_g.
ResonanceVerdict resonance_condition(const RotationParams& r, double omega_alpha_eff);

// Drive ratio that puts the b_z zero exactly at t = T/2:
// -cos(theta)/cos(theta-beta). Throws SingularGeometry when
// |cos(theta-beta)| < 1e-12.
double critical_ratio(double theta, double beta);

// All t in [0, T) with b_z(t) = 0, by sign-change bisection on a dense grid
// (>= 1e4 points), each root refined to |b_z| < 1e-12 * max|B'|.
// Independent of the resonance_condition algebra by construction.
std::vector<double> z_crossing_times(const ScenarioConfig& s);

}  // namespace berrymag
