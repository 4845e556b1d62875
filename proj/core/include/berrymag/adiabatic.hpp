#pragma once

// Adiabaticity diagnostics: the numerical epsilon profile
// eps_mn(t) = |<m|dH/dt|n> / (lambda_n - lambda_m)^2| along the trajectory,
// and the closed form valid at the critical drive ratio.

#include <array>

#include "berrymag/model.hpp"
#include "berrymag/spinham.hpp"

namespace berrymag {

struct PairEpsilon {
  int branch_m = 0;
  int branch_n = 0;
  double eps_max = 0.0;
  double argmax_time = 0.0;
};

struct AdiabaticityReport {
  std::array<PairEpsilon, 6> pairs{};  // all ordered pairs m != n
  double eps_max = 0.0;                // max over pairs
  double argmax_time = 0.0;
  bool feasible = false;               // eps_max < epsilon_threshold
  double chi = 0.0;                    // |Q' / (2 omega_gamma)|

  const PairEpsilon& pair(int m, int n) const;
};

// Evaluate eps_mn at every grid time. Throws DegenerateGap when a pair gap
// drops below s.gap_floor at some sample.
AdiabaticityReport epsilon_profile(const ScenarioConfig& s);
AdiabaticityReport epsilon_profile(const ScenarioConfig& s, const EigenTrajectory& traj);

// eps_12 at the critical ratio:
//   | [sin(beta) cos(theta) / cos(beta-theta)]
//     / sqrt( 2 sqrt(chi^2+zeta^2) (sqrt(chi^2+zeta^2) - chi)^3 ) |
// zeta is caller-supplied. Throws SingularGeometry when cos(beta-theta) = 0
// and ZeroDenominator when zeta = 0.
double epsilon_critical_closed_form(double beta, double theta, double chi, double zeta);

}  // namespace berrymag
