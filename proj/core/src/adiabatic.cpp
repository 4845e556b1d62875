#include "berrymag/adiabatic.hpp"

#include <cmath>

#include "berrymag/errors.hpp"

namespace berrymag {

const PairEpsilon& AdiabaticityReport::pair(int m, int n) const {
  for (const PairEpsilon& p : pairs) {
    if (p.branch_m == m && p.branch_n == n) return p;
  }
  throw InvalidConfig("AdiabaticityReport::pair: no such ordered pair");
}

AdiabaticityReport epsilon_profile(const ScenarioConfig& s) {
  return epsilon_profile(s, build_trajectory(s));
}

AdiabaticityReport epsilon_profile(const ScenarioConfig& s, const EigenTrajectory& traj) {
  AdiabaticityReport rep;
  rep.chi = std::abs(s.species.quad_split / (2.0 * s.rotation.omega_gamma));

  int idx = 0;
  for (int m = 0; m < 3; ++m) {
    for (int n = 0; n < 3; ++n) {
      if (m == n) continue;
      rep.pairs[static_cast<size_t>(idx)].branch_m = m;
      rep.pairs[static_cast<size_t>(idx)].branch_n = n;
      ++idx;
    }
  }

  for (const EigenFrame& f : traj.frames) {
    const HamiltonianSample hs = hamiltonian_at(s, f.t);
    for (PairEpsilon& p : rep.pairs) {
      const double gap =
          f.value_of_branch(p.branch_n) - f.value_of_branch(p.branch_m);
      if (std::abs(gap) < s.gap_floor)
        throw DegenerateGap("epsilon_profile: pair gap under gap_floor",
                            std::abs(gap), f.t, p.branch_m, p.branch_n);
      const Complex me =
          dot(f.vector_of_branch(p.branch_m), matvec(hs.hdot, f.vector_of_branch(p.branch_n)));
      const double eps = std::abs(me) / (gap * gap);
      if (eps > p.eps_max) {
        p.eps_max = eps;
        p.argmax_time = f.t;
      }
    }
  }

  for (const PairEpsilon& p : rep.pairs) {
    if (p.eps_max > rep.eps_max) {
      rep.eps_max = p.eps_max;
      rep.argmax_time = p.argmax_time;
    }
  }
  rep.feasible = rep.eps_max < s.epsilon_threshold;
  return rep;
}

double epsilon_critical_closed_form(double beta, double theta, double chi, double zeta) {
  const double denom_geo = std::cos(beta - theta);
  if (denom_geo == 0.0)
    throw SingularGeometry("epsilon_critical_closed_form: cos(beta-theta) = 0");
  if (zeta == 0.0)
    throw ZeroDenominator("epsilon_critical_closed_form: zeta = 0");

  const double root = std::sqrt(chi * chi + zeta * zeta);
  const double shifted = root - chi;
  const double denom = std::sqrt(2.0 * root * shifted * shifted * shifted);
  if (denom == 0.0)
    throw ZeroDenominator("epsilon_critical_closed_form: denominator vanishes");

  return std::abs((std::sin(beta) * std::cos(theta) / denom_geo) / denom);
}

}  // namespace berrymag
