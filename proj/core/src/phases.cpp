#include "berrymag/phases.hpp"

#include <cmath>
#include <numbers>

#include "berrymag/errors.hpp"
#include "berrymag/rotoframe.hpp"

namespace berrymag {

namespace {

constexpr double k_pi = std::numbers::pi;

// Re-phase v so its largest-magnitude component is real nonnegative. The
// result depends only on the ray, so stored gauges cannot influence the
// overlap sums below.
Vec3c ray_representative(const Vec3c& v) {
  int imax = 0;
  double best = std::norm(v[0]);
  for (int i = 1; i < 3; ++i) {
    const double n = std::norm(v[i]);
    if (n > best) {
      best = n;
      imax = i;
    }
  }
  const double mag = std::abs(v[imax]);
  if (mag == 0.0) return v;
  return scale(v, std::conj(v[imax]) / mag);
}

bool field_is_static(const ScenarioConfig& s) {
  return omega_alpha_eff(s) * std::sin(s.rotation.beta) == 0.0;
}

// Unwrapped field azimuth arg(B'_x + i B'_y) on the trajectory grid.
std::vector<double> unwrapped_field_azimuth(const ScenarioConfig& s,
                                            const EigenTrajectory& traj) {
  std::vector<double> phi(traj.frames.size());
  double prev_raw = 0.0;
  for (size_t k = 0; k < traj.frames.size(); ++k) {
    double wx, wy, wz;
    effective_field_angular(s, traj.frames[k].t, wx, wy, wz);
    const double raw = std::atan2(wy, wx);
    if (k == 0) {
      phi[0] = raw;
    } else {
      double delta = raw - prev_raw;
      while (delta > k_pi) delta -= 2.0 * k_pi;
      while (delta < -k_pi) delta += 2.0 * k_pi;
      if (std::abs(delta) >= k_pi / 2.0)
        throw PhaseUnwrapFailure(
            "field azimuth jumps by >= pi/2 between samples; grid too coarse");
      phi[k] = phi[k - 1] + delta;
    }
    prev_raw = raw;
  }
  return phi;
}

int to_internal_branch(int branch) {
  if (branch < 1 || branch > 3)
    throw InvalidConfig("branch id must be 1, 2 or 3");
  return branch - 1;
}

}  // namespace

const PairGap& PhaseLedger::gap_of_pair(int a, int b) const {
  for (const PairGap& g : pair_gaps) {
    if ((g.branch_a == a && g.branch_b == b) || (g.branch_a == b && g.branch_b == a))
      return g;
  }
  throw InvalidConfig("gap_of_pair: no such pair");
}

PhaseLedger adiabatic_phases(const ScenarioConfig& s) {
  return adiabatic_phases(s, build_trajectory(s));
}

PhaseLedger adiabatic_phases(const ScenarioConfig& s, const EigenTrajectory& traj) {
  const size_t m = traj.frames.size() - 1;  // number of steps
  PhaseLedger ledger;
  ledger.period = traj.period;
  ledger.roles = classify_branches(traj);

  // Pair gaps over the grid.
  int idx = 0;
  for (int a = 0; a < 3; ++a) {
    for (int b = a + 1; b < 3; ++b) {
      PairGap g{a, b, 0.0, 0.0};
      bool first = true;
      for (const EigenFrame& f : traj.frames) {
        const double gap = std::abs(f.value_of_branch(a) - f.value_of_branch(b));
        if (first || gap < g.min_gap) {
          g.min_gap = gap;
          g.argmin_time = f.t;
          first = false;
        }
      }
      ledger.pair_gaps[static_cast<size_t>(idx++)] = g;
    }
  }
  for (const PairGap& g : ledger.pair_gaps) {
    if (g.min_gap < s.gap_floor)
      throw GapFloorViolation("adiabatic_phases: eigenvalue gap under gap_floor",
                              g.min_gap, g.argmin_time, g.branch_a, g.branch_b);
  }

  // Dynamic phases: composite trapezoid of -lambda_b(t).
  const double dt = traj.period / static_cast<double>(m);
  for (int b = 0; b < 3; ++b) {
    double acc = 0.0;
    for (size_t k = 0; k < m; ++k) {
      acc += 0.5 * (traj.frames[k].value_of_branch(b) +
                    traj.frames[k + 1].value_of_branch(b));
    }
    ledger.phi_dynamic[static_cast<size_t>(b)] = -acc * dt;
  }

  // Geometric phases: discrete overlap product around the closed loop with
  // ray-canonical representatives; per-step args are principal values, so the
  // sum over a fine grid is the unwrapped phase. Closure reuses the t = 0
  // frame (rays at t = T coincide with rays at t = 0).
  for (int b = 0; b < 3; ++b) {
    std::vector<Vec3c> u;
    u.reserve(m + 1);
    for (size_t k = 0; k < m; ++k)
      u.push_back(ray_representative(traj.frames[k].vector_of_branch(b)));
    u.push_back(u.front());

    double acc = 0.0;
    for (size_t k = 0; k < m; ++k) {
      const Complex olap = dot(u[k], u[k + 1]);
      acc -= std::arg(olap);
    }
    ledger.phi_geometric[static_cast<size_t>(b)] = acc;
  }

  return ledger;
}

double berry_integrand_phase(const ScenarioConfig& s, int branch) {
  return berry_integrand_phase(s, build_trajectory(s), branch);
}

double berry_integrand_phase(const ScenarioConfig& s, const EigenTrajectory& traj,
                             int branch) {
  if (field_is_static(s)) return 0.0;

  const int b = to_internal_branch(branch);
  const size_t m = traj.frames.size() - 1;
  const std::vector<double> phi = unwrapped_field_azimuth(s, traj);

  // Weight |<+1|v>|^2 - |<-1|v>|^2; with the eigenvector written in the
  // field-azimuth section the geometric phase is integral of weight d(phi).
  std::vector<double> w(m + 1);
  for (size_t k = 0; k <= m; ++k) {
    const Vec3c& v = traj.frames[k].vector_of_branch(b);
    w[k] = std::norm(v[0]) - std::norm(v[2]);
  }

  double acc = 0.0;
  for (size_t k = 0; k < m; ++k)
    acc += 0.5 * (w[k] + w[k + 1]) * (phi[k + 1] - phi[k]);

  // The de-rotated eigenvector section is real-valued; around the closed
  // loop it can return with a sign flip, which contributes pi to the phase.
  // Detect the flip from the chain of de-rotated representatives.
  std::vector<Vec3c> rho;
  rho.reserve(m + 1);
  for (size_t k = 0; k < m; ++k) {
    const Vec3c& v = traj.frames[k].vector_of_branch(b);
    Vec3c d = v;
    d[0] *= Complex(std::cos(phi[k]), std::sin(phi[k]));
    d[2] *= Complex(std::cos(phi[k]), -std::sin(phi[k]));
    rho.push_back(ray_representative(d));
  }
  rho.push_back(rho.front());
  double sign = 1.0;
  for (size_t k = 0; k < m; ++k) {
    if (std::real(dot(rho[k], rho[k + 1])) < 0.0) sign = -sign;
  }
  if (sign < 0.0) acc += k_pi;

  return acc;
}

double geometric_phase_shift(const ScenarioConfig& s) {
  return geometric_phase_shift(adiabatic_phases(s));
}

double geometric_phase_shift(const PhaseLedger& ledger) {
  return ledger.phi_geometric[static_cast<size_t>(ledger.roles.pair_hi)] -
         ledger.phi_geometric[static_cast<size_t>(ledger.roles.pair_lo)];
}

std::vector<BlochPoint> bloch_trajectory(const ScenarioConfig& s, int branch) {
  return bloch_trajectory(s, build_trajectory(s), branch);
}

std::vector<BlochPoint> bloch_trajectory(const ScenarioConfig& s,
                                         const EigenTrajectory& traj, int branch) {
  const int b = to_internal_branch(branch);

  std::vector<BlochPoint> out;
  out.reserve(traj.frames.size());

  if (field_is_static(s)) {
    // Stationary eigenstates: a single point repeated.
    double wx, wy, wz;
    effective_field_angular(s, 0.0, wx, wy, wz);
    const double phi0 = std::atan2(wy, wx);
    for (const EigenFrame& f : traj.frames) {
      const Vec3c& v = f.vector_of_branch(b);
      BlochPoint p;
      p.t = f.t;
      p.polar = 2.0 * std::atan2(std::abs(v[0]), std::abs(v[2]));
      p.azimuth = 2.0 * phi0;
      p.residual_zero_weight = std::norm(v[1]);
      out.push_back(p);
    }
    return out;
  }

  const std::vector<double> phi = unwrapped_field_azimuth(s, traj);
  for (size_t k = 0; k < traj.frames.size(); ++k) {
    const Vec3c& v = traj.frames[k].vector_of_branch(b);
    BlochPoint p;
    p.t = traj.frames[k].t;
    p.polar = 2.0 * std::atan2(std::abs(v[0]), std::abs(v[2]));
    p.azimuth = 2.0 * phi[k];
    p.residual_zero_weight = std::norm(v[1]);
    out.push_back(p);
  }
  return out;
}

double solid_angle(const std::vector<BlochPoint>& traj) {
  if (traj.size() < 2) return 0.0;

  const auto embed = [](const BlochPoint& p) {
    return std::array<double, 3>{std::sin(p.polar) * std::cos(p.azimuth),
                                 std::sin(p.polar) * std::sin(p.azimuth),
                                 std::cos(p.polar)};
  };
  const auto a = embed(traj.front());
  const auto b = embed(traj.back());
  const double mismatch = std::sqrt((a[0] - b[0]) * (a[0] - b[0]) +
                                    (a[1] - b[1]) * (a[1] - b[1]) +
                                    (a[2] - b[2]) * (a[2] - b[2]));
  if (mismatch > 1e-6)
    throw OpenTrajectory("solid_angle: trajectory endpoints do not coincide");

  // Signed area via the line integral (1 - cos polar) d(azimuth); a full
  // counterclockwise equator gives +2*pi.
  double omega = 0.0;
  for (size_t k = 0; k + 1 < traj.size(); ++k) {
    const double mid_polar = 0.5 * (traj[k].polar + traj[k + 1].polar);
    omega += (1.0 - std::cos(mid_polar)) * (traj[k + 1].azimuth - traj[k].azimuth);
  }
  return omega;
}

}  // namespace berrymag
