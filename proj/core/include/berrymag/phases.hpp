#pragma once

// Dynamic and geometric phases accumulated over one rotation period, computed
// by two independent routes:
//
//  * adiabatic_phases: gauge-invariant discrete overlap (Pancharatnam)
//    product around the closed loop. Each eigenvector is first re-phased by
//    a canonical rule derived from the ray alone, so stored gauges cannot
//    leak in and the per-step terms stay small enough to unwrap.
//  * berry_integrand_phase: the field-azimuth parameterization integral,
//    which reduces to  integral of (|<+1|v>|^2 - |<-1|v>|^2) d(phi),
//    phi = arg(B'_x + i B'_y) unwrapped along the period.
//
// Both return the standard adiabatic geometric phase i * closed-loop
// integral of <v|dv>; agreement is modulo 2*pi.

#include <array>
#include <vector>

#include "berrymag/model.hpp"
#include "berrymag/spinham.hpp"

namespace berrymag {

struct PairGap {
  int branch_a = 0;
  int branch_b = 0;
  double min_gap = 0.0;   // rad/s
  double argmin_time = 0.0;
};

struct PhaseLedger {
  // Indexed by persistent branch id (0..2).
  std::array<double, 3> phi_dynamic{};    // -integral of lambda dt, rad
  std::array<double, 3> phi_geometric{};  // unwrapped, rad
  std::array<PairGap, 3> pair_gaps{};     // pairs (0,1), (0,2), (1,2)
  BranchRoles roles;
  double period = 0.0;

  const PairGap& gap_of_pair(int a, int b) const;
};

struct BlochPoint {
  double t = 0.0;
  double polar = 0.0;                // theta_2 in [0, pi]
  double azimuth = 0.0;              // 2*phi, unwrapped along the trajectory
  double residual_zero_weight = 0.0; // |<0|v>|^2
};

// Phases for all three branches over one period. Throws GapFloorViolation
// when any pair gap drops below s.gap_floor somewhere on the grid.
PhaseLedger adiabatic_phases(const ScenarioConfig& s);
PhaseLedger adiabatic_phases(const ScenarioConfig& s, const EigenTrajectory& traj);

// Field-azimuth route for one branch (1-based id as plotted: 1..3).
// Throws PhaseUnwrapFailure when consecutive azimuth samples jump by >= pi/2.
double berry_integrand_phase(const ScenarioConfig& s, int branch);
double berry_integrand_phase(const ScenarioConfig& s, const EigenTrajectory& traj, int branch);

// Delta phi_g = phi_g(pair_hi) - phi_g(pair_lo), unwrapped.
double geometric_phase_shift(const ScenarioConfig& s);
double geometric_phase_shift(const PhaseLedger& ledger);

// Bloch-sphere trajectory of one of the near-degenerate branches (1-based).
std::vector<BlochPoint> bloch_trajectory(const ScenarioConfig& s, int branch);
std::vector<BlochPoint> bloch_trajectory(const ScenarioConfig& s, const EigenTrajectory& traj,
                                         int branch);

// Signed solid angle of a closed (polar, azimuth) trajectory. Throws
// OpenTrajectory when the endpoints differ by more than 1e-6 on the sphere.
double solid_angle(const std::vector<BlochPoint>& traj);

}  // namespace berrymag
