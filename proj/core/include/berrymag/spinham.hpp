#pragma once

// Spin-1 operator algebra, the body-frame Hamiltonian with its analytic time
// derivative, and the 3x3 Hermitian eigensolution with persistent branch
// identities across the rotation period.
//
// Basis order everywhere: (|+1>, |0>, |-1>).

#include <array>
#include <vector>

#include "berrymag/linalg3.hpp"
#include "berrymag/model.hpp"

namespace berrymag {

struct SpinOperators {
  Mat3c iz, ix, iy, iplus, iminus;
  static SpinOperators make();
};

struct HamiltonianSample {
  double t = 0.0;
  Mat3c h;     // rad/s
  Mat3c hdot;  // rad/s^2
};

// Eigensystem at one time sample. Eigenvalues are sorted descending;
// branch_of_sorted maps a sorted slot to the persistent branch id (0..2)
// assigned at the start of the trajectory. Gauge: vectors are parallel
// transported (the overlap with the previous frame's same-branch vector is
// real positive); at branch birth the largest-magnitude component is made
// real nonnegative.
struct EigenFrame {
  double t = 0.0;
  std::array<double, 3> values_sorted{};  // descending, rad/s
  std::array<Vec3c, 3> vectors{};         // vectors[i] pairs with values_sorted[i]
  std::array<int, 3> branch_of_sorted{0, 1, 2};

  int slot_of_branch(int branch) const {
    for (int i = 0; i < 3; ++i)
      if (branch_of_sorted[static_cast<size_t>(i)] == branch) return i;
    return -1;
  }
  double value_of_branch(int branch) const {
    return values_sorted[static_cast<size_t>(slot_of_branch(branch))];
  }
  const Vec3c& vector_of_branch(int branch) const {
    return vectors[static_cast<size_t>(slot_of_branch(branch))];
  }
};

// H(t) per the matrix form
//   [ Q' + wz        (wx - i wy)/sqrt2   0          ]
//   [ (wx + i wy)/s2  0                  (wx-i wy)/s2 ]
//   [ 0               (wx + i wy)/sqrt2  Q' - wz    ]
// with (wx, wy, wz) = gyro * B'(t); hdot from the analytic field derivative.
HamiltonianSample hamiltonian_at(const ScenarioConfig& s, double t);

// Eigen decomposition of one sample. Throws NotHermitian when the input
// violates max|h - h^dagger| <= 1e-12 * max|h|. Gauge: largest-magnitude
// component real nonnegative (branch birth convention).
EigenFrame eigensystem(const HamiltonianSample& hs);

// Assign next_raw's vectors to prev's branch ids by maximal |overlap| and
// re-phase them so <prev|next> is real positive. Throws AmbiguousTracking
// when the winning assignment margin is below 0.1.
EigenFrame track_branches(const EigenFrame& prev, const EigenFrame& next_raw);

// One period of branch-tracked eigenframes on the uniform grid
// t_k = k T / M, k = 0..M (M = steps_per_period unless overridden).
// AmbiguousTracking between scheduled samples is resolved internally by
// recursive step halving; the refinement frames are discarded.
struct EigenTrajectory {
  double period = 0.0;
  std::vector<EigenFrame> frames;  // M + 1 entries

  int steps() const { return static_cast<int>(frames.size()) - 1; }
};

EigenTrajectory build_trajectory(const ScenarioConfig& s, int steps_override = 0);

// Branch roles within a trajectory: the near-degenerate pair (smallest
// average |<0|v>|^2) and the |0>-dominant branch. pair_hi is the pair member
// with the larger eigenvalue at t = 0.
struct BranchRoles {
  int pair_hi = 0;
  int pair_lo = 1;
  int zero_branch = 2;
};

BranchRoles classify_branches(const EigenTrajectory& traj);

}  // namespace berrymag
