#include "berrymag/spinham.hpp"

#include <algorithm>
#include <cmath>

#include "berrymag/errors.hpp"
#include "berrymag/rotoframe.hpp"

namespace berrymag {

namespace {

constexpr double k_sqrt2 = 1.4142135623730951;

// Multiply v by a unit phase so its largest-magnitude component is real
// nonnegative. Pure function of the ray; used as the branch-birth gauge.
Vec3c canonical_gauge(const Vec3c& v) {
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

}  // namespace

SpinOperators SpinOperators::make() {
  SpinOperators op;
  op.iz[0][0] = 1.0;
  op.iz[2][2] = -1.0;

  op.iplus[0][1] = k_sqrt2;
  op.iplus[1][2] = k_sqrt2;
  op.iminus[1][0] = k_sqrt2;
  op.iminus[2][1] = k_sqrt2;

  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      op.ix[r][c] = 0.5 * (op.iplus[r][c] + op.iminus[r][c]);
      op.iy[r][c] = Complex(0.0, -0.5) * (op.iplus[r][c] - op.iminus[r][c]);
    }
  }
  return op;
}

HamiltonianSample hamiltonian_at(const ScenarioConfig& s, double t) {
  double wx, wy, wz;
  effective_field_angular(s, t, wx, wy, wz);
  double dwx, dwy, dwz;
  effective_field_angular_dot(s, t, dwx, dwy, dwz);

  const double qp = s.species.quad_split;

  HamiltonianSample hs;
  hs.t = t;

  const Complex gm(wx / k_sqrt2, -wy / k_sqrt2);
  hs.h[0][0] = qp + wz;
  hs.h[0][1] = gm;
  hs.h[1][0] = std::conj(gm);
  hs.h[1][2] = gm;
  hs.h[2][1] = std::conj(gm);
  hs.h[2][2] = qp - wz;

  const Complex dgm(dwx / k_sqrt2, -dwy / k_sqrt2);
  hs.hdot[0][0] = dwz;
  hs.hdot[0][1] = dgm;
  hs.hdot[1][0] = std::conj(dgm);
  hs.hdot[1][2] = dgm;
  hs.hdot[2][1] = std::conj(dgm);
  hs.hdot[2][2] = -dwz;

  return hs;
}

EigenFrame eigensystem(const HamiltonianSample& hs) {
  double habs = 0.0;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) habs = std::max(habs, std::abs(hs.h[r][c]));
  if (hermiticity_defect(hs.h) > 1e-12 * std::max(habs, 1e-300))
    throw NotHermitian("eigensystem: input matrix is not Hermitian");

  const Eig3 e = hermitian_eig3(hs.h);

  std::array<int, 3> order{0, 1, 2};
  std::sort(order.begin(), order.end(), [&e](int a, int b) {
    return e.values[static_cast<size_t>(a)] > e.values[static_cast<size_t>(b)];
  });

  EigenFrame f;
  f.t = hs.t;
  for (int i = 0; i < 3; ++i) {
    const int src = order[static_cast<size_t>(i)];
    f.values_sorted[static_cast<size_t>(i)] = e.values[static_cast<size_t>(src)];
    f.vectors[static_cast<size_t>(i)] = canonical_gauge(e.vectors[static_cast<size_t>(src)]);
    f.branch_of_sorted[static_cast<size_t>(i)] = i;
  }
  return f;
}

EigenFrame track_branches(const EigenFrame& prev, const EigenFrame& next_raw) {
  // |overlap| between prev branch b and next sorted slot j.
  double ov[3][3];
  for (int b = 0; b < 3; ++b) {
    const Vec3c& pv = prev.vector_of_branch(b);
    for (int j = 0; j < 3; ++j)
      ov[b][j] = std::abs(dot(pv, next_raw.vectors[static_cast<size_t>(j)]));
  }

  // Greedy assignment on the largest remaining entry. With orthonormal
  // frames the loser overlaps are tiny, so greedy is exact unless the step
  // straddles a near degeneracy; the margin check catches that case.
  bool b_used[3] = {false, false, false};
  bool j_used[3] = {false, false, false};
  int slot_of_branch[3] = {-1, -1, -1};
  double margin = 1.0;

  for (int pick = 0; pick < 3; ++pick) {
    int bb = -1, jj = -1;
    double best = -1.0;
    for (int b = 0; b < 3; ++b) {
      if (b_used[b]) continue;
      for (int j = 0; j < 3; ++j) {
        if (j_used[j]) continue;
        if (ov[b][j] > best) {
          best = ov[b][j];
          bb = b;
          jj = j;
        }
      }
    }
    double runner_up = 0.0;
    for (int j = 0; j < 3; ++j)
      if (!j_used[j] && j != jj) runner_up = std::max(runner_up, ov[bb][j]);
    margin = std::min(margin, best - runner_up);
    b_used[bb] = true;
    j_used[jj] = true;
    slot_of_branch[bb] = jj;
  }

  if (margin < 0.1)
    throw AmbiguousTracking("track_branches: assignment margin below 0.1");

  EigenFrame out = next_raw;
  for (int b = 0; b < 3; ++b) {
    const int j = slot_of_branch[b];
    out.branch_of_sorted[static_cast<size_t>(j)] = b;
    const Complex olap = dot(prev.vector_of_branch(b), next_raw.vectors[static_cast<size_t>(j)]);
    const double mag = std::abs(olap);
    if (mag > 0.0)
      out.vectors[static_cast<size_t>(j)] =
          scale(next_raw.vectors[static_cast<size_t>(j)], std::conj(olap) / mag);
  }
  return out;
}

namespace {

// Track from `from` to the frame at time t, bisecting the interval when the
// assignment is ambiguous. Depth 40 is far beyond anything a smooth spectrum
// needs; hitting it means a genuine degeneracy.
EigenFrame track_to(const ScenarioConfig& s, const EigenFrame& from, double t, int depth = 0) {
  const EigenFrame raw = eigensystem(hamiltonian_at(s, t));
  try {
    return track_branches(from, raw);
  } catch (const AmbiguousTracking&) {
    if (depth >= 40) throw;
    const double t_mid = 0.5 * (from.t + t);
    const EigenFrame mid = track_to(s, from, t_mid, depth + 1);
    return track_to(s, mid, t, depth + 1);
  }
}

}  // namespace

EigenTrajectory build_trajectory(const ScenarioConfig& s, int steps_override) {
  const int steps = steps_override > 0 ? steps_override : s.steps_per_period;
  if (steps < 100) throw InvalidConfig("build_trajectory: fewer than 100 steps");

  EigenTrajectory traj;
  traj.period = rotation_period(s.rotation);
  traj.frames.reserve(static_cast<size_t>(steps) + 1);
  traj.frames.push_back(eigensystem(hamiltonian_at(s, 0.0)));

  for (int k = 1; k <= steps; ++k) {
    const double t = traj.period * static_cast<double>(k) / steps;
    traj.frames.push_back(track_to(s, traj.frames.back(), t));
  }
  return traj;
}

BranchRoles classify_branches(const EigenTrajectory& traj) {
  // Average |<0|v>|^2 per branch over the period.
  double zero_weight[3] = {0.0, 0.0, 0.0};
  for (const EigenFrame& f : traj.frames) {
    for (int b = 0; b < 3; ++b)
      zero_weight[b] += std::norm(f.vector_of_branch(b)[1]);
  }

  int zb = 0;
  for (int b = 1; b < 3; ++b)
    if (zero_weight[b] > zero_weight[zb]) zb = b;

  int pair[2], n = 0;
  for (int b = 0; b < 3; ++b)
    if (b != zb) pair[n++] = b;

  const EigenFrame& f0 = traj.frames.front();
  BranchRoles roles;
  roles.zero_branch = zb;
  if (f0.value_of_branch(pair[0]) >= f0.value_of_branch(pair[1])) {
    roles.pair_hi = pair[0];
    roles.pair_lo = pair[1];
  } else {
    roles.pair_hi = pair[1];
    roles.pair_lo = pair[0];
  }
  return roles;
}

}  // namespace berrymag
