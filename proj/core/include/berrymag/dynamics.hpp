#pragma once

// Exact time-dependent propagation (midpoint exponential of the 3x3
// Hermitian, hence exactly unitary per step), Ramsey interferometry and the
// shot-noise Monte Carlo for the fringe phase estimator.

#include <cstdint>
#include <functional>
#include <vector>

#include "berrymag/linalg3.hpp"
#include "berrymag/model.hpp"

namespace berrymag {

struct StateVector {
  Vec3c amplitudes;  // basis (|+1>, |0>, |-1>)

  double norm() const { return berrymag::norm(amplitudes); }
};

struct RamseyResult {
  double delta_psi_true = 0.0;  // rad, unreduced accumulated relative phase
  double p_bright = 0.0;        // (1 + cos delta_psi)/2
  std::vector<double> delta_psi_estimates;  // per Monte Carlo repetition
  double estimator_std = 0.0;   // sample std of the estimates
  std::int64_t periods = 0;     // whole periods inside T_m
  double discarded_time = 0.0;  // sub-period remainder dropped from T_m
};

// Generic midpoint-exponential engine: applies exp(-i H(t_mid) dt) per step.
// norm_bound must dominate ||H(t)|| on [t0, t1]; the precondition
// norm_bound * dt < 0.1 is enforced (StepTooCoarse).
StateVector evolve(const std::function<Mat3c(double)>& hamiltonian,
                   const StateVector& psi0, double t0, double t1, int substeps,
                   double norm_bound);

// Engine bound to a scenario's Hamiltonian.
StateVector propagate(const ScenarioConfig& s, const StateVector& psi0,
                      double t0, double t1, int substeps);

// Start in the branch eigenstate at t = 0, propagate one period, return
// |<v_branch(T)|psi(T)>|^2. branch is 1-based (1..3).
double adiabatic_fidelity(const ScenarioConfig& s, int branch);

// Ramsey chain: |0> -> (|+1>+|-1>)/sqrt2, free evolution for the whole
// periods inside measurement_time, fringe projection. The estimator Monte
// Carlo runs only when the operating point is away from a fringe extremum.
RamseyResult ramsey_phase(const ScenarioConfig& s, int trials = 1000);

// Monte Carlo of the fringe phase estimator: per trial draw
// Binomial(n_spins, p_bright), invert p = (1 + cos dpsi)/2. Deterministic for
// a fixed seed. Throws FringeExtremum when |sin delta_psi| < 1e-3.
double shot_noise_mc(double delta_psi, std::int64_t n_spins, int trials,
                     std::uint64_t seed);
double shot_noise_mc(double delta_psi, std::int64_t n_spins, int trials,
                     std::uint64_t seed, std::vector<double>* estimates_out);

}  // namespace berrymag
