#pragma once

#include <stdexcept>
#include <string>

namespace berrymag {

// Base class for all berrymag failures so callers can catch the whole family.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class InvalidConfig : public Error {
public:
  using Error::Error;
};

class ZeroDivisor : public Error {
public:
  using Error::Error;
};

// |cos(beta - theta)| below cutoff: the critical drive ratio diverges.
class SingularGeometry : public Error {
public:
  using Error::Error;
};

class NotHermitian : public Error {
public:
  using Error::Error;
};

// Branch assignment margin too small; caller refines the time step and retries.
class AmbiguousTracking : public Error {
public:
  using Error::Error;
};

// Eigenvalue gap under the configured floor: adiabatic treatment breaks down.
class GapFloorViolation : public Error {
public:
  GapFloorViolation(const std::string& msg, double gap, double time, int a, int b)
      : Error(msg), min_gap(gap), at_time(time), branch_a(a), branch_b(b) {}
  double min_gap;
  double at_time;
  int branch_a;
  int branch_b;
};

class PhaseUnwrapFailure : public Error {
public:
  using Error::Error;
};

class OpenTrajectory : public Error {
public:
  using Error::Error;
};

class DegenerateGap : public Error {
public:
  DegenerateGap(const std::string& msg, double gap, double time, int a, int b)
      : Error(msg), gap(gap), at_time(time), branch_a(a), branch_b(b) {}
  double gap;
  double at_time;
  int branch_a;
  int branch_b;
};

class ZeroDenominator : public Error {
public:
  using Error::Error;
};

class StepTooCoarse : public Error {
public:
  using Error::Error;
};

// Ramsey fringe slope vanishes; the phase estimator variance diverges.
class FringeExtremum : public Error {
public:
  using Error::Error;
};

class ZeroSlope : public Error {
public:
  using Error::Error;
};

class SlopeUnresolved : public Error {
public:
  using Error::Error;
};

class NoFeasiblePoint : public Error {
public:
  using Error::Error;
};

}  // namespace berrymag
