#include "berrymag/rotoframe.hpp"

#include <cmath>
#include <limits>

#include "berrymag/errors.hpp"

namespace berrymag {

namespace {

struct FieldTerms {
  double w_gamma, w_alpha_eff;
  double st, ct, sb, cb;
};

FieldTerms terms(const ScenarioConfig& s) {
  return FieldTerms{
      s.rotation.omega_gamma,
      omega_alpha_eff(s),
      std::sin(s.rotation.theta),
      std::cos(s.rotation.theta),
      std::sin(s.rotation.beta),
      std::cos(s.rotation.beta),
  };
}

}  // namespace

void effective_field_angular(const ScenarioConfig& s, double t,
                             double& wx, double& wy, double& wz) {
  const FieldTerms f = terms(s);
  const double cg = std::cos(f.w_gamma * t);
  const double sg = std::sin(f.w_gamma * t);

  const double ux = -(f.cb * f.st + f.sb * f.ct * cg);
  const double uy = f.sb * sg;
  const double uz = f.cb * f.ct - f.sb * f.st * cg;

  wx = f.w_gamma * f.st - f.w_alpha_eff * ux;
  wy = -f.w_alpha_eff * uy;
  wz = -f.w_gamma * f.ct - f.w_alpha_eff * uz;
}

void effective_field_angular_dot(const ScenarioConfig& s, double t,
                                 double& wx_dot, double& wy_dot, double& wz_dot) {
  const FieldTerms f = terms(s);
  const double cg = std::cos(f.w_gamma * t);
  const double sg = std::sin(f.w_gamma * t);
  const double a = f.w_alpha_eff * f.sb * f.w_gamma;

  wx_dot = -a * f.ct * sg;
  wy_dot = -a * cg;
  wz_dot = -a * f.st * sg;
}

BodyFieldSample effective_field(const ScenarioConfig& s, double t) {
  double wx, wy, wz;
  effective_field_angular(s, t, wx, wy, wz);
  const double g = s.species.gyro_ratio;
  return BodyFieldSample{t, wx / g, wy / g, wz / g};
}

ResonanceVerdict resonance_condition(const RotationParams& r, double omega_alpha_eff) {
  const double ratio = omega_alpha_eff / r.omega_gamma;
  const double ct = std::cos(r.theta);
  const double lhs = (ratio * std::cos(r.theta + r.beta) + ct) *
                     (ratio * std::cos(r.theta - r.beta) + ct);
  ResonanceVerdict v;
  v.lhs = lhs;
  v.resonant = lhs <= 0.0;
  const double denom = std::cos(r.theta - r.beta);
  v.critical_ratio = std::abs(denom) < 1e-12
                         ? std::numeric_limits<double>::quiet_NaN()
                         : -ct / denom;
  return v;
}

double critical_ratio(double theta, double beta) {
  const double denom = std::cos(theta - beta);
  if (std::abs(denom) < 1e-12)
    throw SingularGeometry("critical_ratio: |cos(theta-beta)| < 1e-12");
  return -std::cos(theta) / denom;
}

std::vector<double> z_crossing_times(const ScenarioConfig& s) {
  const double period = rotation_period(s.rotation);
  const double w_gamma_abs = std::abs(s.rotation.omega_gamma);
  const double field_scale = w_gamma_abs + std::abs(omega_alpha_eff(s));
  const double tol = 1e-12 * field_scale;

  const auto bz = [&s](double t) {
    double wx, wy, wz;
    effective_field_angular(s, t, wx, wy, wz);
    return wz;
  };

  constexpr int grid = 20000;
  std::vector<double> roots;
  double t_prev = 0.0;
  double f_prev = bz(t_prev);
  if (std::abs(f_prev) <= tol) roots.push_back(t_prev);

  for (int k = 1; k <= grid; ++k) {
    const double t_next = period * static_cast<double>(k) / grid;
    const double f_next = bz(t_next);

    if (std::abs(f_next) <= tol) {
      // Grid point already at a root; covers tangential zeros (the
      // critical-ratio touch at t = T/2) that never change sign.
      roots.push_back(t_next);
    } else if (std::abs(f_prev) > tol && f_prev * f_next < 0.0) {
      double lo = t_prev, hi = t_next, flo = f_prev;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = bz(mid);
        if (std::abs(fm) < tol) {
          lo = hi = mid;
          break;
        }
        if (flo * fm < 0.0) {
          hi = mid;
        } else {
          lo = mid;
          flo = fm;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
    t_prev = t_next;
    f_prev = f_next;
  }

  // Keep roots in [0, T), drop periodic images of t = 0 and near-duplicate
  // hits from adjacent grid points.
  std::vector<double> out;
  for (double r : roots) {
    if (r >= period * (1.0 - 1e-12)) continue;
    if (!out.empty() && r - out.back() < 1e-9 * period) continue;
    out.push_back(r);
  }
  return out;
}

}  // namespace berrymag
