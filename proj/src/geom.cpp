#include "knotdist/geom.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "knotdist/roots.hpp"

namespace knotdist {

namespace {
constexpr double kPi = std::numbers::pi;
}

RescaledModel::RescaledModel(double t_) : t(t_) {
  if (!(t >= kPi + 1.0 - kFeasSlack) || !(t <= 5.0 + kFeasSlack))
    throw DomainError("RescaledModel: t must lie in [pi+1, 5], got " + std::to_string(t_));
  arc_len = t - 1.0;
  ball_radius = 1.0;
  secant_min = 2.0;
}

double penetration_f(double s) {
  if (!(s >= 1.0)) throw DomainError("penetration_f: s must be >= 1");
  return std::sqrt(s * s - 1.0) + std::asin(1.0 / s);
}

double penetration_f_inverse(double y) {
  if (!(y >= kPi / 2)) throw DomainError("penetration_f_inverse: y must be >= pi/2");
  if (y <= kPi / 2) return 1.0;
  // f(s) > s gives f^{-1}(y) < y, so [1, max(2, y)] brackets the root.
  return bisect_increasing(penetration_f, 1.0, std::max(2.0, y), y);
}

double feasible_radius_max(double t) {
  return penetration_f_inverse(t - 1.0 - kPi / 2);
}

double pitch_angle(double t) {
  if (!(t >= 1.0)) throw DomainError("pitch_angle: t must be >= 1");
  return std::asin(1.0 / t);
}

std::pair<double, double> apex_scales(double t, double a, double b) {
  const double u = feasible_radius_max(t);
  if (!(a >= 1.0 - kFeasSlack) || !(a <= u + kFeasSlack) ||
      !(b >= 1.0 - kFeasSlack) || !(b <= u + kFeasSlack))
    throw FeasibilityError("apex_scales: |OP|, |OQ| must lie in [1, u(t)]");
  return {(t + 1.0 - a) / t, (t + 1.0 - b) / t};
}

double g_psi(double q_angle, double psi) {
  if (!(psi > 0.0) || !(psi < kPi / 2)) throw DomainError("g_psi: psi must lie in (0, pi/2)");
  if (!(q_angle >= 0.0) || !(q_angle <= kPi / 2 + psi - kAngleClamp))
    throw DomainError("g_psi: angle at or beyond the cos(psi - q) singularity");
  return std::exp(q_angle * std::tan(psi)) * std::cos(psi) / std::cos(psi - q_angle);
}

double tangency_angle(double t, double dist, double x) {
  const double psi = pitch_angle(t);
  const double ratio = dist / x;
  if (ratio < 1.0) throw DomainError("tangency_angle: dist < apex scale, no tangent exists");
  if (ratio == 1.0) return 0.0;
  const double hi = kPi / 2 + psi - kAngleClamp;
  return bisect_increasing([psi](double q) { return g_psi(q, psi); }, 0.0, hi, ratio);
}

double junction_angle(double x_p, double x_q, double psi) {
  if (!(x_p > 0.0) || !(x_p <= 1.0) || !(x_q > 0.0) || !(x_q <= 1.0))
    throw DomainError("junction_angle: apex scales must lie in (0, 1]");
  if (!(psi > 0.0) || !(psi < kPi / 2)) throw DomainError("junction_angle: psi must lie in (0, pi/2)");
  const double cot = 1.0 / std::tan(psi);
  return kPi / 2 - 0.5 * cot * std::log(x_q / x_p);
}

bool feasible(double t, double a, double b) {
  if (!(a >= 1.0) || !(b >= 1.0)) return false;
  return penetration_f(a) + penetration_f(b) <= t - 1.0 + kFeasSlack;
}

double SpiralBody::boundary_radius(double offset) const {
  return apex * std::exp(offset * std::tan(pitch));
}

bool SpiralBody::contains(double r, double theta) const {
  double off = std::fabs(theta - axis_angle);
  if (off > kPi) off = 2 * kPi - off;  // unsigned angle between directions
  if (off > max_angle) return false;
  return r < boundary_radius(off);
}

DetourConfig make_config(double t, double a, double b) {
  if (!(t >= kPi + 1.0 - kFeasSlack))
    throw FeasibilityError("make_config: feasible set is empty below t = pi+1");
  if (!(t <= 5.0 + kFeasSlack))
    throw DomainError("make_config: the four-arc structure is established only for t <= 5");
  const auto [x_p, x_q] = apex_scales(t, a, b);
  if (!feasible(t, a, b))
    throw FeasibilityError("make_config: f(|OP|) + f(|OQ|) exceeds t - 1");
  DetourConfig c;
  c.t = t;
  c.a = a;
  c.b = b;
  c.psi = pitch_angle(t);
  c.x_p = x_p;
  c.x_q = x_q;
  c.p = tangency_angle(t, a, x_p);
  c.q = tangency_angle(t, b, x_q);
  c.gamma = junction_angle(x_p, x_q, c.psi);
  return c;
}

}  // namespace knotdist
