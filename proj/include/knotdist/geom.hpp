#pragma once

#include <utility>

#include "knotdist/errors.hpp"

namespace knotdist {

// Distance below the cosine singularity at which tangency angles are capped;
// feasible configurations stay far inside (q < 1.32 < pi/2 + psi).
inline constexpr double kAngleClamp = 1e-9;

// Slack applied to feasibility comparisons so that boundary configurations
// reached through the root-tolerance of u(t) still validate.
inline constexpr double kFeasSlack = 1e-9;

// The model after rescaling by the shortest boundary-essential arc: the
// avoiding ball has radius exactly 1 and every essential secant is >= 2.
struct RescaledModel {
  double t;             // distortion parameter, in [pi+1, 5]
  double arc_len;       // shortest boundary-essential arc = t - 1
  double ball_radius;   // always 1
  double secant_min;    // always 2
  explicit RescaledModel(double t);
};

// f(s) = sqrt(s^2 - 1) + arcsin(1/s). Strictly increasing, f(1) = pi/2,
// f(s) > s.
double penetration_f(double s);

// Unique s >= 1 with penetration_f(s) = y, by bracketed bisection.
double penetration_f_inverse(double y);

// u(t) = f^{-1}(t - 1 - pi/2), the per-coordinate cap of the feasible set.
double feasible_radius_max(double t);

// psi = arcsin(1/t).
double pitch_angle(double t);

// (x_p, x_q) = ((t+1-a)/t, (t+1-b)/t), the spiral apex scales.
std::pair<double, double> apex_scales(double t, double a, double b);

// g_psi(q) = e^{q tan psi} cos psi / cos(psi - q); equals |OQ|/x_q at
// tangency. g_psi(0) = 1 and g_psi is strictly increasing on its domain.
double g_psi(double q_angle, double psi);

// Unique q in [0, pi/2 + psi) with g_psi(q, pitch_angle(t)) = dist/x.
double tangency_angle(double t, double dist, double x);

// gamma = pi/2 - (cot psi / 2) ln(x_q / x_p): the polar angle at which the
// two spiral boundaries meet.
double junction_angle(double x_p, double x_q, double psi);

// True iff a, b >= 1 and f(a) + f(b) <= t - 1 (within kFeasSlack).
bool feasible(double t, double a, double b);

// One rotation body B = {X : |OX| < apex * e^{angle * tan(pitch)}}, reduced
// to its planar profile. axis_angle is the polar direction of the axis;
// angle means the unsigned angle between OX and the axis, capped by
// max_angle.
struct SpiralBody {
  double apex;
  double pitch;
  double axis_angle;
  double max_angle;

  double boundary_radius(double offset) const;
  bool contains(double r, double theta) const;  // strict interior
};

// A full configuration with its derived spiral geometry. Construct through
// make_config, which validates feasibility and the t-range.
struct DetourConfig {
  double t;
  double a, b;       // |OP|, |OQ|
  double psi;
  double x_p, x_q;
  double p, q;       // tangency angles
  double gamma;      // junction angle
};

DetourConfig make_config(double t, double a, double b);

}  // namespace knotdist
