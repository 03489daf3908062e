#pragma once

#include <array>

namespace knotdist {

// Mechanical verification of the junction-angle analysis: the x(t) bounds,
// the feasible q-range, monotonicity of the auxiliary d function, and the
// per-case chain that forces gamma > q for every feasible configuration with
// t <= 5.
struct AppendixReport {
  double x5 = 0.0;      // x(5)
  double q_max = 0.0;   // max feasible tangency angle at t = 5
  double bridge = 0.0;  // pi/2 + (cot(psi(5))/2) ln x(5)
  double d_at[3] = {0.0, 0.0, 0.0};  // d at the checkpoints 0.9, 1.09, 1.23 (t = pi+1)

  bool x5_in_range = false;      // x(5) in (0.76, 1)
  bool x_monotone = false;       // x strictly decreasing on [pi+1, 5]
  bool q_range_ok = false;       // max feasible q < 1.32 for every sampled t <= 5
  bool bridge_ok = false;        // bridge > 0.9
  bool d_monotone = false;       // d decreasing in q and in t on [0.9,1.32]x[pi+1,5]
  bool gamma_gt_q = false;       // gamma > q on a dense feasible sample
  std::array<bool, 4> case_ok = {false, false, false, false};
  bool all_pass = false;

  // The source table's rows overlap ([0.9, 1.09) followed by [0.9, 1.23));
  // the verified partition uses the disjoint corrected intervals below.
  static constexpr std::array<double, 5> case_edges = {0.0, 0.9, 1.09, 1.23, 1.32};
  static constexpr std::array<double, 3> d_bounds = {-0.19, -0.33, -0.48};
  static constexpr bool partition_corrected = true;
};

// x(t) = 1 - (u(t) - 1)/t, strictly decreasing, with 0.76 < x(5) <= x(t) <= 1.
double x_of_t(double t);

// d(q, t) = (cot psi / 2) ln x_q with x_q = (t+1)/(t + g_psi(q)); d <= 0,
// d(0, t) = 0, decreasing in both arguments on the verified window.
double d_of(double q_angle, double t);

// Runs every check at the given sampling density; failures are recorded in
// the report, never thrown.
AppendixReport verify_appendix(int sample_density = 1000);

}  // namespace knotdist
