#pragma once

#include <array>
#include <vector>

#include "knotdist/geom.hpp"

namespace knotdist {

// {(a, b) : a, b >= 1, f(a) + f(b) <= t - 1}. Nonempty iff t >= pi+1; the
// singleton {(1, 1)} at t = pi+1 exactly; contained in [1, u(t)]^2.
struct FeasibleSet {
  double t;
  double radius_max;  // u(t)
  explicit FeasibleSet(double t);
  bool contains(double a, double b) const;
};

// Every numeric knob in one place. Defaults are the certified configuration;
// tests pin them.
struct Tolerances {
  double root_tol = 1e-12;
  int grid_n = 64;       // initial grid per axis
  int refine_depth = 8;  // shrink-and-rescan rounds
  double t_tol = 1e-6;   // threshold bisection width
  double cert_margin = 1e-4;
  void validate() const;
};

struct MinResult {
  double value;  // L(t)
  double a, b;   // argmin
};

// L(t) = min F over FeasibleSet(t): full grid scan over a <= b (F is
// symmetric), then refine_depth rounds of a 17x17 rescan in a box shrunk by
// 4 per round around the incumbent. The result is an upper bound on the true
// minimum; ties break to the lexicographically smallest (a, b).
MinResult min_detour_L(double t, const Tolerances& tol = {});

struct Certificate {
  double t_star;
  double margin;  // min over verification evaluations of L(t_star) - (t_star - 1)
  double argmin_a, argmin_b;
  std::vector<std::array<double, 2>> samples;  // coarse (t, L(t)) scan
  Tolerances tolerances;
};

// Certifies max{t in [t_min, t_max] : L(t) >= t - 1} from below: coarse scan
// of the slack predicate L(t) - (t - 1) >= cert_margin, bisection on its last
// sign change, then re-verification at t_star with a doubled grid and deeper
// refinement. Requiring the full cert_margin during the search (not only at
// re-verification) keeps the reported t_star self-consistent; it sits
// cert_margin / |d(L - t)/dt| below the raw crossing, well inside t_tol-level
// reproducibility across grid sizes.
Certificate certify_lower_bound(double t_min, double t_max, const Tolerances& tol = {});

struct LCurveRow {
  double t, L, t_minus_1;
};

// Uniform sample of L over [t_min, t_max], endpoints included.
std::vector<LCurveRow> sample_L_curve(double t_min, double t_max, int steps,
                                      const Tolerances& tol = {});

}  // namespace knotdist
