#include "knotdist/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "knotdist/detour.hpp"
#include "knotdist/parallel.hpp"

namespace knotdist {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kScanPoints = 129;     // coarse threshold scan resolution
constexpr int kRefineGrid = 16;      // refinement rescan is (kRefineGrid+1)^2
constexpr double kGridSlack = 1e-12; // admit grid points on the constraint boundary

struct Incumbent {
  double value = std::numeric_limits<double>::infinity();
  double a = 0.0, b = 0.0;
  // Strictly-better or equal-with-smaller-pair: makes the reduction result
  // independent of evaluation order and partitioning.
  void offer(double v, double av, double bv) {
    if (v < value || (v == value && (av < a || (av == a && bv < b)))) {
      value = v;
      a = av;
      b = bv;
    }
  }
  void offer(const Incumbent& o) {
    if (o.value < std::numeric_limits<double>::infinity()) offer(o.value, o.a, o.b);
  }
};

double eval_F(double t, double a, double b) { return detour_length_F(make_config(t, a, b)); }

}  // namespace

FeasibleSet::FeasibleSet(double t_) : t(t_) {
  if (!(t >= kPi + 1.0 - kFeasSlack))
    throw FeasibilityError("FeasibleSet: empty below t = pi+1");
  if (!(t <= 5.0 + kFeasSlack))
    throw DomainError("FeasibleSet: no search above t = 5");
  radius_max = feasible_radius_max(t);
}

bool FeasibleSet::contains(double a, double b) const { return feasible(t, a, b); }

void Tolerances::validate() const {
  if (!(root_tol > 0.0) || !(t_tol > 0.0) || !(cert_margin > 0.0) || grid_n < 2 ||
      refine_depth < 0)
    throw DomainError("Tolerances: root_tol, t_tol, cert_margin must be positive, grid_n >= 2");
}

MinResult min_detour_L(double t, const Tolerances& tol) {
  tol.validate();
  const FeasibleSet feas(t);
  const double lo = 1.0, hi = feas.radius_max;
  if (hi - lo < 1e-14) {
    // Singleton feasible set at t = pi+1.
    return {eval_F(t, 1.0, 1.0), 1.0, 1.0};
  }
  const double budget = t - 1.0;
  const double step = (hi - lo) / (tol.grid_n - 1);

  // Coarse scan over a <= b, rows in parallel, reduced in order.
  std::vector<Incumbent> row_best(tol.grid_n);
  parallel_chunks(tol.grid_n, [&](std::size_t r0, std::size_t r1) {
    for (std::size_t i = r0; i < r1; ++i) {
      const double a = lo + i * step;
      const double fa = penetration_f(a);
      Incumbent inc;
      for (int j = static_cast<int>(i); j < tol.grid_n; ++j) {
        const double b = lo + j * step;
        if (fa + penetration_f(b) <= budget + kGridSlack) inc.offer(eval_F(t, a, b), a, b);
      }
      row_best[i] = inc;
    }
  });
  Incumbent best;
  for (const auto& rb : row_best) best.offer(rb);
  if (!(best.value < std::numeric_limits<double>::infinity())) {
    // Grid missed the feasible blob (possible just above pi+1); (1,1) is
    // always feasible there.
    best.offer(eval_F(t, 1.0, 1.0), 1.0, 1.0);
  }

  double box = 2.0 * step;
  for (int round = 0; round < tol.refine_depth; ++round) {
    const double a0 = best.a, b0 = best.b;
    const double cell = box / kRefineGrid;
    std::vector<Incumbent> rb(kRefineGrid + 1);
    parallel_chunks(kRefineGrid + 1, [&](std::size_t r0, std::size_t r1) {
      for (std::size_t i = r0; i < r1; ++i) {
        const double a = std::clamp(a0 - box / 2 + i * cell, lo, hi);
        const double fa = penetration_f(a);
        Incumbent inc;
        for (int j = 0; j <= kRefineGrid; ++j) {
          const double b = std::clamp(b0 - box / 2 + j * cell, lo, hi);
          if (fa + penetration_f(b) <= budget + kGridSlack) inc.offer(eval_F(t, a, b), a, b);
        }
        rb[i] = inc;
      }
    });
    for (const auto& r : rb) best.offer(r);
    box /= 4.0;
  }
  return {best.value, best.a, best.b};
}

Certificate certify_lower_bound(double t_min, double t_max, const Tolerances& tol) {
  tol.validate();
  if (!(t_min >= kPi + 1.0 - kFeasSlack) || !(t_max <= 5.0 + kFeasSlack) || !(t_min < t_max))
    throw DomainError("certify_lower_bound: need pi+1 <= t_min < t_max <= 5");

  auto slack_ok = [&](double t) { return min_detour_L(t, tol).value - (t - 1.0) >= tol.cert_margin; };

  Certificate cert;
  cert.tolerances = tol;
  std::vector<double> ts(kScanPoints);
  for (int i = 0; i < kScanPoints; ++i)
    ts[i] = t_min + (t_max - t_min) * i / (kScanPoints - 1);
  cert.samples.resize(kScanPoints);
  std::vector<char> pass(kScanPoints);
  parallel_chunks(kScanPoints, [&](std::size_t i0, std::size_t i1) {
    for (std::size_t i = i0; i < i1; ++i) {
      const double L = min_detour_L(ts[i], tol).value;
      cert.samples[i] = {ts[i], L};
      pass[i] = L - (ts[i] - 1.0) >= tol.cert_margin;
    }
  });

  if (!pass[0])
    throw NoCrossingError("certify_lower_bound: L(t) < t - 1 + cert_margin at t_min");

  double t_star;
  if (std::all_of(pass.begin(), pass.end(), [](char c) { return c != 0; })) {
    t_star = t_max;  // inequality holds throughout the range
  } else {
    int last = 0;
    for (int i = 0; i + 1 < kScanPoints; ++i)
      if (pass[i] && !pass[i + 1]) last = i;
    double lo = ts[last], hi = ts[last + 1];
    while (hi - lo > tol.t_tol) {
      const double mid = 0.5 * (lo + hi);
      if (slack_ok(mid))
        lo = mid;
      else
        hi = mid;
    }
    t_star = lo;
  }

  // Re-verify at t_star with a finer grid before emitting.
  Tolerances fine = tol;
  fine.grid_n = tol.grid_n * 2;
  fine.refine_depth = tol.refine_depth + 2;
  const MinResult at_star = min_detour_L(t_star, tol);
  const MinResult at_star_fine = min_detour_L(t_star, fine);
  cert.t_star = t_star;
  cert.margin =
      std::min(at_star.value, at_star_fine.value) - (t_star - 1.0);
  cert.argmin_a = at_star_fine.a;
  cert.argmin_b = at_star_fine.b;
  // The finer grid may sit below the search grid by at most the refinement
  // tolerance; anything worse means the search grid was not converged.
  if (!(cert.margin >= tol.cert_margin - 1e-9))
    throw NoCrossingError("certify_lower_bound: margin lost under re-verification");
  return cert;
}

std::vector<LCurveRow> sample_L_curve(double t_min, double t_max, int steps,
                                      const Tolerances& tol) {
  tol.validate();
  if (steps < 2) throw DomainError("sample_L_curve: need steps >= 2");
  if (!(t_min >= kPi + 1.0 - kFeasSlack) || !(t_max <= 5.0 + kFeasSlack) || !(t_min < t_max))
    throw DomainError("sample_L_curve: need pi+1 <= t_min < t_max <= 5");
  std::vector<LCurveRow> rows(steps);
  parallel_chunks(steps, [&](std::size_t i0, std::size_t i1) {
    for (std::size_t i = i0; i < i1; ++i) {
      const double t = t_min + (t_max - t_min) * static_cast<double>(i) / (steps - 1);
      rows[i] = {t, min_detour_L(t, tol).value, t - 1.0};
    }
  });
  return rows;
}

}  // namespace knotdist
