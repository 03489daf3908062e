#include "knotdist/appendix.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "knotdist/detour.hpp"
#include "knotdist/geom.hpp"
#include "knotdist/parallel.hpp"

namespace knotdist {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kQWindowLo = 0.9;
constexpr double kQWindowHi = 1.32;
}  // namespace

double x_of_t(double t) {
  if (!(t >= kPi + 1.0 - kFeasSlack)) throw DomainError("x_of_t: t must be >= pi+1");
  return 1.0 - (feasible_radius_max(t) - 1.0) / t;
}

double d_of(double q_angle, double t) {
  if (!(q_angle >= 0.0) || !(q_angle <= kQWindowHi))
    throw DomainError("d_of: q outside [0, 1.32]");
  if (!(t >= kPi + 1.0 - kFeasSlack) || !(t <= 5.0 + kFeasSlack))
    throw DomainError("d_of: t outside [pi+1, 5]");
  const double psi = pitch_angle(t);
  const double x_q = (t + 1.0) / (t + g_psi(q_angle, psi));
  const double cot = std::sqrt(t * t - 1.0);
  return 0.5 * cot * std::log(x_q);
}

AppendixReport verify_appendix(int sample_density) {
  if (sample_density < 100) throw DomainError("verify_appendix: need sample_density >= 100");
  const int n = sample_density;
  AppendixReport rep;

  rep.x5 = x_of_t(5.0);
  rep.x5_in_range = rep.x5 > 0.76 && rep.x5 < 1.0;

  // x strictly decreasing over a uniform t sample.
  {
    std::vector<double> xs(n);
    parallel_chunks(n, [&](std::size_t i0, std::size_t i1) {
      for (std::size_t i = i0; i < i1; ++i)
        xs[i] = x_of_t(kPi + 1.0 + (5.0 - kPi - 1.0) * static_cast<double>(i) / (n - 1));
    });
    rep.x_monotone = true;
    for (int i = 0; i + 1 < n; ++i)
      if (!(xs[i + 1] < xs[i])) rep.x_monotone = false;
  }

  // Max feasible q stays below 1.32 for every t <= 5; the extreme is b = u(t).
  {
    std::vector<double> qs(n);
    parallel_chunks(n, [&](std::size_t i0, std::size_t i1) {
      for (std::size_t i = i0; i < i1; ++i) {
        const double t = kPi + 1.0 + (5.0 - kPi - 1.0) * static_cast<double>(i) / (n - 1);
        qs[i] = tangency_angle(t, feasible_radius_max(t), x_of_t(t));
      }
    });
    rep.q_max = *std::max_element(qs.begin(), qs.end());
    rep.q_range_ok = rep.q_max < kQWindowHi;
  }

  // cot(psi(5))/2 enters as computed, no radical constant is inlined.
  rep.bridge = kPi / 2 + 0.5 / std::tan(pitch_angle(5.0)) * std::log(rep.x5);
  rep.bridge_ok = rep.bridge > 0.9;

  for (int i = 0; i < 3; ++i) rep.d_at[i] = d_of(AppendixReport::case_edges[i + 1], kPi + 1.0);

  // d decreasing in both arguments: finite-difference sign checks on a full
  // grid over [0.9, 1.32] x [pi+1, 5], rows evaluated in parallel.
  {
    const int m = std::max(32, n / 2);
    std::vector<std::vector<double>> d(m, std::vector<double>(m));
    parallel_chunks(m, [&](std::size_t i0, std::size_t i1) {
      for (std::size_t i = i0; i < i1; ++i) {
        const double q = kQWindowLo + (kQWindowHi - kQWindowLo) * static_cast<double>(i) / (m - 1);
        for (int j = 0; j < m; ++j) {
          const double t = kPi + 1.0 + (5.0 - kPi - 1.0) * static_cast<double>(j) / (m - 1);
          d[i][j] = d_of(q, t);
        }
      }
    });
    bool ok = true;
    for (int i = 0; i < m && ok; ++i)
      for (int j = 0; j < m; ++j) {
        if (i + 1 < m && !(d[i + 1][j] < d[i][j])) { ok = false; break; }
        if (j + 1 < m && !(d[i][j + 1] < d[i][j])) { ok = false; break; }
      }
    rep.d_monotone = ok;
  }

  // Per-case chain: within [lo, hi), d(q) <= d(lo) < bound, so
  // q + d(q, t) < hi + bound <= 0.9 < gamma. The first case needs no d at
  // all: q < 0.9 < gamma directly from the bridge inequality. hi + bound is
  // an identity between two-decimal table constants (1.09 - 0.19 lands on a
  // rounding midpoint in doubles), so it is checked in hundredths.
  rep.case_ok[0] = rep.bridge_ok;
  for (int c = 1; c < 4; ++c) {
    const double d_lo = rep.d_at[c - 1];
    const double bound = AppendixReport::d_bounds[c - 1];
    const double hi = AppendixReport::case_edges[c + 1];
    const long hundredths = std::lround(hi * 100.0) + std::lround(bound * 100.0);
    rep.case_ok[c] = d_lo < bound && hundredths <= 90 && rep.bridge_ok;
  }

  // gamma > q pointwise on a dense feasible sample, via the equivalent form
  // pi/2 + (cot/2) ln x_p > q + (cot/2) ln x_q checked as assembled configs.
  {
    const int nt = std::max(8, n / 100);
    const int nab = std::max(24, n / 10);
    std::vector<char> t_ok(nt, 1);
    parallel_chunks(nt, [&](std::size_t i0, std::size_t i1) {
      for (std::size_t ti = i0; ti < i1; ++ti) {
        const double t = kPi + 1.0 + (5.0 - kPi - 1.0) * static_cast<double>(ti) / (nt - 1);
        const double u = feasible_radius_max(t);
        bool ok = true;
        for (int i = 0; i < nab && ok; ++i) {
          const double a = 1.0 + (u - 1.0) * static_cast<double>(i) / (nab - 1);
          for (int j = 0; j < nab; ++j) {
            const double b = 1.0 + (u - 1.0) * static_cast<double>(j) / (nab - 1);
            if (!feasible(t, a, b)) continue;
            const DetourConfig c = make_config(t, a, b);
            if (!(c.gamma > c.q)) { ok = false; break; }
          }
        }
        t_ok[ti] = ok;
      }
    });
    rep.gamma_gt_q =
        std::all_of(t_ok.begin(), t_ok.end(), [](char c) { return c != 0; });
  }

  rep.all_pass = rep.x5_in_range && rep.x_monotone && rep.q_range_ok && rep.bridge_ok &&
                 rep.d_monotone && rep.gamma_gt_q && rep.case_ok[0] && rep.case_ok[1] &&
                 rep.case_ok[2] && rep.case_ok[3];
  return rep;
}

}  // namespace knotdist
