#pragma once

#include <utility>

#include "knotdist/errors.hpp"

namespace knotdist {

inline constexpr double kRootTol = 1e-12;
inline constexpr int kRootMaxIter = 200;

// Solves fun(s) = target for a strictly increasing fun on [lo, hi] by plain
// bisection, to absolute tolerance tol on the argument. Bisection is chosen
// over faster schemes because monotonicity makes convergence unconditional.
template <class Fn>
double bisect_increasing(Fn&& fun, double lo, double hi, double target,
                         double tol = kRootTol, int max_iter = kRootMaxIter) {
  if (!(lo <= hi)) throw DomainError("bisect_increasing: empty bracket");
  if (fun(lo) > target || fun(hi) < target)
    throw ConvergenceError("bisect_increasing: target not bracketed");
  for (int i = 0; i < max_iter; ++i) {
    if (hi - lo <= tol) return 0.5 * (lo + hi);
    const double mid = 0.5 * (lo + hi);
    if (fun(mid) < target)
      lo = mid;
    else
      hi = mid;
  }
  if (hi - lo <= tol) return 0.5 * (lo + hi);
  throw ConvergenceError("bisect_increasing: iteration budget exhausted");
}

}  // namespace knotdist
