#pragma once

#include <stdexcept>
#include <string>

namespace knotdist {

// Argument outside a function's mathematical domain (s < 1, angle past the
// cosine singularity, t below 1, ...).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// (t, a, b) violates the feasible-set constraints a,b in [1, u(t)],
// f(a) + f(b) <= t - 1.
struct FeasibilityError : std::domain_error {
  using std::domain_error::domain_error;
};

// A bracketed solve did not reach tolerance within its iteration budget, or
// the bracket does not contain the target.
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The four-arc detour structure q < gamma < pi - p fails; component arcs
// would be empty or negative.
struct StructureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The shortest-path oracle's visibility graph has no P-to-Q path; indicates a
// region construction or sampling bug, never a legitimate answer.
struct DisconnectedGraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Threshold search found no parameter satisfying the certified inequality.
struct NoCrossingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Curve file could not be parsed; message names the offending line.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Data violates a structural invariant (too few vertices, repeated points,
// non-increasing arc lengths).
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace knotdist
