#include <cmath>
#include <numbers>

#include <doctest.h>

#include "knotdist/geom.hpp"

using namespace knotdist;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("rescaled model pins the normalization") {
  RescaledModel m(4.5);
  CHECK(m.arc_len == 3.5);
  CHECK(m.ball_radius == 1.0);
  CHECK(m.secant_min == 2.0);
  CHECK_THROWS_AS(RescaledModel(3.0), DomainError);
  CHECK_THROWS_AS(RescaledModel(5.2), DomainError);
}

TEST_CASE("penetration depth f") {
  // f(1) = pi/2 with no rounding: sqrt(0) + asin(1).
  CHECK(penetration_f(1.0) == kPi / 2);
  CHECK(penetration_f(2.0) == doctest::Approx(std::sqrt(3.0) + kPi / 6).epsilon(1e-15));
  CHECK_THROWS_AS(penetration_f(0.5), DomainError);

  // Strictly increasing and above the identity on [1, 4].
  double prev = penetration_f(1.0);
  for (int i = 1; i <= 300; ++i) {
    const double s = 1.0 + 3.0 * i / 300.0;
    const double v = penetration_f(s);
    CHECK(v > prev);
    CHECK(v > s);
    prev = v;
  }
}

TEST_CASE("penetration f inverse") {
  CHECK(penetration_f_inverse(kPi / 2) == 1.0);
  CHECK_THROWS_AS(penetration_f_inverse(1.5), DomainError);

  for (double s : {1.1, 1.5, 2.0, 2.1974736322912289})
    CHECK(penetration_f_inverse(penetration_f(s)) == doctest::Approx(s).epsilon(1e-10));

  // u(5) = f^{-1}(4 - pi/2), frozen from a high-precision evaluation.
  CHECK(feasible_radius_max(5.0) == doctest::Approx(2.1974736322912289).epsilon(1e-11));
  // u(pi+1) = f^{-1}(pi/2) hits the closed end of the bracket exactly.
  CHECK(feasible_radius_max(kPi + 1.0) == 1.0);
}

TEST_CASE("pitch angle and the cotangent identity") {
  CHECK(pitch_angle(2.0) == doctest::Approx(kPi / 6).epsilon(1e-15));
  CHECK_THROWS_AS(pitch_angle(0.5), DomainError);
  for (double t : {kPi + 1.0, 4.2, 4.76, 5.0})
    CHECK(1.0 / std::tan(pitch_angle(t)) ==
          doctest::Approx(std::sqrt(t * t - 1.0)).epsilon(1e-13));
}

TEST_CASE("apex scales") {
  const double u5 = feasible_radius_max(5.0);
  const auto [x_p, x_q] = apex_scales(5.0, u5, 1.0);
  CHECK(x_p == doctest::Approx(0.76050527354175422).epsilon(1e-12));
  CHECK(x_q == 1.0);  // (5 + 1 - 1)/5 is exact

  const auto fwd = apex_scales(4.5, 1.2, 1.3);
  const auto rev = apex_scales(4.5, 1.3, 1.2);
  CHECK(fwd.first == rev.second);
  CHECK(fwd.second == rev.first);

  CHECK_THROWS_AS(apex_scales(4.5, 3.0, 1.0), FeasibilityError);
  CHECK_THROWS_AS(apex_scales(4.5, 1.0, 0.5), FeasibilityError);
}

TEST_CASE("g_psi") {
  const double psi = pitch_angle(4.5);
  CHECK(g_psi(0.0, psi) == 1.0);  // e^0 cos(psi)/cos(psi), exactly

  double prev = 1.0;
  const double hi = kPi / 2 + psi - 0.01;
  for (int i = 1; i <= 200; ++i) {
    const double v = g_psi(hi * i / 200.0, psi);
    CHECK(v > prev);
    prev = v;
  }

  CHECK_THROWS_AS(g_psi(0.5, 0.0), DomainError);
  CHECK_THROWS_AS(g_psi(0.5, kPi / 2), DomainError);
  CHECK_THROWS_AS(g_psi(kPi / 2 + psi, psi), DomainError);
  CHECK_THROWS_AS(g_psi(-0.1, psi), DomainError);
}

TEST_CASE("tangency angle") {
  const double psi = pitch_angle(4.5);
  // Round trip through g_psi.
  for (double q0 : {0.1, 0.7, 1.2}) {
    const double dist = 0.9 * g_psi(q0, psi);
    CHECK(tangency_angle(4.5, dist, 0.9) == doctest::Approx(q0).epsilon(1e-10));
  }
  // dist equal to the apex scale means tangency on the axis.
  CHECK(tangency_angle(4.5, 0.85, 0.85) == 0.0);
  CHECK_THROWS_AS(tangency_angle(4.5, 0.8, 0.9), DomainError);
}

TEST_CASE("junction angle") {
  const double psi = pitch_angle(4.5);
  CHECK(junction_angle(1.0, 1.0, psi) == kPi / 2);  // ln(1) = 0 exactly

  // Swapping the scales reflects the junction across the mid-axis.
  CHECK(junction_angle(0.9, 0.8, psi) + junction_angle(0.8, 0.9, psi) ==
        doctest::Approx(kPi).epsilon(1e-15));

  // Both spirals pass through V: x_q e^{k gamma} = x_p e^{k (pi - gamma)}.
  const double k = std::tan(psi);
  for (auto [xp, xq] : {std::pair{0.9, 0.8}, {0.76, 1.0}, {0.95, 0.93}}) {
    const double g = junction_angle(xp, xq, psi);
    const double lhs = xq * std::exp(k * g);
    const double rhs = xp * std::exp(k * (kPi - g));
    CHECK(std::fabs(lhs - rhs) <= 1e-12 * std::max(lhs, rhs));
  }

  // Extreme scale imbalance pushes the junction past the axis.
  CHECK(junction_angle(0.05, 1.0, pitch_angle(50.0)) < 0.0);

  CHECK_THROWS_AS(junction_angle(0.0, 1.0, psi), DomainError);
  CHECK_THROWS_AS(junction_angle(1.1, 1.0, psi), DomainError);
  CHECK_THROWS_AS(junction_angle(1.0, 1.0, 0.0), DomainError);
}

TEST_CASE("feasibility predicate") {
  CHECK(feasible(kPi + 1.0, 1.0, 1.0));
  CHECK_FALSE(feasible(kPi + 1.0, 1.05, 1.0));
  CHECK(feasible(5.0, 1.8, 1.1));
  CHECK_FALSE(feasible(4.2, 1.16, 1.16));
  CHECK_FALSE(feasible(4.5, 0.9, 1.0));  // below the ball radius
}

TEST_CASE("spiral body profile") {
  const double psi = pitch_angle(4.5);
  SpiralBody body{0.9, psi, 0.0, kPi / 2 + psi};
  CHECK(body.boundary_radius(0.0) == 0.9);
  CHECK(body.contains(0.9 * 0.999, 0.0));
  CHECK_FALSE(body.contains(0.9 * 1.001, 0.0));
  // Radius grows with the angular offset.
  CHECK(body.boundary_radius(1.0) > body.boundary_radius(0.5));
  // Angles fold onto [0, pi]; the profile is a surface of rotation.
  CHECK(body.contains(0.91, 0.1) == body.contains(0.91, 2 * kPi - 0.1));
  CHECK(body.contains(0.91, 0.1) == body.contains(0.91, -0.1));
  // Beyond the angular cap, nothing is inside.
  CHECK_FALSE(body.contains(0.01, kPi / 2 + psi + 0.05));
}

TEST_CASE("make_config validates and derives") {
  const DetourConfig c = make_config(kPi + 1.0, 1.0, 1.0);
  CHECK(c.p == 0.0);
  CHECK(c.q == 0.0);
  CHECK(c.gamma == kPi / 2);
  CHECK(c.x_p == 1.0);
  CHECK(c.x_q == 1.0);

  // A boundary distance of exactly 1 still gives a zero tangency angle.
  const DetourConfig c2 = make_config(4.76, 1.1, 1.0);
  CHECK(c2.q == 0.0);
  CHECK(c2.p > 0.0);

  CHECK_THROWS_AS(make_config(4.0, 1.0, 1.0), FeasibilityError);   // below pi+1
  CHECK_THROWS_AS(make_config(5.5, 1.0, 1.0), DomainError);        // above the search cap
  CHECK_THROWS_AS(make_config(4.2, 1.16, 1.16), FeasibilityError); // budget exceeded
  CHECK_THROWS_AS(make_config(4.5, 2.5, 1.0), FeasibilityError);   // beyond u(t)
}
