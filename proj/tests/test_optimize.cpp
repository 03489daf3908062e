#include <cmath>
#include <numbers>

#include <doctest.h>

#include "knotdist/detour.hpp"
#include "knotdist/optimize.hpp"
#include "knotdist/oracle.hpp"
#include "knotdist/parallel.hpp"

using namespace knotdist;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("feasible set") {
  const FeasibleSet fs(4.5);
  CHECK(fs.contains(1.1, 1.1));
  CHECK_FALSE(fs.contains(1.0, 2.0));
  CHECK_FALSE(fs.contains(0.9, 1.0));
  CHECK_THROWS_AS(FeasibleSet(3.0), FeasibilityError);
  CHECK_THROWS_AS(FeasibleSet(5.5), DomainError);
}

TEST_CASE("tolerances validate") {
  Tolerances tol;
  tol.grid_n = 1;
  CHECK_THROWS_AS(min_detour_L(4.5, tol), DomainError);
  tol = {};
  tol.cert_margin = 0.0;
  CHECK_THROWS_AS(certify_lower_bound(4.7, 4.85, tol), DomainError);
}

TEST_CASE("L at the singleton t = pi+1") {
  const MinResult r = min_detour_L(kPi + 1.0);
  CHECK(r.a == 1.0);
  CHECK(r.b == 1.0);
  CHECK(r.value == doctest::Approx(3.9611693459299301).epsilon(1e-12));
  CHECK(r.value - kPi > 0.8);  // L(pi+1) - (t-1) is far from tight
}

TEST_CASE("L against frozen references") {
  CHECK(min_detour_L(4.5).value == doctest::Approx(3.8074477375331455).epsilon(1e-9));
  CHECK(min_detour_L(5.0).value == doctest::Approx(3.7322420966185560).epsilon(1e-9));
  CHECK(min_detour_L(4.76).value == doctest::Approx(3.7662029009149105).epsilon(1e-9));

  // Sign change of L(t) - (t-1) across the range: positive at 4.76, negative
  // at 5.
  CHECK(min_detour_L(4.76).value - 3.76 > 1e-3);
  CHECK(min_detour_L(5.0).value - 4.0 < -0.2);

  // The minimizer sits on the symmetry diagonal.
  const MinResult r = min_detour_L(4.5);
  CHECK(std::fabs(r.a - r.b) <= 1e-12);
  CHECK(r.a == doctest::Approx(1.146779).epsilon(1e-4));
}

TEST_CASE("L is stable under grid refinement") {
  Tolerances coarse, fine;
  coarse.grid_n = 64;
  fine.grid_n = 128;
  fine.refine_depth = 10;
  CHECK(min_detour_L(4.5, coarse).value ==
        doctest::Approx(min_detour_L(4.5, fine).value).epsilon(1e-12));
}

TEST_CASE("certification of the threshold") {
  const Certificate cert = certify_lower_bound(4.7, 4.85);
  CHECK(cert.t_star > 4.76);
  CHECK(cert.t_star < 4.77);
  CHECK(cert.margin >= cert.tolerances.cert_margin - 1e-9);
  CHECK(cert.samples.size() == 129);
  CHECK(cert.samples.front()[0] == 4.7);
  CHECK(cert.samples.back()[0] == doctest::Approx(4.85).epsilon(1e-15));
  // The argmin stays on the diagonal and reproduces L(t_star).
  CHECK(std::fabs(cert.argmin_a - cert.argmin_b) <= 1e-10);
  const double L = detour_length_F(cert.t_star, cert.argmin_a, cert.argmin_b);
  CHECK(L - (cert.t_star - 1.0) == doctest::Approx(cert.margin).epsilon(1e-6));
}

TEST_CASE("certification when the inequality holds everywhere") {
  const Certificate cert = certify_lower_bound(4.2, 4.6);
  CHECK(cert.t_star == 4.6);
  CHECK(cert.margin > 0.01);
}

TEST_CASE("certification fails honestly when the range starts too high") {
  CHECK_THROWS_AS(certify_lower_bound(4.9, 4.98), NoCrossingError);
  CHECK_THROWS_AS(certify_lower_bound(4.5, 5.5), DomainError);
  CHECK_THROWS_AS(certify_lower_bound(4.8, 4.7), DomainError);
}

TEST_CASE("L-curve sampling") {
  const auto rows = sample_L_curve(kPi + 1.0, 5.0, 5);
  REQUIRE(rows.size() == 5);
  CHECK(rows.front().t == kPi + 1.0);
  CHECK(rows.back().t == 5.0);
  CHECK(rows.front().L == doctest::Approx(3.9611693459299301).epsilon(1e-9));
  for (const auto& r : rows) CHECK(r.t_minus_1 == r.t - 1.0);
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) CHECK(rows[i + 1].L < rows[i].L);

  CHECK_THROWS_AS(sample_L_curve(kPi + 1.0, 5.0, 1), DomainError);
  CHECK_THROWS_AS(sample_L_curve(3.0, 5.0, 4), DomainError);
}

TEST_CASE("results do not depend on the thread cap") {
  set_max_threads(1);
  const MinResult one = min_detour_L(4.3);
  const double oracle_one = oracle_shortest_path(4.3, 1.05, 1.08, 256);
  set_max_threads(3);
  const MinResult three = min_detour_L(4.3);
  const double oracle_three = oracle_shortest_path(4.3, 1.05, 1.08, 256);
  set_max_threads(0);

  CHECK(one.value == three.value);
  CHECK(one.a == three.a);
  CHECK(one.b == three.b);
  CHECK(oracle_one == oracle_three);
}
