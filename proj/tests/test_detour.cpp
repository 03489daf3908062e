#include <cmath>
#include <numbers>
#include <random>
#include <tuple>

#include <doctest.h>

#include "knotdist/detour.hpp"

using namespace knotdist;

namespace {
constexpr double kPi = std::numbers::pi;

// Deterministic feasible configurations via rejection sampling.
std::vector<std::pair<double, double>> feasible_sample(double t, int count, unsigned seed) {
  std::mt19937 rng(seed);
  const double u = feasible_radius_max(t);
  std::uniform_real_distribution<double> dist(1.0, u);
  std::vector<std::pair<double, double>> out;
  while (static_cast<int>(out.size()) < count) {
    const double a = dist(rng), b = dist(rng);
    if (feasible(t, a, b)) out.emplace_back(a, b);
  }
  return out;
}
}  // namespace

TEST_CASE("closed-form detour length against frozen references") {
  // High-precision evaluations of F, truncated to double.
  CHECK(detour_length_F(kPi + 1.0, 1.0, 1.0) ==
        doctest::Approx(3.9611693459299301).epsilon(1e-12));
  CHECK(detour_length_F(4.5, 1.2, 1.3) == doctest::Approx(3.8306080575101461).epsilon(1e-12));
  CHECK(detour_length_F(5.0, 1.8, 1.1) == doctest::Approx(3.9809695195366045).epsilon(1e-12));
}

TEST_CASE("swap symmetry is exact in floating point") {
  using Cfg = std::tuple<double, double, double>;
  for (auto [t, a, b] : {Cfg{4.5, 1.2, 1.3}, Cfg{5.0, 1.8, 1.1}, Cfg{4.76, 1.13, 1.05}})
    CHECK(detour_length_F(t, a, b) == detour_length_F(t, b, a));
}

TEST_CASE("breakdown components against frozen references") {
  const DetourBreakdown bd = detour_breakdown(4.5, 1.2, 1.3);
  CHECK(bd.seg_pp == doctest::Approx(0.760864006049).epsilon(1e-10));
  CHECK(bd.spiral_pv == doctest::Approx(1.07378712773).epsilon(1e-10));
  CHECK(bd.spiral_vq == doctest::Approx(1.04113579507).epsilon(1e-10));
  CHECK(bd.seg_qq == doctest::Approx(0.954821128666).epsilon(1e-10));
  CHECK(bd.total == doctest::Approx(detour_length_F(4.5, 1.2, 1.3)).epsilon(1e-12));
}

TEST_CASE("degenerate configuration at t = pi+1") {
  // Tangency angles vanish, so the straight segments vanish and the two
  // spiral arcs split the length evenly.
  const DetourBreakdown bd = detour_breakdown(kPi + 1.0, 1.0, 1.0);
  CHECK(bd.seg_pp == 0.0);
  CHECK(bd.seg_qq == 0.0);
  CHECK(bd.spiral_pv == bd.spiral_vq);
  CHECK(bd.total == doctest::Approx(3.9611693459299301).epsilon(1e-12));
}

TEST_CASE("breakdown total reproduces F on random feasible configurations") {
  for (double t : {4.2, 4.5, 4.76, 5.0}) {
    for (auto [a, b] : feasible_sample(t, 100, 12345)) {
      const double F = detour_length_F(t, a, b);
      const DetourBreakdown bd = detour_breakdown(t, a, b);
      CHECK(std::fabs(bd.total - F) / F <= 1e-12);
      CHECK(bd.seg_pp >= 0.0);
      CHECK(bd.seg_qq >= 0.0);
      CHECK(bd.spiral_pv > 0.0);
      CHECK(bd.spiral_vq > 0.0);
      // Any detour is at least as long as the straight path through O.
      CHECK(F > a + b);
    }
  }
}

TEST_CASE("arc structure holds across the feasible grid") {
  for (double t : {kPi + 1.0, 4.2, 4.5, 5.0}) {
    const double u = feasible_radius_max(t);
    for (int i = 0; i < 20; ++i)
      for (int j = 0; j < 20; ++j) {
        const double a = 1.0 + (u - 1.0) * i / 19.0;
        const double b = 1.0 + (u - 1.0) * j / 19.0;
        if (!feasible(t, a, b)) continue;
        const StructureReport rep = structure_check(t, a, b);
        CHECK(rep.ok);
        CHECK(rep.q < rep.gamma);
        CHECK(rep.gamma < kPi - rep.p);
      }
  }
}

TEST_CASE("structure violations are rejected") {
  CHECK_FALSE(structure_holds(0.5, 0.5, 0.3));
  DetourConfig c = make_config(4.5, 1.2, 1.3);
  c.gamma = c.q - 0.1;  // corrupt the junction
  CHECK_THROWS_AS(detour_length_F(c), StructureError);
  CHECK_THROWS_AS(detour_breakdown(c), StructureError);
}
