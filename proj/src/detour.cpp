#include "knotdist/detour.hpp"

#include <cmath>
#include <numbers>

namespace knotdist {

namespace {
constexpr double kPi = std::numbers::pi;

double tangent_term(double x, double ang, double k, double psi) {
  return x * std::exp(ang * k) * std::cos(ang) / std::cos(ang - psi);
}
}  // namespace

bool structure_holds(double p, double q, double gamma) {
  return q < gamma && gamma < kPi - p;
}

double detour_length_F(const DetourConfig& c) {
  if (!structure_holds(c.p, c.q, c.gamma))
    throw StructureError("detour_length_F: arc structure q < gamma < pi - p fails");
  const double k = std::tan(c.psi);
  const double lead = 2.0 * std::exp(kPi / 2 * k) / std::sin(c.psi) * std::sqrt(c.x_p * c.x_q);
  const double cot = std::sqrt(c.t * c.t - 1.0);
  return lead - cot * (tangent_term(c.x_q, c.q, k, c.psi) + tangent_term(c.x_p, c.p, k, c.psi));
}

double detour_length_F(double t, double a, double b) {
  return detour_length_F(make_config(t, a, b));
}

DetourBreakdown detour_breakdown(const DetourConfig& c) {
  if (!structure_holds(c.p, c.q, c.gamma))
    throw StructureError("detour_breakdown: arc structure q < gamma < pi - p fails");
  const double k = std::tan(c.psi);
  DetourBreakdown d;
  d.seg_pp = c.x_p * std::exp(c.p * k) * std::sin(c.p) / std::cos(c.p - c.psi);
  d.seg_qq = c.x_q * std::exp(c.q * k) * std::sin(c.q) / std::cos(c.q - c.psi);
  // Spiral arc length is t times the radial gain; both arcs end at V, whose
  // radius is sqrt(x_p x_q) e^{(pi/2) tan psi} by the junction identity.
  const double apex_v = std::sqrt(c.x_p * c.x_q) * std::exp(kPi / 2 * k);
  d.spiral_vq = c.t * (apex_v - c.x_q * std::exp(c.q * k));
  d.spiral_pv = c.t * (apex_v - c.x_p * std::exp(c.p * k));
  d.total = d.seg_pp + d.spiral_pv + d.spiral_vq + d.seg_qq;
  return d;
}

DetourBreakdown detour_breakdown(double t, double a, double b) {
  return detour_breakdown(make_config(t, a, b));
}

StructureReport structure_check(double t, double a, double b) {
  const DetourConfig c = make_config(t, a, b);
  return {c.p, c.q, c.gamma, structure_holds(c.p, c.q, c.gamma)};
}

}  // namespace knotdist
