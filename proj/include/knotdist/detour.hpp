#pragma once

#include "knotdist/geom.hpp"

namespace knotdist {

// The four components of the shortest detour: tangent segment at P, spiral
// arc P' to V, spiral arc V to Q', tangent segment at Q.
struct DetourBreakdown {
  double seg_pp;
  double spiral_pv;
  double spiral_vq;
  double seg_qq;
  double total;
};

struct StructureReport {
  double p, q, gamma;
  bool ok;
};

// q < gamma < pi - p: the four arcs are nonempty.
bool structure_holds(double p, double q, double gamma);

// Closed-form length of the shortest curve from P to Q around the
// intersection body. Symmetric in (a, b) term by term, so the swap identity
// holds exactly in floating point.
double detour_length_F(const DetourConfig& c);
double detour_length_F(double t, double a, double b);

// The same length assembled from the four component formulas. Throws
// StructureError if the arc structure degenerates.
DetourBreakdown detour_breakdown(const DetourConfig& c);
DetourBreakdown detour_breakdown(double t, double a, double b);

StructureReport structure_check(double t, double a, double b);

}  // namespace knotdist
