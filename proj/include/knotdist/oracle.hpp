#pragma once

#include <Eigen/Core>
#include <vector>

#include "knotdist/geom.hpp"

namespace knotdist {

// Planar section of the intersection body B_P cap B_Q in the P-O-Q plane.
// O sits at the origin, Q on the +x axis, P on the -x axis. A point at polar
// angle th in [0, pi] (the section is mirror-symmetric in the axis) is
// interior iff ln r < min(ln x_q + k th, ln x_p + k (pi - th)), k = tan psi.
struct PlanarRegion {
  double t, a, b;
  double k;                    // tan(pitch angle)
  double x_p, x_q;
  double gamma;                // polar angle of the junction point V
  Eigen::Vector2d p_pos, q_pos;
  std::vector<Eigen::Vector2d> boundary;  // nodes from angle 0 (near Q) to pi (near P)
  std::vector<double> theta;              // their polar angles; contains gamma

  // Interior test for an arbitrary planar point (strict, by the defining
  // radial inequality).
  bool interior(const Eigen::Vector2d& x) const;
};

// Samples the region boundary with n_boundary nodes, uniform in angle per
// spiral arc; the junction V and both axis points are always nodes. Boundary
// nodes are pushed outward by a factor e^{h^2} (h = max angular step) so the
// polyline inscribed through them clears the true boundary; path lengths
// converge to the true minimum from above as O(1/n^2).
PlanarRegion build_planar_region(double t, double a, double b, int n_boundary);

// Independent shortest-path length P -> Q around the region: visibility graph
// over {P, Q} + boundary nodes with an exact segment admissibility test,
// then Dijkstra. Every returned length is the length of a genuinely
// admissible polyline, so it can never undershoot the true minimum.
double oracle_shortest_path(double t, double a, double b, int n_boundary);

}  // namespace knotdist
