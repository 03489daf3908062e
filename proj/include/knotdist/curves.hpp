#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

namespace knotdist {

// Closed 3D polyline. The closing edge from the last vertex back to the
// first is implicit; cum_len[i] is the arc length from vertex 0 to vertex i,
// total_len includes the closing edge.
struct PolygonalCurve {
  std::vector<Eigen::Vector3d> points;
  std::vector<double> cum_len;
  double total_len = 0.0;

  // Validates: >= 3 vertices, consecutive vertices (closing pair included)
  // distinct, strictly increasing cumulative lengths.
  static PolygonalCurve from_points(std::vector<Eigen::Vector3d> pts);
};

struct DistortionResult {
  double value;
  int i, j;  // witness vertex pair, i < j
};

// Max over vertex pairs of min(arc, total - arc) / chord. A lower bound on
// the smooth curve's distortion. Ties break to the lexicographically
// smallest pair.
DistortionResult polygonal_distortion(const PolygonalCurve& curve);

// n uniform parameter samples of the (p, q) torus knot on the torus with
// major radius R and tube radius r. Requires coprime p, q >= 2 so the result
// is knotted.
PolygonalCurve torus_knot(int p_wind, int q_wind, double R_major, double r_minor, int n);

// Text format: one "x,y,z" line per vertex, '#' starts a comment line, blank
// lines are skipped, the curve closes implicitly. save_curve writes 17
// significant digits so a round trip preserves every bit.
PolygonalCurve load_curve(const std::string& path);
void save_curve(const PolygonalCurve& curve, const std::string& path);

}  // namespace knotdist
