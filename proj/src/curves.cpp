#include "knotdist/curves.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <numeric>
#include <sstream>

#include "knotdist/errors.hpp"
#include "knotdist/parallel.hpp"

namespace knotdist {

namespace {
constexpr double kPi = std::numbers::pi;

struct Witness {
  double value = -1.0;
  int i = 0, j = 0;
  void offer(double v, int iv, int jv) {
    if (v > value || (v == value && (iv < i || (iv == i && jv < j)))) {
      value = v;
      i = iv;
      j = jv;
    }
  }
};
}  // namespace

PolygonalCurve PolygonalCurve::from_points(std::vector<Eigen::Vector3d> pts) {
  if (pts.size() < 3) throw ValidationError("curve needs at least 3 vertices");
  const std::size_t n = pts.size();
  PolygonalCurve c;
  c.cum_len.resize(n);
  c.cum_len[0] = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double seg = (pts[i + 1] - pts[i]).norm();
    if (!(seg > 0.0))
      throw ValidationError("consecutive vertices coincide at index " + std::to_string(i));
    c.cum_len[i + 1] = c.cum_len[i] + seg;
  }
  const double closing = (pts[0] - pts[n - 1]).norm();
  if (!(closing > 0.0)) throw ValidationError("first and last vertices coincide");
  c.total_len = c.cum_len[n - 1] + closing;
  c.points = std::move(pts);
  return c;
}

DistortionResult polygonal_distortion(const PolygonalCurve& curve) {
  const int n = static_cast<int>(curve.points.size());
  std::vector<Witness> row_best(n);
  std::vector<char> degenerate(n, 0);
  parallel_chunks(n, [&](std::size_t r0, std::size_t r1) {
    for (std::size_t i = r0; i < r1; ++i) {
      Witness w;
      for (int j = static_cast<int>(i) + 1; j < n; ++j) {
        const double chord = (curve.points[j] - curve.points[i]).norm();
        if (!(chord > 0.0)) {
          degenerate[i] = 1;
          break;
        }
        const double arc = curve.cum_len[j] - curve.cum_len[i];
        w.offer(std::min(arc, curve.total_len - arc) / chord, static_cast<int>(i), j);
      }
      row_best[i] = w;
    }
  });
  for (int i = 0; i < n; ++i)
    if (degenerate[i])
      throw ValidationError("coincident vertices at index " + std::to_string(i) +
                            "; distortion is unbounded");
  Witness best;
  for (const auto& w : row_best)
    if (w.value >= 0.0) best.offer(w.value, w.i, w.j);
  return {best.value, best.i, best.j};
}

PolygonalCurve torus_knot(int p_wind, int q_wind, double R_major, double r_minor, int n) {
  if (p_wind < 2 || q_wind < 2)
    throw DomainError("torus_knot: windings below 2 give an unknot");
  if (std::gcd(p_wind, q_wind) != 1)
    throw DomainError("torus_knot: windings must be coprime");
  if (!(R_major > r_minor) || !(r_minor > 0.0))
    throw DomainError("torus_knot: need R_major > r_minor > 0");
  if (n < 64) throw DomainError("torus_knot: need n >= 64");
  std::vector<Eigen::Vector3d> pts(n);
  for (int i = 0; i < n; ++i) {
    const double s = 2.0 * kPi * i / n;
    const double w = R_major + r_minor * std::cos(q_wind * s);
    pts[i] = {w * std::cos(p_wind * s), w * std::sin(p_wind * s), r_minor * std::sin(q_wind * s)};
  }
  return PolygonalCurve::from_points(std::move(pts));
}

PolygonalCurve load_curve(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::vector<Eigen::Vector3d> pts;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    double x, y, z;
    char c1, c2;
    std::istringstream ss(line);
    if (!(ss >> x >> c1 >> y >> c2 >> z) || c1 != ',' || c2 != ',')
      throw ParseError(path + ": line " + std::to_string(lineno) +
                       ": expected \"x,y,z\", got \"" + line + "\"");
    std::string rest;
    if (ss >> rest)
      throw ParseError(path + ": line " + std::to_string(lineno) + ": trailing content");
    pts.emplace_back(x, y, z);
  }
  if (pts.empty()) throw ValidationError(path + ": no vertices");
  return PolygonalCurve::from_points(std::move(pts));
}

void save_curve(const PolygonalCurve& curve, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  char buf[128];
  for (const auto& p : curve.points) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", p.x(), p.y(), p.z());
    out << buf;
  }
  if (!out) throw ParseError("write failed for " + path);
}

}  // namespace knotdist
