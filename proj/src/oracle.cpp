#include "knotdist/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <utility>

#include "knotdist/parallel.hpp"

namespace knotdist {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInteriorTol = 1e-12;  // admissible if never interior by more than this
constexpr int kNeighborWindow = 8;      // boundary-to-boundary visibility span

// ln of the region's boundary radius at polar angle th in [0, pi].
struct LogBoundary {
  double ln_xq, ln_xp, k;
  double operator()(double th) const {
    return std::min(ln_xq + k * th, ln_xp + k * (kPi - th));
  }
};

// Exact admissibility of the segment AB against the region: in log-polar
// coordinates each spiral boundary is a straight line and the segment's
// log-radius is strictly convex in the angle, so the clearance
// H(th) = ln r_seg(th) - ln r_boundary(th) is convex per branch and its
// minimum sits at an endpoint, a branch stationary point, or the junction
// kink. No sampling is involved.
bool segment_admissible(const Eigen::Vector2d& A, const Eigen::Vector2d& B,
                        const LogBoundary& bdry, double gamma) {
  const Eigen::Vector2d d = B - A;
  const double len2 = d.squaredNorm();
  if (len2 < 1e-30) return true;  // coincident endpoints
  const double cross = A.x() * d.y() - A.y() * d.x();
  const double ra = A.norm(), rb = B.norm();
  if (std::fabs(cross) < 1e-15 * std::sqrt(len2) * std::max(ra, rb)) {
    // Collinear with O. Through O is always interior; otherwise the segment
    // is radial and its closest point to O is an endpoint.
    if (A.dot(B) < 0.0) return false;
    const double th = std::fabs(std::atan2(A.y(), A.x()));
    return std::log(std::min(ra, rb)) - bdry(th) >= -kInteriorTol;
  }
  const double th1 = std::atan2(A.y(), A.x());
  const double th2 = std::atan2(B.y(), B.x());
  const double tlo = std::min(th1, th2), thi = std::max(th1, th2);
  // Endpoint clearances from the exact radii.
  double hmin = std::min(std::log(ra) - bdry(th1), std::log(rb) - bdry(th2));
  // Line in polar form r = p / cos(th - thf); points exist only for
  // |th - thf| < pi/2. atan2 can return the foot angle on the 2*pi branch
  // away from the segment's span; normalize into it.
  const double p = std::fabs(cross) / std::sqrt(len2);
  const double s = -A.dot(d) / len2;
  const Eigen::Vector2d foot = A + s * d;
  double thf = std::atan2(foot.y(), foot.x());
  if (thf < tlo - kPi / 2)
    thf += 2 * kPi;
  else if (thf > thi + kPi / 2)
    thf -= 2 * kPi;
  const double lnp = std::log(p);
  const double slope = std::atan(bdry.k);
  const double cands[3] = {thf + slope, thf - slope, gamma};
  for (double c : cands) {
    if (c > tlo && c < thi) {
      const double cc = std::cos(c - thf);
      if (cc > 1e-300) hmin = std::min(hmin, lnp - std::log(cc) - bdry(c));
    }
  }
  return hmin >= -kInteriorTol;
}

}  // namespace

bool PlanarRegion::interior(const Eigen::Vector2d& x) const {
  const double r = x.norm();
  if (r <= 0.0) return true;  // O itself
  const double th = std::fabs(std::atan2(x.y(), x.x()));
  const LogBoundary b{std::log(x_q), std::log(x_p), k};
  return std::log(r) - b(th) < -kInteriorTol;
}

PlanarRegion build_planar_region(double t, double a, double b, int n_boundary) {
  if (n_boundary < 64) throw DomainError("build_planar_region: need n_boundary >= 64");
  const DetourConfig c = make_config(t, a, b);
  PlanarRegion reg;
  reg.t = t;
  reg.a = a;
  reg.b = b;
  reg.k = std::tan(c.psi);
  reg.x_p = c.x_p;
  reg.x_q = c.x_q;
  reg.gamma = c.gamma;
  reg.p_pos = {-a, 0.0};
  reg.q_pos = {b, 0.0};

  const int nq = std::max<int>(8, std::lround(n_boundary * reg.gamma / kPi));
  const int np = std::max(8, n_boundary - nq);
  const double hq = reg.gamma / nq;
  const double hp = (kPi - reg.gamma) / np;
  const double lift = std::pow(std::max(hq, hp), 2);  // ln of the inflation factor
  const double ln_xq = std::log(reg.x_q), ln_xp = std::log(reg.x_p);

  reg.boundary.reserve(nq + np + 1);
  reg.theta.reserve(nq + np + 1);
  for (int i = 0; i <= nq; ++i) {
    const double th = i * hq;
    const double r = std::exp(ln_xq + reg.k * th + lift);
    reg.boundary.emplace_back(r * std::cos(th), r * std::sin(th));
    reg.theta.push_back(th);
  }
  for (int i = 1; i <= np; ++i) {
    const double th = reg.gamma + i * hp;
    const double r = std::exp(ln_xp + reg.k * (kPi - th) + lift);
    reg.boundary.emplace_back(r * std::cos(th), r * std::sin(th));
    reg.theta.push_back(th);
  }

  // P and Q must not fall inside the region (they satisfy |OQ| >= x_q, the
  // boundary radius on their axis).
  if (reg.interior(reg.p_pos) || reg.interior(reg.q_pos))
    throw FeasibilityError("build_planar_region: endpoint inside the avoiding body");
  return reg;
}

double oracle_shortest_path(double t, double a, double b, int n_boundary) {
  const PlanarRegion reg = build_planar_region(t, a, b, n_boundary);
  const LogBoundary bdry{std::log(reg.x_q), std::log(reg.x_p), reg.k};
  const int nb = static_cast<int>(reg.boundary.size());
  const int n = nb + 2;  // node 0 = P, node 1 = Q, then boundary in angle order

  auto node = [&](int i) -> const Eigen::Vector2d& {
    if (i == 0) return reg.p_pos;
    if (i == 1) return reg.q_pos;
    return reg.boundary[i - 2];
  };

  // Candidate edges: P and Q see every node; boundary nodes see a window of
  // neighbors. Multi-hop chords beyond two steps dip under the inflated
  // polyline and are rejected by the exact test, so a small window loses
  // nothing.
  std::vector<std::pair<int, int>> cand;
  cand.reserve(static_cast<std::size_t>(n) * 2 + static_cast<std::size_t>(nb) * kNeighborWindow);
  for (int j = 1; j < n; ++j) cand.emplace_back(0, j);
  for (int j = 2; j < n; ++j) cand.emplace_back(1, j);
  for (int i = 2; i < n; ++i)
    for (int j = i + 1; j < std::min(i + 1 + kNeighborWindow, n); ++j) cand.emplace_back(i, j);

  std::vector<char> ok(cand.size(), 0);
  parallel_chunks(cand.size(), [&](std::size_t lo, std::size_t hi) {
    for (std::size_t e = lo; e < hi; ++e)
      ok[e] = segment_admissible(node(cand[e].first), node(cand[e].second), bdry, reg.gamma);
  });

  std::vector<std::vector<std::pair<int, double>>> adj(n);
  for (std::size_t e = 0; e < cand.size(); ++e) {
    if (!ok[e]) continue;
    const auto [i, j] = cand[e];
    const double w = (node(i) - node(j)).norm();
    adj[i].emplace_back(j, w);
    adj[j].emplace_back(i, w);
  }

  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(n, kInf);
  std::priority_queue<std::pair<double, int>, std::vector<std::pair<double, int>>,
                      std::greater<>>
      heap;
  dist[0] = 0.0;
  heap.emplace(0.0, 0);
  while (!heap.empty()) {
    const auto [dv, v] = heap.top();
    heap.pop();
    if (dv > dist[v]) continue;
    if (v == 1) break;
    for (const auto& [w, len] : adj[v]) {
      const double cand_d = dv + len;
      if (cand_d < dist[w]) {
        dist[w] = cand_d;
        heap.emplace(cand_d, w);
      }
    }
  }
  if (!(dist[1] < kInf))
    throw DisconnectedGraphError("oracle_shortest_path: no P-to-Q path; region sampling bug");
  return dist[1];
}

}  // namespace knotdist
