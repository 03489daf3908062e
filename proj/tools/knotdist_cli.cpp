#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "knotdist/appendix.hpp"
#include "knotdist/curves.hpp"
#include "knotdist/detour.hpp"
#include "knotdist/errors.hpp"
#include "knotdist/optimize.hpp"
#include "knotdist/oracle.hpp"
#include "knotdist/parallel.hpp"

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kFloor = 4.76;  // acceptance floor for the certified threshold

const char* kGrammar =
    "usage:\n"
    "  knotdist [--threads N] certify [--t-min F] [--t-max F] [--grid N] [--refine N]\n"
    "                                 [--t-tol F] [--margin F] [--out PATH]\n"
    "  knotdist [--threads N] lcurve --steps N [--t-min F] [--t-max F] --out PATH\n"
    "  knotdist [--threads N] detour --t F --a F --b F [--oracle N]\n"
    "  knotdist [--threads N] verify-appendix [--density N]\n"
    "  knotdist [--threads N] distortion --input PATH\n"
    "  knotdist [--threads N] gen-torus-knot --p N --q N --R F --r F --n N --out PATH\n";

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

const char* yesno(bool b) { return b ? "true" : "false"; }

void write_curve_csv(const std::string& path, const std::vector<knotdist::LCurveRow>& rows) {
  std::ofstream out(path);
  if (!out) throw knotdist::ParseError("cannot write " + path);
  out << "t,L,t_minus_1\n";
  for (const auto& r : rows) out << num(r.t) << ',' << num(r.L) << ',' << num(r.t_minus_1) << '\n';
  if (!out) throw knotdist::ParseError("write failed for " + path);
}

int run_certify(double t_min, double t_max, const knotdist::Tolerances& tol,
                const std::string& out_path) {
  const knotdist::Certificate cert = knotdist::certify_lower_bound(t_min, t_max, tol);
  std::printf("t_star=%s\n", num(cert.t_star).c_str());
  std::printf("margin=%s\n", num(cert.margin).c_str());
  std::printf("argmin_a=%s\n", num(cert.argmin_a).c_str());
  std::printf("argmin_b=%s\n", num(cert.argmin_b).c_str());
  std::printf("t_min=%s\n", num(t_min).c_str());
  std::printf("t_max=%s\n", num(t_max).c_str());
  std::printf("grid_n=%d\n", cert.tolerances.grid_n);
  std::printf("refine_depth=%d\n", cert.tolerances.refine_depth);
  std::printf("t_tol=%s\n", num(cert.tolerances.t_tol).c_str());
  std::printf("cert_margin=%s\n", num(cert.tolerances.cert_margin).c_str());
  std::printf("root_tol=%s\n", num(cert.tolerances.root_tol).c_str());
  std::printf("scan_samples=%zu\n", cert.samples.size());
  std::printf("floor=%s\n", num(kFloor).c_str());
  const bool above = cert.t_star > kFloor;
  std::printf("above_floor=%s\n", yesno(above));
  if (!out_path.empty()) {
    std::vector<knotdist::LCurveRow> rows;
    rows.reserve(cert.samples.size());
    for (const auto& s : cert.samples) rows.push_back({s[0], s[1], s[0] - 1.0});
    write_curve_csv(out_path, rows);
  }
  return above ? 0 : 1;
}

int run_lcurve(int steps, double t_min, double t_max, const std::string& out_path) {
  const auto rows = knotdist::sample_L_curve(t_min, t_max, steps, {});
  write_curve_csv(out_path, rows);
  std::printf("rows=%zu\n", rows.size());
  std::printf("out=%s\n", out_path.c_str());
  return 0;
}

int run_detour(double t, double a, double b, int oracle_n) {
  const knotdist::DetourConfig c = knotdist::make_config(t, a, b);
  const double F = knotdist::detour_length_F(c);
  const knotdist::DetourBreakdown bd = knotdist::detour_breakdown(c);
  std::printf("t=%s\na=%s\nb=%s\n", num(t).c_str(), num(a).c_str(), num(b).c_str());
  std::printf("F=%s\n", num(F).c_str());
  std::printf("seg_pp=%s\n", num(bd.seg_pp).c_str());
  std::printf("spiral_pv=%s\n", num(bd.spiral_pv).c_str());
  std::printf("spiral_vq=%s\n", num(bd.spiral_vq).c_str());
  std::printf("seg_qq=%s\n", num(bd.seg_qq).c_str());
  std::printf("total=%s\n", num(bd.total).c_str());
  std::printf("p=%s\nq=%s\ngamma=%s\n", num(c.p).c_str(), num(c.q).c_str(), num(c.gamma).c_str());
  std::printf("structure_ok=%s\n", yesno(knotdist::structure_holds(c.p, c.q, c.gamma)));
  if (oracle_n > 0) {
    const double o = knotdist::oracle_shortest_path(t, a, b, oracle_n);
    std::printf("oracle_n=%d\n", oracle_n);
    std::printf("oracle=%s\n", num(o).c_str());
    std::printf("rel_gap=%s\n", num((o - F) / F).c_str());
  }
  return 0;
}

int run_verify_appendix(int density) {
  const knotdist::AppendixReport rep = knotdist::verify_appendix(density);
  std::printf("density=%d\n", density);
  std::printf("x5=%s\n", num(rep.x5).c_str());
  std::printf("x5_in_range=%s\n", yesno(rep.x5_in_range));
  std::printf("x_monotone=%s\n", yesno(rep.x_monotone));
  std::printf("q_max=%s\n", num(rep.q_max).c_str());
  std::printf("q_range_ok=%s\n", yesno(rep.q_range_ok));
  std::printf("bridge=%s\n", num(rep.bridge).c_str());
  std::printf("bridge_ok=%s\n", yesno(rep.bridge_ok));
  std::printf("d_0.9=%s\n", num(rep.d_at[0]).c_str());
  std::printf("d_1.09=%s\n", num(rep.d_at[1]).c_str());
  std::printf("d_1.23=%s\n", num(rep.d_at[2]).c_str());
  std::printf("d_monotone=%s\n", yesno(rep.d_monotone));
  std::printf("gamma_gt_q=%s\n", yesno(rep.gamma_gt_q));
  std::printf("case_edges=0,0.9,1.09,1.23,1.32\n");
  std::printf("partition_corrected=%s\n", yesno(rep.partition_corrected));
  for (int i = 0; i < 4; ++i) std::printf("case_%d_ok=%s\n", i, yesno(rep.case_ok[i]));
  std::printf("all_pass=%s\n", yesno(rep.all_pass));
  return rep.all_pass ? 0 : 1;
}

int run_distortion(const std::string& input) {
  const knotdist::PolygonalCurve curve = knotdist::load_curve(input);
  const knotdist::DistortionResult res = knotdist::polygonal_distortion(curve);
  std::printf("n_vertices=%zu\n", curve.points.size());
  std::printf("length=%s\n", num(curve.total_len).c_str());
  std::printf("distortion=%s\n", num(res.value).c_str());
  std::printf("witness_i=%d\nwitness_j=%d\n", res.i, res.j);
  return 0;
}

int run_gen_torus_knot(int p, int q, double R, double r, int n, const std::string& out_path) {
  const knotdist::PolygonalCurve curve = knotdist::torus_knot(p, q, R, r, n);
  knotdist::save_curve(curve, out_path);
  std::printf("vertices=%zu\n", curve.points.size());
  std::printf("length=%s\n", num(curve.total_len).c_str());
  std::printf("out=%s\n", out_path.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certified lower bounds for the distortion of knotted curves"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "worker thread cap (0 = all cores)");

  double t_min = kPi + 1.0, t_max = 5.0;
  knotdist::Tolerances tol;
  std::string out_path;
  auto* certify = app.add_subcommand("certify", "certify the distortion threshold");
  certify->add_option("--t-min", t_min, "lower end of the search range");
  certify->add_option("--t-max", t_max, "upper end of the search range");
  certify->add_option("--grid", tol.grid_n, "initial grid per axis");
  certify->add_option("--refine", tol.refine_depth, "local refinement rounds");
  certify->add_option("--t-tol", tol.t_tol, "threshold bisection tolerance");
  certify->add_option("--margin", tol.cert_margin, "required certification slack");
  certify->add_option("--out", out_path, "write the sampled L(t) curve as CSV");

  int steps = 0;
  auto* lcurve = app.add_subcommand("lcurve", "sample the L(t) curve");
  lcurve->add_option("--steps", steps, "number of samples")->required();
  lcurve->add_option("--t-min", t_min, "lower end");
  lcurve->add_option("--t-max", t_max, "upper end");
  lcurve->add_option("--out", out_path, "CSV output path")->required();

  double dt = 0, da = 0, db = 0;
  int oracle_n = 0;
  auto* detour = app.add_subcommand("detour", "evaluate one detour configuration");
  detour->add_option("--t", dt, "distortion parameter")->required();
  detour->add_option("--a", da, "|OP|")->required();
  detour->add_option("--b", db, "|OQ|")->required();
  detour->add_option("--oracle", oracle_n, "cross-check with the n-sample shortest-path oracle");

  int density = 1000;
  auto* verify = app.add_subcommand("verify-appendix", "verify the junction-angle analysis");
  verify->add_option("--density", density, "sampling density");

  std::string input;
  auto* distortion = app.add_subcommand("distortion", "distortion of a polygonal curve file");
  distortion->add_option("--input", input, "curve file")->required();

  int tp = 0, tq = 0, tn = 0;
  double tR = 0, tr = 0;
  auto* gen = app.add_subcommand("gen-torus-knot", "sample a torus knot to a curve file");
  gen->add_option("--p", tp, "windings around the torus axis")->required();
  gen->add_option("--q", tq, "windings around the tube")->required();
  gen->add_option("--R", tR, "major radius")->required();
  gen->add_option("--r", tr, "tube radius")->required();
  gen->add_option("--n", tn, "vertex count")->required();
  gen->add_option("--out", out_path, "curve output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n" << kGrammar;
    return 2;
  }

  knotdist::set_max_threads(threads);
  try {
    if (certify->parsed()) return run_certify(t_min, t_max, tol, out_path);
    if (lcurve->parsed()) return run_lcurve(steps, t_min, t_max, out_path);
    if (detour->parsed()) return run_detour(dt, da, db, oracle_n);
    if (verify->parsed()) return run_verify_appendix(density);
    if (distortion->parsed()) return run_distortion(input);
    if (gen->parsed()) return run_gen_torus_knot(tp, tq, tR, tr, tn, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::cerr << kGrammar;
  return 2;
}
