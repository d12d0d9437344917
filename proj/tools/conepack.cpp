#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "conepack/hypgeom.hpp"
#include "conepack/json_io.hpp"
#include "conepack/layout.hpp"
#include "conepack/limit.hpp"
#include "conepack/mesh.hpp"
#include "conepack/solver.hpp"

namespace {

using namespace conepack;

constexpr int kOk = 0;
constexpr int kDomainFailure = 1;  // infeasible / invalid / alarm
constexpr int kInputError = 2;
constexpr int kInconclusive = 3;  // exhaustion "not yet"

// Applies --cones / --cone overrides onto the stored marks.
AngleSpec resolve_spec(Triangulation& t, const std::string& all_cones,
                       const std::vector<std::string>& cone_overrides) {
  if (!all_cones.empty()) {
    const double theta = parse_angle(all_cones);
    t.marks = t.vertices;
    t.mark_angles.clear();
    for (int v : t.vertices) t.mark_angles[v] = theta;
  }
  for (const std::string& item : cone_overrides) {
    const size_t eq = item.find('=');
    if (eq == std::string::npos)
      throw InputError("--cone expects ID=ANGLE, got '" + item + "'");
    const int v = std::stoi(item.substr(0, eq));
    const double theta = parse_angle(item.substr(eq + 1));
    if (!t.is_marked(v)) t.marks.push_back(v);
    t.mark_angles[v] = theta;
  }
  return AngleSpec::from_marks(t);
}

std::vector<int> parse_depths(const std::string& text) {
  std::vector<int> out;
  const size_t dots = text.find("..");
  if (dots != std::string::npos) {
    const int lo = std::stoi(text.substr(0, dots));
    const int hi = std::stoi(text.substr(dots + 2));
    for (int d = lo; d <= hi; ++d) out.push_back(d);
    return out;
  }
  size_t pos = 0;
  while (pos < text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    out.push_back(std::stoi(text.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return out;
}

int cmd_generate(const std::string& name, const std::string& out_path,
                 const std::string& all_cones,
                 const std::vector<std::string>& cone_overrides, bool as_family,
                 int family_depth) {
  Triangulation t = generate(name);
  resolve_spec(t, all_cones, cone_overrides);
  t.declared_genus = SurfaceIndex(t).genus();
  nlohmann::ordered_json j;
  if (as_family) {
    if (t.marks.empty())
      throw InputError("--family needs marked vertices (punctures)");
    j["base"] = triangulation_to_json(t);
    j["refine_at"] = t.marks;
    j["depth"] = family_depth;
  } else {
    j = triangulation_to_json(t);
  }
  if (out_path.empty())
    std::cout << j.dump(2) << "\n";
  else
    save_json(j, out_path);
  return kOk;
}

int cmd_validate(const std::string& path) {
  const Triangulation t = load_triangulation(path);
  const ValidationReport rep = validate(t);
  std::cout << rep.summary() << "\n";
  return rep.valid() ? kOk : kDomainFailure;
}

int cmd_feasible(const std::string& path, const std::string& all_cones,
                 const std::vector<std::string>& cone_overrides) {
  Triangulation t = load_triangulation(path);
  const AngleSpec spec = resolve_spec(t, all_cones, cone_overrides);
  const FeasibilityVerdict v = check_feasible(t, spec);
  std::printf("orbchar = %.12g (%s)\n", v.orbchar,
              v.orbchar_ok ? "feasible" : "infeasible");
  for (const auto& e : v.singleton_violations)
    std::printf("  singleton face-excess violation at vertex %d: %.12g\n", e.vertex,
                e.excess);
  for (const auto& e : v.star_violations)
    std::printf("  star face-excess violation at vertex %d: %.12g\n", e.vertex,
                e.excess);
  return v.feasible() ? kOk : kDomainFailure;
}

int cmd_solve(const std::string& path, const std::string& out_path,
              const std::string& all_cones,
              const std::vector<std::string>& cone_overrides, double tol,
              long max_iters) {
  Triangulation t = load_triangulation(path);
  const AngleSpec spec = resolve_spec(t, all_cones, cone_overrides);

  SolveConfig cfg;
  cfg.tol_angle = tol;
  cfg.max_iters = max_iters;
  const FeasibilityVerdict verdict = check_feasible(t, spec);
  if (!verdict.feasible()) {
    std::printf("infeasible: orbchar = %.12g >= 0\n", verdict.orbchar);
    return kDomainFailure;
  }
  const Label label = solve(t, spec, cfg);

  const double area = metric_area(t, label);
  const double orbchar = orbifold_char(t, spec);
  double max_radius = 0.0;
  bool any_finite = false;
  SurfaceIndex s(t);
  std::optional<long> degree_bound;
  for (int v : t.vertices) {
    const double r = label.radii.at(v);
    if (std::isfinite(r)) {
      max_radius = std::max(max_radius, r);
      any_finite = true;
    }
    const double theta = spec.target(v);
    if (theta > 0.0 && theta <= 2.0 * M_PI + 1e-12) {
      const long d = max_completed_degree(s.degree(v), theta);
      degree_bound = std::max(degree_bound.value_or(0L), d);
    }
  }
  std::printf("residual = %.3e after %ld sweeps\n", label.residual, label.iterations);
  std::printf("area = %.12g, -orbchar = %.12g, gap = %.3e\n", area, -orbchar,
              std::abs(area + orbchar));
  if (any_finite && degree_bound)
    std::printf("max radius = %.12g, ring ceiling H_%ld = %.12g\n", max_radius,
                *degree_bound, ring_bound_H(static_cast<int>(*degree_bound)));
  double ratio_floor = 1.0;
  for (const auto& [u, v] : s.edges()) {
    const double ru = label.radii.at(u), rv = label.radii.at(v);
    if (std::isfinite(ru) && std::isfinite(rv))
      ratio_floor = std::min(ratio_floor, std::min(ru / rv, rv / ru));
  }
  std::printf("adjacent radius ratios within [%.6g, %.6g]\n", ratio_floor,
              1.0 / ratio_floor);
  if (!out_path.empty()) save_json(label_to_json(label), out_path);
  return kOk;
}

int cmd_exhaust(const std::string& path, const std::string& out_path,
                const std::string& depths, const std::string& theta_csv,
                double tol_limit, double collapse_floor, bool allow_large,
                double tol_angle) {
  ExhaustionFamily fam = load_family(path);
  if (!depths.empty()) fam.depths = parse_depths(depths);
  if (!theta_csv.empty()) {
    std::vector<double> theta;
    size_t pos = 0;
    while (pos < theta_csv.size()) {
      size_t comma = theta_csv.find(',', pos);
      if (comma == std::string::npos) comma = theta_csv.size();
      theta.push_back(parse_angle(theta_csv.substr(pos, comma - pos)));
      pos = comma + 1;
    }
    if (theta.size() != fam.base.marks.size())
      throw InputError("--theta needs one angle per puncture");
    for (size_t i = 0; i < theta.size(); ++i)
      fam.theta[fam.base.marks[i]] = theta[i];
  }

  LimitConfig cfg;
  cfg.tol_limit = tol_limit;
  cfg.collapse_floor = collapse_floor;
  cfg.allow_large_angles = allow_large;
  cfg.solve.tol_angle = tol_angle;

  const ExhaustionReport report = run_exhaustion(fam, cfg);
  for (size_t i = 0; i < report.stages.size(); ++i) {
    const DepthSolve& stage = report.stages[i];
    std::printf("depth %d: %zu vertices, residual %.3e", stage.depth,
                stage.complex.vertices.size(), stage.label.residual);
    if (i > 0) std::printf(", delta %.6g", report.deltas[i - 1]);
    std::printf("\n");
  }
  std::printf("verdict: %s (tol_limit %.3g)\n", report.verdict.c_str(),
              report.tol_limit);
  std::printf("note: %s\n", report.note.c_str());
  if (!out_path.empty()) save_json(report_to_json(report), out_path);
  if (report.verdict == "converged") return kOk;
  return report.verdict == "not_yet" ? kInconclusive : kDomainFailure;
}

int cmd_layout(const std::string& label_path, const std::string& instance_path,
               const std::string& svg_path, const std::string& json_path,
               int root_face, bool edges) {
  const Triangulation t = load_triangulation(instance_path);
  const Label label = load_label(label_path);
  for (int v : t.vertices)
    if (!label.radii.count(v))
      throw InputError("label has no radius for vertex " + std::to_string(v));
  if (label.radii.size() != t.vertices.size())
    throw InputError("label and instance vertex sets differ");

  LayoutConfig cfg;
  cfg.root_face = root_face;
  const PackingLayout layout = develop(t, label, cfg);
  const LayoutVerification check =
      verify_layout(layout, t, label, AngleSpec::from_marks(t));
  std::printf("developed %zu circles over %zu tree edges, max residual %.3e\n",
              layout.circles.size(), layout.tree_edges.size(), layout.max_residual);
  std::printf("angle closure checked at %zu fully developed vertices, max error %.3e\n",
              check.closures.size(), check.max_closure_error);
  double worst_holonomy = 0.0;
  for (const auto& hm : layout.holonomy)
    worst_holonomy = std::max(worst_holonomy, hm.mismatch);
  std::printf("%zu non-tree edges not drawn; max holonomy mismatch %.6g\n",
              layout.holonomy.size(), worst_holonomy);
  SvgStyle style;
  style.draw_edges = edges;
  if (!svg_path.empty()) export_svg(layout, svg_path, style);
  if (!json_path.empty()) save_json(layout_to_json(layout), json_path);
  return kOk;
}

int cmd_constants(int k_min, int k_max, const std::string& theta_expr) {
  if (k_min < 3 || k_max < k_min) throw InputError("need 3 <= k_min <= k_max");
  const double theta = parse_angle(theta_expr);
  std::printf("%4s %18s %14s\n", "k", "H_k", "d_{k,theta}");
  for (int k = k_min; k <= k_max; ++k)
    std::printf("%4d %18.12f %14ld\n", k, ring_bound_H(k),
                max_completed_degree(k, theta));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hyperbolic circle packings with prescribed cone angles"};
  app.require_subcommand(1);

  std::string in_path, out_path, label_path, svg_path, json_path;
  std::string all_cones, depths, theta_csv, theta_expr = "pi/2", name;
  std::vector<std::string> cone_overrides;
  double tol_angle = 1e-10, tol_limit = 1e-2, collapse_floor = 1e-6;
  long max_iters = 1000000;
  int root_face = 0, k_min = 3, k_max = 10, family_depth = 8;
  bool edges = false, allow_large = false, list_names = false, as_family = false;

  auto* gen = app.add_subcommand("generate", "emit a named instance");
  gen->add_option("name", name, "instance name");
  gen->add_flag("--list", list_names, "list generator names");
  gen->add_option("-o,--output", out_path, "output file (default stdout)");
  gen->add_option("--cones", all_cones, "mark every vertex with this angle");
  gen->add_option("--cone", cone_overrides, "mark one vertex: ID=ANGLE");
  gen->add_flag("--family", as_family, "wrap marked instance as a refinement family");
  gen->add_option("--depth", family_depth, "max depth for --family");

  auto* val = app.add_subcommand("validate", "check the surface invariants");
  val->add_option("input", in_path)->required();

  auto* fea = app.add_subcommand("feasible", "evaluate the feasibility gate");
  fea->add_option("input", in_path)->required();
  fea->add_option("--cones", all_cones);
  fea->add_option("--cone", cone_overrides);

  auto* sol = app.add_subcommand("solve", "compute the packing label");
  sol->add_option("input", in_path)->required();
  sol->add_option("-o,--output", out_path, "label JSON output");
  sol->add_option("--cones", all_cones);
  sol->add_option("--cone", cone_overrides);
  sol->add_option("--tol", tol_angle, "angle residual tolerance");
  sol->add_option("--max-iters", max_iters, "sweep cap");

  auto* exh = app.add_subcommand("exhaust", "solve an exhausting family");
  exh->add_option("family", in_path)->required();
  exh->add_option("-o,--output", out_path, "report JSON output");
  exh->add_option("--depths", depths, "e.g. 1..8 or 1,2,4");
  exh->add_option("--theta", theta_csv, "per-puncture angles, comma separated");
  exh->add_option("--tol-limit", tol_limit, "delta convergence threshold");
  exh->add_option("--collapse-floor", collapse_floor, "radius collapse alarm floor");
  exh->add_option("--tol", tol_angle, "per-depth solver tolerance");
  exh->add_flag("--allow-large-angles", allow_large,
                "permit theta >= pi (thrice-punctured sphere only)");

  auto* lay = app.add_subcommand("layout", "develop a label into the disk");
  lay->add_option("label", label_path)->required();
  lay->add_option("instance", in_path)->required();
  lay->add_option("-o,--svg", svg_path, "SVG output path");
  lay->add_option("--json", json_path, "layout JSON output path");
  lay->add_option("--root", root_face, "root face id");
  lay->add_flag("--edges", edges, "draw face edges");

  auto* con = app.add_subcommand("constants", "ring and flower-degree constants");
  con->add_option("--k-min", k_min);
  con->add_option("--k-max", k_max);
  con->add_option("--theta", theta_expr, "cone angle for d_{k,theta}");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      if (list_names) {
        for (const auto& n : conepack::generator_names()) std::cout << n << "\n";
        return kOk;
      }
      if (name.empty()) throw conepack::InputError("generate needs a name or --list");
      return cmd_generate(name, out_path, all_cones, cone_overrides, as_family,
                          family_depth);
    }
    if (val->parsed()) return cmd_validate(in_path);
    if (fea->parsed()) return cmd_feasible(in_path, all_cones, cone_overrides);
    if (sol->parsed())
      return cmd_solve(in_path, out_path, all_cones, cone_overrides, tol_angle,
                       max_iters);
    if (exh->parsed())
      return cmd_exhaust(in_path, out_path, depths, theta_csv, tol_limit,
                         collapse_floor, allow_large, tol_angle);
    if (lay->parsed())
      return cmd_layout(label_path, in_path, svg_path, json_path, root_face, edges);
    if (con->parsed()) return cmd_constants(k_min, k_max, theta_expr);
  } catch (const conepack::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomainFailure;
  }
  return kInputError;
}
