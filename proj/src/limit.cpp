#include "conepack/limit.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "conepack/hypgeom.hpp"

namespace conepack {

namespace {

int requested_threads(const LimitConfig& cfg, size_t jobs) {
  int n = cfg.threads;
  if (n <= 0) {
    n = 1;
    if (const char* env = std::getenv("CONEPACK_THREADS")) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      if (end && *end == '\0' && v > 0) n = static_cast<int>(v);
    }
  }
  return std::max(1, std::min<int>(n, static_cast<int>(jobs)));
}

std::vector<int> core_vertex_ids(const Triangulation& t) {
  std::set<int> marks(t.marks.begin(), t.marks.end());
  std::vector<int> core;
  for (int v : t.vertices)
    if (!marks.count(v)) core.push_back(v);
  return core;
}

void check_family(const ExhaustionFamily& fam, const LimitConfig& cfg) {
  if (fam.base.marks.empty())
    throw std::invalid_argument("exhaustion base has no marked punctures");
  if (fam.depths.empty())
    throw std::invalid_argument("exhaustion needs at least one depth");
  for (size_t i = 0; i < fam.depths.size(); ++i) {
    if (fam.depths[i] < 1)
      throw std::invalid_argument("depths must be >= 1");
    if (i > 0 && fam.depths[i] <= fam.depths[i - 1])
      throw std::invalid_argument("depths must be strictly increasing");
  }
  for (int p : fam.base.marks) {
    auto it = fam.theta.find(p);
    if (it == fam.theta.end())
      throw std::invalid_argument("no target angle for puncture " +
                                  std::to_string(p));
    const double theta = it->second;
    if (!(theta >= 0.0) || !std::isfinite(theta))
      throw std::invalid_argument("target angle at puncture " + std::to_string(p) +
                                  " must be finite and >= 0");
    if (theta >= M_PI && !cfg.allow_large_angles)
      throw std::domain_error(
          "target angle " + std::to_string(theta) + " at puncture " +
          std::to_string(p) +
          " is >= pi (only valid on a thrice-punctured sphere; pass "
          "allow_large_angles to override)");
  }
  AngleSpec spec;
  spec.targets = fam.theta;
  const double orbchar = orbifold_char(fam.base, spec);
  if (!(orbchar < -1e-9)) {
    std::ostringstream os;
    os << "exhaustion family infeasible: orbchar = " << orbchar << " >= 0";
    throw std::domain_error(os.str());
  }
}

}  // namespace

ExhaustionReport run_exhaustion(const ExhaustionFamily& fam, const LimitConfig& cfg) {
  check_family(fam, cfg);
  AngleSpec spec;
  spec.targets = fam.theta;

  ExhaustionReport report;
  report.tol_limit = cfg.tol_limit;
  report.collapse_floor = cfg.collapse_floor;
  report.puncture_ids = fam.base.marks;
  report.note =
      "edge-path lengths sum geodesic edge lengths R(u)+R(v); interior path "
      "vertices count twice";

  const size_t n_stages = fam.depths.size();
  report.stages.resize(n_stages);

  std::vector<std::exception_ptr> errors(n_stages);
  auto run_stage = [&](size_t si) {
    try {
      const int depth = fam.depths[si];
      RefinementResult refined = puncture_refine(fam.base, depth);
      Triangulation coned = cone_off(refined.tri, refined.levels.back());
      DepthSolve stage;
      stage.depth = depth;
      stage.label = solve(coned, spec, cfg.solve);
      stage.core_vertices = core_vertex_ids(coned);
      stage.complex = std::move(coned);
      report.stages[si] = std::move(stage);
    } catch (...) {
      errors[si] = std::current_exception();
    }
  };

  const int threads = requested_threads(cfg, n_stages);
  if (threads <= 1) {
    for (size_t si = 0; si < n_stages; ++si) run_stage(si);
  } else {
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (int w = 0; w < threads; ++w)
      pool.emplace_back([&] {
        for (size_t si = next.fetch_add(1); si < n_stages; si = next.fetch_add(1))
          run_stage(si);
      });
    for (auto& th : pool) th.join();
  }
  for (size_t si = 0; si < n_stages; ++si)
    if (errors[si]) std::rethrow_exception(errors[si]);

  // Sup-norm deltas over the common core (the shallower stage's vertices,
  // which persist by the stable-id guarantee).
  for (size_t si = 0; si + 1 < n_stages; ++si) {
    const DepthSolve& a = report.stages[si];
    const DepthSolve& b = report.stages[si + 1];
    double delta = 0.0;
    for (int v : a.core_vertices)
      delta = std::max(delta, std::abs(b.label.radii.at(v) - a.label.radii.at(v)));
    report.deltas.push_back(delta);
  }

  // Min-radius trace over the base's surviving vertices.
  const std::vector<int> base_core = core_vertex_ids(fam.base);
  std::vector<int> traced;
  for (int v : base_core)
    if (report.stages.front().label.radii.count(v)) traced.push_back(v);
  for (const DepthSolve& stage : report.stages) {
    double lo = kInfiniteRadius;
    for (int v : traced) {
      const double r = stage.label.radii.at(v);
      if (std::isfinite(r)) lo = std::min(lo, r);
    }
    report.min_radius.push_back(lo);
  }

  // Peripheral monitor loops: the depth-1 rings, present at every depth >= 1.
  {
    RefinementResult first = puncture_refine(fam.base, 1);
    for (const PeripheralLoop& ring : first.levels.back()) {
      std::vector<double> lengths;
      for (const DepthSolve& stage : report.stages) {
        EdgePath path{ring.cycle, true};
        lengths.push_back(edge_path_length(stage.complex, stage.label.radii, path));
      }
      report.loop_lengths["peripheral_p" + std::to_string(ring.mark)] =
          std::move(lengths);
    }
  }

  // Verdict.
  if (n_stages < 2) {
    report.verdict = "not_yet";
    return report;
  }
  const DepthSolve& prev = report.stages[n_stages - 2];
  const DepthSolve& last = report.stages[n_stages - 1];
  double guard = kInfiniteRadius;
  for (int v : prev.core_vertices) {
    const double r = last.label.radii.at(v);
    if (std::isfinite(r)) guard = std::min(guard, r);
  }
  if (guard <= cfg.collapse_floor)
    report.verdict = "alarm";
  else if (report.deltas.back() <= cfg.tol_limit)
    report.verdict = "converged";
  else
    report.verdict = "not_yet";
  return report;
}

double edge_path_length(const Triangulation& t, const std::map<int, double>& radii,
                        const EdgePath& path) {
  if (path.vertices.size() < 2)
    throw std::invalid_argument("edge path needs at least two vertices");
  SurfaceIndex s(t);
  double length = 0.0;
  const size_t n = path.vertices.size();
  const size_t edges = path.closed ? n : n - 1;
  for (size_t i = 0; i < edges; ++i) {
    const int u = path.vertices[i], v = path.vertices[(i + 1) % n];
    if (!s.adjacent(u, v))
      throw std::invalid_argument("path vertices " + std::to_string(u) + "," +
                                  std::to_string(v) + " are not adjacent");
    length += radii.at(u) + radii.at(v);
  }
  return length;
}

std::map<int, double> extend_by_zero(const DepthSolve& stage,
                                     const std::vector<int>& full_vertex_set) {
  std::set<int> core(stage.core_vertices.begin(), stage.core_vertices.end());
  std::map<int, double> out;
  for (int v : full_vertex_set)
    out[v] = core.count(v) ? stage.label.radii.at(v) : 0.0;
  return out;
}

LoopTable loop_monitor(const ExhaustionFamily& fam, const ExhaustionReport& report,
                       const std::vector<std::pair<std::string, EdgePath>>& loops) {
  (void)fam;
  LoopTable table;
  for (const auto& [name, path] : loops) {
    std::vector<double> lengths;
    for (const DepthSolve& stage : report.stages) {
      for (int v : path.vertices)
        if (!stage.label.radii.count(v))
          throw std::invalid_argument("loop '" + name + "' not present at depth " +
                                      std::to_string(stage.depth));
      lengths.push_back(edge_path_length(stage.complex, stage.label.radii, path));
    }
    table.names.push_back(name);
    table.collapse_flag.push_back(!lengths.empty() &&
                                  lengths.back() <= report.collapse_floor);
    table.lengths.push_back(std::move(lengths));
  }
  return table;
}

LimitLabel limit_label(const ExhaustionReport& report) {
  if (report.verdict != "converged")
    throw std::runtime_error("limit label requires a converged report, verdict is '" +
                             report.verdict + "'");
  const DepthSolve& last = report.stages.back();
  const DepthSolve& prev = report.stages[report.stages.size() - 2];
  std::set<int> prev_core(prev.core_vertices.begin(), prev.core_vertices.end());

  LimitLabel out;
  for (int v : last.core_vertices) {
    out.radii[v] = last.label.radii.at(v);
    if (prev_core.count(v))
      out.stability_band[v] = std::abs(last.label.radii.at(v) - prev.label.radii.at(v));
    else
      out.new_vertices.push_back(v);
  }
  return out;
}

}  // namespace conepack
