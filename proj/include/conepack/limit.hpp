#pragma once

#include <map>
#include <string>
#include <vector>

#include "conepack/mesh.hpp"
#include "conepack/solver.hpp"

namespace conepack {

/// Nested family of coned-off triangulations obtained by refining the base
/// at its marked punctures.
struct ExhaustionFamily {
  Triangulation base;         // marks = punctures
  std::vector<int> depths;    // strictly increasing, each >= 1
  std::map<int, double> theta;  // target angle per puncture, in [0, pi)
};

struct LimitConfig {
  SolveConfig solve;
  double tol_limit = 1e-2;      // Cauchy threshold on successive deltas
  double collapse_floor = 1e-6; // alarm if radii shrink below this
  // Permits theta >= pi (only sound on a thrice-punctured sphere, where the
  // underlying conformal structure is unique).
  bool allow_large_angles = false;
  int threads = 0;  // 0: CONEPACK_THREADS env var, else 1
};

struct DepthSolve {
  int depth = 0;
  Triangulation complex;           // the coned-off triangulation
  Label label;
  std::vector<int> core_vertices;  // sorted non-puncture vertex ids (K_m)
};

struct ExhaustionReport {
  std::vector<DepthSolve> stages;
  /// deltas[i] = max over K_{m_i} of |R_{m_{i+1}} - R_{m_i}|.
  std::vector<double> deltas;
  /// Per stage, min radius over the base's surviving (non-puncture) vertices.
  std::vector<double> min_radius;
  /// Metric lengths of the depth-1 peripheral ring of each puncture.
  std::map<std::string, std::vector<double>> loop_lengths;
  std::string verdict;  // "converged" | "not_yet" | "alarm"
  std::vector<int> puncture_ids;
  double tol_limit = 0.0;
  double collapse_floor = 0.0;
  /// Convention note: a path's metric length sums the geodesic edge lengths
  /// R(u)+R(v), so interior path vertices count twice.
  std::string note;
};

/// Solves every depth of the family and certifies radius convergence by
/// successive sup-norm deltas on common subcomplexes.  Evidence, not proof:
/// "converged" means the last delta passed tol_limit and no collapse alarm
/// fired.  Depth solves may run concurrently (CONEPACK_THREADS).
ExhaustionReport run_exhaustion(const ExhaustionFamily& fam,
                                const LimitConfig& cfg = {});

struct EdgePath {
  std::vector<int> vertices;
  bool closed = false;
};

/// Metric length of an edge path: sum over edges of R(u)+R(v).  Throws if
/// consecutive vertices are not adjacent in t.
double edge_path_length(const Triangulation& t,
                        const std::map<int, double>& radii,
                        const EdgePath& path);

/// Zero-extension of a stage label to a larger vertex set.
std::map<int, double> extend_by_zero(const DepthSolve& stage,
                                     const std::vector<int>& full_vertex_set);

struct LoopTable {
  std::vector<std::string> names;
  std::vector<std::vector<double>> lengths;  // per loop, per depth
  std::vector<bool> collapse_flag;           // final length at or below floor
};

/// Tabulates edge-path lengths across all depths of a report.  Loops must be
/// present (vertices and edges) in every stage complex.
LoopTable loop_monitor(const ExhaustionFamily& fam, const ExhaustionReport& report,
                       const std::vector<std::pair<std::string, EdgePath>>& loops);

struct LimitLabel {
  std::map<int, double> radii;           // deepest-stage radii, punctures excluded
  std::map<int, double> stability_band;  // |R_M - R_{M-1}| where comparable
  std::vector<int> new_vertices;         // present only at the deepest stage
};

/// Best available approximation of the limit label; requires a converged
/// report.
LimitLabel limit_label(const ExhaustionReport& report);

}  // namespace conepack
