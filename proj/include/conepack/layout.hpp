#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "conepack/anglespec.hpp"
#include "conepack/mesh.hpp"
#include "conepack/solver.hpp"

namespace conepack {

/// One developed copy of a vertex circle in the Poincare disk.
struct DevelopedCircle {
  int vertex = -1;
  int copy = 0;
  std::complex<double> center;      // hyperbolic center, |center| < 1
  double hyp_radius = 0.0;
  std::complex<double> euc_center;  // rendered Euclidean circle
  double euc_radius = 0.0;
};

struct HolonomyMismatch {
  int face_a = -1, face_b = -1;   // dual non-tree edge
  int u = -1, v = -1;             // shared primal edge
  double mismatch = 0.0;          // max distance between the duplicate copies
};

struct PackingLayout {
  std::vector<DevelopedCircle> circles;
  /// Per face, the circle indices at its three corners (parallel to the
  /// triangulation's face list).
  std::vector<std::array<int, 3>> face_circles;
  std::vector<std::array<int, 2>> tree_edges;  // dual spanning tree (face ids)
  std::vector<HolonomyMismatch> holonomy;      // dual non-tree edges
  double max_residual = 0.0;  // max |d_hyp(c_u,c_v) - (R_u+R_v)| over developed edges
  int root_face = 0;
};

struct LayoutConfig {
  int root_face = 0;
  double fail_residual = 1e-6;  // hard error above this
};

/// Develops a solved finite-radius label over a breadth-first dual spanning
/// tree: root face placed canonically (first circle at the origin, second on
/// the positive axis), every further circle by intersecting distance
/// constraints from the shared edge.  Vertices reached along several tree
/// branches are emitted as separate copies.  Deterministic for a fixed root
/// (ties broken by lowest face id).
PackingLayout develop(const Triangulation& t, const Label& label,
                      const LayoutConfig& cfg = {});

struct LayoutVerification {
  double max_residual = 0.0;
  struct Closure {
    int vertex = -1;
    double developed = 0.0;  // accumulated angle around the single copy
    double target = 0.0;
  };
  /// Vertices whose entire star was developed contiguously onto one copy.
  std::vector<Closure> closures;
  double max_closure_error = 0.0;
  bool euclidean_radii_ok = true;

  bool empty() const { return closures.empty() && max_residual == 0.0; }
};

LayoutVerification verify_layout(const PackingLayout& layout, const Triangulation& t,
                                 const Label& label, const AngleSpec& spec);

struct SvgStyle {
  bool draw_edges = false;
  std::string circle_color = "#1f6fb4";
  std::string edge_color = "#b0b0b0";
  double stroke_width = 0.004;
};

/// Unit-disk boundary plus one circle element per developed circle, 6 decimal
/// places; byte-deterministic.  Throws on an unwritable path.
void export_svg(const PackingLayout& layout, const std::string& path,
                const SvgStyle& style = {});
std::string svg_string(const PackingLayout& layout, const SvgStyle& style = {});

/// Hyperbolic distance between points of the unit disk.
double disk_distance(std::complex<double> a, std::complex<double> b);

}  // namespace conepack
