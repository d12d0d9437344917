#pragma once

#include <map>

#include "conepack/mesh.hpp"

namespace conepack {

/// Target total angles.  Marked vertices carry theta in [0, inf); every other
/// vertex implicitly targets 2*pi.  theta = 0 requests a cusp.
struct AngleSpec {
  std::map<int, double> targets;

  double target(int v) const;
  bool is_cusp(int v) const { return target(v) == 0.0; }

  /// Spec induced by the triangulation's stored mark angles.
  static AngleSpec from_marks(const Triangulation& t);
  /// All marks mapped to one angle.
  static AngleSpec uniform(const Triangulation& t, double theta);
};

/// 2*pi*chi + sum over marked vertices of (theta - 2*pi).  Strictly negative
/// is the feasibility condition; its negative is the total hyperbolic area.
double orbifold_char(const Triangulation& t, const AngleSpec& spec);

/// pi * |F_V| - sum_{v in V} phi(v) where phi is the target angle function.
/// Positive for every nonempty V on solvable instances.
double face_excess(const Triangulation& t, const AngleSpec& spec,
                   const VertexSubset& subset);

}  // namespace conepack
