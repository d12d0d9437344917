#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "conepack/anglespec.hpp"
#include "conepack/mesh.hpp"

namespace testsupport {

// Closed form for the all-equal-radii packing of a degree-d vertex:
// cos(alpha) = cosh(2r) / (cosh(2r) + 1), with d*alpha = theta.  Solved by
// plain bisection; independent of the library's angle evaluation.
inline double uniform_radius_oracle(int degree, double theta) {
  const double alpha = theta / degree;
  auto f = [&](double r) {
    const double c = std::cosh(2.0 * r);
    return std::acos(c / (c + 1.0)) - alpha;
  };
  double lo = 1e-9, hi = 25.0;  // f decreasing: f(lo) ~ pi/3 - alpha > 0
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

inline conepack::Triangulation marked(conepack::Triangulation t,
                                      const std::map<int, double>& angles) {
  for (const auto& [v, theta] : angles) {
    t.marks.push_back(v);
    t.mark_angles[v] = theta;
  }
  return t;
}

inline conepack::Triangulation uniform_marked(conepack::Triangulation t, double theta) {
  t.marks = t.vertices;
  for (int v : t.vertices) t.mark_angles[v] = theta;
  return t;
}

inline conepack::AngleSpec spec_of(const conepack::Triangulation& t) {
  return conepack::AngleSpec::from_marks(t);
}

}  // namespace testsupport
