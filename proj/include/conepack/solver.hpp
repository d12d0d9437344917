#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "conepack/anglespec.hpp"
#include "conepack/mesh.hpp"

namespace conepack {

struct SolveConfig {
  double tol_angle = 1e-10;  // max |angle_sum - target| at finite vertices
  long max_iters = 1000000;  // sweep cap
  double radius_min = 1e-9;  // bracketing bounds for the per-vertex solve
  double radius_max = 1e3;
};

/// Radii realizing a conical hyperbolic metric: +inf exactly at cusp targets.
struct Label {
  std::map<int, double> radii;
  double residual = 0.0;
  long iterations = 0;
};

struct FeasibilityVerdict {
  double orbchar = 0.0;
  bool orbchar_ok = false;  // orbchar strictly negative (beyond roundoff)

  struct ExcessEntry {
    int vertex = -1;
    double excess = 0.0;
  };
  // Cheap necessary conditions: face excess over each singleton {v} and over
  // each star's vertex set must be positive.  Violations only arise for
  // targets above 2*pi.
  std::vector<ExcessEntry> singleton_violations;
  std::vector<ExcessEntry> star_violations;

  bool feasible() const { return orbchar_ok; }
  bool diagnostics_clean() const {
    return singleton_violations.empty() && star_violations.empty();
  }
};

FeasibilityVerdict check_feasible(const Triangulation& t, const AngleSpec& spec);

struct SolveFailure : std::runtime_error {
  SolveFailure(const std::string& msg, double residual_, long iterations_)
      : std::runtime_error(msg), residual(residual_), iterations(iterations_) {}
  double residual;
  long iterations;
};

/// Computes the unique label whose angle sum matches `spec` at every vertex.
/// Vertices with target 0 are pinned to radius +inf before iteration; the
/// rest start at radius 1 and are swept in ascending id order, each sweep
/// solving the one-dimensional angle-sum equation per vertex by safeguarded
/// bracketing on the log radius.  Deterministic.
///
/// Throws std::domain_error if orbchar >= 0 and SolveFailure on
/// non-convergence within cfg.max_iters.
Label solve(const Triangulation& t, const AngleSpec& spec,
            const SolveConfig& cfg = {});

/// Total area as the sum of per-face angle deficits; equals -orbchar on a
/// solved label (Gauss-Bonnet).
double metric_area(const Triangulation& t, const Label& label);

}  // namespace conepack
