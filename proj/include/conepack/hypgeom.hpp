#pragma once

#include <limits>
#include <map>

#include "conepack/mesh.hpp"

namespace conepack {

/// Radius of a horocyclic circle (cusp).
inline constexpr double kInfiniteRadius = std::numeric_limits<double>::infinity();

/// Cached exponentials of an extended radius R in (0, +inf]:
/// s = e^{-R}, w = 1 - e^{-2R}.  A cusp has s = 0, w = 1.
struct RadiusCoeffs {
  double s = 0.0;
  double w = 1.0;
};

/// Throws std::domain_error unless R > 0 (finite or +inf).
RadiusCoeffs radius_coeffs(double radius);

/// Angle at the circle of coefficients `a` in the tangency triangle with
/// petals `b`, `c`.  Returns 0 when a is a cusp (ideal-vertex convention).
double tangency_angle_c(const RadiusCoeffs& a, const RadiusCoeffs& b,
                        const RadiusCoeffs& c);

/// Angle at the vertex of radius x in the hyperbolic triangle with side
/// lengths x+y, x+z, y+z.  y, z may be +inf (horocyclic petals); x must be
/// finite and positive.  Result in (0, pi).
double tangency_angle(double x, double y, double z);

/// Total angle at v across the glued triangles of st(v); 0 if radii[v] = +inf.
/// `radii` must cover every vertex of st(v).
double angle_sum(const SurfaceIndex& s, const std::map<int, double>& radii, int v);

/// Hyperbolic area pi - a1 - a2 - a3 of a triangle with the given angles.
/// Angles must be >= 0 with sum <= pi.
double triangle_area(double a1, double a2, double a3);

/// Upper bound ln(1/sin(pi/k)) for the radius of a degree-k flower center;
/// strictly increasing in k.  Requires k >= 3.
double ring_bound_H(int k);

/// Degree bound k*(floor(2*pi/theta) + 1) for the completed flower of a
/// degree-k flower centered at a cone of angle theta in (0, 2*pi].
/// Throws for theta <= 0 (no finite bound at a cusp) and theta > 2*pi.
long max_completed_degree(int k, double theta);

/// Euclidean radius tanh(R/2) of the circle of hyperbolic radius R centered
/// at the origin of the unit disk, and its inverse.
double hyp_to_euc_radius(double R);
double euc_to_hyp_radius(double r);

}  // namespace conepack
