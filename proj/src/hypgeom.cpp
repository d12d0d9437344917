#include "conepack/hypgeom.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace conepack {

RadiusCoeffs radius_coeffs(double radius) {
  if (std::isnan(radius) || radius <= 0.0)
    throw std::domain_error("radius must be positive, got " +
                            std::to_string(radius));
  if (std::isinf(radius)) return {0.0, 1.0};
  // w = 1 - e^{-2R} via expm1 so tiny radii keep full precision.
  return {std::exp(-radius), -std::expm1(-2.0 * radius)};
}

double tangency_angle_c(const RadiusCoeffs& a, const RadiusCoeffs& b,
                        const RadiusCoeffs& c) {
  if (a.s == 0.0) return 0.0;  // ideal vertex
  // Half-angle form of the hyperbolic law of cosines for a tangency triangle
  // with side lengths x+y, x+z, y+z:
  //   tan(alpha/2) = e^{-x} sqrt[(1-e^{-2y})(1-e^{-2z})]
  //                  / sqrt[(1-e^{-2x})(1-e^{-2(x+y+z)})]
  // All factors are non-negative, so no cancellation and exact ideal limits.
  const double w123 = a.w + b.w + c.w - a.w * b.w - a.w * c.w - b.w * c.w +
                      a.w * b.w * c.w;  // 1 - e^{-2(x+y+z)}
  return 2.0 * std::atan2(a.s * std::sqrt(b.w * c.w), std::sqrt(a.w * w123));
}

double tangency_angle(double x, double y, double z) {
  if (std::isinf(x))
    throw std::domain_error(
        "tangency_angle: x must be finite (ideal vertices contribute angle 0)");
  return tangency_angle_c(radius_coeffs(x), radius_coeffs(y), radius_coeffs(z));
}

double angle_sum(const SurfaceIndex& s, const std::map<int, double>& radii, int v) {
  const double rv = radii.at(v);
  if (std::isinf(rv)) return 0.0;
  const RadiusCoeffs cv = radius_coeffs(rv);
  const std::vector<int>& link = s.link_cycle(v);
  double sum = 0.0;
  const size_t k = link.size();
  for (size_t i = 0; i < k; ++i) {
    const RadiusCoeffs ca = radius_coeffs(radii.at(link[i]));
    const RadiusCoeffs cb = radius_coeffs(radii.at(link[(i + 1) % k]));
    sum += tangency_angle_c(cv, ca, cb);
  }
  return sum;
}

double triangle_area(double a1, double a2, double a3) {
  const double angles[3] = {a1, a2, a3};
  for (double a : angles)
    if (!(a >= 0.0) || !std::isfinite(a))
      throw std::domain_error("triangle angles must be non-negative");
  const double sum = a1 + a2 + a3;
  if (sum > M_PI + 1e-9)
    throw std::domain_error("triangle angles sum to " + std::to_string(sum) +
                            " > pi");
  return std::max(0.0, M_PI - sum);
}

double ring_bound_H(int k) {
  if (k < 3) throw std::invalid_argument("flower degree must be >= 3");
  return std::log(1.0 / std::sin(M_PI / k));
}

long max_completed_degree(int k, double theta) {
  if (k < 3) throw std::invalid_argument("flower degree must be >= 3");
  if (!(theta > 0.0))
    throw std::domain_error("no finite completed-degree bound for theta <= 0");
  if (theta > 2.0 * M_PI + 1e-12)
    throw std::domain_error("completed-degree bound requires theta <= 2*pi");
  const double q = 2.0 * M_PI / theta;
  const double r = std::round(q);
  // Snap to integers so exact submultiples of 2*pi are not lost to roundoff.
  const long m = (std::abs(q - r) < 1e-9) ? static_cast<long>(r)
                                          : static_cast<long>(std::floor(q));
  return static_cast<long>(k) * (m + 1);
}

double hyp_to_euc_radius(double R) {
  if (!(R > 0.0) || std::isinf(R) || std::isnan(R))
    throw std::domain_error("hyperbolic radius must be finite positive");
  return std::tanh(R / 2.0);
}

double euc_to_hyp_radius(double r) {
  if (!(r > 0.0) || !(r < 1.0))
    throw std::domain_error("euclidean radius must lie in (0,1)");
  return 2.0 * std::atanh(r);
}

}  // namespace conepack
