#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "conepack/hypgeom.hpp"
#include "conepack/mesh.hpp"
#include "support.hpp"

using namespace conepack;
using namespace testsupport;

namespace {
const double kInf = kInfiniteRadius;

// Literal law-of-cosines evaluation for cross-checking moderate radii.
double angle_by_law_of_cosines(double x, double y, double z) {
  const double num = std::cosh(x + y) * std::cosh(x + z) - std::cosh(y + z);
  const double den = std::sinh(x + y) * std::sinh(x + z);
  return std::acos(num / den);
}
}  // namespace

TEST_CASE("equilateral tangency triangles approach the euclidean limit") {
  // cos(alpha) = cosh(2r) / (cosh(2r) + 1) -> 1/2 as r -> 0
  CHECK(tangency_angle(1e-4, 1e-4, 1e-4) == doctest::Approx(M_PI / 3).epsilon(1e-7));
  CHECK(tangency_angle(1e-6, 1e-6, 1e-6) == doctest::Approx(M_PI / 3).epsilon(1e-9));
  for (double r : {0.1, 0.7, 2.5}) {
    const double c = std::cosh(2 * r);
    CHECK(tangency_angle(r, r, r) == doctest::Approx(std::acos(c / (c + 1))).epsilon(1e-13));
  }
}

TEST_CASE("equilateral radius hitting alpha = pi/8") {
  // invert cos(alpha) = cosh(2r)/(cosh(2r)+1) at alpha = pi/8
  const double c = std::cos(M_PI / 8) / (1 - std::cos(M_PI / 8));
  const double r = std::acosh(c) / 2;
  CHECK(c == doctest::Approx(12.137071184544).epsilon(1e-12));
  CHECK(tangency_angle(r, r, r) == doctest::Approx(M_PI / 8).epsilon(1e-13));
}

TEST_CASE("two horocyclic petals: cos(alpha) = 1 - 2 e^{-2x}") {
  for (double x : {0.05, 0.5, 2.0, 8.0}) {
    const double expected = std::acos(1 - 2 * std::exp(-2 * x));
    CHECK(tangency_angle(x, kInf, kInf) == doctest::Approx(expected).epsilon(1e-12));
  }
  CHECK(tangency_angle(20.0, kInf, kInf) < 1e-8);        // r -> inf gives 0
  CHECK(tangency_angle(1e-8, kInf, kInf) > M_PI - 1e-3); // r -> 0 gives pi
}

TEST_CASE("one horocyclic petal matches the single-limit closed form") {
  for (double x : {0.2, 1.0, 3.0})
    for (double y : {0.3, 1.5}) {
      const double expected =
          std::acos((std::cosh(x + y) - std::exp(y - x)) / std::sinh(x + y));
      CHECK(tangency_angle(x, y, kInf) == doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("agreement with the raw hyperbolic law of cosines") {
  for (double x : {0.05, 0.5, 2.0})
    for (double y : {0.1, 1.0, 4.0})
      for (double z : {0.25, 3.0}) {
        CHECK(tangency_angle(x, y, z) ==
              doctest::Approx(angle_by_law_of_cosines(x, y, z)).epsilon(1e-12));
      }
}

TEST_CASE("tangency_angle rejects ideal or non-positive centers") {
  CHECK_THROWS_AS(tangency_angle(kInf, 1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(tangency_angle(-1.0, 1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(tangency_angle(1.0, 0.0, 1.0), std::domain_error);
}

TEST_CASE("monotonicity: decreasing in own radius, increasing in petals") {
  const double grid[] = {0.05, 0.5, 2.0, 8.0};
  const double h = 1e-6;
  for (double x : grid)
    for (double y : grid)
      for (double z : grid) {
        CHECK(tangency_angle(x + h, y, z) < tangency_angle(x, y, z));
        CHECK(tangency_angle(x, y + h, z) > tangency_angle(x, y, z));
        CHECK(tangency_angle(x, y, z + h) > tangency_angle(x, y, z));
        CHECK(tangency_angle(x, y, kInf) > tangency_angle(x, y, z));
      }
}

TEST_CASE("continuity at infinity") {
  for (double x : {0.05, 0.5, 2.0, 8.0})
    for (double y : {0.5, 2.0}) {
      CHECK(std::abs(tangency_angle(x, y, 1e6) - tangency_angle(x, y, kInf)) < 1e-8);
      CHECK(std::abs(tangency_angle(x, y, 300.0) - tangency_angle(x, y, kInf)) < 1e-8);
    }
}

TEST_CASE("huge radii stay finite and tiny") {
  // beyond cosh overflow territory for the naive formula
  const double a = tangency_angle(500.0, 400.0, 450.0);
  CHECK(a > 0.0);
  CHECK(a < 1e-100);
}

TEST_CASE("angle sums on the octahedron") {
  Triangulation octa = generate("octahedron");
  SurfaceIndex s(octa);
  const double c = std::cos(M_PI / 8) / (1 - std::cos(M_PI / 8));
  const double r = std::acosh(c) / 2;
  std::map<int, double> radii;
  for (int v : octa.vertices) radii[v] = r;
  for (int v : octa.vertices)
    CHECK(angle_sum(s, radii, v) == doctest::Approx(M_PI / 2).epsilon(1e-12));

  for (int v : octa.vertices) radii[v] = kInf;
  CHECK(angle_sum(s, radii, 0) == 0.0);  // cusp convention

  for (int v : octa.vertices) radii[v] = 1e-6;
  CHECK(angle_sum(s, radii, 0) == doctest::Approx(4 * M_PI / 3).epsilon(1e-9));
}

TEST_CASE("angle sum limits in the own radius") {
  Triangulation octa = generate("octahedron");
  SurfaceIndex s(octa);
  std::map<int, double> radii;
  for (int v : octa.vertices) radii[v] = 1.0;
  radii[0] = 1e-9;
  CHECK(angle_sum(s, radii, 0) == doctest::Approx(4 * M_PI).epsilon(1e-4));
  radii[0] = 60.0;
  CHECK(angle_sum(s, radii, 0) < 1e-20);
}

TEST_CASE("triangle areas") {
  CHECK(triangle_area(0, 0, 0) == doctest::Approx(M_PI));
  CHECK(triangle_area(M_PI / 8, M_PI / 8, M_PI / 8) ==
        doctest::Approx(5 * M_PI / 8).epsilon(1e-14));
  CHECK(triangle_area(M_PI / 2, M_PI / 4, M_PI / 4) == doctest::Approx(0.0));
  CHECK_THROWS_AS(triangle_area(2.0, 2.0, 2.0), std::domain_error);
  CHECK_THROWS_AS(triangle_area(-0.1, 0.1, 0.1), std::domain_error);
}

TEST_CASE("area positivity for tangency triangles with a finite vertex") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> dist(-2.0, 3.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double x = std::exp(dist(rng));
    double y = std::exp(dist(rng)), z = std::exp(dist(rng));
    if (trial % 3 == 0) y = kInfiniteRadius;
    if (trial % 5 == 0) z = kInfiniteRadius;
    const double a1 = tangency_angle(x, y, z);
    const double a2 = std::isinf(y) ? 0.0 : tangency_angle(y, x, z);
    const double a3 = std::isinf(z) ? 0.0 : tangency_angle(z, x, y);
    CHECK(triangle_area(a1, a2, a3) > 0.0);
  }
}

TEST_CASE("ring bounds: closed-form values and strict monotonicity") {
  CHECK(ring_bound_H(3) == doctest::Approx(std::log(2 / std::sqrt(3.0))).epsilon(1e-15));
  CHECK(ring_bound_H(4) == doctest::Approx(std::log(std::sqrt(2.0))).epsilon(1e-15));
  CHECK(ring_bound_H(6) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  for (int k = 3; k < 50; ++k) CHECK(ring_bound_H(k) < ring_bound_H(k + 1));
  CHECK_THROWS_AS(ring_bound_H(2), std::invalid_argument);
}

TEST_CASE("completed flower degree bounds") {
  CHECK(max_completed_degree(5, M_PI / 2) == 25);
  CHECK(max_completed_degree(3, 2 * M_PI) == 6);
  CHECK(max_completed_degree(4, 2 * M_PI / 3) == 16);
  CHECK(max_completed_degree(7, 2 * M_PI) == 14);
  CHECK_THROWS_AS(max_completed_degree(5, 0.0), std::domain_error);
  CHECK_THROWS_AS(max_completed_degree(5, 7.0), std::domain_error);
  CHECK_THROWS_AS(max_completed_degree(2, 1.0), std::invalid_argument);
}

TEST_CASE("disk radius conversion") {
  CHECK(euc_to_hyp_radius(0.5) == doctest::Approx(std::log(3.0)).epsilon(1e-15));
  CHECK(hyp_to_euc_radius(1e-6) == doctest::Approx(5e-7).epsilon(1e-9));
  CHECK(hyp_to_euc_radius(40.0) == doctest::Approx(1.0).epsilon(1e-12));
  for (double R = 1e-6; R <= 20.0; R *= 3.7) {
    const double back = euc_to_hyp_radius(hyp_to_euc_radius(R));
    CHECK(std::abs(back - R) / R < 1e-12);
  }
  CHECK_THROWS_AS(hyp_to_euc_radius(kInfiniteRadius), std::domain_error);
  CHECK_THROWS_AS(euc_to_hyp_radius(1.5), std::domain_error);
}
