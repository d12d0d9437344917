#include "conepack/solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "conepack/hypgeom.hpp"

namespace conepack {

FeasibilityVerdict check_feasible(const Triangulation& t, const AngleSpec& spec) {
  SurfaceIndex s(t);
  FeasibilityVerdict verdict;
  verdict.orbchar = orbifold_char(t, spec);
  // Strict negativity, with a floor against roundoff: an orbifold
  // characteristic within 1e-9 of zero has no usable hyperbolic realization.
  verdict.orbchar_ok = verdict.orbchar < -1e-9;

  for (int v : t.vertices) {
    const double singleton = M_PI * s.degree(v) - spec.target(v);
    if (singleton <= 0.0) verdict.singleton_violations.push_back({v, singleton});

    VertexSubset star_set = s.link_cycle(v);
    star_set.push_back(v);
    const double star = face_excess(t, spec, star_set);
    if (star <= 0.0) verdict.star_violations.push_back({v, star});
  }
  return verdict;
}

namespace {

struct VertexState {
  RadiusCoeffs coeffs;
  double radius = 1.0;
  bool cusp = false;
};

// Angle sum at vertex vi given trial coefficients cv for it.
double local_angle_sum(const std::vector<std::array<int, 2>>& petals,
                       const std::vector<VertexState>& state,
                       const RadiusCoeffs& cv) {
  double sum = 0.0;
  for (const auto& [a, b] : petals)
    sum += tangency_angle_c(cv, state[a].coeffs, state[b].coeffs);
  return sum;
}

// Root of (angle sum - target) as a function of the vertex's own radius.
// The sum decreases strictly from deg*pi to 0 as the radius grows, so the
// root is unique; we bracket it in log-radius and shrink by a regula-falsi
// (Illinois) step with a bisection safeguard.
double solve_vertex_radius(const std::vector<std::array<int, 2>>& petals,
                           const std::vector<VertexState>& state, double target,
                           double radius_min, double radius_max) {
  auto f = [&](double log_r) {
    return local_angle_sum(petals, state, radius_coeffs(std::exp(log_r))) - target;
  };
  double lo = std::log(radius_min), hi = std::log(radius_max);
  double flo = f(lo), fhi = f(hi);
  if (flo <= 0.0) return radius_min;  // target at or above deg*pi: clamp
  if (fhi >= 0.0) return radius_max;

  int side = 0;
  for (int it = 0; it < 200 && hi - lo > 4e-16; ++it) {
    double mid;
    if (it % 8 == 7) {
      mid = 0.5 * (lo + hi);  // periodic bisection safeguard
    } else {
      mid = (lo * fhi - hi * flo) / (fhi - flo);
      const double guard = 1e-3 * (hi - lo);
      mid = std::clamp(mid, lo + guard, hi - guard);
    }
    const double fmid = f(mid);
    if (std::abs(fmid) < 1e-15) return std::exp(mid);
    if (fmid > 0.0) {
      lo = mid;
      flo = fmid;
      if (side == 1) fhi *= 0.5;  // Illinois weighting
      side = 1;
    } else {
      hi = mid;
      fhi = fmid;
      if (side == -1) flo *= 0.5;
      side = -1;
    }
  }
  return std::exp(flo <= -fhi ? hi : lo);  // endpoint with the smaller error
}

}  // namespace

Label solve(const Triangulation& t, const AngleSpec& spec, const SolveConfig& cfg) {
  SurfaceIndex s(t);
  if (!(cfg.tol_angle > 0.0))
    throw std::invalid_argument("tol_angle must be positive");

  const FeasibilityVerdict verdict = check_feasible(t, spec);
  if (!verdict.feasible()) {
    std::ostringstream os;
    os << "infeasible spec: orbchar = " << verdict.orbchar << " >= 0";
    throw std::domain_error(os.str());
  }

  const int n = s.num_vertices();
  std::vector<VertexState> state(n);
  std::vector<double> targets(n);
  std::vector<int> sweep_order;  // ascending id, finite targets only
  for (int i = 0; i < n; ++i) {
    const int id = s.id_of(i);
    targets[i] = spec.target(id);
    if (targets[i] == 0.0) {
      state[i].cusp = true;
      state[i].radius = kInfiniteRadius;
      state[i].coeffs = {0.0, 1.0};
    } else {
      state[i].radius = 1.0;
      state[i].coeffs = radius_coeffs(1.0);
      sweep_order.push_back(i);
    }
  }

  // Petal pairs per vertex, in link-cycle order.
  std::vector<std::vector<std::array<int, 2>>> petals(n);
  for (int i = 0; i < n; ++i) {
    const std::vector<int>& link = s.link_cycle(s.id_of(i));
    const size_t k = link.size();
    for (size_t j = 0; j < k; ++j)
      petals[i].push_back({s.index_of(link[j]), s.index_of(link[(j + 1) % k])});
  }

  auto residual = [&]() {
    double worst = 0.0;
    for (int i : sweep_order) {
      const double sum = local_angle_sum(petals[i], state, state[i].coeffs);
      worst = std::max(worst, std::abs(sum - targets[i]));
    }
    return worst;
  };

  long sweeps = 0;
  double res = residual();
  while (res > cfg.tol_angle) {
    if (sweeps >= cfg.max_iters) {
      std::ostringstream os;
      os << "solver did not converge: residual " << res << " after " << sweeps
         << " sweeps (tol " << cfg.tol_angle << ")";
      throw SolveFailure(os.str(), res, sweeps);
    }
    for (int i : sweep_order) {
      const double r = solve_vertex_radius(petals[i], state, targets[i],
                                           cfg.radius_min, cfg.radius_max);
      state[i].radius = r;
      state[i].coeffs = radius_coeffs(r);
    }
    ++sweeps;
    res = residual();
  }

  Label label;
  label.residual = res;
  label.iterations = sweeps;
  for (int i = 0; i < n; ++i) label.radii[s.id_of(i)] = state[i].radius;
  return label;
}

double metric_area(const Triangulation& t, const Label& label) {
  double area = 0.0;
  for (const Face& f : t.faces) {
    RadiusCoeffs c[3];
    for (int e = 0; e < 3; ++e) c[e] = radius_coeffs(label.radii.at(f[e]));
    double angles = 0.0;
    for (int e = 0; e < 3; ++e)
      angles += tangency_angle_c(c[e], c[(e + 1) % 3], c[(e + 2) % 3]);
    area += M_PI - angles;
  }
  return area;
}

}  // namespace conepack
