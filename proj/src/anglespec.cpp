#include "conepack/anglespec.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace conepack {

double AngleSpec::target(int v) const {
  auto it = targets.find(v);
  return it == targets.end() ? 2.0 * M_PI : it->second;
}

AngleSpec AngleSpec::from_marks(const Triangulation& t) {
  AngleSpec spec;
  for (int m : t.marks) {
    auto it = t.mark_angles.find(m);
    if (it == t.mark_angles.end())
      throw std::invalid_argument("mark " + std::to_string(m) +
                                  " has no stored angle");
    spec.targets[m] = it->second;
  }
  return spec;
}

AngleSpec AngleSpec::uniform(const Triangulation& t, double theta) {
  AngleSpec spec;
  for (int m : t.marks) spec.targets[m] = theta;
  return spec;
}

namespace {

long count_edges(const Triangulation& t) {
  std::set<std::pair<int, int>> edges;
  for (const Face& f : t.faces)
    for (int e = 0; e < 3; ++e) {
      int u = f[e], v = f[(e + 1) % 3];
      edges.insert(u < v ? std::make_pair(u, v) : std::make_pair(v, u));
    }
  return static_cast<long>(edges.size());
}

void check_targets(const Triangulation& t, const AngleSpec& spec) {
  for (const auto& [v, theta] : spec.targets) {
    if (!t.has_vertex(v))
      throw std::invalid_argument("angle target for unknown vertex " +
                                  std::to_string(v));
    if (!(theta >= 0.0) || !std::isfinite(theta))
      throw std::invalid_argument("angle target at vertex " + std::to_string(v) +
                                  " must be finite and >= 0");
  }
}

}  // namespace

double orbifold_char(const Triangulation& t, const AngleSpec& spec) {
  check_targets(t, spec);
  const long chi = static_cast<long>(t.vertices.size()) - count_edges(t) +
                   static_cast<long>(t.faces.size());
  double sum = 0.0;
  for (const auto& [v, theta] : spec.targets) sum += theta - 2.0 * M_PI;
  return 2.0 * M_PI * static_cast<double>(chi) + sum;
}

double face_excess(const Triangulation& t, const AngleSpec& spec,
                   const VertexSubset& subset) {
  if (subset.empty())
    throw std::invalid_argument("face_excess requires a nonempty vertex set");
  check_targets(t, spec);
  const auto faces = star_faces(t, subset);
  std::set<int> distinct(subset.begin(), subset.end());
  double sum = 0.0;
  for (int v : distinct) sum += spec.target(v);
  return M_PI * static_cast<double>(faces.size()) - sum;
}

}  // namespace conepack
