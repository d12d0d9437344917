#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

namespace conepack {

using Face = std::array<int, 3>;

/// A set of vertex ids of a host triangulation.
using VertexSubset = std::vector<int>;

/// Oriented simplicial triangulation of a closed surface.
///
/// Vertices are integer ids (ascending, not necessarily contiguous).  Faces
/// are ordered triples of distinct ids; a coherent orientation means every
/// undirected edge appears exactly once in each direction.  `marks` lists the
/// cone/puncture sites p_1..p_n in index order; `mark_angles` stores a target
/// total angle per mark (0 means a cusp target).
///
/// Triangulations are immutable after construction; all operations here
/// return new objects.
struct Triangulation {
  std::vector<int> vertices;
  std::vector<Face> faces;
  std::vector<int> marks;
  std::map<int, double> mark_angles;
  int declared_genus = 0;

  bool has_vertex(int v) const;
  bool is_marked(int v) const;
  int max_vertex_id() const;
};

struct ValidationReport {
  std::vector<std::string> violations;
  int genus = -1;     // from Euler characteristic, when well defined
  int max_degree = 0;
  long num_edges = 0;

  bool valid() const { return violations.empty(); }
  std::string summary() const;
};

/// Checks the closed-surface invariants: every edge in exactly 2 faces,
/// coherent orientation, vertex links single cycles of length >= 3, Euler
/// characteristic consistent with the declared genus, sane marks.
/// Report-carrying; never throws on bad input.
ValidationReport validate(const Triangulation& t);

/// Indexed read-only view of a valid triangulation.  Construction runs
/// validate() and throws std::invalid_argument on any violation.
class SurfaceIndex {
 public:
  explicit SurfaceIndex(const Triangulation& t);

  const Triangulation& tri() const { return *tri_; }
  int num_vertices() const { return static_cast<int>(ids_.size()); }
  int num_faces() const { return static_cast<int>(tri_->faces.size()); }
  long num_edges() const { return static_cast<long>(edges_.size()); }
  int euler_characteristic() const;
  int genus() const { return static_cast<int>((2 - euler_characteristic()) / 2); }
  int max_degree() const;

  int index_of(int id) const;  // throws on unknown id
  int id_of(int idx) const { return ids_[idx]; }
  const std::vector<int>& ids() const { return ids_; }

  int degree(int id) const;
  /// Neighbor ids in orientation order, starting at the smallest neighbor id.
  const std::vector<int>& link_cycle(int id) const;
  /// Face indices around `id`, parallel to link_cycle: star(id)[i] is the face
  /// (id, link[i], link[i+1]).
  const std::vector<int>& star(int id) const;
  bool adjacent(int u, int v) const;
  /// The two face indices incident to undirected edge {u,v}; throws if absent.
  std::array<int, 2> edge_faces(int u, int v) const;
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

 private:
  const Triangulation* tri_;
  std::vector<int> ids_;
  std::map<int, int> idx_;
  std::vector<std::vector<int>> link_;
  std::vector<std::vector<int>> star_;
  std::vector<std::pair<int, int>> edges_;
  std::map<std::pair<int, int>, std::array<int, 2>> edge_faces_;
};

/// Faces with at least one vertex in `subset`.  Throws on unknown ids.
std::vector<Face> star_faces(const Triangulation& t, const VertexSubset& subset);

/// Standard first barycentric subdivision; new ids are appended (edge
/// midpoints in sorted edge order, then face barycenters in face order) so
/// existing ids remain stable.  Marks are preserved.
Triangulation barycentric_subdivide(const Triangulation& t);

/// A simple edge-cycle enclosing the puncture vertex `mark`.
struct PeripheralLoop {
  int mark = -1;
  std::vector<int> cycle;
};

/// One loop per puncture, vertex-disjoint.
using PeripheralSystem = std::vector<PeripheralLoop>;

struct RefinementResult {
  Triangulation tri;
  /// levels[d] is the peripheral system after d refinement rounds;
  /// levels[0] holds the links of the marks in the (possibly pre-subdivided)
  /// base, levels.back() the links in the output.
  std::vector<PeripheralSystem> levels;
};

/// Self-similar star refinement at every marked vertex, iterated `depth`
/// times.  Each round inserts one midpoint per spoke of st(p) and replaces
/// each star face (p,a,b) by (p,m_a,m_b), (m_a,a,b), (m_a,b,m_b); the star of
/// p keeps its combinatorics, so rounds compose.  If two marks share a face
/// the base is first barycentrically subdivided.
RefinementResult puncture_refine(const Triangulation& t, int depth);

/// Collapses the interior of each peripheral loop to a single marked cone
/// vertex joined to the loop by a triangle fan.  The enclosed mark's id is
/// reused for the cone vertex, so ids stay comparable across depths.
/// Throws if a region is not a disk or the result would not be simplicial.
Triangulation cone_off(const Triangulation& t, const PeripheralSystem& system);

/// Named instances: octahedron, icosahedron, double_tetrahedron,
/// genus2_minimal, three_punctured_sphere_base.
Triangulation generate(const std::string& name);
std::vector<std::string> generator_names();

/// Orientation-preserving simplicial isomorphism test (optionally requiring
/// marks to correspond).  Intended for desk-scale complexes.
bool isomorphic(const Triangulation& a, const Triangulation& b,
                bool respect_marks = false);

/// All orientation-preserving simplicial automorphisms, as vertex id maps.
std::vector<std::map<int, int>> automorphisms(const Triangulation& t);

}  // namespace conepack
