#include "conepack/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace conepack {

namespace {

std::pair<int, int> ordered(int u, int v) {
  return u < v ? std::make_pair(u, v) : std::make_pair(v, u);
}

std::string face_str(const Face& f) {
  std::ostringstream os;
  os << "(" << f[0] << "," << f[1] << "," << f[2] << ")";
  return os.str();
}

}  // namespace

bool Triangulation::has_vertex(int v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

bool Triangulation::is_marked(int v) const {
  return std::find(marks.begin(), marks.end(), v) != marks.end();
}

int Triangulation::max_vertex_id() const {
  return vertices.empty() ? -1 : vertices.back();
}

std::string ValidationReport::summary() const {
  if (valid()) {
    std::ostringstream os;
    os << "valid: genus " << genus << ", max degree " << max_degree << ", "
       << num_edges << " edges";
    return os.str();
  }
  std::ostringstream os;
  os << violations.size() << " violation(s):";
  for (const auto& v : violations) os << "\n  - " << v;
  return os.str();
}

ValidationReport validate(const Triangulation& t) {
  ValidationReport rep;
  auto complain = [&rep](const std::string& msg) { rep.violations.push_back(msg); };

  if (t.vertices.empty()) complain("no vertices");
  for (size_t i = 0; i + 1 < t.vertices.size(); ++i) {
    if (t.vertices[i] >= t.vertices[i + 1]) {
      complain("vertex ids not strictly increasing");
      break;
    }
  }
  std::set<int> vset(t.vertices.begin(), t.vertices.end());

  if (t.faces.empty()) complain("no faces");
  bool ids_ok = true;
  std::set<std::array<int, 3>> seen_faces;
  for (const Face& f : t.faces) {
    if (f[0] == f[1] || f[1] == f[2] || f[0] == f[2]) {
      complain("face " + face_str(f) + " has a repeated vertex");
      ids_ok = false;
      continue;
    }
    for (int v : f) {
      if (!vset.count(v)) {
        complain("face " + face_str(f) + " references unknown vertex " +
                 std::to_string(v));
        ids_ok = false;
      }
    }
    std::array<int, 3> key = f;
    std::sort(key.begin(), key.end());
    if (!seen_faces.insert(key).second)
      complain("duplicate face " + face_str(f));
  }
  if (!ids_ok) return rep;

  // Directed edges: coherent orientation means each appears exactly once.
  std::map<std::pair<int, int>, int> directed;
  for (const Face& f : t.faces) {
    for (int e = 0; e < 3; ++e) {
      ++directed[{f[e], f[(e + 1) % 3]}];
    }
  }
  std::map<std::pair<int, int>, int> undirected;
  for (const auto& [edge, count] : directed) {
    if (count > 1)
      complain("directed edge " + std::to_string(edge.first) + "->" +
               std::to_string(edge.second) + " appears in " +
               std::to_string(count) + " faces (orientation not coherent)");
    undirected[ordered(edge.first, edge.second)] += count;
  }
  for (const auto& [edge, count] : undirected) {
    if (count != 2)
      complain("edge {" + std::to_string(edge.first) + "," +
               std::to_string(edge.second) + "} with " + std::to_string(count) +
               " incident face(s)");
  }
  rep.num_edges = static_cast<long>(undirected.size());

  // Vertex links: the oriented successor map around each vertex must form a
  // single simple cycle of length >= 3.
  std::map<int, std::map<int, int>> succ;  // v -> (a -> b) from faces (v,a,b)
  for (const Face& f : t.faces) {
    for (int e = 0; e < 3; ++e) {
      int v = f[e], a = f[(e + 1) % 3], b = f[(e + 2) % 3];
      auto [it, inserted] = succ[v].emplace(a, b);
      if (!inserted)
        complain("vertex " + std::to_string(v) + " has two faces after neighbor " +
                 std::to_string(a));
    }
  }
  int max_deg = 0;
  for (int v : t.vertices) {
    auto it = succ.find(v);
    if (it == succ.end()) {
      complain("isolated vertex " + std::to_string(v));
      continue;
    }
    const auto& next = it->second;
    int start = next.begin()->first;
    int cur = start;
    size_t steps = 0;
    bool broken = false;
    do {
      auto jt = next.find(cur);
      if (jt == next.end()) {
        broken = true;
        break;
      }
      cur = jt->second;
      ++steps;
    } while (cur != start && steps <= next.size());
    if (broken || steps != next.size())
      complain("link of vertex " + std::to_string(v) + " is not a single cycle");
    else if (steps < 3)
      complain("link of vertex " + std::to_string(v) + " has length " +
               std::to_string(steps) + " < 3");
    max_deg = std::max(max_deg, static_cast<int>(next.size()));
  }
  rep.max_degree = max_deg;

  // Marks.
  {
    std::set<int> seen;
    for (int m : t.marks) {
      if (!vset.count(m))
        complain("mark " + std::to_string(m) + " is not a vertex");
      if (!seen.insert(m).second)
        complain("duplicate mark " + std::to_string(m));
    }
    for (const auto& [v, angle] : t.mark_angles) {
      if (!seen.count(v))
        complain("angle stored for unmarked vertex " + std::to_string(v));
      if (!(angle >= 0.0) || !std::isfinite(angle))
        complain("mark " + std::to_string(v) + " has invalid angle");
    }
  }

  if (rep.violations.empty()) {
    long chi = static_cast<long>(t.vertices.size()) - rep.num_edges +
               static_cast<long>(t.faces.size());
    if (chi % 2 != 0 || chi > 2) {
      complain("Euler characteristic " + std::to_string(chi) +
               " is not of the form 2-2g");
    } else {
      rep.genus = static_cast<int>((2 - chi) / 2);
      if (rep.genus != t.declared_genus)
        complain("Euler characteristic " + std::to_string(chi) +
                 " inconsistent with declared genus " +
                 std::to_string(t.declared_genus));
    }
  }
  return rep;
}

SurfaceIndex::SurfaceIndex(const Triangulation& t) : tri_(&t) {
  ValidationReport rep = validate(t);
  if (!rep.valid())
    throw std::invalid_argument("invalid triangulation: " + rep.summary());

  ids_ = t.vertices;
  for (size_t i = 0; i < ids_.size(); ++i) idx_[ids_[i]] = static_cast<int>(i);

  // Oriented successor maps and face lookup around each vertex.
  std::vector<std::map<int, std::pair<int, int>>> succ(ids_.size());  // a -> (b, face)
  for (size_t fi = 0; fi < t.faces.size(); ++fi) {
    const Face& f = t.faces[fi];
    for (int e = 0; e < 3; ++e) {
      int v = f[e], a = f[(e + 1) % 3], b = f[(e + 2) % 3];
      succ[idx_.at(v)][a] = {b, static_cast<int>(fi)};
      auto key = ordered(v, a);
      auto it = edge_faces_.find(key);
      if (it == edge_faces_.end())
        edge_faces_[key] = {static_cast<int>(fi), -1};
      else if (it->second[0] != static_cast<int>(fi))
        it->second[1] = static_cast<int>(fi);
    }
  }
  link_.resize(ids_.size());
  star_.resize(ids_.size());
  for (size_t vi = 0; vi < ids_.size(); ++vi) {
    const auto& next = succ[vi];
    int start = next.begin()->first;
    int cur = start;
    do {
      const auto& [nb, face] = next.at(cur);
      link_[vi].push_back(cur);
      star_[vi].push_back(face);
      cur = nb;
    } while (cur != start);
  }
  for (const auto& [edge, faces] : edge_faces_) edges_.push_back(edge);
}

int SurfaceIndex::euler_characteristic() const {
  return static_cast<int>(static_cast<long>(ids_.size()) - num_edges() +
                          static_cast<long>(tri_->faces.size()));
}

int SurfaceIndex::max_degree() const {
  size_t d = 0;
  for (const auto& l : link_) d = std::max(d, l.size());
  return static_cast<int>(d);
}

int SurfaceIndex::index_of(int id) const {
  auto it = idx_.find(id);
  if (it == idx_.end())
    throw std::invalid_argument("unknown vertex id " + std::to_string(id));
  return it->second;
}

int SurfaceIndex::degree(int id) const {
  return static_cast<int>(link_[index_of(id)].size());
}

const std::vector<int>& SurfaceIndex::link_cycle(int id) const {
  return link_[index_of(id)];
}

const std::vector<int>& SurfaceIndex::star(int id) const {
  return star_[index_of(id)];
}

bool SurfaceIndex::adjacent(int u, int v) const {
  return edge_faces_.count(ordered(u, v)) > 0;
}

std::array<int, 2> SurfaceIndex::edge_faces(int u, int v) const {
  auto it = edge_faces_.find(ordered(u, v));
  if (it == edge_faces_.end())
    throw std::invalid_argument("no edge {" + std::to_string(u) + "," +
                                std::to_string(v) + "}");
  return it->second;
}

std::vector<Face> star_faces(const Triangulation& t, const VertexSubset& subset) {
  std::set<int> wanted;
  for (int v : subset) {
    if (!t.has_vertex(v))
      throw std::invalid_argument("unknown vertex id " + std::to_string(v));
    wanted.insert(v);
  }
  std::vector<Face> out;
  for (const Face& f : t.faces)
    if (wanted.count(f[0]) || wanted.count(f[1]) || wanted.count(f[2]))
      out.push_back(f);
  return out;
}

Triangulation barycentric_subdivide(const Triangulation& t) {
  SurfaceIndex s(t);
  Triangulation out;
  out.declared_genus = t.declared_genus;
  out.marks = t.marks;
  out.mark_angles = t.mark_angles;
  out.vertices = t.vertices;

  int next_id = t.max_vertex_id() + 1;
  std::map<std::pair<int, int>, int> midpoint;
  for (const auto& e : s.edges()) midpoint[e] = next_id++;
  std::vector<int> barycenter(t.faces.size());
  for (size_t fi = 0; fi < t.faces.size(); ++fi) barycenter[fi] = next_id++;

  for (const auto& [e, m] : midpoint) out.vertices.push_back(m);
  for (int b : barycenter) out.vertices.push_back(b);
  std::sort(out.vertices.begin(), out.vertices.end());

  for (size_t fi = 0; fi < t.faces.size(); ++fi) {
    const Face& f = t.faces[fi];
    int c = barycenter[fi];
    for (int e = 0; e < 3; ++e) {
      int a = f[e], b = f[(e + 1) % 3];
      int m = midpoint.at(ordered(a, b));
      out.faces.push_back({a, m, c});
      out.faces.push_back({m, b, c});
    }
  }
  return out;
}

namespace {

// One self-similar refinement round at every mark.  Returns the new
// peripheral rings (one per mark, in mark order).
PeripheralSystem refine_round(Triangulation& t) {
  SurfaceIndex s(t);
  std::set<int> mark_set(t.marks.begin(), t.marks.end());

  // Faces to be replaced: the stars of the marks.
  std::set<int> replaced;
  for (int p : t.marks)
    for (int f : s.star(p)) replaced.insert(f);

  int next_id = t.max_vertex_id() + 1;
  PeripheralSystem rings;
  std::vector<Face> new_faces;
  for (int p : t.marks) {
    const std::vector<int>& link = s.link_cycle(p);
    std::map<int, int> mid;  // link vertex -> spoke midpoint id
    PeripheralLoop ring;
    ring.mark = p;
    for (int a : link) {
      mid[a] = next_id;
      ring.cycle.push_back(next_id);
      ++next_id;
    }
    const size_t k = link.size();
    for (size_t i = 0; i < k; ++i) {
      int a = link[i], b = link[(i + 1) % k];
      int ma = mid.at(a), mb = mid.at(b);
      new_faces.push_back({p, ma, mb});
      new_faces.push_back({ma, a, b});
      new_faces.push_back({ma, b, mb});
    }
    rings.push_back(std::move(ring));
  }

  std::vector<Face> faces;
  for (size_t fi = 0; fi < t.faces.size(); ++fi)
    if (!replaced.count(static_cast<int>(fi))) faces.push_back(t.faces[fi]);
  faces.insert(faces.end(), new_faces.begin(), new_faces.end());
  t.faces = std::move(faces);
  for (int id = t.max_vertex_id() + 1; id < next_id; ++id) t.vertices.push_back(id);
  std::sort(t.vertices.begin(), t.vertices.end());
  return rings;
}

bool marks_share_face(const Triangulation& t) {
  std::set<int> mark_set(t.marks.begin(), t.marks.end());
  for (const Face& f : t.faces) {
    int hits = static_cast<int>(mark_set.count(f[0])) + mark_set.count(f[1]) +
               mark_set.count(f[2]);
    if (hits > 1) return true;
  }
  return false;
}

}  // namespace

RefinementResult puncture_refine(const Triangulation& t, int depth) {
  if (depth < 0) throw std::invalid_argument("depth must be >= 0");
  RefinementResult res;
  res.tri = t;
  if (marks_share_face(res.tri)) {
    res.tri = barycentric_subdivide(res.tri);
    if (marks_share_face(res.tri))
      throw std::invalid_argument(
          "marked stars still overlap after barycentric pre-subdivision");
  }

  {
    SurfaceIndex s(res.tri);
    PeripheralSystem base_links;
    for (int p : res.tri.marks)
      base_links.push_back({p, s.link_cycle(p)});
    res.levels.push_back(std::move(base_links));
  }
  for (int d = 0; d < depth; ++d) res.levels.push_back(refine_round(res.tri));
  return res;
}

Triangulation cone_off(const Triangulation& t, const PeripheralSystem& system) {
  SurfaceIndex s(t);

  std::set<int> all_deleted_vertices;
  std::set<int> all_deleted_faces;
  std::vector<Face> fans;
  std::vector<int> cone_ids;

  for (const PeripheralLoop& loop : system) {
    const std::vector<int>& cyc = loop.cycle;
    if (cyc.size() < 3)
      throw std::invalid_argument("peripheral loop has length < 3");
    std::set<int> on_loop(cyc.begin(), cyc.end());
    if (on_loop.size() != cyc.size())
      throw std::invalid_argument("peripheral loop is not simple");
    std::set<std::pair<int, int>> loop_edges;
    for (size_t i = 0; i < cyc.size(); ++i) {
      int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
      if (!s.adjacent(u, v))
        throw std::invalid_argument("loop vertices " + std::to_string(u) + "," +
                                    std::to_string(v) + " are not adjacent");
      loop_edges.insert(ordered(u, v));
    }
    if (!t.has_vertex(loop.mark) || on_loop.count(loop.mark))
      throw std::invalid_argument("loop must enclose its marked vertex");

    // Flood-fill the region containing the mark without crossing loop edges.
    std::set<int> region;  // face indices
    std::deque<int> queue(s.star(loop.mark).begin(), s.star(loop.mark).end());
    for (int f : queue) region.insert(f);
    while (!queue.empty()) {
      int fi = queue.front();
      queue.pop_front();
      const Face& f = t.faces[fi];
      for (int e = 0; e < 3; ++e) {
        auto key = ordered(f[e], f[(e + 1) % 3]);
        if (loop_edges.count(key)) continue;
        for (int g : s.edge_faces(key.first, key.second)) {
          if (g >= 0 && !region.count(g)) {
            region.insert(g);
            queue.push_back(g);
          }
        }
      }
    }
    if (region.size() == t.faces.size())
      throw std::invalid_argument("peripheral loop does not separate");

    // The region's boundary must be exactly the loop, and the region a disk.
    std::set<std::pair<int, int>> region_edges;
    std::set<int> region_vertices;
    for (int fi : region) {
      const Face& f = t.faces[fi];
      for (int e = 0; e < 3; ++e) {
        region_edges.insert(ordered(f[e], f[(e + 1) % 3]));
        region_vertices.insert(f[e]);
      }
    }
    for (const auto& e : region_edges) {
      auto faces = s.edge_faces(e.first, e.second);
      bool in0 = region.count(faces[0]), in1 = faces[1] >= 0 && region.count(faces[1]);
      bool boundary = (in0 != in1);
      if (boundary != (loop_edges.count(e) > 0))
        throw std::invalid_argument(
            "region boundary is not the peripheral loop (chord or pinch)");
    }
    long chi = static_cast<long>(region_vertices.size()) -
               static_cast<long>(region_edges.size()) +
               static_cast<long>(region.size());
    if (chi != 1)
      throw std::invalid_argument("peripheral region is not a disk");

    std::set<int> interior = region_vertices;
    for (int v : cyc) interior.erase(v);
    for (int m : t.marks)
      if (m != loop.mark && interior.count(m))
        throw std::invalid_argument("region contains a foreign mark " +
                                    std::to_string(m));
    for (int v : interior) {
      if (all_deleted_vertices.count(v))
        throw std::invalid_argument("peripheral regions overlap");
      all_deleted_vertices.insert(v);
    }
    for (int fi : region) {
      if (all_deleted_faces.count(fi))
        throw std::invalid_argument("peripheral regions overlap");
      all_deleted_faces.insert(fi);
    }

    // Fan orientation: follow the direction the deleted faces used on the
    // loop edges.
    std::vector<int> cycle = cyc;
    {
      int u = cycle[0], v = cycle[1];
      bool forward = false, backward = false;
      for (int fi : s.edge_faces(u, v)) {
        if (fi < 0 || !region.count(fi)) continue;
        const Face& f = t.faces[fi];
        for (int e = 0; e < 3; ++e) {
          if (f[e] == u && f[(e + 1) % 3] == v) forward = true;
          if (f[e] == v && f[(e + 1) % 3] == u) backward = true;
        }
      }
      if (backward && !forward) std::reverse(cycle.begin(), cycle.end());
      else if (!forward)
        throw std::invalid_argument("loop edge has no incident interior face");
    }
    int cone = loop.mark;  // collapse the region onto the enclosed mark
    cone_ids.push_back(cone);
    for (size_t i = 0; i < cycle.size(); ++i)
      fans.push_back({cone, cycle[i], cycle[(i + 1) % cycle.size()]});
  }

  Triangulation out;
  out.declared_genus = t.declared_genus;
  for (int v : t.vertices)
    if (!all_deleted_vertices.count(v) ||
        std::find(cone_ids.begin(), cone_ids.end(), v) != cone_ids.end())
      out.vertices.push_back(v);
  for (size_t fi = 0; fi < t.faces.size(); ++fi)
    if (!all_deleted_faces.count(fi)) out.faces.push_back(t.faces[fi]);
  out.faces.insert(out.faces.end(), fans.begin(), fans.end());
  for (int m : t.marks) {
    if (all_deleted_vertices.count(m) &&
        std::find(cone_ids.begin(), cone_ids.end(), m) == cone_ids.end())
      continue;
    out.marks.push_back(m);
    auto it = t.mark_angles.find(m);
    if (it != t.mark_angles.end()) out.mark_angles[m] = it->second;
  }

  ValidationReport rep = validate(out);
  if (!rep.valid())
    throw std::invalid_argument("cone_off would not be simplicial: " +
                                rep.summary());
  return out;
}

namespace {

Triangulation make_octahedron() {
  Triangulation t;
  t.vertices = {0, 1, 2, 3, 4, 5};
  t.faces = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 1},
             {5, 2, 1}, {5, 3, 2}, {5, 4, 3}, {5, 1, 4}};
  return t;
}

Triangulation make_icosahedron() {
  Triangulation t;
  for (int i = 0; i < 12; ++i) t.vertices.push_back(i);
  auto u = [](int i) { return 1 + (i % 5); };
  auto l = [](int i) { return 6 + (i % 5); };
  for (int i = 0; i < 5; ++i) {
    t.faces.push_back({0, u(i), u(i + 1)});
    t.faces.push_back({u(i), l(i), u(i + 1)});
    t.faces.push_back({u(i + 1), l(i), l(i + 1)});
    t.faces.push_back({11, l(i + 1), l(i)});
  }
  return t;
}

Triangulation make_double_tetrahedron() {
  Triangulation t;
  t.vertices = {0, 1, 2, 3, 4};
  t.faces = {{3, 0, 1}, {3, 1, 2}, {3, 2, 0}, {4, 1, 0}, {4, 2, 1}, {4, 0, 2}};
  return t;
}

// 7-vertex triangulated torus (every pair of vertices adjacent).
std::vector<Face> csaszar_torus_faces(int offset) {
  std::vector<Face> faces;
  for (int i = 0; i < 7; ++i) {
    auto m = [&](int k) { return offset + (k % 7); };
    faces.push_back({m(i), m(i + 1), m(i + 3)});
    faces.push_back({m(i), m(i + 3), m(i + 2)});
  }
  return faces;
}

// Connected sum of two 7-vertex tori along one removed face each.
Triangulation make_genus2() {
  std::vector<Face> f1 = csaszar_torus_faces(0);
  std::vector<Face> f2 = csaszar_torus_faces(7);
  // Remove (0,1,3) from the first and (7,8,10) from the second, then glue the
  // holes with reversed orientation: 7->0, 8->3, 10->1.
  auto drop = [](std::vector<Face>& faces, const Face& target) {
    std::array<int, 3> key = target;
    std::sort(key.begin(), key.end());
    for (auto it = faces.begin(); it != faces.end(); ++it) {
      std::array<int, 3> k = *it;
      std::sort(k.begin(), k.end());
      if (k == key) {
        faces.erase(it);
        return;
      }
    }
    throw std::logic_error("face to remove not found");
  };
  drop(f1, {0, 1, 3});
  drop(f2, {7, 8, 10});

  std::map<int, int> remap = {{7, 0}, {8, 3}, {10, 1}, {9, 7}, {11, 8}, {12, 9}, {13, 10}};
  Triangulation t;
  t.declared_genus = 2;
  for (int i = 0; i <= 10; ++i) t.vertices.push_back(i);
  t.faces = f1;
  for (Face f : f2) {
    for (int& v : f) v = remap.at(v);
    t.faces.push_back(f);
  }
  return t;
}

// Barycentric subdivision of the tetrahedron boundary with three of the
// original vertices marked as future punctures (cusp targets by default).
// The marked stars have pairwise disjoint interiors, so the puncture
// refinement applies directly at every depth.
Triangulation make_three_punctured_base() {
  Triangulation tet;
  tet.vertices = {0, 1, 2, 3};
  tet.faces = {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}};
  Triangulation t = barycentric_subdivide(tet);
  t.marks = {0, 1, 2};
  t.mark_angles = {{0, 0.0}, {1, 0.0}, {2, 0.0}};
  return t;
}

}  // namespace

std::vector<std::string> generator_names() {
  return {"octahedron", "icosahedron", "double_tetrahedron", "genus2_minimal",
          "three_punctured_sphere_base"};
}

Triangulation generate(const std::string& name) {
  Triangulation t;
  if (name == "octahedron") t = make_octahedron();
  else if (name == "icosahedron") t = make_icosahedron();
  else if (name == "double_tetrahedron") t = make_double_tetrahedron();
  else if (name == "genus2_minimal") t = make_genus2();
  else if (name == "three_punctured_sphere_base") t = make_three_punctured_base();
  else throw std::invalid_argument("unknown generator '" + name + "'");

  ValidationReport rep = validate(t);
  if (!rep.valid())
    throw std::logic_error("generator '" + name + "' produced an invalid complex: " +
                           rep.summary());
  return t;
}

namespace {

// Flag propagation: a directed edge pair either extends to a full
// orientation-preserving isomorphism or fails.
bool extend_flag_map(const Triangulation& a, const Triangulation& b,
                     const std::map<std::pair<int, int>, int>& third_a,
                     const std::map<std::pair<int, int>, int>& third_b,
                     std::pair<int, int> seed_a, std::pair<int, int> seed_b,
                     std::map<int, int>* out) {
  std::map<int, int> fwd, bwd;
  auto bind = [&](int va, int vb) {
    auto f = fwd.find(va);
    if (f != fwd.end()) return f->second == vb;
    auto g = bwd.find(vb);
    if (g != bwd.end()) return g->second == va;
    fwd[va] = vb;
    bwd[vb] = va;
    return true;
  };
  std::deque<std::pair<std::pair<int, int>, std::pair<int, int>>> queue;
  std::set<std::pair<int, int>> seen;
  auto push = [&](std::pair<int, int> ea, std::pair<int, int> eb) {
    if (seen.insert(ea).second) queue.push_back({ea, eb});
  };
  if (!bind(seed_a.first, seed_b.first) || !bind(seed_a.second, seed_b.second))
    return false;
  push(seed_a, seed_b);
  while (!queue.empty()) {
    auto [ea, eb] = queue.front();
    queue.pop_front();
    auto ita = third_a.find(ea);
    auto itb = third_b.find(eb);
    if ((ita == third_a.end()) != (itb == third_b.end())) return false;
    if (ita == third_a.end()) continue;
    int wa = ita->second, wb = itb->second;
    if (!bind(wa, wb)) return false;
    push({ea.second, wa}, {eb.second, wb});
    push({wa, ea.first}, {wb, eb.first});
    // Also walk the reversed edge so the whole surface is covered.
    push({ea.second, ea.first}, {eb.second, eb.first});
  }
  if (fwd.size() != a.vertices.size() || bwd.size() != b.vertices.size())
    return false;
  *out = std::move(fwd);
  return true;
}

std::map<std::pair<int, int>, int> third_vertex_map(const Triangulation& t) {
  std::map<std::pair<int, int>, int> third;
  for (const Face& f : t.faces)
    for (int e = 0; e < 3; ++e) third[{f[e], f[(e + 1) % 3]}] = f[(e + 2) % 3];
  return third;
}

bool marks_correspond(const Triangulation& a, const Triangulation& b,
                      const std::map<int, int>& map) {
  std::set<int> mb(b.marks.begin(), b.marks.end());
  if (a.marks.size() != b.marks.size()) return false;
  for (int m : a.marks) {
    auto it = map.find(m);
    if (it == map.end() || !mb.count(it->second)) return false;
  }
  return true;
}

}  // namespace

bool isomorphic(const Triangulation& a, const Triangulation& b, bool respect_marks) {
  if (a.vertices.size() != b.vertices.size() || a.faces.size() != b.faces.size())
    return false;
  if (a.faces.empty()) return true;
  auto third_a = third_vertex_map(a);
  auto third_b = third_vertex_map(b);
  std::pair<int, int> seed_a = {a.faces[0][0], a.faces[0][1]};
  for (const auto& [eb, wb] : third_b) {
    std::map<int, int> map;
    if (extend_flag_map(a, b, third_a, third_b, seed_a, eb, &map)) {
      if (!respect_marks || marks_correspond(a, b, map)) return true;
    }
  }
  return false;
}

std::vector<std::map<int, int>> automorphisms(const Triangulation& t) {
  std::vector<std::map<int, int>> out;
  if (t.faces.empty()) return out;
  auto third = third_vertex_map(t);
  std::pair<int, int> seed = {t.faces[0][0], t.faces[0][1]};
  for (const auto& [eb, wb] : third) {
    std::map<int, int> map;
    if (extend_flag_map(t, t, third, third, seed, eb, &map)) out.push_back(map);
  }
  return out;
}

}  // namespace conepack
