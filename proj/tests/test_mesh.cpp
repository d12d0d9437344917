#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <set>

#include "conepack/anglespec.hpp"
#include "conepack/mesh.hpp"
#include "support.hpp"

using namespace conepack;
using namespace testsupport;

TEST_CASE("octahedron validates: genus 0, max degree 4") {
  Triangulation t = generate("octahedron");
  ValidationReport rep = validate(t);
  CHECK(rep.valid());
  CHECK(rep.genus == 0);
  CHECK(rep.max_degree == 4);
  CHECK(rep.num_edges == 12);
}

TEST_CASE("octahedron with a deleted face reports a boundary edge") {
  Triangulation t = generate("octahedron");
  t.faces.pop_back();
  ValidationReport rep = validate(t);
  CHECK(!rep.valid());
  bool found = false;
  for (const auto& v : rep.violations)
    if (v.find("1 incident face") != std::string::npos) found = true;
  CHECK(found);
}

TEST_CASE("icosahedron validates: genus 0, max degree 5") {
  ValidationReport rep = validate(generate("icosahedron"));
  CHECK(rep.valid());
  CHECK(rep.genus == 0);
  CHECK(rep.max_degree == 5);
}

TEST_CASE("validation catches orientation and manifold defects") {
  Triangulation t = generate("octahedron");
  std::swap(t.faces[0][0], t.faces[0][1]);  // flip one face
  CHECK(!validate(t).valid());

  Triangulation dup = generate("octahedron");
  dup.faces.push_back(dup.faces[0]);
  CHECK(!validate(dup).valid());

  Triangulation bad_genus = generate("octahedron");
  bad_genus.declared_genus = 1;
  CHECK(!validate(bad_genus).valid());
}

TEST_CASE("star_faces on the octahedron") {
  Triangulation t = generate("octahedron");
  CHECK(star_faces(t, {0}).size() == 4);
  CHECK(star_faces(t, t.vertices).size() == 8);
  CHECK_THROWS_AS(star_faces(t, {99}), std::invalid_argument);
}

TEST_CASE("star_faces on two adjacent icosahedron vertices") {
  Triangulation t = generate("icosahedron");
  SurfaceIndex s(t);
  const int u = 1;
  const int v = s.link_cycle(u).front();
  // independent enumeration
  std::set<int> expected;
  for (size_t fi = 0; fi < t.faces.size(); ++fi) {
    const Face& f = t.faces[fi];
    for (int x : f)
      if (x == u || x == v) expected.insert(static_cast<int>(fi));
  }
  CHECK(expected.size() == 8);  // 5 + 5 - 2 shared
  CHECK(star_faces(t, {u, v}).size() == expected.size());
}

TEST_CASE("face_excess formulas on the octahedron") {
  Triangulation plain = generate("octahedron");
  AngleSpec none;
  CHECK(face_excess(plain, none, {0}) == doctest::Approx(2 * M_PI).epsilon(1e-14));
  CHECK(face_excess(plain, none, plain.vertices) ==
        doctest::Approx(-4 * M_PI).epsilon(1e-14));
  // full-complex excess equals -orbchar
  CHECK(face_excess(plain, none, plain.vertices) ==
        doctest::Approx(-orbifold_char(plain, none)).epsilon(1e-14));

  Triangulation cones = uniform_marked(plain, M_PI / 2);
  AngleSpec spec = spec_of(cones);
  CHECK(face_excess(cones, spec, {0}) ==
        doctest::Approx(4 * M_PI - M_PI / 2).epsilon(1e-14));
  CHECK_THROWS_AS(face_excess(plain, none, {}), std::invalid_argument);
}

TEST_CASE("face_excess is monotone under growing subsets") {
  Triangulation t = uniform_marked(generate("icosahedron"), 2 * M_PI / 3);
  AngleSpec spec = spec_of(t);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    VertexSubset subset;
    std::vector<int> pool = t.vertices;
    std::shuffle(pool.begin(), pool.end(), rng);
    subset.push_back(pool[0]);
    double prev_faces = star_faces(t, subset).size();
    double prev_excess = face_excess(t, spec, subset);
    for (size_t i = 1; i < pool.size() / 2; ++i) {
      subset.push_back(pool[i]);
      const double faces = star_faces(t, subset).size();
      const double excess = face_excess(t, spec, subset);
      CHECK(faces >= prev_faces);  // F_V never decreases
      // adding v can lower the excess by at most its target angle
      CHECK(excess >= prev_excess - spec.target(pool[i]) - 1e-12);
      prev_faces = faces;
      prev_excess = excess;
    }
  }
}

TEST_CASE("barycentric subdivision counts and invariants") {
  Triangulation octa = generate("octahedron");
  Triangulation b = barycentric_subdivide(octa);
  CHECK(b.vertices.size() == 26);
  CHECK(b.faces.size() == 48);
  CHECK(validate(b).valid());
  CHECK(SurfaceIndex(b).euler_characteristic() ==
        SurfaceIndex(octa).euler_characteristic());

  Triangulation tet;
  tet.vertices = {0, 1, 2, 3};
  tet.faces = {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}};
  Triangulation bt = barycentric_subdivide(tet);
  CHECK(bt.vertices.size() == 14);
  CHECK(bt.faces.size() == 24);
  CHECK(validate(bt).valid());

  Triangulation g2 = generate("genus2_minimal");
  Triangulation bg = barycentric_subdivide(g2);
  CHECK(validate(bg).valid());
  CHECK(SurfaceIndex(bg).genus() == 2);
}

TEST_CASE("degree sum and edge count identities") {
  for (const auto& name : generator_names()) {
    Triangulation t = generate(name);
    SurfaceIndex s(t);
    long degree_sum = 0;
    for (int v : t.vertices) degree_sum += s.degree(v);
    CHECK(degree_sum == 3 * s.num_faces());
    CHECK(2 * s.num_edges() == 3 * s.num_faces());
  }
}

TEST_CASE("puncture_refine: identity at depth 0") {
  Triangulation t = marked(generate("octahedron"), {{0, M_PI / 2}});
  RefinementResult r = puncture_refine(t, 0);
  CHECK(r.tri.vertices == t.vertices);
  CHECK(r.tri.faces == t.faces);
  CHECK(r.levels.size() == 1);
  CHECK(r.levels[0][0].cycle.size() == 4);
}

TEST_CASE("puncture_refine: one round adds k vertices, keeps link length") {
  Triangulation t = marked(generate("octahedron"), {{0, M_PI / 2}});
  const int k = SurfaceIndex(t).degree(0);
  RefinementResult r = puncture_refine(t, 1);
  CHECK(validate(r.tri).valid());
  CHECK(r.tri.vertices.size() == t.vertices.size() + k);
  SurfaceIndex s(r.tri);
  CHECK(s.degree(0) == k);
  CHECK(r.levels.back()[0].cycle.size() == static_cast<size_t>(k));
}

TEST_CASE("puncture_refine: star of the mark is self-similar across depths") {
  Triangulation t = marked(generate("octahedron"), {{0, M_PI / 2}});
  RefinementResult shallow = puncture_refine(t, 1);
  for (int depth = 2; depth <= 4; ++depth) {
    RefinementResult deep = puncture_refine(t, depth);
    SurfaceIndex s(deep.tri);
    CHECK(s.degree(0) == 4);
    CHECK(deep.levels.back()[0].cycle.size() == 4);
    // nested loop of the previous level survives as an edge cycle
    const auto& prev = deep.levels[depth - 1][0].cycle;
    for (size_t i = 0; i < prev.size(); ++i)
      CHECK(s.adjacent(prev[i], prev[(i + 1) % prev.size()]));
  }
  CHECK(shallow.levels.back()[0].cycle.size() == 4);
}

TEST_CASE("puncture_refine: max degree stabilizes, bounded independent of depth") {
  Triangulation t = marked(generate("octahedron"), {{0, M_PI / 2}});
  std::vector<int> max_deg;
  for (int depth = 1; depth <= 8; ++depth) {
    RefinementResult r = puncture_refine(t, depth);
    CHECK(validate(r.tri).valid());
    SurfaceIndex s(r.tri);
    max_deg.push_back(s.max_degree());
    CHECK(SurfaceIndex(r.tri).genus() == 0);
  }
  // Stable from depth 2 on: the ring created at each round settles one round
  // later and never changes again.
  for (size_t i = 1; i < max_deg.size(); ++i) CHECK(max_deg[i] == max_deg[1]);
  CHECK(max_deg[0] <= max_deg[1]);
}

TEST_CASE("puncture_refine pre-subdivides when marked stars overlap") {
  // adjacent marks on the octahedron share faces
  Triangulation t = marked(generate("octahedron"), {{0, M_PI / 2}, {1, M_PI / 2}});
  RefinementResult r = puncture_refine(t, 1);
  CHECK(validate(r.tri).valid());
  // barycentric pre-subdivision: 26 vertices, then one ring per mark (deg 8)
  CHECK(r.tri.vertices.size() == 26 + 2 * 8);
}

TEST_CASE("cone_off: fan-only region is idempotent") {
  Triangulation t = marked(generate("octahedron"), {{0, M_PI / 2}});
  RefinementResult r0 = puncture_refine(t, 0);
  Triangulation c = cone_off(r0.tri, r0.levels[0]);
  CHECK(isomorphic(c, t, true));
}

TEST_CASE("cone_off at the base link undoes one refinement round") {
  Triangulation t = marked(generate("octahedron"), {{0, M_PI / 2}});
  RefinementResult r1 = puncture_refine(t, 1);
  Triangulation c = cone_off(r1.tri, r1.levels[0]);
  CHECK(c.vertices.size() == t.vertices.size());
  CHECK(isomorphic(c, t, true));
}

TEST_CASE("cone_off builds a fan at a degree-3 loop") {
  Triangulation dt = generate("double_tetrahedron");
  SurfaceIndex s(dt);
  PeripheralLoop loop{3, s.link_cycle(3)};
  Triangulation c = cone_off(dt, {loop});
  CHECK(c.faces.size() == dt.faces.size());
  CHECK(isomorphic(c, dt));
}

TEST_CASE("cone_off accepts any disk region around its mark") {
  // equator loop enclosing the top vertex: replaces the top star by a fan
  Triangulation octa = marked(generate("octahedron"), {{0, M_PI / 2}});
  SurfaceIndex s(octa);
  Triangulation c = cone_off(octa, {{0, s.link_cycle(0)}});
  CHECK(isomorphic(c, octa, true));

  // complement of one face: collapses seven faces to a tetrahedron
  Triangulation big = marked(generate("octahedron"), {{4, M_PI}});
  Triangulation tet = cone_off(big, {{4, {0, 1, 2}}});
  CHECK(tet.vertices.size() == 4);
  CHECK(tet.faces.size() == 4);
  CHECK(validate(tet).valid());
}

TEST_CASE("cone_off rejects degenerate and non-disk regions") {
  Triangulation octa = generate("octahedron");
  CHECK_THROWS_AS(cone_off(octa, {{0, {1, 2}}}), std::invalid_argument);

  // mark sitting on its own loop
  Triangulation m = marked(generate("octahedron"), {{1, M_PI}});
  CHECK_THROWS_AS(cone_off(m, {{1, {1, 2, 3, 4}}}), std::invalid_argument);

  // essential loop on the genus-2 surface does not separate
  Triangulation g2 = marked(generate("genus2_minimal"), {{6, M_PI}});
  CHECK_THROWS_AS(cone_off(g2, {{6, {0, 2, 4}}}), std::invalid_argument);

  // another mark inside the region
  Triangulation two = marked(generate("octahedron"), {{4, M_PI}, {3, M_PI}});
  CHECK_THROWS_AS(cone_off(two, {{4, {0, 1, 2}}}), std::invalid_argument);
}

TEST_CASE("nesting consistency of refinement and coning") {
  for (const char* name : {"octahedron", "three_punctured_sphere_base"}) {
    Triangulation base = generate(name);
    if (base.marks.empty()) base = marked(base, {{0, M_PI / 2}});
    RefinementResult deep = puncture_refine(base, 3);
    for (int k = 1; k < 3; ++k) {
      Triangulation a = cone_off(deep.tri, deep.levels[k]);
      RefinementResult shallow = puncture_refine(base, k);
      Triangulation b = cone_off(shallow.tri, shallow.levels[k]);
      CHECK(isomorphic(a, b, true));
    }
  }
}

TEST_CASE("generators produce the documented instances") {
  CHECK(generate("octahedron").vertices.size() == 6);
  CHECK(generate("octahedron").faces.size() == 8);
  CHECK(SurfaceIndex(generate("genus2_minimal")).genus() == 2);
  Triangulation tp = generate("three_punctured_sphere_base");
  CHECK(SurfaceIndex(tp).genus() == 0);
  CHECK(tp.marks.size() == 3);
  CHECK_THROWS_AS(generate("dodecahedron"), std::invalid_argument);
}

TEST_CASE("isomorphism distinguishes genus and respects marks") {
  CHECK(!isomorphic(generate("octahedron"), generate("icosahedron")));
  Triangulation a = marked(generate("octahedron"), {{0, M_PI / 2}});
  Triangulation b = marked(generate("octahedron"), {{3, M_PI / 2}});
  CHECK(isomorphic(a, b, true));  // a rotation carries mark 0 to mark 3
  CHECK(automorphisms(generate("octahedron")).size() == 24);
  CHECK(automorphisms(generate("icosahedron")).size() == 60);
}
