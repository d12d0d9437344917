#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "conepack/hypgeom.hpp"
#include "conepack/json_io.hpp"
#include "support.hpp"

using namespace conepack;
using namespace testsupport;
using nlohmann::json;

TEST_CASE("triangulation json round trip") {
  Triangulation t = marked(generate("three_punctured_sphere_base"), {});
  t.declared_genus = 0;
  const auto j = triangulation_to_json(t);
  Triangulation back = triangulation_from_json(json::parse(j.dump()));
  CHECK(back.vertices == t.vertices);
  CHECK(back.faces == t.faces);
  CHECK(back.marks == t.marks);
  CHECK(back.mark_angles == t.mark_angles);
  CHECK(back.declared_genus == t.declared_genus);

  // null cone_angle means unmarked, 0.0 means cusp target
  const json parsed = json::parse(j.dump());
  int nulls = 0, zeros = 0;
  for (const auto& v : parsed["vertices"]) {
    if (v["cone_angle"].is_null()) ++nulls;
    else if (v["cone_angle"].get<double>() == 0.0) ++zeros;
  }
  CHECK(nulls == 11);
  CHECK(zeros == 3);
}

TEST_CASE("label json uses \"inf\" for horocyclic radii") {
  Label label;
  label.radii = {{0, 1.25}, {1, kInfiniteRadius}, {7, 0.5}};
  label.residual = 1e-12;
  label.iterations = 17;
  const auto j = label_to_json(label);
  CHECK(j["radii"]["1"] == "inf");
  Label back = label_from_json(json::parse(j.dump()));
  CHECK(std::isinf(back.radii.at(1)));
  CHECK(back.radii.at(0) == 1.25);
  CHECK(back.iterations == 17);
}

TEST_CASE("malformed input maps to InputError") {
  CHECK_THROWS_AS(triangulation_from_json(json::parse("{\"genus\": 0}")), InputError);
  CHECK_THROWS_AS(label_from_json(json::parse("{\"radii\": {\"0\": \"big\"}}")),
                  InputError);
  CHECK_THROWS_AS(load_triangulation("/no/such/file.json"), InputError);
}

TEST_CASE("family json defaults and overrides") {
  Triangulation base = generate("three_punctured_sphere_base");
  json j;
  j["base"] = json::parse(triangulation_to_json(base).dump());
  j["refine_at"] = {0, 1, 2};
  j["depth"] = 4;
  ExhaustionFamily fam = family_from_json(j);
  CHECK(fam.depths == std::vector<int>{1, 2, 3, 4});
  CHECK(fam.theta.at(0) == 0.0);  // from the stored cusp marks

  j["theta"] = {M_PI / 2, M_PI / 2, M_PI / 3};
  j["depths"] = {2, 4};
  fam = family_from_json(j);
  CHECK(fam.depths == std::vector<int>{2, 4});
  CHECK(fam.theta.at(2) == doctest::Approx(M_PI / 3));

  j["refine_at"] = {0, 1, 5};  // vertex 5 is not marked in the base
  CHECK_THROWS_AS(family_from_json(j), InputError);
}

TEST_CASE("report json carries the documented fields") {
  ExhaustionFamily fam;
  fam.base = generate("three_punctured_sphere_base");
  fam.depths = {1, 2};
  for (int p : fam.base.marks) fam.theta[p] = M_PI / 2;
  LimitConfig cfg;
  cfg.tol_limit = 1.0;
  const auto report = run_exhaustion(fam, cfg);
  const auto j = report_to_json(report);
  CHECK(j["depths"].size() == 2);
  CHECK(j["deltas"].size() == 1);
  CHECK(j["min_radius"].size() == 2);
  CHECK(j["loop_lengths"].size() == 3);
  CHECK(j["verdict"] == "converged");
  CHECK(j["limit_radii"].size() == report.stages.back().core_vertices.size());
}

TEST_CASE("angle expressions") {
  CHECK(parse_angle("0") == 0.0);
  CHECK(parse_angle("1.5") == 1.5);
  CHECK(parse_angle("pi") == doctest::Approx(M_PI).epsilon(1e-15));
  CHECK(parse_angle("2pi") == doctest::Approx(2 * M_PI).epsilon(1e-15));
  CHECK(parse_angle("2*pi") == doctest::Approx(2 * M_PI).epsilon(1e-15));
  CHECK(parse_angle("pi/2") == doctest::Approx(M_PI / 2).epsilon(1e-15));
  CHECK(parse_angle("3*pi/4") == doctest::Approx(3 * M_PI / 4).epsilon(1e-15));
  CHECK(parse_angle(" pi / 2 ") == doctest::Approx(M_PI / 2).epsilon(1e-15));
  CHECK(parse_angle("0.5pi") == doctest::Approx(M_PI / 2).epsilon(1e-15));
  CHECK_THROWS_AS(parse_angle(""), InputError);
  CHECK_THROWS_AS(parse_angle("pie"), InputError);
  CHECK_THROWS_AS(parse_angle("pi/0"), InputError);
  CHECK_THROWS_AS(parse_angle("two*pi"), InputError);
}
