#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "conepack/layout.hpp"
#include "conepack/limit.hpp"
#include "conepack/mesh.hpp"
#include "conepack/solver.hpp"

namespace conepack {

/// Malformed or inconsistent input files / expressions (CLI exit code 2).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

nlohmann::ordered_json triangulation_to_json(const Triangulation& t);
Triangulation triangulation_from_json(const nlohmann::json& j);

nlohmann::ordered_json label_to_json(const Label& label);
Label label_from_json(const nlohmann::json& j);

/// {"base": <triangulation>, "refine_at": [ids], "depth": int}
/// Optional "theta": [angles aligned with refine_at] overriding the base's
/// stored mark angles.  Depths default to 1..depth.
ExhaustionFamily family_from_json(const nlohmann::json& j);
nlohmann::ordered_json family_to_json(const ExhaustionFamily& fam);

nlohmann::ordered_json report_to_json(const ExhaustionReport& report);

nlohmann::ordered_json layout_to_json(const PackingLayout& layout);

Triangulation load_triangulation(const std::string& path);
Label load_label(const std::string& path);
ExhaustionFamily load_family(const std::string& path);
void save_json(const nlohmann::ordered_json& j, const std::string& path);

/// Parses an angle given as radians or a pi expression: "0", "1.5708",
/// "pi", "2pi", "pi/2", "3*pi/4".  Throws InputError.
double parse_angle(const std::string& text);

}  // namespace conepack
