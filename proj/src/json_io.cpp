#include "conepack/json_io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "conepack/hypgeom.hpp"

namespace conepack {

using nlohmann::json;
using nlohmann::ordered_json;

nlohmann::ordered_json triangulation_to_json(const Triangulation& t) {
  ordered_json j;
  j["genus"] = t.declared_genus;
  ordered_json verts = ordered_json::array();
  for (int v : t.vertices) {
    ordered_json entry;
    entry["id"] = v;
    auto it = t.mark_angles.find(v);
    if (t.is_marked(v) && it != t.mark_angles.end())
      entry["cone_angle"] = it->second;
    else
      entry["cone_angle"] = nullptr;
    verts.push_back(entry);
  }
  j["vertices"] = verts;
  ordered_json faces = ordered_json::array();
  for (const Face& f : t.faces) faces.push_back({f[0], f[1], f[2]});
  j["faces"] = faces;
  return j;
}

Triangulation triangulation_from_json(const json& j) {
  try {
    Triangulation t;
    t.declared_genus = j.value("genus", 0);
    if (!j.contains("vertices") || !j.contains("faces"))
      throw InputError("triangulation JSON needs 'vertices' and 'faces'");
    for (const auto& entry : j.at("vertices")) {
      const int id = entry.at("id").get<int>();
      t.vertices.push_back(id);
      if (entry.contains("cone_angle") && !entry.at("cone_angle").is_null()) {
        t.marks.push_back(id);
        t.mark_angles[id] = entry.at("cone_angle").get<double>();
      }
    }
    std::sort(t.vertices.begin(), t.vertices.end());
    for (const auto& f : j.at("faces")) {
      if (f.size() != 3) throw InputError("face is not a triple");
      t.faces.push_back({f.at(0).get<int>(), f.at(1).get<int>(), f.at(2).get<int>()});
    }
    return t;
  } catch (const json::exception& e) {
    throw InputError(std::string("bad triangulation JSON: ") + e.what());
  }
}

nlohmann::ordered_json label_to_json(const Label& label) {
  ordered_json radii = ordered_json::object();
  for (const auto& [v, r] : label.radii) {
    if (std::isinf(r))
      radii[std::to_string(v)] = "inf";
    else
      radii[std::to_string(v)] = r;
  }
  ordered_json j;
  j["radii"] = radii;
  j["residual"] = label.residual;
  j["iterations"] = label.iterations;
  return j;
}

Label label_from_json(const json& j) {
  try {
    Label label;
    for (const auto& [key, value] : j.at("radii").items()) {
      const int v = std::stoi(key);
      if (value.is_string()) {
        if (value.get<std::string>() != "inf")
          throw InputError("radius must be a number or \"inf\"");
        label.radii[v] = kInfiniteRadius;
      } else {
        label.radii[v] = value.get<double>();
      }
    }
    label.residual = j.value("residual", 0.0);
    label.iterations = j.value("iterations", 0L);
    return label;
  } catch (const json::exception& e) {
    throw InputError(std::string("bad label JSON: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw InputError("bad label JSON: radii keys must be vertex ids");
  }
}

ExhaustionFamily family_from_json(const json& j) {
  try {
    ExhaustionFamily fam;
    fam.base = triangulation_from_json(j.at("base"));
    std::vector<int> refine_at;
    for (const auto& v : j.at("refine_at")) refine_at.push_back(v.get<int>());
    if (refine_at.empty()) throw InputError("refine_at is empty");
    for (int p : refine_at)
      if (!fam.base.is_marked(p))
        throw InputError("refine_at vertex " + std::to_string(p) +
                         " is not marked in the base");
    fam.base.marks = refine_at;  // puncture order follows refine_at

    const int depth = j.at("depth").get<int>();
    if (j.contains("depths")) {
      for (const auto& d : j.at("depths")) fam.depths.push_back(d.get<int>());
    } else {
      if (depth < 1) throw InputError("depth must be >= 1");
      for (int d = 1; d <= depth; ++d) fam.depths.push_back(d);
    }

    if (j.contains("theta")) {
      const auto& theta = j.at("theta");
      if (theta.size() != refine_at.size())
        throw InputError("theta must align with refine_at");
      for (size_t i = 0; i < refine_at.size(); ++i)
        fam.theta[refine_at[i]] = theta.at(i).get<double>();
    } else {
      for (int p : refine_at) {
        auto it = fam.base.mark_angles.find(p);
        if (it == fam.base.mark_angles.end())
          throw InputError("no angle for puncture " + std::to_string(p));
        fam.theta[p] = it->second;
      }
    }
    return fam;
  } catch (const json::exception& e) {
    throw InputError(std::string("bad family JSON: ") + e.what());
  }
}

nlohmann::ordered_json family_to_json(const ExhaustionFamily& fam) {
  ordered_json j;
  j["base"] = triangulation_to_json(fam.base);
  j["refine_at"] = fam.base.marks;
  j["depth"] = fam.depths.empty() ? 0 : fam.depths.back();
  j["depths"] = fam.depths;
  ordered_json theta = ordered_json::array();
  for (int p : fam.base.marks) theta.push_back(fam.theta.at(p));
  j["theta"] = theta;
  return j;
}

nlohmann::ordered_json report_to_json(const ExhaustionReport& report) {
  ordered_json j;
  ordered_json depths = ordered_json::array();
  for (const DepthSolve& stage : report.stages) depths.push_back(stage.depth);
  j["depths"] = depths;
  j["deltas"] = report.deltas;
  j["min_radius"] = report.min_radius;
  ordered_json loops = ordered_json::object();
  for (const auto& [name, lengths] : report.loop_lengths) loops[name] = lengths;
  j["loop_lengths"] = loops;
  j["verdict"] = report.verdict;
  ordered_json limit = ordered_json::object();
  if (report.verdict == "converged") {
    const DepthSolve& last = report.stages.back();
    for (int v : last.core_vertices)
      limit[std::to_string(v)] = last.label.radii.at(v);
  }
  j["limit_radii"] = limit;
  return j;
}

nlohmann::ordered_json layout_to_json(const PackingLayout& layout) {
  ordered_json j;
  ordered_json circles = ordered_json::array();
  for (const DevelopedCircle& c : layout.circles) {
    ordered_json e;
    e["vertex"] = c.vertex;
    e["copy"] = c.copy;
    e["center"] = {c.center.real(), c.center.imag()};
    e["hyp_radius"] = c.hyp_radius;
    e["euc_center"] = {c.euc_center.real(), c.euc_center.imag()};
    e["euc_radius"] = c.euc_radius;
    circles.push_back(e);
  }
  j["circles"] = circles;
  ordered_json tree = ordered_json::array();
  for (const auto& e : layout.tree_edges) tree.push_back({e[0], e[1]});
  j["tree_edges"] = tree;
  j["max_residual"] = layout.max_residual;
  return j;
}

namespace {

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError("cannot parse '" + path + "': " + e.what());
  }
}

}  // namespace

Triangulation load_triangulation(const std::string& path) {
  return triangulation_from_json(parse_file(path));
}

Label load_label(const std::string& path) { return label_from_json(parse_file(path)); }

ExhaustionFamily load_family(const std::string& path) {
  return family_from_json(parse_file(path));
}

void save_json(const nlohmann::ordered_json& j, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << j.dump(2) << "\n";
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

double parse_angle(const std::string& text) {
  std::string u;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) u.push_back(c);
  if (u.empty()) throw InputError("empty angle expression");

  auto to_number = [](const std::string& part, double fallback) {
    if (part.empty()) return fallback;
    size_t used = 0;
    double v;
    try {
      v = std::stod(part, &used);
    } catch (...) {
      throw InputError("bad number '" + part + "' in angle expression");
    }
    if (used != part.size())
      throw InputError("bad number '" + part + "' in angle expression");
    return v;
  };

  const size_t pos = u.find("pi");
  if (pos == std::string::npos) return to_number(u, 0.0);

  std::string coef = u.substr(0, pos);
  if (!coef.empty() && coef.back() == '*') coef.pop_back();
  std::string rest = u.substr(pos + 2);
  double div = 1.0;
  if (!rest.empty()) {
    if (rest[0] != '/') throw InputError("bad angle expression '" + text + "'");
    div = to_number(rest.substr(1), 0.0);
    if (div == 0.0) throw InputError("division by zero in angle expression");
  }
  return to_number(coef, 1.0) * M_PI / div;
}

}  // namespace conepack
