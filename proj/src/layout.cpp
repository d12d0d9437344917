#include "conepack/layout.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "conepack/hypgeom.hpp"

namespace conepack {

namespace {

using cplx = std::complex<double>;

cplx clamp_to_disk(cplx z) {
  const double n = std::abs(z);
  const double lim = 1.0 - 1e-12;
  return n > lim ? z * (lim / n) : z;
}

// Disk automorphism moving a to the origin, and its inverse.
cplx to_origin(cplx a, cplx z) { return (z - a) / (1.0 - std::conj(a) * z); }
cplx from_origin(cplx a, cplx z) { return (z + a) / (1.0 + std::conj(a) * z); }

double clamped_acos(double c) {
  if (c > 1.0 || c < -1.0) {
    if (std::abs(c) - 1.0 > 1e-9)
      throw std::runtime_error("cosine argument " + std::to_string(c) +
                               " out of range beyond roundoff");
    c = std::clamp(c, -1.0, 1.0);
  }
  return std::acos(c);
}

// Interior angle opposite side `a` from hyperbolic side lengths.
double hyp_angle_from_sides(double b, double c, double a) {
  const double cosv = (std::cosh(b) * std::cosh(c) - std::cosh(a)) /
                      (std::sinh(b) * std::sinh(c));
  return clamped_acos(cosv);
}

// Euclidean rendering of the hyperbolic circle (center c, radius R): both
// extreme points of the circle on the diameter through c are mapped, their
// midpoint and half-distance give the rendered circle.
void euclidean_circle(cplx c, double R, cplx* e_center, double* e_radius) {
  const double rho = std::abs(c);
  const double D = 2.0 * std::atanh(std::min(rho, 1.0 - 1e-16));
  const double t_far = std::tanh((D + R) / 2.0);
  const double t_near = std::tanh((D - R) / 2.0);
  *e_radius = 0.5 * (t_far - t_near);
  const double mid = 0.5 * (t_far + t_near);
  *e_center = rho < 1e-300 ? cplx(0.0, 0.0) : c * (mid / rho);
}

}  // namespace

double disk_distance(cplx a, cplx b) {
  const double q = std::abs(a - b) / std::abs(1.0 - std::conj(a) * b);
  return 2.0 * std::atanh(std::min(q, 1.0 - 1e-16));
}

PackingLayout develop(const Triangulation& t, const Label& label,
                      const LayoutConfig& cfg) {
  SurfaceIndex s(t);
  std::vector<double> radius(s.num_vertices());
  for (int i = 0; i < s.num_vertices(); ++i) {
    const double r = label.radii.at(s.id_of(i));
    if (!std::isfinite(r))
      throw std::invalid_argument(
          "layout requires finite radii (horocyclic circles are not drawn)");
    radius[i] = r;
  }
  if (cfg.root_face < 0 || cfg.root_face >= s.num_faces())
    throw std::invalid_argument("root face out of range");

  PackingLayout layout;
  layout.root_face = cfg.root_face;
  layout.face_circles.assign(s.num_faces(), {-1, -1, -1});

  std::vector<int> copies(s.num_vertices(), 0);
  auto new_circle = [&](int vidx, cplx center) {
    DevelopedCircle c;
    c.vertex = s.id_of(vidx);
    c.copy = copies[vidx]++;
    c.center = clamp_to_disk(center);
    c.hyp_radius = radius[vidx];
    euclidean_circle(c.center, c.hyp_radius, &c.euc_center, &c.euc_radius);
    layout.circles.push_back(c);
    return static_cast<int>(layout.circles.size()) - 1;
  };

  std::set<std::pair<int, int>> measured;  // circle-index pairs
  auto measure_edge = [&](int ci, int cj) {
    auto key = ci < cj ? std::make_pair(ci, cj) : std::make_pair(cj, ci);
    if (!measured.insert(key).second) return;
    const DevelopedCircle& a = layout.circles[ci];
    const DevelopedCircle& b = layout.circles[cj];
    const double want = a.hyp_radius + b.hyp_radius;
    const double res = std::abs(disk_distance(a.center, b.center) - want);
    layout.max_residual = std::max(layout.max_residual, res);
    if (res > cfg.fail_residual) {
      std::ostringstream os;
      os << "placement residual " << res << " exceeds " << cfg.fail_residual;
      throw std::runtime_error(os.str());
    }
  };

  // Root face: first corner at the origin, second on the positive axis,
  // third by orientation.
  {
    const Face& f = t.faces[cfg.root_face];
    const int i0 = s.index_of(f[0]), i1 = s.index_of(f[1]), i2 = s.index_of(f[2]);
    const double alpha =
        tangency_angle(radius[i0], radius[i1], radius[i2]);
    const cplx c0(0.0, 0.0);
    const cplx c1(std::tanh((radius[i0] + radius[i1]) / 2.0), 0.0);
    const cplx c2 = std::polar(std::tanh((radius[i0] + radius[i2]) / 2.0), alpha);
    layout.face_circles[cfg.root_face] = {new_circle(i0, c0), new_circle(i1, c1),
                                          new_circle(i2, c2)};
  }

  std::vector<bool> placed(s.num_faces(), false);
  placed[cfg.root_face] = true;
  std::deque<int> queue{cfg.root_face};
  while (!queue.empty()) {
    const int fa = queue.front();
    queue.pop_front();
    const Face& face_a = t.faces[fa];
    measure_edge(layout.face_circles[fa][0], layout.face_circles[fa][1]);
    measure_edge(layout.face_circles[fa][1], layout.face_circles[fa][2]);
    measure_edge(layout.face_circles[fa][2], layout.face_circles[fa][0]);

    // Neighbors across each edge, lowest face id first.
    std::vector<std::pair<int, int>> nbrs;  // (face, edge slot in fa)
    for (int e = 0; e < 3; ++e) {
      const auto faces = s.edge_faces(face_a[e], face_a[(e + 1) % 3]);
      const int fb = faces[0] == fa ? faces[1] : faces[0];
      if (fb >= 0 && !placed[fb]) nbrs.push_back({fb, e});
    }
    std::sort(nbrs.begin(), nbrs.end());
    for (const auto& [fb, slot] : nbrs) {
      if (placed[fb]) continue;
      placed[fb] = true;
      layout.tree_edges.push_back({fa, fb});

      const int u = face_a[slot], v = face_a[(slot + 1) % 3];
      const Face& face_b = t.faces[fb];
      // Locate the shared edge in fb's own orientation (it runs v -> u there).
      int eb = -1;
      for (int e = 0; e < 3; ++e)
        if (face_b[e] == v && face_b[(e + 1) % 3] == u) eb = e;
      if (eb < 0) throw std::logic_error("incoherent orientation across edge");
      const int x = face_b[eb], y = face_b[(eb + 1) % 3], w = face_b[(eb + 2) % 3];
      const int xi = s.index_of(x), yi = s.index_of(y), wi = s.index_of(w);

      const int cx = layout.face_circles[fa][(slot + 1) % 3];
      const int cy = layout.face_circles[fa][slot];
      // New corner w sits to the left of x->y: rotate by the angle at x.
      const cplx px = layout.circles[cx].center;
      const cplx py = layout.circles[cy].center;
      const double beta = tangency_angle(radius[xi], radius[yi], radius[wi]);
      const double phase = std::arg(to_origin(px, py));
      const cplx local =
          std::polar(std::tanh((radius[xi] + radius[wi]) / 2.0), phase + beta);
      const int cw = new_circle(wi, from_origin(px, local));

      layout.face_circles[fb][eb] = cx;
      layout.face_circles[fb][(eb + 1) % 3] = cy;
      layout.face_circles[fb][(eb + 2) % 3] = cw;
      queue.push_back(fb);
    }
  }

  // Holonomy mismatches across dual non-tree edges.
  std::set<std::pair<int, int>> tree;
  for (const auto& e : layout.tree_edges)
    tree.insert({std::min(e[0], e[1]), std::max(e[0], e[1])});
  for (const auto& edge : s.edges()) {
    const auto faces = s.edge_faces(edge.first, edge.second);
    if (faces[1] < 0) continue;
    const auto key = std::make_pair(std::min(faces[0], faces[1]),
                                    std::max(faces[0], faces[1]));
    if (tree.count(key)) continue;
    HolonomyMismatch hm;
    hm.face_a = faces[0];
    hm.face_b = faces[1];
    hm.u = edge.first;
    hm.v = edge.second;
    for (int vv : {edge.first, edge.second}) {
      cplx pa, pb;
      for (int e = 0; e < 3; ++e) {
        if (t.faces[faces[0]][e] == vv)
          pa = layout.circles[layout.face_circles[faces[0]][e]].center;
        if (t.faces[faces[1]][e] == vv)
          pb = layout.circles[layout.face_circles[faces[1]][e]].center;
      }
      hm.mismatch = std::max(hm.mismatch, disk_distance(pa, pb));
    }
    layout.holonomy.push_back(hm);
  }
  return layout;
}

LayoutVerification verify_layout(const PackingLayout& layout, const Triangulation& t,
                                 const Label& label, const AngleSpec& spec) {
  LayoutVerification report;
  report.max_residual = layout.max_residual;
  if (layout.circles.empty()) return report;

  for (const DevelopedCircle& c : layout.circles)
    if (!(c.euc_radius > 0.0) || !(c.euc_radius < 1.0))
      report.euclidean_radii_ok = false;

  // Vertices whose whole star landed on a single developed copy: accumulate
  // the developed angles (from placed centers, not from the label) and
  // compare with the target.
  std::map<std::pair<int, int>, std::vector<int>> wedge;  // (vertex, circle) -> faces
  for (size_t fi = 0; fi < layout.face_circles.size(); ++fi) {
    const auto& fc = layout.face_circles[fi];
    if (fc[0] < 0) continue;
    for (int e = 0; e < 3; ++e)
      wedge[{t.faces[fi][e], fc[e]}].push_back(static_cast<int>(fi));
  }
  SurfaceIndex s(t);
  for (const auto& [key, faces] : wedge) {
    const auto& [v, circle] = key;
    if (static_cast<int>(faces.size()) != s.degree(v)) continue;
    double total = 0.0;
    for (int fi : faces) {
      const auto& fc = layout.face_circles[fi];
      int e = 0;
      while (t.faces[fi][e] != v) ++e;
      const cplx pv = layout.circles[fc[e]].center;
      const cplx pa = layout.circles[fc[(e + 1) % 3]].center;
      const cplx pb = layout.circles[fc[(e + 2) % 3]].center;
      total += hyp_angle_from_sides(disk_distance(pv, pa), disk_distance(pv, pb),
                                    disk_distance(pa, pb));
    }
    LayoutVerification::Closure cl;
    cl.vertex = v;
    cl.developed = total;
    cl.target = spec.target(v);
    report.closures.push_back(cl);
    report.max_closure_error =
        std::max(report.max_closure_error, std::abs(total - cl.target));
  }
  (void)label;
  return report;
}

std::string svg_string(const PackingLayout& layout, const SvgStyle& style) {
  std::ostringstream os;
  char buf[160];
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1.05 -1.05 2.1 2.1\" "
        "width=\"800\" height=\"800\">\n";
  std::snprintf(buf, sizeof(buf),
                "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#000000\" "
                "stroke-width=\"%.6f\"/>\n",
                style.stroke_width);
  os << buf;
  if (style.draw_edges) {
    std::set<std::pair<int, int>> seen;
    for (const auto& fc : layout.face_circles) {
      if (fc[0] < 0) continue;
      for (int e = 0; e < 3; ++e) {
        int a = fc[e], b = fc[(e + 1) % 3];
        auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
        if (!seen.insert(key).second) continue;
        std::snprintf(buf, sizeof(buf),
                      "<line x1=\"%.6f\" y1=\"%.6f\" x2=\"%.6f\" y2=\"%.6f\" "
                      "stroke=\"%s\" stroke-width=\"%.6f\"/>\n",
                      layout.circles[a].euc_center.real(),
                      layout.circles[a].euc_center.imag(),
                      layout.circles[b].euc_center.real(),
                      layout.circles[b].euc_center.imag(), style.edge_color.c_str(),
                      style.stroke_width);
        os << buf;
      }
    }
  }
  for (const DevelopedCircle& c : layout.circles) {
    std::snprintf(buf, sizeof(buf),
                  "<circle cx=\"%.6f\" cy=\"%.6f\" r=\"%.6f\" fill=\"none\" "
                  "stroke=\"%s\" stroke-width=\"%.6f\"/>\n",
                  c.euc_center.real(), c.euc_center.imag(), c.euc_radius,
                  style.circle_color.c_str(), style.stroke_width);
    os << buf;
  }
  os << "</svg>\n";
  return os.str();
}

void export_svg(const PackingLayout& layout, const std::string& path,
                const SvgStyle& style) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << svg_string(layout, style);
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace conepack
