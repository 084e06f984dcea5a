#include "ffam/render/svg.hpp"

#include "ffam/exactfield/embed.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace ffam {

std::string fixed(double v, int precision) {
  if (!std::isfinite(v)) throw std::domain_error("fixed: non-finite coordinate");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, v);
  std::string s = buf;
  if (s[0] == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

Viewport Scene::effective_viewport() const {
  if (viewport) return *viewport;
  double inf = std::numeric_limits<double>::infinity();
  Viewport b{inf, inf, -inf, -inf};
  auto grow = [&](Vec2 p) {
    b.xmin = std::min(b.xmin, p.x);
    b.ymin = std::min(b.ymin, p.y);
    b.xmax = std::max(b.xmax, p.x);
    b.ymax = std::max(b.ymax, p.y);
  };
  for (const auto& l : layers) {
    for (const auto& c : l.closed)
      for (auto p : c) grow(p);
    for (const auto& c : l.open)
      for (auto p : c) grow(p);
    for (const auto& s : l.lines) {
      grow(s.a);
      grow(s.b);
    }
  }
  if (b.xmin > b.xmax) return {-1, -1, 1, 1};
  double m = 0.05 * std::max({b.xmax - b.xmin, b.ymax - b.ymin, 1e-9});
  return {b.xmin - m, b.ymin - m, b.xmax + m, b.ymax + m};
}

namespace {

std::string pt(Vec2 p, int prec) { return fixed(p.x, prec) + "," + fixed(p.y, prec); }

std::string style_attrs(const Style& st, double width, int prec) {
  std::string s = "stroke=\"" + st.stroke + "\" fill=\"" + st.fill + "\" stroke-width=\"" +
                  fixed(st.width > 0 ? st.width : width, prec) + "\"";
  if (st.opacity != 1) s += " stroke-opacity=\"" + fixed(st.opacity, 3) + "\"";
  if (st.fill != "none") s += " fill-opacity=\"0.25\"";
  return s;
}

nlohmann::json jpt(Vec2 p, int prec) { return {std::stod(fixed(p.x, prec)), std::stod(fixed(p.y, prec))}; }

}  // namespace

std::string to_svg(const Scene& s) {
  const int prec = s.precision;
  Viewport v = s.effective_viewport();
  const double w = v.xmax - v.xmin, h = v.ymax - v.ymin;
  const double stroke = 0.002 * std::max(w, h);
  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
    << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << fixed(v.xmin, prec) << ' '
    << fixed(-v.ymax, prec) << ' ' << fixed(w, prec) << ' ' << fixed(h, prec) << "\">\n"
    << "<g transform=\"scale(1,-1)\">\n";
  for (const auto& l : s.layers) {
    o << "<g id=\"" << l.name << "\" " << style_attrs(l.style, stroke, prec) << ">\n";
    for (const auto& c : l.closed) {
      if (c.empty()) continue;
      o << "<path d=\"M " << pt(c[0], prec);
      for (std::size_t i = 1; i < c.size(); ++i) o << " L " << pt(c[i], prec);
      o << " L " << pt(c[0], prec) << " Z\"/>\n";
    }
    for (const auto& c : l.open) {
      o << "<polyline points=\"";
      for (std::size_t i = 0; i < c.size(); ++i) o << (i ? " " : "") << pt(c[i], prec);
      o << "\"/>\n";
    }
    for (const auto& sg : l.lines)
      o << "<line x1=\"" << fixed(sg.a.x, prec) << "\" y1=\"" << fixed(sg.a.y, prec) << "\" x2=\""
        << fixed(sg.b.x, prec) << "\" y2=\"" << fixed(sg.b.y, prec) << "\"/>\n";
    o << "</g>\n";
  }
  o << "</g>\n</svg>\n";
  return o.str();
}

nlohmann::json scene_json(const Scene& s) {
  const int prec = s.precision;
  Viewport v = s.effective_viewport();
  nlohmann::json layers = nlohmann::json::array();
  for (const auto& l : s.layers) {
    nlohmann::json closed = nlohmann::json::array(), open = nlohmann::json::array(), lines = nlohmann::json::array();
    for (const auto& c : l.closed) {
      nlohmann::json poly = nlohmann::json::array();
      for (auto p : c) poly.push_back(jpt(p, prec));
      if (!c.empty()) poly.push_back(jpt(c[0], prec));
      closed.push_back(poly);
    }
    for (const auto& c : l.open) {
      nlohmann::json poly = nlohmann::json::array();
      for (auto p : c) poly.push_back(jpt(p, prec));
      open.push_back(poly);
    }
    for (const auto& sg : l.lines) lines.push_back({jpt(sg.a, prec), jpt(sg.b, prec)});
    layers.push_back({{"name", l.name},
                      {"style", {{"stroke", l.style.stroke}, {"fill", l.style.fill}, {"opacity", l.style.opacity}}},
                      {"closed", closed},
                      {"open", open},
                      {"lines", lines}});
  }
  return {{"viewport", {v.xmin, v.ymin, v.xmax, v.ymax}}, {"precision", prec}, {"layers", layers}};
}

std::string role_color(Role r) {
  switch (r) {
    case Role::Parent: return "#404040";
    case Role::S: return "#1f5fbf";
    case Role::LS: return "#17a2a2";
    case Role::DS: return "#7a3fbf";
    case Role::D: return "#c0392b";
    case Role::M: return "#e08e0b";
    case Role::C: return "#2e8b3e";
  }
  return "#000000";
}

Scene family_scene(const Family& f, const RenderOptions& o) {
  Scene s;
  s.precision = o.precision;
  for (const auto& t : f.tiles) {
    if (t.role == Role::Parent && !o.include_parent) continue;
    Layer l;
    l.name = t.tag();
    l.style.stroke = role_color(t.role);
    l.style.fill = o.fill && t.role != Role::Parent ? role_color(t.role) : "none";
    l.closed.push_back(t.vertices());
    s.layers.push_back(std::move(l));
  }
  return s;
}

Scene web_scene(const Web& w, const RenderOptions& o) {
  Scene s;
  s.precision = o.precision;
  int top = 0;
  for (const auto& sg : w.segments) top = std::max(top, sg.level);
  for (int lv = 1; lv <= top; ++lv) {
    Layer l;
    l.name = "level-" + std::to_string(lv);
    // deeper levels fade
    l.style.opacity = std::max(0.2, 1.0 - 0.08 * (lv - 1));
    for (const auto& sg : w.segments)
      if (sg.level == lv) l.lines.push_back({sg.a, sg.b});
    if (!l.lines.empty()) s.layers.push_back(std::move(l));
  }
  return s;
}

Scene star_polygon_scene(const StarPolygon& sp, const RenderOptions& o) {
  Scene s;
  s.precision = o.precision;
  Layer l;
  l.name = "star-" + std::to_string(sp.p) + "-" + std::to_string(sp.q);
  l.closed = sp.circuits;
  s.layers.push_back(std::move(l));
  if (o.include_parent) {
    Layer p;
    p.name = "parent";
    p.style.stroke = role_color(Role::Parent);
    p.closed.push_back(PolygonSpec::standard(sp.p).vertices());
    s.layers.push_back(std::move(p));
  }
  return s;
}

Scene star_points_scene(int N, const RenderOptions& o) {
  Scene s = star_polygon_scene(star_polygon(N, half_n(N)), o);
  Layer l;
  l.name = "star-points";
  l.style.stroke = "#c0392b";
  for (const auto& sp : star_points(N)) {
    // small cross at each point
    const double d = 0.02;
    l.lines.push_back({sp.point - Vec2{d, 0}, sp.point + Vec2{d, 0}});
    l.lines.push_back({sp.point - Vec2{0, d}, sp.point + Vec2{0, d}});
  }
  s.layers.push_back(std::move(l));
  return s;
}

Scene df_scene(const Web& df, const RenderOptions& o) {
  Scene s;
  s.precision = o.precision;
  Layer torus;
  torus.name = "torus";
  torus.closed.push_back({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}});
  for (const auto& sg : df.segments) torus.lines.push_back({sg.a, sg.b});
  Layer rect;
  rect.name = "rectified";
  rect.style.stroke = "#c0392b";
  rect.lines = transform(plain(df.segments), df.meta.rectification);
  s.layers.push_back(std::move(torus));
  s.layers.push_back(std::move(rect));
  return s;
}

std::string render_family(const Family& f, const RenderOptions& o) { return to_svg(family_scene(f, o)); }
std::string render_web(const Web& w, const RenderOptions& o) { return to_svg(web_scene(w, o)); }

nlohmann::json exact_json(const RealElement& e) {
  nlohmann::json c = nlohmann::json::array();
  for (const auto& q : e.element().coeffs()) c.push_back(to_string(q));
  return {{"field", "Q(zeta_" + std::to_string(e.modulus_index()) + ")"},
          {"coefficients", c},
          {"decimal", embed_decimal(e.element(), 20)}};
}

nlohmann::json family_json(const Family& f) {
  nlohmann::json tiles = nlohmann::json::array();
  for (const auto& t : f.tiles) {
    nlohmann::json verts = nlohmann::json::array();
    for (auto v : t.vertices()) verts.push_back({v.x, v.y});
    tiles.push_back({{"tag", t.tag()},
                     {"sides", t.sides},
                     {"center", {t.center.x, t.center.y}},
                     {"height", t.height},
                     {"phase", t.phase},
                     {"degenerate", t.degenerate},
                     {"vertices", verts},
                     {"exact_height", exact_json(t.exact_height)},
                     {"exact_center", {exact_json(t.exact_center.x), exact_json(t.exact_center.y)}}});
  }
  return {{"N", f.N},
          {"case", to_string(f.kind)},
          {"size", f.size()},
          {"field", "Q(zeta_" + std::to_string(family_field(f.N)) + ")"},
          {"tiles", tiles}};
}

}  // namespace ffam
