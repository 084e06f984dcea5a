#pragma once

#include "ffam/dynamics/web.hpp"
#include "ffam/family/family.hpp"
#include "ffam/stargeom/star.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace ffam {

struct Style {
  std::string stroke = "#000000";
  std::string fill = "none";
  double width = 0;   // 0: derived from the viewport
  double opacity = 1;
};

struct Layer {
  std::string name;
  Style style;
  std::vector<std::vector<Vec2>> closed;  // emitted as paths ending at their first vertex
  std::vector<std::vector<Vec2>> open;    // emitted as polylines
  std::vector<Seg> lines;
};

struct Viewport {
  double xmin = 0, ymin = 0, xmax = 0, ymax = 0;
};

struct Scene {
  std::vector<Layer> layers;
  std::optional<Viewport> viewport;  // default: bounds plus a 5% margin
  int precision = 9;
  Viewport effective_viewport() const;
};

// Fixed-point decimal, never "-0".
std::string fixed(double v, int precision);

std::string to_svg(const Scene& s);
nlohmann::json scene_json(const Scene& s);

struct RenderOptions {
  int precision = 9;
  bool include_parent = true;
  bool fill = true;
};

std::string role_color(Role r);

Scene family_scene(const Family& f, const RenderOptions& o = {});
Scene web_scene(const Web& w, const RenderOptions& o = {});
Scene star_polygon_scene(const StarPolygon& sp, const RenderOptions& o = {});
Scene star_points_scene(int N, const RenderOptions& o = {});
// Df web in its torus frame with the rectified copy as a second group.
Scene df_scene(const Web& df, const RenderOptions& o = {});

std::string render_family(const Family& f, const RenderOptions& o = {});
std::string render_web(const Web& w, const RenderOptions& o = {});

nlohmann::json family_json(const Family& f);
nlohmann::json exact_json(const RealElement& e);

}  // namespace ffam
