#pragma once

#include "ffam/stargeom/geometry.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace ffam {

// a x + b y <= c
struct HalfPlane {
  double a = 0, b = 0, c = 0;
  // half-plane bounded by the line pq that contains `inside`
  static HalfPlane through(Vec2 p, Vec2 q, Vec2 inside, double slack = 0);
};

using Convex = std::vector<HalfPlane>;

struct Seg {
  Vec2 a, b;
};

// Parameter interval [t0, t1] of a->b inside the closed convex set.
std::optional<std::pair<double, double>> clip_interval(const Seg& s, const Convex& k);
std::optional<Seg> clip(const Seg& s, const Convex& k);

Convex box(double half_width, Vec2 center = {0, 0});
Convex convex_polygon(const std::vector<Vec2>& ccw, double slack = 0);

// Finite union of closed convex pieces.
class Region {
 public:
  Region() = default;
  explicit Region(std::vector<Convex> pieces) : pieces_(std::move(pieces)) {}
  const std::vector<Convex>& pieces() const { return pieces_; }
  // Maximal sub-segments of s inside the region (piece intervals merged).
  std::vector<Seg> clip(const Seg& s) const;
  bool contains(Vec2 p, double eps = 1e-12) const;

  static Region star(int N);            // closed inner star of {N, <N/2>}
  static Region polygon(const std::vector<Vec2>& ccw);

 private:
  std::vector<Convex> pieces_;
};

}  // namespace ffam
