#pragma once

#include "ffam/exactfield/field.hpp"
#include "ffam/stargeom/geometry.hpp"

#include <vector>

namespace ffam {

// <N/2>: greatest integer strictly below N/2.
inline int half_n(int N) { return (N - 1) / 2; }

struct StarPoint {
  int k = 0;
  Vec2 point;          // (-s_k, -1)
  bool primitive = false;
  RealElement s;       // tan(k pi/N), exact
};

// k = 1..<N/2>, clockwise convention (negative first coordinate).
std::vector<StarPoint> star_points(int N);

// The distinguished star point star[<N/2>].
Vec2 gen_star(int N);

struct StarPolygon {
  int p = 0, q = 0;
  std::vector<std::vector<Vec2>> circuits;  // open vertex lists, one per component
};

// {p,q} aligned with the standard p-gon: its edges lie on the p-gon's
// extended edges. gcd(p,q) = d > 1 gives d circuits of length p/d.
StarPolygon star_polygon(int p, int q);

// Scale by r/h then rotate by -pi/N.
double outer_dual_factor(int N);
Vec2 outer_dual(Vec2 x, int N);
std::vector<Vec2> outer_dual(const std::vector<Vec2>& xs, int N);

// cS[0..<N/2>]; cS[0] is the outer dual of (0,-1), a vertex of N.
std::vector<Vec2> tile_centers(int N);

}  // namespace ffam
