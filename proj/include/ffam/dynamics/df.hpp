#pragma once

#include "ffam/dynamics/region.hpp"
#include "ffam/dynamics/web.hpp"

#include <array>

namespace ffam {

// f(z) = Mod[z + 1, 2] - 1
double sawtooth(double z);
Vec2 df_map(Vec2 p, double theta);
Vec2 df_map_inverse(Vec2 p, double theta);

// -1 overflow, 0 linear, +1 underflow: the vertical translation is 2m.
int df_atom(Vec2 p, double theta);

struct DfAtoms {
  double theta = 0;
  std::array<Convex, 3> atoms;   // m = +1, 0, -1
  std::array<Convex, 3> images;
  std::array<int, 3> shift{2, 0, -2};
};
DfAtoms df_atoms(double theta);

// (x, y) -> ((y - x cos t)/sin t, x)
std::array<double, 6> df_rectification(double theta);
Vec2 df_rectify(Vec2 p, double theta);

// Separatrices -x + 2y cos t = +-1 iterated forward and backward on the torus.
Web df_web(double theta, int levels, int workers = 1);

}  // namespace ffam
