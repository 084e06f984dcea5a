#include "ffam/stargeom/geometry.hpp"
#include "ffam/stargeom/constants.hpp"
#include "ffam/stargeom/star.hpp"

#include "ffam/exactfield/embed.hpp"

#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ffam {

double standard_phase(int sides) { return -std::numbers::pi / 2 + std::numbers::pi / sides; }

PolygonSpec PolygonSpec::standard(int sides) {
  if (sides < 3) throw std::invalid_argument("polygon needs at least 3 sides");
  return {sides, 1.0, {0, 0}, standard_phase(sides)};
}

double PolygonSpec::circumradius() const { return apothem / cos_pi_d(1, sides); }

double PolygonSpec::side_length() const { return 2 * apothem * tan_pi_d(1, sides); }

std::vector<Vec2> PolygonSpec::vertices() const {
  if (sides < 3) throw std::invalid_argument("polygon needs at least 3 sides");
  const double R = circumradius();
  std::vector<Vec2> v(sides);
  if (phase == standard_phase(sides)) {
    // angle of vertex j is (2j+1)pi/m - pi/2
    for (int j = 0; j < sides; ++j)
      v[j] = {center.x + R * sin_pi_d(2 * j + 1, sides), center.y - R * cos_pi_d(2 * j + 1, sides)};
    return v;
  }
  for (int j = 0; j < sides; ++j) {
    double a = phase + 2 * std::numbers::pi * j / sides;
    v[j] = {center.x + R * std::cos(a), center.y + R * std::sin(a)};
  }
  return v;
}

std::vector<StarPoint> star_points(int N) {
  if (N < 3) throw std::invalid_argument("star_points: N must be >= 3");
  auto t = scale_table(N);
  std::vector<StarPoint> out;
  for (int k = 1; k <= t->half; ++k)
    out.push_back({k, {-tan_pi_d(k, N), -1.0}, t->primitive[k], t->s[k]});
  return out;
}

Vec2 gen_star(int N) {
  if (N < 3) throw std::invalid_argument("gen_star: N must be >= 3");
  return {-tan_pi_d(half_n(N), N), -1.0};
}

StarPolygon star_polygon(int p, int q) {
  if (p < 3) throw std::invalid_argument("star_polygon: p must be >= 3");
  if (q < 1 || 2 * q >= p)
    throw std::invalid_argument("star_polygon: need 1 <= q < p/2, got {" + std::to_string(p) + "," +
                                std::to_string(q) + "}");
  StarPolygon sp{p, q, {}};
  const int d = std::gcd(p, q);
  const double R = 1.0 / cos_pi_d(q, p);
  // vertex j sits at angle (2j+q)pi/p - pi/2, so the chord j -> j+q lies on an edge line of the p-gon
  auto vertex = [&](int j) {
    long a = 2L * j + q;
    return Vec2{R * sin_pi_d(a, p), -R * cos_pi_d(a, p)};
  };
  for (int c = 0; c < d; ++c) {
    std::vector<Vec2> circ;
    for (int t = 0, j = c; t < p / d; ++t, j = (j + q) % p) circ.push_back(vertex(j));
    sp.circuits.push_back(std::move(circ));
  }
  return sp;
}

double outer_dual_factor(int N) { return 1.0 / cos_pi_d(1, N); }

Vec2 outer_dual(Vec2 x, int N) {
  const double f = outer_dual_factor(N);
  return rotate(x * f, cos_pi_d(1, N), -sin_pi_d(1, N));
}

std::vector<Vec2> outer_dual(const std::vector<Vec2>& xs, int N) {
  const double f = outer_dual_factor(N), c = cos_pi_d(1, N), s = -sin_pi_d(1, N);
  std::vector<Vec2> out;
  out.reserve(xs.size());
  for (auto p : xs) out.push_back(rotate(p * f, c, s));
  return out;
}

std::vector<Vec2> tile_centers(int N) {
  std::vector<Vec2> out{outer_dual(Vec2{0, -1}, N)};
  for (const auto& sp : star_points(N)) out.push_back(outer_dual(sp.point, N));
  return out;
}

}  // namespace ffam
