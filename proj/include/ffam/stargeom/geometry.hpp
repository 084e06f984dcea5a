#pragma once

#include <cmath>
#include <vector>

namespace ffam {

struct Vec2 {
  double x = 0, y = 0;
  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  bool operator==(const Vec2&) const = default;
};

inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 a) { return std::sqrt(a.x * a.x + a.y * a.y); }
inline double dist(Vec2 a, Vec2 b) { return norm(a - b); }

// Rotation by angle given as (cos, sin).
inline Vec2 rotate(Vec2 p, double c, double s) { return {c * p.x - s * p.y, s * p.x + c * p.y}; }

// Regular polygon; phase is the polar angle of vertex 0.
struct PolygonSpec {
  int sides = 3;
  double apothem = 1;
  Vec2 center{};
  double phase = 0;

  // apothem 1, centered, bottom edge horizontal
  static PolygonSpec standard(int sides);
  double circumradius() const;
  double side_length() const;
  // Counterclockwise vertices. For the standard phase the trig values come
  // from correctly rounded evaluation, so the output is platform-stable.
  std::vector<Vec2> vertices() const;
};

double standard_phase(int sides);  // -pi/2 + pi/sides

}  // namespace ffam
