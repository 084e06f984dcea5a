#include "ffam/dynamics/region.hpp"

#include "ffam/exactfield/embed.hpp"

#include <algorithm>
#include <cmath>

namespace ffam {

HalfPlane HalfPlane::through(Vec2 p, Vec2 q, Vec2 inside, double slack) {
  double a = q.y - p.y, b = p.x - q.x;
  double n = std::sqrt(a * a + b * b);
  a /= n;
  b /= n;
  double c = a * p.x + b * p.y;
  if (a * inside.x + b * inside.y > c) a = -a, b = -b, c = -c;
  return {a, b, c + slack};
}

std::optional<std::pair<double, double>> clip_interval(const Seg& s, const Convex& k) {
  double t0 = 0, t1 = 1;
  const double dx = s.b.x - s.a.x, dy = s.b.y - s.a.y;
  for (const auto& h : k) {
    double num = h.c - (h.a * s.a.x + h.b * s.a.y);
    double den = h.a * dx + h.b * dy;
    if (std::abs(den) < 1e-15) {
      if (num < -1e-12) return std::nullopt;
      continue;
    }
    double t = num / den;
    if (den > 0)
      t1 = std::min(t1, t);
    else
      t0 = std::max(t0, t);
    if (t0 > t1) return std::nullopt;
  }
  return std::make_pair(t0, t1);
}

namespace {
Vec2 at(const Seg& s, double t) { return {s.a.x + t * (s.b.x - s.a.x), s.a.y + t * (s.b.y - s.a.y)}; }
}  // namespace

std::optional<Seg> clip(const Seg& s, const Convex& k) {
  auto iv = clip_interval(s, k);
  if (!iv) return std::nullopt;
  Seg r{iv->first == 0 ? s.a : at(s, iv->first), iv->second == 1 ? s.b : at(s, iv->second)};
  if (dist(r.a, r.b) <= 1e-12) return std::nullopt;
  return r;
}

Convex box(double w, Vec2 c) {
  return {{1, 0, c.x + w}, {-1, 0, -c.x + w}, {0, 1, c.y + w}, {0, -1, -c.y + w}};
}

Convex convex_polygon(const std::vector<Vec2>& ccw, double slack) {
  Vec2 g{0, 0};
  for (auto p : ccw) g = g + p;
  g = g * (1.0 / ccw.size());
  Convex k;
  for (std::size_t i = 0; i < ccw.size(); ++i) k.push_back(HalfPlane::through(ccw[i], ccw[(i + 1) % ccw.size()], g, slack));
  return k;
}

std::vector<Seg> Region::clip(const Seg& s) const {
  std::vector<std::pair<double, double>> iv;
  for (const auto& k : pieces_)
    if (auto r = clip_interval(s, k)) iv.push_back(*r);
  std::sort(iv.begin(), iv.end());
  std::vector<std::pair<double, double>> merged;
  const double len = dist(s.a, s.b);
  const double gap = len > 0 ? 1e-12 / len : 0;
  for (auto& r : iv) {
    if (!merged.empty() && r.first <= merged.back().second + gap)
      merged.back().second = std::max(merged.back().second, r.second);
    else
      merged.push_back(r);
  }
  std::vector<Seg> out;
  for (auto [t0, t1] : merged) {
    Seg r{t0 == 0 ? s.a : at(s, t0), t1 == 1 ? s.b : at(s, t1)};
    if (dist(r.a, r.b) > 1e-12) out.push_back(r);
  }
  return out;
}

bool Region::contains(Vec2 p, double eps) const {
  for (const auto& k : pieces_) {
    bool in = true;
    for (const auto& h : k)
      if (h.a * p.x + h.b * p.y > h.c + eps) {
        in = false;
        break;
      }
    if (in) return true;
  }
  return false;
}

Region Region::polygon(const std::vector<Vec2>& ccw) { return Region({convex_polygon(ccw, 1e-12)}); }

Region Region::star(int N) {
  const int H = (N - 1) / 2;
  std::vector<Vec2> tips(N);
  const double R = 1.0 / cos_pi_d(H, N);
  for (int j = 0; j < N; ++j) {
    long a = 2L * j + H;
    tips[j] = {R * sin_pi_d(a, N), -R * cos_pi_d(a, N)};
  }
  if (H == 1) return polygon(tips);
  auto inter = [](Vec2 p1, Vec2 p2, Vec2 p3, Vec2 p4) {
    double den = (p1.x - p2.x) * (p3.y - p4.y) - (p1.y - p2.y) * (p3.x - p4.x);
    double t = ((p1.x - p3.x) * (p3.y - p4.y) - (p1.y - p3.y) * (p3.x - p4.x)) / den;
    return Vec2{p1.x + t * (p2.x - p1.x), p1.y + t * (p2.y - p1.y)};
  };
  std::vector<Vec2> notch(N);
  for (int j = 0; j < N; ++j)
    notch[j] = inter(tips[j], tips[(j + H) % N], tips[(j + 1) % N], tips[((j + 1 - H) % N + N) % N]);
  std::vector<Convex> pieces;
  pieces.push_back(convex_polygon(notch, 1e-12));
  for (int j = 0; j < N; ++j) pieces.push_back(convex_polygon({tips[j], notch[j], notch[(j + N - 1) % N]}, 1e-12));
  return Region(std::move(pieces));
}

}  // namespace ffam
