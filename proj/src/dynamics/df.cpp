#include "ffam/dynamics/df.hpp"

#include "detail.hpp"

#include <cmath>
#include <unordered_set>

namespace ffam {

using namespace detail;

double sawtooth(double z) { return z - 2.0 * std::floor((z + 1.0) * 0.5); }

Vec2 df_map(Vec2 p, double theta) {
  const double tc = 2.0 * std::cos(theta);
  return {p.y, sawtooth(tc * p.y - p.x)};
}

Vec2 df_map_inverse(Vec2 q, double theta) {
  const double tc = 2.0 * std::cos(theta);
  return {sawtooth(tc * q.x - q.y), q.x};
}

int df_atom(Vec2 p, double theta) {
  const double u = 2.0 * std::cos(theta) * p.y - p.x;
  if (u < -1) return 1;
  if (u >= 1) return -1;
  return 0;
}

DfAtoms df_atoms(double theta) {
  const double c = std::cos(theta);
  const double e = 1e-12;
  DfAtoms d;
  d.theta = theta;
  const Convex sq = box(1 + e);
  auto with = [&](Convex extra) {
    Convex k = sq;
    k.insert(k.end(), extra.begin(), extra.end());
    return k;
  };
  // rows: a x + b y <= c with u = -x + 2 c y
  d.atoms[0] = with({{-1, 2 * c, -1 + e}});
  d.atoms[1] = with({{-1, 2 * c, 1 + e}, {1, -2 * c, 1 + e}});
  d.atoms[2] = with({{1, -2 * c, -1 + e}});
  for (int i = 0; i < 3; ++i) {
    const double m = d.shift[i] / 2;
    // image under F: q in F(A) iff F^-1(q) in A, with x = 2c q0 - q1 + 2m, y = q0
    for (const auto& h : d.atoms[i]) d.images[i].push_back({h.a * 2 * c + h.b, -h.a, h.c - h.a * 2 * m});
  }
  return d;
}

std::array<double, 6> df_rectification(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  return {-c / s, 1 / s, 0, 1, 0, 0};
}

Vec2 df_rectify(Vec2 p, double theta) {
  auto m = df_rectification(theta);
  return {m[0] * p.x + m[1] * p.y + m[2], m[3] * p.x + m[4] * p.y + m[5]};
}

Web df_web(double theta, int levels, int workers) {
  if (levels < 1) throw std::invalid_argument("df_web: levels must be >= 1");
  const double c = std::cos(theta);
  const DfAtoms at = df_atoms(theta);
  auto F = [&](Vec2 p, double m) { return Vec2{p.y, -p.x + 2 * c * p.y + 2 * m}; };
  auto Finv = [&](Vec2 q, double m) { return Vec2{2 * c * q.x - (q.y - 2 * m), q.x}; };

  std::unordered_set<Key, KeyHash> seen;
  std::vector<Segment> all;
  std::vector<Seg> fresh;
  const Convex sq = box(1);
  for (double u : {1.0, -1.0}) {
    Seg line{{-u - 2 * c, -1}, {-u + 2 * c, 1}};
    if (auto cl = clip(line, sq)) {
      Seg t = *cl;
      Key k = orient(t.a, t.b);
      if (seen.insert(k).second) {
        all.push_back({t.a, t.b, 1});
        fresh.push_back(t);
      }
    }
  }
  for (int j = 2; j <= levels; ++j) {
    auto cands = parallel_map<Cand>(fresh.size(), workers, [&](std::size_t b, std::size_t e, std::vector<Cand>& out) {
      for (std::size_t s = b; s < e; ++s)
        for (int i = 0; i < 3; ++i) {
          const double m = at.shift[i] / 2;
          if (auto a = clip(fresh[s], at.atoms[i])) {
            Seg t{F(a->a, m), F(a->b, m)};
            Key k = orient(t.a, t.b);
            out.push_back({k, t});
          }
          if (auto a = clip(fresh[s], at.images[i])) {
            Seg t{Finv(a->a, m), Finv(a->b, m)};
            Key k = orient(t.a, t.b);
            out.push_back({k, t});
          }
        }
    });
    std::sort(cands.begin(), cands.end(), cand_less);
    fresh.clear();
    for (std::size_t i = 0; i < cands.size(); ++i) {
      if (i && cands[i].key == cands[i - 1].key) continue;
      if (!seen.insert(cands[i].key).second) continue;
      all.push_back({cands[i].s.a, cands[i].s.b, j});
      fresh.push_back(cands[i].s);
    }
  }
  Web w;
  w.segments = std::move(all);
  canonicalize(w.segments);
  w.meta.kind = "df";
  w.meta.theta = theta;
  w.meta.levels = levels;
  w.meta.workers = workers;
  w.meta.region_half_width = 1;
  w.meta.rectification = df_rectification(theta);
  return w;
}

}  // namespace ffam
