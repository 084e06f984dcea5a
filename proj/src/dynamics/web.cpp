#include "ffam/dynamics/web.hpp"

#include "detail.hpp"

#include "ffam/exactfield/embed.hpp"
#include "ffam/stargeom/star.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace ffam {

using namespace detail;

namespace {

Convex with_box(Convex k, double w) {
  auto b = box(w);
  k.insert(k.end(), b.begin(), b.end());
  return k;
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v == 0 ? 0.0 : v);
  return buf;
}

}  // namespace

std::vector<Segment> Web::up_to(int level) const {
  std::vector<Segment> out;
  for (const auto& s : segments)
    if (s.level <= level) out.push_back(s);
  return out;
}

std::string Web::to_jsonl() const {
  std::string out;
  for (const auto& s : segments)
    out += "{\"x1\":" + num(s.a.x) + ",\"y1\":" + num(s.a.y) + ",\"x2\":" + num(s.b.x) + ",\"y2\":" + num(s.b.y) +
           ",\"level\":" + std::to_string(s.level) + "}\n";
  return out;
}

std::string Web::to_csv() const {
  std::string out = "x1,y1,x2,y2,level\n";
  for (const auto& s : segments)
    out += num(s.a.x) + "," + num(s.a.y) + "," + num(s.b.x) + "," + num(s.b.y) + "," + std::to_string(s.level) + "\n";
  return out;
}

void canonicalize(std::vector<Segment>& segs) {
  struct Item {
    Key key;
    Segment s;
  };
  std::vector<Item> items;
  items.reserve(segs.size());
  for (auto s : segs) {
    Key k = orient(s.a, s.b);
    items.push_back({k, s});
  }
  std::sort(items.begin(), items.end(), [](const Item& x, const Item& y) {
    if (x.key != y.key) return x.key < y.key;
    if (x.s.level != y.s.level) return x.s.level < y.s.level;
    return std::tie(x.s.a.x, x.s.a.y, x.s.b.x, x.s.b.y) < std::tie(y.s.a.x, y.s.a.y, y.s.b.x, y.s.b.y);
  });
  std::vector<Segment> out;
  for (std::size_t i = 0; i < items.size(); ++i)
    if (i == 0 || items[i].key != items[i - 1].key) out.push_back(items[i].s);
  std::stable_sort(out.begin(), out.end(), [](const Segment& x, const Segment& y) { return x.level < y.level; });
  segs = std::move(out);
}

Web outer_web(const OuterBilliards& ob, int levels, double W0, int workers) {
  if (levels < 1) throw std::invalid_argument("web: levels must be >= 1");
  const auto& V = ob.vertices();
  const int n = static_cast<int>(V.size());
  const double r = ob.circumradius();
  auto bx = [&](int j) { return W0 + 2 * r * (levels - j); };

  // cones of the forward and inverse branches at each vertex
  std::vector<Convex> fwd(n), bwd(n);
  for (int i = 0; i < n; ++i) {
    Vec2 c = V[i], d1 = V[(i + 1) % n] - c, d2 = c - V[(i + n - 1) % n];
    Vec2 in = c + d1 + d2, out = c * 2.0 - in;
    fwd[i] = {HalfPlane::through(c, c + d1, in, 1e-12), HalfPlane::through(c, c + d2, in, 1e-12)};
    bwd[i] = {HalfPlane::through(c, c + d1, out, 1e-12), HalfPlane::through(c, c + d2, out, 1e-12)};
  }

  std::unordered_set<detail::Key, detail::KeyHash> seen;
  std::vector<Segment> all;
  std::vector<Seg> fresh;
  {
    const double B1 = bx(1);
    const Convex b1 = box(B1);
    std::vector<Cand> c0;
    for (int i = 0; i < n; ++i) {
      Vec2 a = V[i], b = V[(i + 1) % n], d = b - a;
      double L = 4 * B1 / norm(d) + 4;
      for (Seg s : {Seg{b, b + d * L}, Seg{a, a - d * L}})
        if (auto cl = clip(s, b1)) {
          Seg t = *cl;
          Key k = orient(t.a, t.b);
          c0.push_back({k, t});
        }
    }
    std::sort(c0.begin(), c0.end(), cand_less);
    for (auto& c : c0)
      if (seen.insert(c.key).second) {
        all.push_back({c.s.a, c.s.b, 1});
        fresh.push_back(c.s);
      }
  }
  for (int j = 2; j <= levels; ++j) {
    const double Bj = bx(j);
    std::vector<Convex> cf(n), cb(n);
    for (int i = 0; i < n; ++i) cf[i] = with_box(fwd[i], Bj), cb[i] = with_box(bwd[i], Bj);
    auto cands = parallel_map<Cand>(fresh.size(), workers, [&](std::size_t b, std::size_t e, std::vector<Cand>& out) {
      for (std::size_t s = b; s < e; ++s)
        for (int i = 0; i < n; ++i) {
          Seg rs{V[i] * 2.0 - fresh[s].a, V[i] * 2.0 - fresh[s].b};
          for (const Convex* k : {&cf[i], &cb[i]})
            if (auto cl = clip(rs, *k)) {
              Seg t = *cl;
              Key key = orient(t.a, t.b);
              out.push_back({key, t});
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
  const Convex fin = box(W0);
  for (const auto& s : all)
    if (auto cl = clip(Seg{s.a, s.b}, fin)) w.segments.push_back({cl->a, cl->b, s.level});
  canonicalize(w.segments);
  w.meta.kind = "outer";
  w.meta.N = ob.polygon().sides;
  w.meta.levels = levels;
  w.meta.workers = workers;
  w.meta.region_half_width = W0;
  return w;
}

Web local_web(int N, int levels, int workers) {
  if (N < 3) throw std::invalid_argument("local_web: N must be >= 3");
  auto ob = OuterBilliards::standard(N);
  const int H = half_n(N);
  const double tip = 1.0 / cos_pi_d(H, N);
  Web outer = outer_web(ob, levels, tip * (1 + 1e-9), workers);
  Region star = Region::star(N);
  Web w;
  const auto& V = ob.vertices();
  for (std::size_t i = 0; i < V.size(); ++i) w.segments.push_back({V[i], V[(i + 1) % V.size()], 1});
  for (const auto& s : outer.segments)
    for (const auto& p : star.clip(Seg{s.a, s.b})) w.segments.push_back({p.a, p.b, s.level});
  canonicalize(w.segments);
  w.meta = outer.meta;
  w.meta.kind = "local";
  return w;
}

double MergedLines::total_length() const {
  double t = 0;
  for (const auto& l : lines)
    for (auto [a, b] : l.spans) t += b - a;
  return t;
}

std::vector<Seg> MergedLines::segments() const {
  std::vector<Seg> out;
  for (const auto& l : lines)
    for (auto [a, b] : l.spans) out.push_back({l.origin + l.dir * a, l.origin + l.dir * b});
  return out;
}

MergedLines merge_collinear(const std::vector<Seg>& segs, double tol) {
  struct Acc {
    Vec2 dir, origin;
    std::vector<std::pair<double, double>> iv;
  };
  std::map<std::pair<long long, long long>, Acc> groups;
  for (const auto& s : segs) {
    Vec2 d = s.b - s.a;
    double L = norm(d);
    if (L < 1e-12) continue;
    Vec2 u = d * (1 / L);
    if (u.x < -1e-12 || (std::abs(u.x) <= 1e-12 && u.y < 0)) u = u * -1.0;
    double off = -u.y * s.a.x + u.x * s.a.y;
    std::pair<long long, long long> key{std::llround(std::atan2(u.y, u.x) * 1e8), std::llround(off * 1e8)};
    auto [it, fresh] = groups.try_emplace(key);
    if (fresh) it->second = {u, Vec2{-u.y, u.x} * off, {}};
    const Acc& g = it->second;
    double t1 = dot(s.a - g.origin, g.dir), t2 = dot(s.b - g.origin, g.dir);
    it->second.iv.push_back({std::min(t1, t2), std::max(t1, t2)});
  }
  MergedLines m;
  for (auto& [k, g] : groups) {
    std::sort(g.iv.begin(), g.iv.end());
    MergedLines::Line line{g.origin, g.dir, {}};
    for (auto iv : g.iv) {
      if (!line.spans.empty() && iv.first <= line.spans.back().second + tol)
        line.spans.back().second = std::max(line.spans.back().second, iv.second);
      else
        line.spans.push_back(iv);
    }
    m.lines.push_back(std::move(line));
  }
  return m;
}

std::vector<Seg> plain(const std::vector<Segment>& segs) {
  std::vector<Seg> out;
  out.reserve(segs.size());
  for (const auto& s : segs) out.push_back({s.a, s.b});
  return out;
}

std::vector<Seg> clip_all(const std::vector<Seg>& segs, const Region& r) {
  std::vector<Seg> out;
  for (const auto& s : segs)
    for (const auto& p : r.clip(s)) out.push_back(p);
  return out;
}

std::vector<Seg> transform(const std::vector<Seg>& segs, const std::array<double, 6>& m) {
  auto f = [&](Vec2 p) { return Vec2{m[0] * p.x + m[1] * p.y + m[2], m[3] * p.x + m[4] * p.y + m[5]}; };
  std::vector<Seg> out;
  out.reserve(segs.size());
  for (const auto& s : segs) out.push_back({f(s.a), f(s.b)});
  return out;
}

namespace {

class SegGrid {
 public:
  SegGrid(const std::vector<Seg>& segs, double cell) : segs_(segs), h_(cell) {
    for (std::size_t i = 0; i < segs.size(); ++i) {
      const auto& s = segs[i];
      long x0 = cell_of(std::min(s.a.x, s.b.x)), x1 = cell_of(std::max(s.a.x, s.b.x));
      long y0 = cell_of(std::min(s.a.y, s.b.y)), y1 = cell_of(std::max(s.a.y, s.b.y));
      for (long x = x0; x <= x1; ++x)
        for (long y = y0; y <= y1; ++y) {
          // skip cells the segment cannot touch
          Vec2 c{(x + 0.5) * h_, (y + 0.5) * h_};
          if (seg_dist(c, s) > h_) continue;
          cells_[pack(x, y)].push_back(static_cast<int>(i));
        }
    }
  }
  double nearest(Vec2 p, double cap) const {
    if (segs_.empty()) return std::numeric_limits<double>::infinity();
    const long cx = cell_of(p.x), cy = cell_of(p.y);
    double best = std::numeric_limits<double>::infinity();
    auto visit = [&](long x, long y) {
      auto it = cells_.find(pack(x, y));
      if (it == cells_.end()) return;
      for (int i : it->second) best = std::min(best, seg_dist(p, segs_[i]));
    };
    const long maxr = std::min<long>(64, static_cast<long>(cap / h_) + 2);
    for (long r = 0; r <= maxr; ++r) {
      if (r == 0) {
        visit(cx, cy);
      } else {
        for (long x = cx - r; x <= cx + r; ++x) visit(x, cy - r), visit(x, cy + r);
        for (long y = cy - r + 1; y <= cy + r - 1; ++y) visit(cx - r, y), visit(cx + r, y);
      }
      if (best <= r * h_) return best;
    }
    if (cap <= maxr * h_) return best;
    for (const auto& s : segs_) best = std::min(best, seg_dist(p, s));
    return best;
  }
  static double seg_dist(Vec2 p, const Seg& s) {
    Vec2 d = s.b - s.a;
    double L = dot(d, d);
    double t = L > 0 ? std::clamp(dot(p - s.a, d) / L, 0.0, 1.0) : 0.0;
    return dist(p, s.a + d * t);
  }

 private:
  long cell_of(double v) const { return static_cast<long>(std::floor(v / h_)); }
  static long long pack(long x, long y) { return (static_cast<long long>(x) << 32) ^ (y & 0xffffffffLL); }
  const std::vector<Seg>& segs_;
  double h_;
  std::unordered_map<long long, std::vector<int>> cells_;
};

template <class F>
void for_samples(const std::vector<Seg>& segs, double h, F f) {
  for (const auto& s : segs) {
    double L = dist(s.a, s.b);
    int n = std::max(1, static_cast<int>(std::ceil(L / h)));
    for (int i = 0; i <= n; ++i) {
      double t = static_cast<double>(i) / n;
      f(Vec2{s.a.x + t * (s.b.x - s.a.x), s.a.y + t * (s.b.y - s.a.y)});
    }
  }
}

double extent(const std::vector<Seg>& a, const std::vector<Seg>& b) {
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (const auto* v : {&a, &b})
    for (const auto& s : *v)
      for (Vec2 p : {s.a, s.b}) lo = std::min({lo, p.x, p.y}), hi = std::max({hi, p.x, p.y});
  return hi > lo ? hi - lo : 1.0;
}

}  // namespace

double directed_distance(const std::vector<Seg>& a, const std::vector<Seg>& b, double h) {
  if (a.empty()) return 0;
  if (b.empty()) return std::numeric_limits<double>::infinity();
  const double cap = 2 * extent(a, b);
  SegGrid g(b, std::max(h * 8, cap / 2048));
  double worst = 0;
  for_samples(a, h, [&](Vec2 p) { worst = std::max(worst, g.nearest(p, cap)); });
  return worst;
}

double hausdorff(const std::vector<Seg>& a, const std::vector<Seg>& b, double h) {
  return std::max(directed_distance(a, b, h), directed_distance(b, a, h));
}

double coverage(const std::vector<Seg>& small, const std::vector<Seg>& big, double h, double tol) {
  if (small.empty()) return 1.0;
  const double cap = 2 * extent(small, big);
  SegGrid g(big, std::max(h * 8, cap / 2048));
  long total = 0, hit = 0;
  for_samples(small, h, [&](Vec2 p) {
    ++total;
    if (g.nearest(p, tol) <= tol) ++hit;
  });
  return static_cast<double>(hit) / total;
}

}  // namespace ffam
