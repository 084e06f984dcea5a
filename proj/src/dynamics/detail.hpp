#pragma once

#include "ffam/dynamics/region.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <thread>
#include <tuple>
#include <vector>

namespace ffam::detail {

using Key = std::array<long long, 4>;

struct KeyHash {
  std::size_t operator()(const Key& k) const {
    std::size_t h = 1469598103934665603ull;
    for (long long v : k) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
    return h;
  }
};

inline long long snap(double v) { return std::llround(v * 1e9); }

// orient so that the snapped first endpoint is smaller; returns the key
inline Key orient(Vec2& a, Vec2& b) {
  Key k{snap(a.x), snap(a.y), snap(b.x), snap(b.y)};
  if (std::make_pair(k[2], k[3]) < std::make_pair(k[0], k[1])) {
    std::swap(a, b);
    k = {k[2], k[3], k[0], k[1]};
  }
  return k;
}

struct Cand {
  Key key;
  Seg s;
};

inline bool cand_less(const Cand& x, const Cand& y) {
  if (x.key != y.key) return x.key < y.key;
  return std::tie(x.s.a.x, x.s.a.y, x.s.b.x, x.s.b.y) < std::tie(y.s.a.x, y.s.a.y, y.s.b.x, y.s.b.y);
}

// fn(begin, end, out) over contiguous chunks, results concatenated in chunk order
template <class T, class F>
std::vector<T> parallel_map(std::size_t n, int workers, F fn) {
  workers = std::max(1, std::min<int>(workers, static_cast<int>(std::max<std::size_t>(n, 1))));
  std::vector<std::vector<T>> parts(workers);
  if (workers == 1) {
    fn(std::size_t{0}, n, parts[0]);
  } else {
    std::vector<std::thread> th;
    std::size_t chunk = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      std::size_t b = std::min(n, w * chunk), e = std::min(n, b + chunk);
      th.emplace_back([&, w, b, e] { fn(b, e, parts[w]); });
    }
    for (auto& t : th) t.join();
  }
  std::vector<T> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace ffam::detail
