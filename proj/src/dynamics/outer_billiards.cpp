#include "ffam/dynamics/outer_billiards.hpp"

#include "ffam/dynamics/kernels.hpp"

#include <string>

namespace ffam {

OuterBilliards::OuterBilliards(PolygonSpec poly, double tol) : poly_(poly), v_(poly.vertices()), tol_(tol) {}

int OuterBilliards::support(Vec2 p, TauStatus* status, bool inverse) const {
  const int n = static_cast<int>(v_.size());
  for (int i = 0; i < n; ++i) {
    Vec2 c = v_[i] - p;
    double a = cross(c, v_[(i + 1) % n] - p);
    double b = cross(c, v_[(i + n - 1) % n] - p);
    bool ok = inverse ? (a > tol_ && b > tol_) : (a < -tol_ && b < -tol_);
    if (ok) {
      if (status) *status = TauStatus::Ok;
      return i;
    }
  }
  TauStatus s = TauStatus::Inside;
  for (int i = 0; i < n; ++i)
    if (cross(v_[(i + 1) % n] - v_[i], p - v_[i]) < -tol_) s = TauStatus::Singular;
  if (status) *status = s;
  return -1;
}

namespace {

[[noreturn]] void fail(TauStatus s, Vec2 p, long iterate = -1) {
  std::string where = "(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")";
  if (s == TauStatus::Inside) throw TauError(s, "tau: point " + where + " is inside or on the polygon", iterate);
  throw TauError(s, "tau: point " + where + " lies on an extended edge (singular set)", iterate);
}

}  // namespace

Vec2 OuterBilliards::tau(Vec2 p) const {
  TauStatus s;
  int i = support(p, &s);
  if (i < 0) fail(s, p);
  return v_[i] * 2.0 - p;
}

Vec2 OuterBilliards::tau_inverse(Vec2 p) const {
  TauStatus s;
  int i = support(p, &s, true);
  if (i < 0) fail(s, p);
  return v_[i] * 2.0 - p;
}

OrbitResult orbit(Vec2 p, const OuterBilliards& ob, long max_iter, double tol, bool keep_points) {
  std::vector<double> vx, vy;
  for (auto v : ob.vertices()) vx.push_back(v.x), vy.push_back(v.y);
  const simd::TauBatch poly{vx.data(), vy.data(), static_cast<int>(vx.size()), ob.tolerance()};
  const double eps = tol * ob.polygon().apothem;
  OrbitResult r;
  r.points.push_back(p);
  auto step = [&](Vec2 q, long t, int* v) {
    Vec2 out;
    *v = simd::tau_point(poly, q.x, q.y, &out.x, &out.y);
    if (*v < 0) fail(*v == -1 ? TauStatus::Inside : TauStatus::Singular, q, t);
    return out;
  };
  Vec2 q = p;
  for (long t = 1; t <= max_iter; ++t) {
    int v;
    q = step(q, t - 1, &v);
    r.signature.push_back(v);
    if (keep_points) r.points.push_back(q);
    if (dist(q, p) > eps) continue;
    // confirm over a second period
    Vec2 z = q;
    bool same = true;
    for (long i = 0; i < t && same; ++i) {
      int w;
      z = step(z, t + i, &w);
      same = w == r.signature[i];
    }
    if (same && dist(z, p) <= eps) {
      r.period = t;
      break;
    }
  }
  return r;
}

}  // namespace ffam
