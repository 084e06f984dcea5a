#include "ffam/dynamics/exact_orbit.hpp"

#include "ffam/exactfield/embed.hpp"

#include <cmath>

namespace ffam {

namespace {

Tile standard_tile(int N) {
  Tile t;
  t.sides = N;
  t.height = 1;
  t.phase = standard_phase(N);
  t.role = Role::Parent;
  const unsigned L = 4u * N;
  t.exact_center = {RealElement::rational(L, 0), RealElement::rational(L, 0)};
  t.exact_height = RealElement::rational(L, 1);
  return t;
}

// sign of an exact real, escalating precision before declaring zero
int sign(const RealElement& e) {
  if (e.is_zero()) return 0;
  for (unsigned prec : {128u, 512u, 2048u}) {
    double d = embed(e.element(), prec).real();
    if (std::abs(d) > 1e-30 || prec == 2048u) return d > 0 ? 1 : -1;
  }
  return 0;
}

RealElement cross_exact(const ExactPoint& o, const ExactPoint& a, const ExactPoint& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

}  // namespace

ExactOuterBilliards::ExactOuterBilliards(int N)
    : N_(N), L_(4u * N), v_(exact_vertices(standard_tile(N))), fl_(OuterBilliards::standard(N, 0.0)) {
  for (auto& p : v_) p = {p.x.lift(L_), p.y.lift(L_)};
}

ExactPoint ExactOuterBilliards::tau(const ExactPoint& p, int* vertex) const {
  Vec2 pf{p.x.to_double(), p.y.to_double()};
  const int n = N_;
  TauStatus st;
  int i = fl_.support(pf, &st);
  // the float choice is only a candidate; the exact signs decide
  auto check = [&](int c) {
    int a = sign(cross_exact(p, v_[c], v_[(c + 1) % n]));
    int b = sign(cross_exact(p, v_[c], v_[(c + n - 1) % n]));
    if (a == 0 || b == 0) throw TauError(TauStatus::Singular, "exact tau: point on an extended edge");
    return a < 0 && b < 0;
  };
  if (i < 0 || !check(i)) {
    i = -1;
    for (int c = 0; c < n && i < 0; ++c)
      if (check(c)) i = c;
    if (i < 0) throw TauError(TauStatus::Inside, "exact tau: point inside the polygon");
  }
  if (vertex) *vertex = i;
  return {v_[i].x * Rational(2) - p.x, v_[i].y * Rational(2) - p.y};
}

ExactOrbitResult exact_orbit(const ExactPoint& p, const ExactOuterBilliards& ob, long max_iter) {
  ExactOrbitResult r;
  const ExactPoint& start = p;
  r.points.push_back(start);
  ExactPoint q = start;
  for (long t = 1; t <= max_iter; ++t) {
    int v;
    try {
      q = ob.tau(q, &v);
    } catch (const TauError& e) {
      throw TauError(e.status(), e.what(), t - 1);
    }
    r.signature.push_back(v);
    r.points.push_back(q);
    if (q.x == start.x && q.y == start.y) {
      r.period = t;
      break;
    }
  }
  return r;
}

}  // namespace ffam
