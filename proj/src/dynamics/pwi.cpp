#include "ffam/dynamics/pwi.hpp"

#include "ffam/exactfield/embed.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ffam {

namespace {

double cross(Cplx u, Cplx w) { return u.real() * w.imag() - u.imag() * w.real(); }

double signed_area(const std::vector<Cplx>& p) {
  double a = 0;
  for (std::size_t i = 0; i < p.size(); ++i) a += cross(p[i], p[(i + 1) % p.size()]);
  return a / 2;
}

PiecewiseIsometry build(std::string name, std::vector<ExactAtom> atoms) {
  PiecewiseIsometry m;
  m.name = std::move(name);
  for (auto& e : atoms) {
    Atom a;
    for (const auto& v : e.vertices) a.polygon.push_back(embed(v));
    if (signed_area(a.polygon) < 0) {
      std::reverse(a.polygon.begin(), a.polygon.end());
      std::reverse(e.vertices.begin(), e.vertices.end());
    }
    a.rho = embed(e.rho);
    a.t = embed(e.t);
    m.atoms.push_back(a);
    m.exact.push_back(std::move(e));
  }
  return m;
}

}  // namespace

PiecewiseIsometry goetz_pi5() {
  auto a = [](long k) { return FieldElement::zeta(10, k); };
  auto one = FieldElement::one(10), zero = FieldElement::zero(10);
  FieldElement s = a(2) + a(4) + a(6);
  return build("goetz-pi5", {{{zero, s, -one}, a(4), s}, {{zero, -one, a(6)}, a(6), a(6)}});
}

PiecewiseIsometry goetz_pi7() {
  auto a = [](long k) { return FieldElement::zeta(14, k); };
  auto one = FieldElement::one(14), zero = FieldElement::zero(14);
  return build("goetz-pi7", {{{zero, a(5) - one, -one}, a(6), a(5) - one},
                             {{zero, -one, -a(3)}, -a(1), -a(4) + a(5) - a(6) - one},
                             {{zero, -a(3), -a(3) + a(2)}, a(6), -a(3)}});
}

int pwi_atom(Cplx z, const PiecewiseIsometry& m, double tol) {
  bool boundary = false;
  for (std::size_t i = 0; i < m.atoms.size(); ++i) {
    const auto& p = m.atoms[i].polygon;
    double lo = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < p.size(); ++k) {
      Cplx e = p[(k + 1) % p.size()] - p[k];
      lo = std::min(lo, cross(e, z - p[k]) / std::abs(e));
    }
    if (lo > tol) return static_cast<int>(i);
    if (lo >= -tol) boundary = true;
  }
  if (boundary) throw PwiError(PwiError::Boundary, m.name + ": point on an atom boundary");
  throw PwiError(PwiError::Outside, m.name + ": point outside every atom");
}

Cplx pwi_step(Cplx z, const PiecewiseIsometry& m, double tol) {
  const auto& a = m.atoms[pwi_atom(z, m, tol)];
  return a.rho * z + a.t;
}

FieldElement fixed_point(const ExactAtom& a) {
  return a.t / (FieldElement::one(a.rho.modulus_index()) - a.rho);
}

bool strictly_inside(const FieldElement& z, const ExactAtom& a) {
  const auto& v = a.vertices;
  for (std::size_t k = 0; k < v.size(); ++k) {
    // Im(conj(e) w) is the cross product of e and w
    FieldElement d = (v[(k + 1) % v.size()] - v[k]).conjugate() * (z - v[k]);
    if (d == d.conjugate()) return false;
    if (embed(d, 256).imag() <= 0) return false;
  }
  return true;
}

bool images_disjoint(const PiecewiseIsometry& m, int i, int j) {
  auto image = [&](int k) {
    std::vector<Cplx> out;
    const auto& e = m.exact[k];
    for (const auto& v : e.vertices) out.push_back(embed(e.rho * v + e.t, 256));
    return out;
  };
  auto P = image(i), Q = image(j);
  // separating axis among the edge normals of both convex polygons
  for (const auto* poly : {&P, &Q})
    for (std::size_t k = 0; k < poly->size(); ++k) {
      Cplx e = (*poly)[(k + 1) % poly->size()] - (*poly)[k];
      Cplx n{-e.imag(), e.real()};
      auto proj = [&](const std::vector<Cplx>& s) {
        double lo = std::numeric_limits<double>::infinity(), hi = -lo;
        for (auto p : s) {
          double t = (n.real() * p.real() + n.imag() * p.imag()) / std::abs(n);
          lo = std::min(lo, t), hi = std::max(hi, t);
        }
        return std::make_pair(lo, hi);
      };
      auto [a0, a1] = proj(P);
      auto [b0, b1] = proj(Q);
      if (a1 <= b0 + 1e-12 || b1 <= a0 + 1e-12) return true;
    }
  return false;
}

}  // namespace ffam
