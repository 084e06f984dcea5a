#include "ffam/exactfield/minpoly.hpp"

#include "ffam/exactfield/linalg.hpp"
#include "ffam/exactfield/trig.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace ffam {

PolyQ minimal_polynomial(const FieldElement& a) {
  const unsigned phi = a.field()->degree();
  EchelonBasis basis(phi);
  FieldElement p = FieldElement::one(a.modulus_index());
  for (unsigned d = 0; d <= phi; ++d) {
    auto dep = basis.add(p.coeffs());
    if (dep) {
      // a^d = sum dep_i a^i  =>  x^d - sum dep_i x^i
      std::vector<Rational> c(d + 1);
      for (unsigned i = 0; i < d; ++i) c[i] = -(*dep)[i];
      c[d] = 1;
      return PolyQ(std::move(c));
    }
    p *= a;
  }
  throw std::logic_error("minimal_polynomial: no dependency within field degree");
}

PolyQ express_in_generator(const RealElement& target, const RealElement& generator) {
  auto [t, g] = common_field(target.element(), generator.element());
  const int d = minimal_polynomial(g).degree();
  const std::size_t phi = t.coeffs().size();
  QMatrix m(phi, QVector(d));
  FieldElement p = FieldElement::one(g.modulus_index());
  for (int i = 0; i < d; ++i) {
    for (std::size_t r = 0; r < phi; ++r) m[r][i] = p.coeffs()[r];
    p *= g;
  }
  auto x = solve_unique(m, t.coeffs());
  if (!x) throw std::domain_error("express_in_generator: target lies outside Q(generator)");
  return PolyQ(*x);
}

std::map<int, Rational> decompose_in_primitive_basis(int N, int k) {
  if (N < 3) throw std::invalid_argument("decompose_in_primitive_basis: N must be >= 3");
  if (k < 1 || 2 * k >= N)
    throw std::invalid_argument("decompose_in_primitive_basis: need 1 <= k < N/2");
  std::vector<int> js;
  for (int j = 1; 2 * j < N; ++j)
    if (std::gcd(j, N) == 1) js.push_back(j);
  const std::size_t phi = euler_phi(static_cast<unsigned>(N));
  QMatrix m(phi, QVector(js.size()));
  for (std::size_t c = 0; c < js.size(); ++c) {
    auto e = i_tan_element(N, js[c]);
    for (std::size_t r = 0; r < phi; ++r) m[r][c] = e.coeffs()[r];
  }
  auto x = solve_unique(m, i_tan_element(N, k).coeffs());
  if (!x)
    throw std::logic_error("decompose_in_primitive_basis: inconsistent system for N=" +
                           std::to_string(N) + ", k=" + std::to_string(k));
  std::map<int, Rational> out;
  for (std::size_t c = 0; c < js.size(); ++c)
    if ((*x)[c] != 0) out[js[c]] = (*x)[c];
  return out;
}

NormReport norm_and_unit_test(const RealElement& a) {
  if (a.is_zero()) throw std::domain_error("norm_and_unit_test: zero element");
  NormReport r;
  r.minpoly = minimal_polynomial(a.element());
  const int d = r.minpoly.degree();
  r.norm = (d % 2 ? -1 : 1) * r.minpoly.coeff(0);
  r.algebraic_integer = r.minpoly.has_integer_coeffs();
  r.unit = r.algebraic_integer && abs(r.norm) == 1;
  return r;
}

}  // namespace ffam
