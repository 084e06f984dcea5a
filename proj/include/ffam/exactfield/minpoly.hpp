#pragma once

#include "ffam/exactfield/field.hpp"
#include "ffam/exactfield/poly.hpp"

#include <map>

namespace ffam {

// Monic minimal polynomial over Q, from the first linear dependency among
// the power-basis coordinate vectors of 1, a, a^2, ...
PolyQ minimal_polynomial(const FieldElement& a);

// Coefficients c with target = sum c_i g^i, i < deg(g). Throws
// std::domain_error when target is not in Q(g).
PolyQ express_in_generator(const RealElement& target, const RealElement& generator);

// s_k as a rational combination of the primitive s_j (gcd(j,N)=1, 1 <= j < N/2),
// solved on the coordinates of is_j in Q(zeta_N).
std::map<int, Rational> decompose_in_primitive_basis(int N, int k);

struct NormReport {
  PolyQ minpoly;
  Rational norm;  // N_{Q(a)/Q}(a) = (-1)^d * constant term
  bool algebraic_integer = false;
  bool unit = false;
};
NormReport norm_and_unit_test(const RealElement& a);

}  // namespace ffam
