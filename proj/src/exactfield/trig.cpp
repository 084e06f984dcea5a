#include "ffam/exactfield/trig.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace ffam {

namespace {

long mod(long a, long n) { return ((a % n) + n) % n; }

}  // namespace

FieldElement i_tan_element(int N, int k) {
  if (N < 1) throw std::invalid_argument("i_tan_element: N must be positive");
  const long twoN = 2L * N;
  if (mod(2L * k, twoN) == N)
    throw std::domain_error("i_tan_element: tan(" + std::to_string(k) + "pi/" + std::to_string(N) +
                            ") is a pole");
  auto z = FieldElement::zeta(N, k);
  auto one = FieldElement::one(N);
  return (z - one) / (z + one);
}

RealElement tan_pi(int N, int k) {
  const unsigned m = 4U * N;
  // zeta_N = zeta_{4N}^4 and tan = (i tan) * (-i)
  FieldElement is = i_tan_element(N, k).lift(m);
  return RealElement(is * -FieldElement::imag_unit(m));
}

RealElement cos_2pi(int n, int k) {
  auto z = FieldElement::zeta(n, k);
  return RealElement((z + z.conjugate()) * Rational(1, 2));
}

RealElement sin_2pi(int n, int k) {
  const unsigned m = std::lcm(static_cast<unsigned>(n), 4U);
  auto z = FieldElement::zeta(n, k).lift(m);
  // (z - z^-1) / (2i) = -(i/2)(z - z^-1)
  auto i = FieldElement::imag_unit(m);
  return RealElement((z - z.conjugate()) * i * Rational(-1, 2));
}

RealElement cos_pi(int N, int k) { return cos_2pi(2 * N, k); }

RealElement sin_pi(int N, int k) { return sin_2pi(2 * N, k); }

RealElement lambda(int n) { return cos_2pi(n, 1) * Rational(2); }

}  // namespace ffam
