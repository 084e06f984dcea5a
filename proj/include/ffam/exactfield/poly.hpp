#pragma once

#include "ffam/exactfield/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ffam {

// Dense univariate polynomial over Q, lowest degree first. The zero
// polynomial has an empty coefficient list and degree -1.
class PolyQ {
 public:
  PolyQ() = default;
  explicit PolyQ(std::vector<Rational> coeffs);

  static PolyQ constant(const Rational& c);
  static PolyQ monomial(const Rational& c, std::size_t k);
  static PolyQ from_integers(const std::vector<long>& coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& leading() const;

  PolyQ monic() const;
  // Primitive integer multiple with positive leading coefficient (3x^2 - 1 form).
  std::vector<Integer> integer_form() const;
  bool has_integer_coeffs() const;

  Rational eval(const Rational& x) const;
  PolyQ derivative() const;
  PolyQ negate_variable() const;  // p(-x)

  PolyQ operator-() const;
  PolyQ& operator+=(const PolyQ& o);
  PolyQ& operator-=(const PolyQ& o);
  PolyQ& operator*=(const Rational& s);
  friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
  friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
  friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
  friend PolyQ operator*(PolyQ a, const Rational& s) { return a *= s; }
  friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.c_ == b.c_; }

  // Readable form, highest degree first: "x^2 - 4*x + 1".
  std::string str(const std::string& var = "x") const;
  std::vector<std::string> to_strings() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// Quotient and remainder; divisor must be nonzero.
std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b);

// Monic gcd, and Bezout cofactors s, t with s*a + t*b = gcd.
struct Xgcd {
  PolyQ g, s, t;
};
Xgcd xgcd(const PolyQ& a, const PolyQ& b);

}  // namespace ffam
