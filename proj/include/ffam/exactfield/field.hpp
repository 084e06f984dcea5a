#pragma once

#include "ffam/exactfield/poly.hpp"
#include "ffam/exactfield/rational.hpp"

#include <memory>
#include <vector>

namespace ffam {

unsigned euler_phi(unsigned n);

// Phi_n(x), memoized.
PolyQ cyclotomic_poly(unsigned n);

// Shared, immutable description of Q(zeta_n): the modulus and the reduced
// power basis images of zeta^k for 0 <= k < n.
class CyclotomicField {
 public:
  static std::shared_ptr<const CyclotomicField> get(unsigned n);

  unsigned n() const { return n_; }
  unsigned degree() const { return phi_; }
  const PolyQ& modulus() const { return modulus_; }
  const std::vector<Rational>& power(unsigned k) const { return powers_[k % n_]; }

  explicit CyclotomicField(unsigned n);

 private:
  unsigned n_;
  unsigned phi_;
  PolyQ modulus_;
  std::vector<std::vector<Rational>> powers_;
};

class FieldElement {
 public:
  FieldElement() = default;  // detached; only assignable
  FieldElement(std::shared_ptr<const CyclotomicField> f, std::vector<Rational> coeffs);

  static FieldElement zero(unsigned n);
  static FieldElement one(unsigned n);
  static FieldElement rational(unsigned n, const Rational& q);
  static FieldElement zeta(unsigned n, long k = 1);
  // i as an element of Q(zeta_n); requires 4 | n.
  static FieldElement imag_unit(unsigned n);

  unsigned modulus_index() const { return field_ ? field_->n() : 0; }
  const std::shared_ptr<const CyclotomicField>& field() const { return field_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  FieldElement inverse() const;
  FieldElement pow(long e) const;
  FieldElement conjugate() const;            // sigma_{-1}
  FieldElement automorphism(long a) const;   // zeta -> zeta^a, gcd(a, n) = 1
  FieldElement lift(unsigned m) const;       // into Q(zeta_m), n | m
  bool is_real() const { return conjugate() == *this; }

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator*=(const Rational& s);
  FieldElement& operator/=(const FieldElement& o) { return *this *= o.inverse(); }
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator*(FieldElement a, const Rational& s) { return a *= s; }
  friend FieldElement operator*(const Rational& s, FieldElement a) { return a *= s; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  void check_same(const FieldElement& o) const;
  std::shared_ptr<const CyclotomicField> field_;
  std::vector<Rational> c_;
};

// Lifts both operands into Q(zeta_lcm).
std::pair<FieldElement, FieldElement> common_field(const FieldElement& a, const FieldElement& b);

// Element of the maximal real subfield; construction verifies that complex
// conjugation fixes the coefficients.
class RealElement {
 public:
  RealElement() = default;
  explicit RealElement(FieldElement e);
  static RealElement rational(unsigned n, const Rational& q) {
    return RealElement(FieldElement::rational(n, q));
  }

  const FieldElement& element() const { return e_; }
  unsigned modulus_index() const { return e_.modulus_index(); }
  RealElement lift(unsigned m) const { return RealElement(e_.lift(m), trusted{}); }
  RealElement inverse() const { return RealElement(e_.inverse(), trusted{}); }
  RealElement pow(long k) const { return RealElement(e_.pow(k), trusted{}); }
  bool is_zero() const { return e_.is_zero(); }
  double to_double() const;

  RealElement operator-() const { return RealElement(-e_, trusted{}); }
  friend RealElement operator+(const RealElement& a, const RealElement& b);
  friend RealElement operator-(const RealElement& a, const RealElement& b);
  friend RealElement operator*(const RealElement& a, const RealElement& b);
  friend RealElement operator/(const RealElement& a, const RealElement& b);
  friend RealElement operator*(const RealElement& a, const Rational& s) {
    return RealElement(a.e_ * s, trusted{});
  }
  friend bool operator==(const RealElement& a, const RealElement& b);

 private:
  struct trusted {};
  RealElement(FieldElement e, trusted) : e_(std::move(e)) {}
  FieldElement e_;
};

}  // namespace ffam
