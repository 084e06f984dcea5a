#include "ffam/exactfield/field.hpp"

#include "ffam/exactfield/embed.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ffam {

unsigned euler_phi(unsigned n) {
  unsigned result = n, m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

PolyQ cyclotomic_poly(unsigned n) {
  if (n == 0) throw std::invalid_argument("cyclotomic_poly: n must be >= 1");
  static std::mutex mu;
  static std::map<unsigned, PolyQ> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
  }
  // x^n - 1 divided by Phi_d for every proper divisor d.
  PolyQ p = PolyQ::monomial(1, n) - PolyQ::constant(1);
  for (unsigned d = 1; d < n; ++d) {
    if (n % d) continue;
    auto [q, r] = divmod(p, cyclotomic_poly(d));
    if (!r.is_zero()) throw std::logic_error("cyclotomic_poly: inexact division");
    p = std::move(q);
  }
  std::lock_guard<std::mutex> lock(mu);
  memo.emplace(n, p);
  return p;
}

CyclotomicField::CyclotomicField(unsigned n)
    : n_(n), phi_(euler_phi(n)), modulus_(cyclotomic_poly(n)) {
  powers_.resize(n);
  std::vector<Rational> cur(phi_);
  cur[0] = 1;
  for (unsigned k = 0; k < n; ++k) {
    powers_[k] = cur;
    // multiply by x and reduce the overflow with the monic modulus
    Rational top = cur[phi_ - 1];
    for (unsigned j = phi_ - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    if (top != 0)
      for (unsigned j = 0; j < phi_; ++j) cur[j] -= top * modulus_.coeffs()[j];
  }
}

std::shared_ptr<const CyclotomicField> CyclotomicField::get(unsigned n) {
  if (n == 0) throw std::invalid_argument("Q(zeta_n) needs n >= 1");
  static std::mutex mu;
  static std::map<unsigned, std::shared_ptr<const CyclotomicField>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  auto f = std::make_shared<const CyclotomicField>(n);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(n, f).first->second;
}

FieldElement::FieldElement(std::shared_ptr<const CyclotomicField> f, std::vector<Rational> coeffs)
    : field_(std::move(f)), c_(std::move(coeffs)) {
  if (!field_) throw std::invalid_argument("FieldElement: null field");
  if (c_.size() < field_->degree()) c_.resize(field_->degree());
  if (c_.size() > field_->degree()) {
    // reduce a longer power-basis vector
    std::vector<Rational> r(field_->degree());
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (c_[k] == 0) continue;
      const auto& pk = field_->power(static_cast<unsigned>(k));
      for (unsigned j = 0; j < field_->degree(); ++j)
        if (pk[j] != 0) r[j] += c_[k] * pk[j];
    }
    c_ = std::move(r);
  }
  for (auto& q : c_) q.canonicalize();
}

FieldElement FieldElement::zero(unsigned n) { return {CyclotomicField::get(n), {}}; }

FieldElement FieldElement::one(unsigned n) { return rational(n, 1); }

FieldElement FieldElement::rational(unsigned n, const Rational& q) {
  auto f = CyclotomicField::get(n);
  std::vector<Rational> c(f->degree());
  c[0] = q;
  return {f, std::move(c)};
}

FieldElement FieldElement::zeta(unsigned n, long k) {
  auto f = CyclotomicField::get(n);
  long m = ((k % static_cast<long>(n)) + n) % n;
  return {f, f->power(static_cast<unsigned>(m))};
}

FieldElement FieldElement::imag_unit(unsigned n) {
  if (n % 4) throw std::invalid_argument("i lies in Q(zeta_n) only for 4 | n");
  return zeta(n, n / 4);
}

void FieldElement::check_same(const FieldElement& o) const {
  if (!field_ || !o.field_) throw std::invalid_argument("FieldElement: detached operand");
  if (field_->n() != o.field_->n())
    throw std::invalid_argument("modulus mismatch: Q(zeta_" + std::to_string(field_->n()) +
                                ") vs Q(zeta_" + std::to_string(o.field_->n()) + ")");
}

bool FieldElement::is_zero() const {
  for (const auto& q : c_)
    if (q != 0) return false;
  return true;
}

bool FieldElement::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

FieldElement& FieldElement::operator*=(const Rational& s) {
  for (auto& q : c_) q *= s;
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  check_same(o);
  const unsigned n = field_->n(), phi = field_->degree();
  std::vector<Rational> buf(n);
  for (unsigned i = 0; i < phi; ++i) {
    if (c_[i] == 0) continue;
    for (unsigned j = 0; j < phi; ++j) {
      if (o.c_[j] == 0) continue;
      buf[(i + j) % n] += c_[i] * o.c_[j];
    }
  }
  std::vector<Rational> r(phi);
  for (unsigned k = 0; k < n; ++k) {
    if (buf[k] == 0) continue;
    if (k < phi) {
      r[k] += buf[k];
      continue;
    }
    const auto& pk = field_->power(k);
    for (unsigned j = 0; j < phi; ++j)
      if (pk[j] != 0) r[j] += buf[k] * pk[j];
  }
  c_ = std::move(r);
  return *this;
}

FieldElement FieldElement::inverse() const {
  if (!field_) throw std::invalid_argument("FieldElement: detached operand");
  if (is_zero()) throw std::domain_error("inversion of zero");
  Xgcd e = xgcd(PolyQ(c_), field_->modulus());
  if (e.g.degree() != 0) throw std::logic_error("inverse: modulus not coprime");
  return {field_, e.s.coeffs()};
}

FieldElement FieldElement::pow(long e) const {
  FieldElement base = e < 0 ? inverse() : *this;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  FieldElement acc = one(modulus_index());
  while (k) {
    if (k & 1) acc *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return acc;
}

FieldElement FieldElement::automorphism(long a) const {
  const long n = field_->n();
  long am = ((a % n) + n) % n;
  if (std::gcd(am, n) != 1) throw std::invalid_argument("automorphism: exponent not a unit mod n");
  std::vector<Rational> r(field_->degree());
  for (unsigned j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    const auto& pk = field_->power(static_cast<unsigned>((am * j) % n));
    for (unsigned t = 0; t < r.size(); ++t)
      if (pk[t] != 0) r[t] += c_[j] * pk[t];
  }
  return {field_, std::move(r)};
}

FieldElement FieldElement::conjugate() const { return automorphism(-1); }

FieldElement FieldElement::lift(unsigned m) const {
  const unsigned n = field_->n();
  if (m % n) throw std::invalid_argument("lift: Q(zeta_" + std::to_string(n) + ") not inside Q(zeta_" + std::to_string(m) + ")");
  if (m == n) return *this;
  auto g = CyclotomicField::get(m);
  const unsigned step = m / n;
  std::vector<Rational> r(g->degree());
  for (unsigned j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    const auto& pk = g->power(j * step);
    for (unsigned t = 0; t < r.size(); ++t)
      if (pk[t] != 0) r[t] += c_[j] * pk[t];
  }
  return {g, std::move(r)};
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  a.check_same(b);
  return a.c_ == b.c_;
}

std::pair<FieldElement, FieldElement> common_field(const FieldElement& a, const FieldElement& b) {
  unsigned m = std::lcm(a.modulus_index(), b.modulus_index());
  return {a.lift(m), b.lift(m)};
}

RealElement::RealElement(FieldElement e) : e_(std::move(e)) {
  if (!e_.is_real()) throw std::domain_error("RealElement: element is not fixed by conjugation");
}

double RealElement::to_double() const { return embed(e_).real(); }

RealElement operator+(const RealElement& a, const RealElement& b) {
  auto [x, y] = common_field(a.e_, b.e_);
  return RealElement(x + y, RealElement::trusted{});
}
RealElement operator-(const RealElement& a, const RealElement& b) {
  auto [x, y] = common_field(a.e_, b.e_);
  return RealElement(x - y, RealElement::trusted{});
}
RealElement operator*(const RealElement& a, const RealElement& b) {
  auto [x, y] = common_field(a.e_, b.e_);
  return RealElement(x * y, RealElement::trusted{});
}
RealElement operator/(const RealElement& a, const RealElement& b) {
  auto [x, y] = common_field(a.e_, b.e_);
  return RealElement(x / y, RealElement::trusted{});
}
bool operator==(const RealElement& a, const RealElement& b) {
  auto [x, y] = common_field(a.e_, b.e_);
  return x == y;
}

}  // namespace ffam
