#include "ffam/exactfield/poly.hpp"

#include <stdexcept>

namespace ffam {

PolyQ::PolyQ(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& q : c_) q.canonicalize();
  trim();
}

PolyQ PolyQ::constant(const Rational& c) { return PolyQ(std::vector<Rational>{c}); }

PolyQ PolyQ::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return PolyQ(std::move(v));
}

PolyQ PolyQ::from_integers(const std::vector<long>& coeffs) {
  std::vector<Rational> v;
  v.reserve(coeffs.size());
  for (long a : coeffs) v.emplace_back(a);
  return PolyQ(std::move(v));
}

void PolyQ::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& PolyQ::leading() const {
  if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return c_.back();
}

PolyQ PolyQ::monic() const {
  if (is_zero()) return *this;
  PolyQ r = *this;
  Rational inv = 1 / leading();
  for (auto& q : r.c_) q *= inv;
  return r;
}

std::vector<Integer> PolyQ::integer_form() const {
  std::vector<Integer> out;
  if (is_zero()) return out;
  Integer l = 1;
  for (const auto& q : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  Integer g = 0;
  for (const auto& q : c_) {
    Integer v = q.get_num() * (l / q.get_den());
    out.push_back(v);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  if (out.back() < 0) g = -g;
  for (auto& v : out) v /= g;
  return out;
}

bool PolyQ::has_integer_coeffs() const {
  for (const auto& q : c_)
    if (q.get_den() != 1) return false;
  return true;
}

Rational PolyQ::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

PolyQ PolyQ::derivative() const {
  std::vector<Rational> v;
  for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * static_cast<long>(i));
  return PolyQ(std::move(v));
}

PolyQ PolyQ::negate_variable() const {
  PolyQ r = *this;
  for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
  return r;
}

PolyQ PolyQ::operator-() const {
  PolyQ r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

PolyQ& PolyQ::operator+=(const PolyQ& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

PolyQ& PolyQ::operator*=(const Rational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& q : c_) q *= s;
  return *this;
}

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return PolyQ(std::move(v));
}

std::string PolyQ::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& q = c_[i];
    if (q == 0) continue;
    Rational mag = abs(q);
    if (out.empty())
      out += q < 0 ? "-" : "";
    else
      out += q < 0 ? " - " : " + ";
    bool unit = mag == 1 && i > 0;
    if (!unit) out += to_string(mag);
    if (i > 0) {
      if (!unit) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

std::vector<std::string> PolyQ::to_strings() const {
  std::vector<std::string> v;
  for (const auto& q : c_) v.push_back(to_string(q));
  return v;
}

std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> r = a.coeffs();
  int db = b.degree();
  int da = a.degree();
  if (da < db) return {PolyQ(), a};
  std::vector<Rational> q(da - db + 1);
  Rational inv = 1 / b.leading();
  for (int i = da; i >= db; --i) {
    if (r[i] == 0) continue;
    Rational f = r[i] * inv;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeffs()[j];
  }
  r.resize(db);
  return {PolyQ(std::move(q)), PolyQ(std::move(r))};
}

Xgcd xgcd(const PolyQ& a, const PolyQ& b) {
  PolyQ r0 = a, r1 = b;
  PolyQ s0 = PolyQ::constant(1), s1;
  PolyQ t0, t1 = PolyQ::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    PolyQ s2 = s0 - q * s1;
    PolyQ t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rational inv = 1 / r0.leading();
  return {r0 * inv, s0 * inv, t0 * inv};
}

}  // namespace ffam
