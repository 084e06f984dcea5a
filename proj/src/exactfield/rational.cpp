#include "ffam/exactfield/rational.hpp"

#include <stdexcept>

namespace ffam {

std::string to_string(const Rational& q) { return q.get_str(10); }

Rational parse_rational(std::string_view s) {
  std::string t(s);
  auto bad = [&] { return std::invalid_argument("not a rational: '" + t + "'"); };
  if (t.empty()) throw bad();
  std::size_t slash = t.find('/');
  std::string num = t.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
  auto digits = [](const std::string& u, bool sign_ok) {
    std::size_t i = (sign_ok && !u.empty() && (u[0] == '-' || u[0] == '+')) ? 1 : 0;
    if (i >= u.size()) return false;
    for (; i < u.size(); ++i)
      if (u[i] < '0' || u[i] > '9') return false;
    return true;
  };
  if (!digits(num, true) || !digits(den, false)) throw bad();
  if (num[0] == '+') num.erase(0, 1);
  Integer n(num, 10), d(den, 10);
  if (d == 0) throw bad();
  Rational q(n, d);
  q.canonicalize();
  return q;
}

}  // namespace ffam
