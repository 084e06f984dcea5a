#include "ffam/exactfield/embed.hpp"

#include <mpfr.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace ffam {

namespace {

struct Mp {
  mpfr_t v;
  explicit Mp(mpfr_prec_t p) { mpfr_init2(v, p); }
  ~Mp() { mpfr_clear(v); }
  Mp(const Mp&) = delete;
  Mp& operator=(const Mp&) = delete;
};

mpfr_prec_t working_precision(const FieldElement& e, unsigned precision) {
  if (precision < 53) throw std::invalid_argument("embed: precision must be >= 53 bits");
  std::size_t bits = 0;
  for (const auto& q : e.coeffs()) {
    bits = std::max(bits, mpz_sizeinbase(q.get_num_mpz_t(), 2));
    bits = std::max(bits, mpz_sizeinbase(q.get_den_mpz_t(), 2));
  }
  return static_cast<mpfr_prec_t>(precision + 64 + bits);
}

void embed_mp(const FieldElement& e, mpfr_prec_t p, mpfr_t re, mpfr_t im) {
  const unsigned n = e.modulus_index();
  Mp ang(p), c(p), s(p), t(p);
  mpfr_set_zero(re, 1);
  mpfr_set_zero(im, 1);
  const auto& co = e.coeffs();
  for (unsigned j = 0; j < co.size(); ++j) {
    if (co[j] == 0) continue;
    mpfr_const_pi(ang.v, MPFR_RNDN);
    mpfr_mul_ui(ang.v, ang.v, 2UL * j, MPFR_RNDN);
    mpfr_div_ui(ang.v, ang.v, n, MPFR_RNDN);
    mpfr_sin_cos(s.v, c.v, ang.v, MPFR_RNDN);
    mpfr_mul_q(t.v, c.v, co[j].get_mpq_t(), MPFR_RNDN);
    mpfr_add(re, re, t.v, MPFR_RNDN);
    mpfr_mul_q(t.v, s.v, co[j].get_mpq_t(), MPFR_RNDN);
    mpfr_add(im, im, t.v, MPFR_RNDN);
  }
}

double trig_d(long k, long N, int which) {
  Mp a(160), r(160);
  mpfr_const_pi(a.v, MPFR_RNDN);
  mpfr_mul_si(a.v, a.v, k, MPFR_RNDN);
  mpfr_div_si(a.v, a.v, N, MPFR_RNDN);
  if (which == 0)
    mpfr_tan(r.v, a.v, MPFR_RNDN);
  else if (which == 1)
    mpfr_cos(r.v, a.v, MPFR_RNDN);
  else
    mpfr_sin(r.v, a.v, MPFR_RNDN);
  return mpfr_get_d(r.v, MPFR_RNDN);
}

}  // namespace

std::complex<double> embed(const FieldElement& e, unsigned precision) {
  mpfr_prec_t p = working_precision(e, precision);
  Mp re(p), im(p);
  embed_mp(e, p, re.v, im.v);
  return {mpfr_get_d(re.v, MPFR_RNDN), mpfr_get_d(im.v, MPFR_RNDN)};
}

std::string embed_decimal(const FieldElement& e, int digits, unsigned precision) {
  mpfr_prec_t p = working_precision(e, precision);
  Mp re(p), im(p);
  embed_mp(e, p, re.v, im.v);
  std::vector<char> buf(static_cast<std::size_t>(digits) + 64 + p / 3);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rf", digits, re.v);
  return std::string(buf.data());
}

double tan_pi_d(long k, long N) { return trig_d(k, N, 0); }
double cos_pi_d(long k, long N) { return trig_d(k, N, 1); }
double sin_pi_d(long k, long N) { return trig_d(k, N, 2); }

}  // namespace ffam
