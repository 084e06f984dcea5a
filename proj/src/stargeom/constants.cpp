#include "ffam/stargeom/constants.hpp"

#include "ffam/exactfield/trig.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ffam {

RealElement cot_pi(int N, int k) {
  // 1/tan = i/is_k; the inversion happens in Q(zeta_N)
  FieldElement inv = i_tan_element(N, k).inverse();
  const unsigned L = 4u * static_cast<unsigned>(N);
  return RealElement(FieldElement::imag_unit(L) * inv.lift(L));
}

RealElement sec_pi(int N, int k) { return cos_pi(N, k).inverse(); }

namespace {

std::shared_ptr<const ScaleTable> build_table(int N) {
  auto t = std::make_shared<ScaleTable>();
  t->N = N;
  t->half = (N - 1) / 2;
  const int H = t->half;
  t->s.resize(H + 1);
  t->scale.resize(H + 1);
  t->dual.resize(H + 1);
  t->dual_scale.resize(H + 1);
  t->primitive.assign(H + 1, false);
  t->scale_d.assign(H + 1, 0.0);
  for (int k = 1; k <= H; ++k) {
    t->s[k] = tan_pi(N, k);
    t->dual[k] = cot_pi(N, k);
    t->primitive[k] = std::gcd(k, N) == 1;
  }
  for (int k = 1; k <= H; ++k) {
    t->scale[k] = t->s[1] * t->dual[k];
    t->dual_scale[k] = t->s[k] * t->dual[1];
    t->scale_d[k] = t->scale[k].to_double();
  }
  t->gen_scale = t->scale[H];
  t->gen_scale_d = t->scale_d[H];
  RealElement closed = N % 2 == 0 ? t->s[1] * t->s[1] : t->s[1] * tan_pi(2 * N, 1);
  t->gen_scale_closed_form = closed == t->gen_scale;
  return t;
}

}  // namespace

std::shared_ptr<const ScaleTable> scale_table(int N) {
  if (N < 3) throw std::invalid_argument("scale_table: N must be >= 3, got " + std::to_string(N));
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const ScaleTable>> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(N);
    if (it != memo.end()) return it->second;
  }
  auto t = build_table(N);
  std::lock_guard<std::mutex> lock(mu);
  return memo.emplace(N, t).first->second;
}

RealElement scale(int N, int k) {
  auto t = scale_table(N);
  if (k < 1 || k > t->half) throw std::out_of_range("scale: index out of range");
  return t->scale[k];
}

RealElement gen_scale(int N) { return scale_table(N)->gen_scale; }

RealElement scale_swap(int N, int M) {
  if (N < 3 || M < 3) throw std::invalid_argument("scale_swap: N, M must be >= 3");
  return tan_pi(N, 1) * cot_pi(M, 1);
}

LambdaReport lambda_conversions(int N) {
  if (N < 3) throw std::invalid_argument("lambda_conversions: N must be >= 3");
  LambdaReport r;
  r.N = N;
  r.even = N % 2 == 0;
  r.lambda_n = lambda(N);
  r.lambda_2n = lambda(2 * N);
  const unsigned m = r.lambda_2n.modulus_index();
  const RealElement& l = r.lambda_2n;
  if (r.even) {
    RealElement l2 = l * l;
    r.gen_scale_from_lambda = (RealElement::rational(m, 4) - l2) / l2;
  } else {
    r.gen_scale_from_lambda = (RealElement::rational(m, 2) - l) / l;
  }
  r.identity_holds = r.gen_scale_from_lambda == gen_scale(N);
  return r;
}

}  // namespace ffam
