#include "ffam/analysis/verify.hpp"

#include "ffam/exactfield/linalg.hpp"
#include "ffam/exactfield/minpoly.hpp"
#include "ffam/exactfield/trig.hpp"
#include "ffam/stargeom/constants.hpp"

#include <cstdio>
#include <numeric>
#include <stdexcept>

namespace ffam {

bool Report::all_pass() const {
  for (const auto& c : claims)
    if (!c.pass) return false;
  return true;
}

const ClaimResult* Report::first_failure() const {
  for (const auto& c : claims)
    if (!c.pass) return &c;
  return nullptr;
}

void Report::append(const Report& o) { claims.insert(claims.end(), o.claims.begin(), o.claims.end()); }

namespace {

std::string dec(const RealElement& e) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", e.to_double());
  return buf;
}

std::string dec(long v) { return std::to_string(v); }

void claim(Report& r, std::string id, std::string anchor, const RealElement& lhs, const RealElement& rhs) {
  r.claims.push_back({std::move(id), std::move(anchor), lhs == rhs, dec(lhs), dec(rhs)});
}

void claim(Report& r, std::string id, std::string anchor, long lhs, long rhs) {
  r.claims.push_back({std::move(id), std::move(anchor), lhs == rhs, dec(lhs), dec(rhs)});
}

std::string tag(int N) { return "N=" + std::to_string(N); }

}  // namespace

Report verify_scaling_lemma(int N, int k) {
  if (k < 1 || N % k) throw std::invalid_argument("verify_scaling_lemma: k must divide N");
  const int n = N / k;
  if (n < 3) throw std::invalid_argument("verify_scaling_lemma: N/k must be >= 3");
  Report r;
  r.suite = "scaling";
  auto big = scale_table(N), small = scale_table(n);
  const std::string base = "scaling/" + tag(N) + "/k=" + std::to_string(k);
  for (int j = 1; j <= small->half; ++j)
    claim(r, base + "/j=" + std::to_string(j), "scale[j] of N/k = scale[kj]/scale[k] of N", small->scale[j],
          big->scale[k * j] / big->scale[k]);
  claim(r, base + "/swap", "scale[k] of N = ScaleSwap[N, N/k]", big->scale[k], scale_swap(N, n));
  return r;
}

Report verify_even_symmetry(int N) {
  if (N % 2 || N < 4) throw std::invalid_argument("verify_even_symmetry: N must be even and >= 4");
  Report r;
  r.suite = "symmetry";
  auto t = scale_table(N);
  const int H = t->half;
  const RealElement& G = t->gen_scale;
  const std::string base = "symmetry/" + tag(N);
  for (int k = 1; k <= H; ++k)
    claim(r, base + "/reverse/k=" + std::to_string(k), "scales = Reverse[GenScale/scales]", t->scale[k],
          G / t->scale[H + 1 - k]);
  if (N % 4 == 2) {
    // odd and even sublists map onto each other under GenScale
    std::vector<RealElement> odd, even;
    for (int k = 1; k <= H; ++k) (k % 2 ? odd : even).push_back(t->scale[k]);
    const int m = static_cast<int>(even.size());
    for (int i = 0; i < m; ++i) {
      claim(r, base + "/even-from-odd/" + std::to_string(i), "EvenScales = Reverse[GenScale/OddScales]", even[i],
            G / odd[m - 1 - i]);
      claim(r, base + "/odd-from-even/" + std::to_string(i), "OddScales = Reverse[GenScale/EvenScales]", odd[i],
            G / even[m - 1 - i]);
    }
    for (int k = 1; k <= H; ++k) {
      const RealElement& riffled = k % 2 ? odd[(k - 1) / 2] : even[k / 2 - 1];
      claim(r, base + "/riffle/k=" + std::to_string(k), "Scales = Riffle[OddScales, EvenScales]", riffled,
            t->scale[k]);
    }
    if (N >= 6) {
      auto half = scale_table(N / 2);
      for (int k = 1; k <= half->half; ++k)
        claim(r, base + "/twice-odd/k=" + std::to_string(k),
              "scale[k] of N/2 = scale[2k] GenScale[N/2]/GenScale[N]", half->scale[k],
              t->scale[2 * k] * half->gen_scale / G);
      claim(r, base + "/twice-odd/last-even", "scale[N/2 - 1] of N = GenScale[N/2]", t->scale[H], G);
      claim(r, base + "/twice-odd/gen-ratio", "ScaleSwap[N, N/2] = GenScale[N]/GenScale[N/2]",
            scale_swap(N, N / 2), G / half->gen_scale);
    }
  } else {
    const int q = N / 4;
    for (int k = q + 1; k <= H; ++k)
      claim(r, base + "/second-half/k=" + std::to_string(k), "SecondHalf = GenScale/FirstHalf", t->scale[k],
            G / t->scale[H + 1 - k]);
    claim(r, base + "/central", "scale[N/4]^2 = GenScale[N]", t->scale[q] * t->scale[q], G);
  }
  if (N >= 6) {
    auto half = scale_table(N / 2);
    RealElement sw = scale_swap(N, N / 2);
    claim(r, base + "/half/swap", "ScaleSwap[N, N/2] = scale[2]", sw, t->scale[2]);
    for (int j = 1; j <= half->half; ++j)
      claim(r, base + "/half/j=" + std::to_string(j), "Scale[N/2] = EvenScales[N]/ScaleSwap[N, N/2]",
            half->scale[j], t->scale[2 * j] / sw);
  }
  return r;
}

namespace {

int rank_of(const std::vector<RealElement>& v) {
  if (v.empty()) return 0;
  unsigned m = 1;
  for (const auto& e : v) m = std::lcm(m, e.modulus_index());
  QMatrix A;
  for (const auto& e : v) A.push_back(e.lift(m).element().coeffs());
  return static_cast<int>(rank(A));
}

}  // namespace

int independence_rank(int N) {
  auto t = scale_table(N);
  std::vector<RealElement> v;
  for (int k = 1; k <= t->half; ++k)
    if (t->primitive[k]) v.push_back(t->scale[k]);
  return rank_of(v);
}

int dual_independence_rank(int N) {
  auto t = scale_table(N);
  std::vector<RealElement> v;
  for (int k = 1; k <= t->half; ++k)
    if (t->primitive[k]) v.push_back(t->dual_scale[k]);
  return rank_of(v);
}

Report verify_independence(int N) {
  Report r;
  r.suite = "independence";
  const long half_phi = static_cast<long>(euler_phi(N)) / 2;
  claim(r, "independence/" + tag(N) + "/scales", "rank of primitive scales = phi(N)/2", independence_rank(N), half_phi);
  claim(r, "independence/" + tag(N) + "/duals", "rank of primitive dual scales = phi(N)/2", dual_independence_rank(N),
        half_phi);
  return r;
}

Report verify_units(int N) {
  Report r;
  r.suite = "units";
  auto t = scale_table(N);
  const bool primitive = t->primitive[t->half];
  claim(r, "units/" + tag(N) + "/primitive", "GenScale primitive iff N != 2 mod 4", primitive ? 1 : 0,
        N % 4 == 2 ? 0 : 1);
  if (primitive) {
    NormReport nr = norm_and_unit_test(t->gen_scale);
    r.claims.push_back({"units/" + tag(N) + "/unit", "primitive GenScale is an algebraic unit", nr.unit,
                        "norm " + to_string(nr.norm), "+-1"});
  }
  return r;
}

bool ComplexityProfile::consistent() const {
  auto ok = [](int p, int d) { return p < 0 || p == d; };
  return ok(cos_predicted, cos_degree) && ok(sin_predicted, sin_degree) && ok(tan2_predicted, tan2_degree) &&
         ok(tan_predicted, tan_degree);
}

ComplexityProfile complexity_profile(int N) {
  if (N < 3) throw std::invalid_argument("complexity_profile: N must be >= 3");
  ComplexityProfile c;
  c.N = N;
  c.phi = euler_phi(static_cast<unsigned>(N));
  const int phi = static_cast<int>(c.phi);
  const int r8 = N % 8;
  c.cos_predicted = phi / 2;
  if (N == 4) {
    c.sin_predicted = c.tan2_predicted = -1;
  } else {
    c.sin_predicted = N % 4 ? phi : (r8 == 0 ? phi / 2 : phi / 4);
    c.tan2_predicted = N % 4 ? phi : (r8 == 4 ? phi / 2 : phi / 4);
  }
  c.tan_predicted = N % 4 ? phi : phi / 2;
  auto deg = [](const RealElement& e) { return static_cast<int>(minimal_polynomial(e.element()).degree()); };
  c.cos_degree = deg(cos_2pi(N, 1));
  c.sin_degree = deg(sin_2pi(N, 1));
  c.tan2_degree = N == 4 ? -1 : deg(tan_pi(N, 2));
  c.tan_degree = deg(tan_pi(N, 1));
  return c;
}

Report verify_complexity(int N) {
  Report r;
  r.suite = "complexity";
  auto c = complexity_profile(N);
  const std::string b = "complexity/" + tag(N);
  claim(r, b + "/cos", "degree cos(2pi/N) = phi(N)/2", c.cos_degree, c.cos_predicted);
  if (c.sin_predicted >= 0) claim(r, b + "/sin", "degree sin(2pi/N) by N mod 8", c.sin_degree, c.sin_predicted);
  if (c.tan2_predicted >= 0) claim(r, b + "/tan2", "degree tan(2pi/N) by N mod 8", c.tan2_degree, c.tan2_predicted);
  claim(r, b + "/tan", "degree tan(pi/N) = phi(N), halved when 4 | N", c.tan_degree, c.tan_predicted);
  return r;
}

Report verify_suite(const std::string& name, int max_n) {
  if (max_n < 3) throw std::invalid_argument("verify: max-n must be >= 3");
  Report r;
  r.suite = name;
  for (int N = 3; N <= max_n; ++N) {
    if (name == "scaling" || name == "all")
      for (int k = 1; k <= N / 3; ++k)
        if (N % k == 0) r.append(verify_scaling_lemma(N, k));
    if ((name == "symmetry" || name == "all") && N % 2 == 0) r.append(verify_even_symmetry(N));
    if (name == "independence" || name == "all") {
      r.append(verify_independence(N));
      r.append(verify_units(N));
    }
    if ((name == "complexity" || name == "all") && N <= std::max(20, max_n)) r.append(verify_complexity(N));
  }
  if (name != "all" && name != "scaling" && name != "symmetry" && name != "independence" && name != "complexity")
    throw std::invalid_argument("verify: unknown suite '" + name + "'");
  return r;
}

}  // namespace ffam
