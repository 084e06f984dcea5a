#pragma once

#include "ffam/exactfield/field.hpp"

#include <memory>
#include <vector>

namespace ffam {

// 1/tan(k pi/N) in Q(zeta_{4N}), without inverting in the large field.
RealElement cot_pi(int N, int k);
// 1/cos(k pi/N) in Q(zeta_{2N}).
RealElement sec_pi(int N, int k = 1);

struct ScaleTable {
  int N = 0;
  int half = 0;                     // <N/2>
  // index 0 unused; entries 1..half
  std::vector<RealElement> s;       // tan(k pi/N)
  std::vector<RealElement> scale;   // s_1/s_k
  std::vector<RealElement> dual;    // cot(k pi/N)
  std::vector<RealElement> dual_scale;  // s_k/s_1
  std::vector<bool> primitive;
  RealElement gen_scale;            // scale[half]
  std::vector<double> scale_d;
  double gen_scale_d = 0;
  bool gen_scale_closed_form = false;  // tan^2(pi/N) even, tan(pi/N) tan(pi/2N) odd
};

// Memoized; the returned table is immutable.
std::shared_ptr<const ScaleTable> scale_table(int N);

RealElement scale(int N, int k);
RealElement gen_scale(int N);
RealElement scale_swap(int N, int M);  // tan(pi/N)/tan(pi/M)

struct LambdaReport {
  int N = 0;
  RealElement lambda_n;      // 2 cos(2 pi/N)
  RealElement lambda_2n;     // 2 cos(pi/N)
  RealElement gen_scale_from_lambda;
  bool identity_holds = false;
  bool even = false;
};

// Even N: GenScale = (4 - l^2)/l^2;  odd N: GenScale = (2 - l)/l, with l = lambda_2N.
LambdaReport lambda_conversions(int N);

}  // namespace ffam
