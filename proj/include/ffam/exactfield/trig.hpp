#pragma once

#include "ffam/exactfield/field.hpp"

namespace ffam {

// is_k = (zeta_N^k - 1)/(zeta_N^k + 1) = i*tan(k*pi/N), an element of Q(zeta_N).
FieldElement i_tan_element(int N, int k);

// Real trigonometric values as elements of cyclotomic fields:
//   tan(k*pi/N)   in Q(zeta_{4N})
//   cos(2*pi*k/n) in Q(zeta_n)
//   sin(2*pi*k/n) in Q(zeta_{lcm(n,4)})
//   cos(k*pi/N)   in Q(zeta_{2N})
RealElement tan_pi(int N, int k);
RealElement cos_2pi(int n, int k = 1);
RealElement sin_2pi(int n, int k = 1);
RealElement cos_pi(int N, int k = 1);
RealElement sin_pi(int N, int k = 1);

// lambda_n = 2 cos(2 pi / n), the trace generator of Q(zeta_n)^+.
RealElement lambda(int n);

}  // namespace ffam
