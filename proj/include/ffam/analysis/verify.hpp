#pragma once

#include <string>
#include <vector>

namespace ffam {

struct ClaimResult {
  std::string id;
  std::string anchor;   // the identity being checked, in words
  bool pass = false;
  std::string lhs, rhs; // decimal renderings of the two exact sides
};

struct Report {
  std::string suite;
  std::vector<ClaimResult> claims;
  bool all_pass() const;
  const ClaimResult* first_failure() const;
  void append(const Report& other);
};

// scale[j] of N/k = scale[kj]/scale[k] of N, and scale[k] = ScaleSwap[N, N/k].
Report verify_scaling_lemma(int N, int k);
// Reversal, riffle, half-list and N/2 relations of the even-N scale list.
Report verify_even_symmetry(int N);

int independence_rank(int N);       // primitive scales over Q
int dual_independence_rank(int N);  // primitive dual scales over Q
Report verify_independence(int N);

// Primitive GenScale is a unit; GenScale of twice-odd N is not primitive.
Report verify_units(int N);

struct ComplexityProfile {
  int N = 0;
  unsigned phi = 0;
  // -1 where no independence is predicted (sine and tangent at N = 4)
  int cos_predicted = 0, cos_degree = 0;
  int sin_predicted = 0, sin_degree = 0;
  int tan2_predicted = 0, tan2_degree = 0;  // tan(2 pi/N)
  int tan_predicted = 0, tan_degree = 0;    // tan(pi/N)
  bool consistent() const;
};

ComplexityProfile complexity_profile(int N);
Report verify_complexity(int N);

// Whole suites over 3..max_n (scaling: every divisor; symmetry: even N).
Report verify_suite(const std::string& name, int max_n);

}  // namespace ffam
