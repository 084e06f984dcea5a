#pragma once

#include "ffam/dynamics/outer_billiards.hpp"
#include "ffam/family/family.hpp"

namespace ffam {

// Exact tau on points with coordinates in a cyclotomic field containing the
// vertices of the standard N-gon.
class ExactOuterBilliards {
 public:
  explicit ExactOuterBilliards(int N);
  int N() const { return N_; }
  unsigned field() const { return L_; }
  const std::vector<ExactPoint>& vertices() const { return v_; }
  ExactPoint tau(const ExactPoint& p, int* vertex = nullptr) const;

 private:
  int N_;
  unsigned L_;
  std::vector<ExactPoint> v_;
  OuterBilliards fl_;
};

struct ExactOrbitResult {
  std::optional<long> period;
  std::vector<ExactPoint> points;
  std::vector<int> signature;
};

ExactOrbitResult exact_orbit(const ExactPoint& p, const ExactOuterBilliards& ob, long max_iter);

}  // namespace ffam
