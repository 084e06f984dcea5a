#pragma once

#include "ffam/exactfield/rational.hpp"

#include <optional>
#include <vector>

namespace ffam {

using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>;  // row-major

std::size_t rank(QMatrix m);

// Solves A x = b. Returns nullopt when the system is inconsistent; throws
// std::domain_error when the solution is not unique.
std::optional<QVector> solve_unique(const QMatrix& a, const QVector& b);

// Incremental row-echelon basis. add() reports whether the vector was
// independent of everything added before; when it was not, the exact
// combination of earlier vectors reproducing it is returned.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}
  // Returns empty optional if independent (and stores it), otherwise the
  // coefficients c_0..c_{m-1} over previously added vectors.
  std::optional<QVector> add(const QVector& v);
  std::size_t size() const { return rows_.size(); }

 private:
  struct Row {
    QVector v;      // reduced vector, pivot entry normalized to 1
    QVector combo;  // v = sum combo[i] * input_i
    std::size_t pivot;
  };
  std::size_t dim_;
  std::size_t added_ = 0;
  std::vector<Row> rows_;
};

}  // namespace ffam
