#include "ffam/exactfield/linalg.hpp"

#include <stdexcept>

namespace ffam {

namespace {

// Gauss-Jordan in place on m (rows x cols); returns pivot columns.
std::vector<std::size_t> reduce(QMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < m[i].size(); ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(QMatrix m) {
  if (m.empty()) return 0;
  return reduce(m, m[0].size()).size();
}

std::optional<QVector> solve_unique(const QMatrix& a, const QVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("solve_unique: shape mismatch");
  std::size_t n = a.empty() ? 0 : a[0].size();
  QMatrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  auto piv = reduce(aug, n + 1);
  if (!piv.empty() && piv.back() == n) return std::nullopt;
  if (piv.size() < n) throw std::domain_error("solve_unique: solution not unique");
  QVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[piv[i]] = aug[i][n];
  return x;
}

std::optional<QVector> EchelonBasis::add(const QVector& v) {
  if (v.size() != dim_) throw std::invalid_argument("EchelonBasis: dimension mismatch");
  QVector w = v;
  QVector combo(rows_.size() + 1);
  combo.back() = 1;
  for (const Row& row : rows_) {
    if (w[row.pivot] == 0) continue;
    Rational f = w[row.pivot];
    for (std::size_t j = 0; j < dim_; ++j)
      if (row.v[j] != 0) w[j] -= f * row.v[j];
    for (std::size_t j = 0; j < row.combo.size(); ++j)
      if (row.combo[j] != 0) combo[j] -= f * row.combo[j];
  }
  std::size_t p = 0;
  while (p < dim_ && w[p] == 0) ++p;
  if (p == dim_) {
    QVector out(rows_.size());
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = -combo[j];
    return out;
  }
  Rational inv = 1 / w[p];
  for (auto& x : w) x *= inv;
  for (auto& x : combo) x *= inv;
  rows_.push_back({std::move(w), std::move(combo), p});
  ++added_;
  return std::nullopt;
}

}  // namespace ffam
