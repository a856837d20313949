#include "qh/linalg.hpp"

#include <stdexcept>

namespace qh {

std::vector<int> rref(RatMat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rational inv = m[r][c].inverse();
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Rational f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

RatMat left_kernel(const RatMat& m) {
  if (m.empty()) return {};
  std::size_t rows = m.size(), cols = m[0].size();
  // Row-reduce [m | I]; kernel rows are those whose m-part vanished.
  RatMat aug(rows, RatVec(cols + rows, 0));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug[i][j] = m[i][j];
    aug[i][cols + i] = 1;
  }
  rref(aug);
  RatMat kernel;
  for (std::size_t i = 0; i < rows; ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < cols && zero; ++j) zero = aug[i][j].is_zero();
    if (zero) {
      bool allzero = true;
      for (std::size_t j = cols; j < cols + rows && allzero; ++j) allzero = aug[i][j].is_zero();
      if (allzero) continue;
      kernel.emplace_back(aug[i].begin() + cols, aug[i].end());
    }
  }
  // Echelonize the kernel itself for a canonical basis.
  rref(kernel);
  return kernel;
}

std::optional<RatVec> solve_left(const RatMat& m, const RatVec& rhs) {
  if (m.empty()) return std::nullopt;
  std::size_t rows = m.size(), cols = m[0].size();
  if (rhs.size() != cols) throw std::invalid_argument("solve_left: size mismatch");
  // Solve m^T y = rhs^T by reducing [m^T | rhs].
  RatMat aug(cols, RatVec(rows + 1, 0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) aug[j][i] = m[i][j];
  for (std::size_t j = 0; j < cols; ++j) aug[j][rows] = rhs[j];
  auto pivots = rref(aug);
  RatVec x(rows, 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == static_cast<int>(rows)) return std::nullopt;  // inconsistent
    x[pivots[i]] = aug[i][rows];
  }
  return x;
}

int rank(RatMat m) { return static_cast<int>(rref(m).size()); }

Rational determinant(RatMat m) {
  std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant: not square");
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    Rational inv = m[c][c].inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c].is_zero()) continue;
      Rational f = m[i][c] * inv;
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

}  // namespace qh
