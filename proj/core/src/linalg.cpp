#include "cyclecones/linalg.hpp"

#include <stdexcept>

namespace cyclecones {

RatMatrix transpose(const RatMatrix& m) {
  if (m.empty()) return {};
  RatMatrix out(m[0].size(), RatVec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) out[j][i] = m[i][j];
  }
  return out;
}

RatVec matVec(const RatMatrix& m, const RatVec& v) {
  RatVec out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = dot(m[i], v);
  return out;
}

namespace {

// Gauss-Jordan elimination over the rationals; returns the column index of
// the pivot chosen for each eliminated row.
std::size_t forwardEliminate(RatMatrix& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::size_t rk = 0;
  for (std::size_t col = 0; col < cols && rk < rows; ++col) {
    std::size_t pivot = rk;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rk], m[pivot]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rk || m[i][col] == 0) continue;
      const Rat f = m[i][col] / m[rk][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[rk][j];
    }
    ++rk;
  }
  return rk;
}

}  // namespace

std::size_t rank(RatMatrix m) { return forwardEliminate(m); }

Rat determinant(RatMatrix m) {
  const std::size_t nn = m.size();
  if (nn == 0) return 1;
  if (m[0].size() != nn) throw std::invalid_argument("determinant: matrix not square");
  Rat det = 1;
  for (std::size_t col = 0; col < nn; ++col) {
    std::size_t pivot = col;
    while (pivot < nn && m[pivot][col] == 0) ++pivot;
    if (pivot == nn) return 0;
    if (pivot != col) {
      std::swap(m[col], m[pivot]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t i = col + 1; i < nn; ++i) {
      if (m[i][col] == 0) continue;
      const Rat f = m[i][col] / m[col][col];
      for (std::size_t j = col; j < nn; ++j) m[i][j] -= f * m[col][j];
    }
  }
  return det;
}

std::optional<RatVec> solveLinear(RatMatrix a, RatVec b) {
  const std::size_t rows = a.size();
  if (rows == 0) return RatVec{};
  const std::size_t cols = a[0].size();
  if (b.size() != rows) throw std::invalid_argument("solveLinear: rhs size mismatch");
  for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);

  std::vector<std::size_t> pivotCol;
  std::size_t rk = 0;
  for (std::size_t col = 0; col < cols && rk < rows; ++col) {
    std::size_t pivot = rk;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[rk], a[pivot]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rk || a[i][col] == 0) continue;
      const Rat f = a[i][col] / a[rk][col];
      for (std::size_t j = col; j <= cols; ++j) a[i][j] -= f * a[rk][j];
    }
    pivotCol.push_back(col);
    ++rk;
  }
  for (std::size_t i = rk; i < rows; ++i) {
    if (a[i][cols] != 0) return std::nullopt;  // inconsistent
  }
  RatVec x(cols, Rat(0));
  for (std::size_t i = 0; i < rk; ++i) x[pivotCol[i]] = a[i][cols] / a[i][pivotCol[i]];
  return x;
}

}  // namespace cyclecones
