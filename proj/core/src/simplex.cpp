#include "cyclecones/simplex.hpp"

#include <stdexcept>

namespace cyclecones {

namespace {

void verifyResult(const std::vector<RatVec>& generators, const std::vector<RatVec>& lines,
                  const RatVec& target, const ConicSolveResult& res) {
  const std::size_t dim = target.size();
  if (res.feasible) {
    RatVec sum(dim, Rat(0));
    for (std::size_t i = 0; i < generators.size(); ++i) {
      if (res.lambda[i] < 0) throw std::logic_error("solveConicCombination: negative multiplier");
      for (std::size_t k = 0; k < dim; ++k) sum[k] += res.lambda[i] * generators[i][k];
    }
    for (std::size_t j = 0; j < lines.size(); ++j)
      for (std::size_t k = 0; k < dim; ++k) sum[k] += res.mu[j] * lines[j][k];
    if (sum != target) throw std::logic_error("solveConicCombination: combination check failed");
  } else {
    for (const RatVec& g : generators)
      if (dot(res.separator, g) < 0)
        throw std::logic_error("solveConicCombination: separator not nonnegative on generators");
    for (const RatVec& l : lines)
      if (dot(res.separator, l) != 0)
        throw std::logic_error("solveConicCombination: separator not zero on lines");
    if (dot(res.separator, target) >= 0)
      throw std::logic_error("solveConicCombination: separator does not cut off target");
  }
}

}  // namespace

ConicSolveResult solveConicCombination(const std::vector<RatVec>& generators,
                                       const std::vector<RatVec>& lines, const RatVec& target) {
  const std::size_t m = target.size();
  for (const RatVec& g : generators)
    if (g.size() != m) throw std::invalid_argument("solveConicCombination: dimension mismatch");
  for (const RatVec& l : lines)
    if (l.size() != m) throw std::invalid_argument("solveConicCombination: dimension mismatch");

  const std::size_t ng = generators.size();
  const std::size_t nl = lines.size();
  const std::size_t nReal = ng + 2 * nl;  // free mu split into mu+ - mu-
  const std::size_t nCols = nReal + m;    // plus one artificial per row

  // Tableau rows: [real columns | artificial columns | rhs], rhs >= 0 after
  // flipping row signs.  rowSign remembers the flip for the Farkas read-off.
  std::vector<RatVec> t(m, RatVec(nCols + 1, Rat(0)));
  std::vector<int> rowSign(m, 1);
  for (std::size_t i = 0; i < m; ++i) {
    if (target[i] < 0) rowSign[i] = -1;
    const Rat s(rowSign[i]);
    for (std::size_t j = 0; j < ng; ++j) t[i][j] = s * generators[j][i];
    for (std::size_t j = 0; j < nl; ++j) {
      t[i][ng + j] = s * lines[j][i];
      t[i][ng + nl + j] = -s * lines[j][i];
    }
    t[i][nReal + i] = 1;
    t[i][nCols] = s * target[i];
  }

  // Phase-1 objective: minimize the sum of artificials.  objRow holds the
  // reduced costs, objVal the current (nonnegative) objective value.
  std::vector<std::size_t> basis(m);
  RatVec objRow(nCols, Rat(0));
  Rat objVal = 0;
  for (std::size_t i = 0; i < m; ++i) {
    basis[i] = nReal + i;
    for (std::size_t j = 0; j < nReal; ++j) objRow[j] -= t[i][j];
    objVal += t[i][nCols];
  }

  for (;;) {
    // Bland: entering column = lowest index with negative reduced cost.
    std::size_t enter = nCols;
    for (std::size_t j = 0; j < nCols; ++j) {
      if (objRow[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == nCols) break;

    std::size_t leave = m;
    Rat bestRatio = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      const Rat ratio = t[i][nCols] / t[i][enter];
      if (leave == m || ratio < bestRatio ||
          (ratio == bestRatio && basis[i] < basis[leave])) {
        leave = i;
        bestRatio = ratio;
      }
    }
    if (leave == m)
      throw std::logic_error("solveConicCombination: phase-1 objective unbounded");

    const Rat pivot = t[leave][enter];
    for (std::size_t j = 0; j <= nCols; ++j) t[leave][j] /= pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rat f = t[i][enter];
      for (std::size_t j = 0; j <= nCols; ++j) t[i][j] -= f * t[leave][j];
    }
    const Rat f = objRow[enter];
    if (f != 0) {
      for (std::size_t j = 0; j < nCols; ++j) objRow[j] -= f * t[leave][j];
      objVal += f * t[leave][nCols];
    }
    basis[leave] = enter;
  }

  ConicSolveResult res;
  if (objVal == 0) {
    res.feasible = true;
    RatVec x(nReal, Rat(0));
    for (std::size_t i = 0; i < m; ++i)
      if (basis[i] < nReal) x[basis[i]] = t[i][nCols];
    res.lambda.assign(x.begin(), x.begin() + ng);
    res.mu.resize(nl);
    for (std::size_t j = 0; j < nl; ++j) res.mu[j] = x[ng + j] - x[ng + nl + j];
  } else {
    // Duals from the artificial columns: y_i = 1 - reducedCost(a_i); then
    // y^T A <= 0 and y^T b > 0, so -y (sign-unflipped) separates.
    res.feasible = false;
    res.separator.resize(m);
    for (std::size_t i = 0; i < m; ++i)
      res.separator[i] = Rat(-rowSign[i]) * (Rat(1) - objRow[nReal + i]);
  }
  verifyResult(generators, lines, target, res);
  return res;
}

}  // namespace cyclecones
