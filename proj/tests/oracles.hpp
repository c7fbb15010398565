// Independent cross-check implementations used only by the tests.  Each oracle
// recomputes a quantity by a different algorithm than the library uses, so a
// shared bug would have to be made twice.
#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include <cyclecones/rational.hpp>

namespace oracles {

using cyclecones::Int;
using cyclecones::IntVec;
using cyclecones::Rat;
using cyclecones::RatVec;
using cyclecones::toRatVec;

// --- Membership test via Gaussian elimination + Fourier-Motzkin -----------
//
// v lies in cone(rays) iff the system
//   sum_i t_i * rays[i] = v,  t_i >= 0
// is feasible.  The equalities are dense, so eliminating all of t directly
// blows up; instead solve the equality system first (own tiny Gaussian
// elimination, nothing shared with the library), parametrize t = t0 + N y,
// and run Fourier-Motzkin only on the small inequality system t0 + N y >= 0.
// Rows are kept primitive and deduplicated to tame intermediate growth.
// Callers keep ray counts small (<= 8) and dimensions <= 4.

// Reduces each row to a primitive integer vector with positive leading entry
// preserved in sign (scaling an inequality by a positive rational is free).
inline IntVec primitiveRow(const RatVec& row) {
  Int scale(1);
  for (const Rat& x : row) scale = boost::multiprecision::lcm(scale, denominator(x));
  IntVec out;
  for (const Rat& x : row) out.push_back(numerator(x) * (scale / denominator(x)));
  Int g(0);
  for (const Int& x : out) g = boost::multiprecision::gcd(g, x);
  if (g > 1)
    for (Int& x : out) x /= g;
  return out;
}

// Feasibility of { y : rows * (y | 1) >= 0 } by eliminating every variable.
// Each row is (a_1 .. a_q | c), meaning a . y + c >= 0.
inline bool fourierMotzkinFeasible(std::vector<RatVec> rows, std::size_t vars) {
  for (std::size_t k = 0; k < vars; ++k) {
    std::vector<RatVec> pos, neg;
    std::set<IntVec> kept;
    std::vector<RatVec> next;
    auto keep = [&](const RatVec& row) {
      const IntVec key = primitiveRow(row);
      bool allZeroVars = true;
      for (std::size_t j = 0; j < vars; ++j) allZeroVars &= key[j] == 0;
      if (allZeroVars && key[vars] >= 0) return true;   // trivially satisfied
      if (allZeroVars && key[vars] < 0) return false;   // infeasible constant
      if (kept.insert(key).second) next.push_back(toRatVec(key));
      return true;
    };
    for (const RatVec& row : rows) {
      if (row[k] > 0)
        pos.push_back(row);
      else if (row[k] < 0)
        neg.push_back(row);
      else if (!keep(row))
        return false;
    }
    for (const RatVec& p : pos)
      for (const RatVec& n : neg) {
        RatVec comb(p.size());
        for (std::size_t j = 0; j < comb.size(); ++j) comb[j] = p[j] * (-n[k]) + n[j] * p[k];
        if (!keep(comb)) return false;
      }
    rows = std::move(next);
  }
  return std::all_of(rows.begin(), rows.end(),
                     [&](const RatVec& row) { return row[vars] >= 0; });
}

// True iff v is a nonnegative combination of the rays.
inline bool fourierMotzkinMember(const std::vector<IntVec>& rays, const IntVec& v) {
  const std::size_t m = rays.size();
  const std::size_t dim = v.size();
  if (m == 0) return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });

  // Row-reduce (R | v) where column i of R is rays[i].
  std::vector<RatVec> aug(dim, RatVec(m + 1, Rat(0)));
  for (std::size_t c = 0; c < dim; ++c) {
    for (std::size_t i = 0; i < m; ++i) aug[c][i] = Rat(rays[i][c]);
    aug[c][m] = Rat(v[c]);
  }
  std::vector<std::size_t> pivotOfRow;
  std::size_t rrow = 0;
  for (std::size_t col = 0; col < m && rrow < dim; ++col) {
    std::size_t sel = rrow;
    while (sel < dim && aug[sel][col] == 0) ++sel;
    if (sel == dim) continue;
    std::swap(aug[rrow], aug[sel]);
    const Rat inv = Rat(1) / aug[rrow][col];
    for (auto& x : aug[rrow]) x *= inv;
    for (std::size_t rw = 0; rw < dim; ++rw) {
      if (rw == rrow || aug[rw][col] == 0) continue;
      const Rat f = aug[rw][col];
      for (std::size_t j = 0; j <= m; ++j) aug[rw][j] -= f * aug[rrow][j];
    }
    pivotOfRow.push_back(col);
    ++rrow;
  }
  for (std::size_t rw = rrow; rw < dim; ++rw)
    if (aug[rw][m] != 0) return false;  // v outside the linear span

  // Particular solution: pivot variables take the constant column, free
  // variables are parameters y.  t = t0 + N y with one column of N per free
  // variable.
  std::vector<bool> isPivot(m, false);
  for (std::size_t col : pivotOfRow) isPivot[col] = true;
  std::vector<std::size_t> freeCols;
  for (std::size_t col = 0; col < m; ++col)
    if (!isPivot[col]) freeCols.push_back(col);

  RatVec t0(m, Rat(0));
  for (std::size_t rw = 0; rw < pivotOfRow.size(); ++rw) t0[pivotOfRow[rw]] = aug[rw][m];
  std::vector<RatVec> N(m, RatVec(freeCols.size(), Rat(0)));
  for (std::size_t q = 0; q < freeCols.size(); ++q) {
    N[freeCols[q]][q] = Rat(1);
    for (std::size_t rw = 0; rw < pivotOfRow.size(); ++rw)
      N[pivotOfRow[rw]][q] = -aug[rw][freeCols[q]];
  }

  // Feasibility of t0 + N y >= 0 componentwise.
  std::vector<RatVec> rows;
  for (std::size_t i = 0; i < m; ++i) {
    RatVec row(freeCols.size() + 1, Rat(0));
    for (std::size_t q = 0; q < freeCols.size(); ++q) row[q] = N[i][q];
    row[freeCols.size()] = t0[i];
    rows.push_back(std::move(row));
  }
  return fourierMotzkinFeasible(std::move(rows), freeCols.size());
}

// --- Self-intersection of a divisor class by direct expansion -------------
//
// (aH - sum_i b_i E_i - sum_j c_j e_j)^n has only four surviving monomial
// shapes: H^n, H E_i^{n-1}, E_i^n, e_j^n.  Plugging in the four top numbers
// (1, (-1)^n, (-1)^n (n-1), (-1)^{n-1}) and simplifying signs gives
//   a^n - n a sum b_i^{n-1} + (n-1) sum b_i^n - sum c_j^n .
inline Int divisorPower(unsigned n, const Int& a, const std::vector<Int>& b,
                        const std::vector<Int>& c) {
  auto ipow = [](const Int& x, unsigned e) {
    Int acc(1);
    for (unsigned i = 0; i < e; ++i) acc *= x;
    return acc;
  };
  Int total = ipow(a, n);
  for (const Int& bi : b) total += -Int(n) * a * ipow(bi, n - 1) + Int(n - 1) * ipow(bi, n);
  for (const Int& cj : c) total -= ipow(cj, n);
  return total;
}

// --- Degree of the Grassmannian of projective a-planes in P^n -------------
//
// The classical factorial formula for the degree of G(a, n) in its Pluecker
// embedding, independent of any Pieri computation:
//   deg = ((a+1)(n-a))! * prod_{i=0..a} i! / (n-a+i)!
inline Int grassmannianDegree(unsigned a, unsigned n) {
  auto fact = [](unsigned m) {
    Int acc(1);
    for (unsigned i = 2; i <= m; ++i) acc *= i;
    return acc;
  };
  const unsigned dim = (a + 1) * (n - a);
  Int num = fact(dim);
  Int den(1);
  for (unsigned i = 0; i <= a; ++i) {
    num *= fact(i);
    den *= fact(n - a + i);
  }
  return num / den;
}

// --- Small deterministic RNG helpers ---------------------------------------
inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline Int randomInt(std::mt19937_64& gen, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  return Int(d(gen));
}

inline IntVec randomVec(std::mt19937_64& gen, std::size_t dim, int lo, int hi) {
  IntVec v(dim);
  for (auto& x : v) x = randomInt(gen, lo, hi);
  return v;
}

}  // namespace oracles
