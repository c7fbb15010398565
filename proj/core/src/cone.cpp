#include "cyclecones/cone.hpp"

#include "cyclecones/simplex.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cyclecones {

namespace {

// Orientation for sign-ambiguous vectors (lineality basis, facet normals):
// positive against the first coordinate axis — the hyperplane-power slot in
// every basis used here — falling back to first-nonzero-positive.
template <typename Vec>
void orientVector(Vec& v) {
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : v) y = -y;
    return;
  }
}

std::vector<IntVec> reduceBasis(std::size_t dim, const std::vector<IntVec>& vectors) {
  RatMatrix m;
  for (const IntVec& v : vectors) {
    if (v.size() != dim) throw std::invalid_argument("reduceBasis: dimension mismatch");
    m.push_back(toRatVec(v));
  }
  // Row echelon; nonzero rows form the reduced basis.
  std::size_t rk = 0;
  for (std::size_t col = 0; col < dim && rk < m.size(); ++col) {
    std::size_t pivot = rk;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rk], m[pivot]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == rk || m[i][col] == 0) continue;
      const Rat f = m[i][col] / m[rk][col];
      for (std::size_t j = col; j < dim; ++j) m[i][j] -= f * m[rk][j];
    }
    ++rk;
  }
  std::vector<IntVec> out;
  for (std::size_t i = 0; i < rk; ++i) {
    IntVec v = primitiveVector(m[i]);
    orientVector(v);
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct WorkRay {
  RatVec v;
  std::vector<bool> tight;  // per inserted inequality
};

struct DDState {
  std::vector<WorkRay> rays;
  std::vector<RatVec> lineality;
  std::size_t inserted = 0;  // inequalities processed so far
};

// Rescale a vector to its primitive integer representative.  Rays and
// lineality directions are only meaningful up to positive scale, and without
// this reduction the pairwise combinations below grow multiplicatively in
// coefficient size, which stalls dense inputs.
void rescalePrimitive(RatVec& v) {
  const IntVec p = primitiveVector(v);
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = Rat(p[k]);
}

// Intersect the current cone with {x : b . x = 0}.  Rays are empty at the
// time equalities are processed, so either some lineality vector pivots the
// constraint away or the equality is already implied.
void insertEquality(DDState& st, const RatVec& b) {
  std::size_t piv = st.lineality.size();
  for (std::size_t i = 0; i < st.lineality.size(); ++i) {
    if (dot(b, st.lineality[i]) != 0) {
      piv = i;
      break;
    }
  }
  if (piv == st.lineality.size()) return;
  const RatVec u = st.lineality[piv];
  const Rat bu = dot(b, u);
  st.lineality.erase(st.lineality.begin() + static_cast<std::ptrdiff_t>(piv));
  for (RatVec& l : st.lineality) {
    const Rat f = dot(b, l) / bu;
    for (std::size_t k = 0; k < l.size(); ++k) l[k] -= f * u[k];
    rescalePrimitive(l);
  }
  for (WorkRay& r : st.rays) {
    const Rat f = dot(b, r.v) / bu;
    for (std::size_t k = 0; k < r.v.size(); ++k) r.v[k] -= f * u[k];
    rescalePrimitive(r.v);
  }
}

// Intersect with {x : a . x >= 0}, index `idx` in the global inequality list.
void insertInequality(DDState& st, const RatVec& a, std::size_t idx, std::size_t totalIneq) {
  // Lineality pivot: consume one free direction into a boundary ray.
  for (std::size_t i = 0; i < st.lineality.size(); ++i) {
    const Rat au = dot(a, st.lineality[i]);
    if (au == 0) continue;
    RatVec u = st.lineality[i];
    for (Rat& x : u) x /= au;  // a . u = 1
    st.lineality.erase(st.lineality.begin() + static_cast<std::ptrdiff_t>(i));
    for (RatVec& l : st.lineality) {
      const Rat f = dot(a, l);
      for (std::size_t k = 0; k < l.size(); ++k) l[k] -= f * u[k];
      rescalePrimitive(l);
    }
    for (WorkRay& r : st.rays) {
      const Rat f = dot(a, r.v);
      for (std::size_t k = 0; k < r.v.size(); ++k) r.v[k] -= f * u[k];
      rescalePrimitive(r.v);
      r.tight[idx] = true;  // projected onto the boundary
    }
    rescalePrimitive(u);  // a . u = 1 no longer needed once projections are done
    WorkRay nr;
    nr.v = std::move(u);
    nr.tight.assign(totalIneq, false);
    for (std::size_t j = 0; j < idx; ++j) nr.tight[j] = true;  // orthogonal to all previous
    st.rays.push_back(std::move(nr));
    st.inserted = idx + 1;
    return;
  }

  std::vector<std::size_t> pos, neg;
  std::vector<Rat> val(st.rays.size());
  for (std::size_t i = 0; i < st.rays.size(); ++i) {
    val[i] = dot(a, st.rays[i].v);
    if (val[i] > 0) pos.push_back(i);
    if (val[i] < 0) neg.push_back(i);
  }

  const auto adjacent = [&](std::size_t p, std::size_t q) {
    std::vector<bool> both(idx, false);
    for (std::size_t j = 0; j < idx; ++j) both[j] = st.rays[p].tight[j] && st.rays[q].tight[j];
    for (std::size_t r = 0; r < st.rays.size(); ++r) {
      if (r == p || r == q) continue;
      bool contains = true;
      for (std::size_t j = 0; j < idx && contains; ++j)
        if (both[j] && !st.rays[r].tight[j]) contains = false;
      if (contains) return false;
    }
    return true;
  };

  std::vector<WorkRay> next;
  for (std::size_t i = 0; i < st.rays.size(); ++i) {
    if (val[i] < 0) continue;
    WorkRay r = st.rays[i];
    if (val[i] == 0) r.tight[idx] = true;
    next.push_back(std::move(r));
  }
  for (std::size_t p : pos) {
    for (std::size_t q : neg) {
      if (!adjacent(p, q)) continue;
      WorkRay nr;
      nr.v.resize(st.rays[p].v.size());
      for (std::size_t k = 0; k < nr.v.size(); ++k)
        nr.v[k] = val[p] * st.rays[q].v[k] - val[q] * st.rays[p].v[k];
      rescalePrimitive(nr.v);
      nr.tight.assign(totalIneq, false);
      for (std::size_t j = 0; j < idx; ++j)
        nr.tight[j] = st.rays[p].tight[j] && st.rays[q].tight[j];
      nr.tight[idx] = true;
      next.push_back(std::move(nr));
    }
  }
  st.rays = std::move(next);
  st.inserted = idx + 1;
}

// V-description of {x : a . x >= 0 for a in ineq, b . x = 0 for b in eq}.
DDState doubleDescription(std::size_t dim, const std::vector<RatVec>& ineq,
                          const std::vector<RatVec>& eq) {
  DDState st;
  st.lineality.assign(dim, RatVec(dim, Rat(0)));
  for (std::size_t i = 0; i < dim; ++i) st.lineality[i][i] = 1;
  for (const RatVec& b : eq) insertEquality(st, b);
  for (std::size_t idx = 0; idx < ineq.size(); ++idx)
    insertInequality(st, ineq[idx], idx, ineq.size());
  return st;
}

std::optional<IntVec> nonnegIntegerCombination(const IntVec& diff,
                                               const std::vector<IntVec>& shifts) {
  for (const IntVec& s : shifts) {
    bool nonzero = false;
    for (const Int& x : s) {
      if (x < 0)
        throw std::invalid_argument("shift rays must be componentwise nonnegative");
      if (x != 0) nonzero = true;
    }
    if (!nonzero) throw std::invalid_argument("shift rays must be nonzero");
  }
  IntVec rem = diff;
  IntVec coeffs(shifts.size(), Int(0));
  const auto search = [&](auto&& self, std::size_t pos) -> bool {
    bool zero = true, negative = false;
    for (const Int& x : rem) {
      if (x != 0) zero = false;
      if (x < 0) negative = true;
    }
    if (zero) return true;
    if (negative || pos == shifts.size()) return false;
    // Cap from the coordinates this shift actually moves.
    Int cap = -1;
    for (std::size_t k = 0; k < rem.size(); ++k) {
      if (shifts[pos][k] == 0) continue;
      const Int q = rem[k] / shifts[pos][k];
      if (cap < 0 || q < cap) cap = q;
    }
    if (cap < 0) return false;
    for (Int c = cap; c >= 0; --c) {
      coeffs[pos] = c;
      for (std::size_t k = 0; k < rem.size(); ++k) rem[k] = diff[k];
      // Recompute remainder from scratch for the prefix choices.
      for (std::size_t p2 = 0; p2 <= pos; ++p2)
        for (std::size_t k = 0; k < rem.size(); ++k) rem[k] -= coeffs[p2] * shifts[p2][k];
      if (self(self, pos + 1)) return true;
    }
    coeffs[pos] = 0;
    return false;
  };
  for (const Int& x : rem)
    if (x < 0) return std::nullopt;
  if (search(search, 0)) return coeffs;
  return std::nullopt;
}

MembershipResult runMembership(const RatVec& v, const RayCone& c) {
  if (v.size() != c.ambientDim) throw std::invalid_argument("membership: dimension mismatch");
  std::vector<RatVec> gens, lines;
  gens.reserve(c.rays.size());
  for (const IntVec& r : c.rays) gens.push_back(toRatVec(r));
  for (const IntVec& l : c.lineality) lines.push_back(toRatVec(l));
  const ConicSolveResult res = solveConicCombination(gens, lines, v);
  MembershipResult out;
  out.inside = res.feasible;
  if (res.feasible) {
    for (std::size_t i = 0; i < res.lambda.size(); ++i)
      if (res.lambda[i] != 0) out.combination[i] = res.lambda[i];
    for (std::size_t j = 0; j < res.mu.size(); ++j)
      if (res.mu[j] != 0) out.linealityPart[j] = res.mu[j];
  } else {
    out.separator = res.separator;
  }
  return out;
}

}  // namespace

RayCone makeCone(std::size_t ambientDim, const std::vector<IntVec>& rays,
                 std::optional<RatMatrix> pairing, const std::vector<IntVec>& lineality) {
  if (pairing) {
    if (pairing->size() != ambientDim)
      throw std::invalid_argument("makeCone: pairing dimension mismatch");
    for (const RatVec& row : *pairing)
      if (row.size() != ambientDim)
        throw std::invalid_argument("makeCone: pairing dimension mismatch");
  }
  RayCone c;
  c.ambientDim = ambientDim;
  c.pairing = std::move(pairing);
  std::set<IntVec> seen;
  for (const IntVec& r : rays) {
    if (r.size() != ambientDim) throw std::invalid_argument("makeCone: ray dimension mismatch");
    IntVec p = primitiveVector(r);
    bool zero = true;
    for (const Int& x : p)
      if (x != 0) zero = false;
    if (!zero) seen.insert(std::move(p));
  }
  c.rays.assign(seen.begin(), seen.end());
  c.lineality = reduceBasis(ambientDim, lineality);
  return c;
}

RayCone dualCone(const RayCone& c) {
  const std::size_t dim = c.ambientDim;
  const auto applyPairing = [&](const IntVec& v) {
    RatVec rv = toRatVec(v);
    if (!c.pairing) return rv;
    return matVec(*c.pairing, rv);
  };

  std::vector<RatVec> ineq, eq;
  std::set<RatVec> seenIneq;
  for (const IntVec& r : c.rays) {
    RatVec a = toRatVec(primitiveVector(applyPairing(r)));
    bool zero = true;
    for (const Rat& x : a)
      if (x != 0) zero = false;
    if (!zero && seenIneq.insert(a).second) ineq.push_back(std::move(a));
  }
  for (const IntVec& l : c.lineality) eq.push_back(applyPairing(l));

  const DDState st = doubleDescription(dim, ineq, eq);

  std::vector<IntVec> rays;
  rays.reserve(st.rays.size());
  for (const WorkRay& r : st.rays) rays.push_back(primitiveVector(r.v));
  std::vector<IntVec> lineality;
  lineality.reserve(st.lineality.size());
  for (const RatVec& l : st.lineality) lineality.push_back(primitiveVector(l));

  std::optional<RatMatrix> dualPairing;
  if (c.pairing) dualPairing = transpose(*c.pairing);
  RayCone out = makeCone(dim, rays, std::move(dualPairing), lineality);

  std::set<IntVec> facets;
  for (const RatVec& a : ineq) facets.insert(primitiveVector(a));
  for (const RatVec& b : eq) {
    IntVec f = primitiveVector(b);
    bool zero = true;
    for (const Int& x : f)
      if (x != 0) zero = false;
    if (zero) continue;
    IntVec g = f;
    for (Int& x : g) x = -x;
    facets.insert(std::move(f));
    facets.insert(std::move(g));
  }
  out.facets = std::vector<IntVec>(facets.begin(), facets.end());
  return out;
}

MembershipResult membership(const RatVec& v, const RayCone& c) { return runMembership(v, c); }

MembershipResult membership(const IntVec& v, const RayCone& c) {
  return runMembership(toRatVec(v), c);
}

RayCone extremeRays(const RayCone& c) {
  std::vector<IntVec> kept = c.rays;
  std::vector<RatVec> lines;
  for (const IntVec& l : c.lineality) lines.push_back(toRatVec(l));
  for (std::size_t i = 0; i < kept.size();) {
    std::vector<RatVec> others;
    others.reserve(kept.size() - 1);
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.push_back(toRatVec(kept[j]));
    if (solveConicCombination(others, lines, toRatVec(kept[i])).feasible)
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
    else
      ++i;
  }
  return makeCone(c.ambientDim, kept, c.pairing, c.lineality);
}

bool coneContains(const RayCone& outer, const RayCone& inner) {
  if (outer.ambientDim != inner.ambientDim) return false;
  for (const IntVec& r : inner.rays)
    if (!membership(r, outer).inside) return false;
  for (const IntVec& l : inner.lineality) {
    if (!membership(l, outer).inside) return false;
    IntVec m = l;
    for (Int& x : m) x = -x;
    if (!membership(m, outer).inside) return false;
  }
  return true;
}

bool coneEquals(const RayCone& a, const RayCone& b) {
  return coneContains(a, b) && coneContains(b, a);
}

bool decompositionCheck(const RatVec& target, const std::vector<RatVec>& parts) {
  RatVec sum(target.size(), Rat(0));
  for (const RatVec& p : parts) {
    if (p.size() != target.size()) return false;
    for (std::size_t k = 0; k < p.size(); ++k) sum[k] += p[k];
  }
  return sum == target;
}

std::optional<IntVec> shiftCertificate(const IntVec& beta, const IntVec& alpha,
                                       const std::vector<IntVec>& shiftRays,
                                       const RayCone& cone) {
  if (beta.size() != alpha.size())
    throw std::invalid_argument("shiftCertificate: dimension mismatch");
  IntVec diff(beta.size());
  for (std::size_t k = 0; k < beta.size(); ++k) diff[k] = beta[k] - alpha[k];
  auto coeffs = nonnegIntegerCombination(diff, shiftRays);
  if (!coeffs) return std::nullopt;
  if (!membership(beta, cone).inside) return std::nullopt;
  return coeffs;
}

std::vector<IntVec> maximallyIncidentReduce(const std::vector<IntVec>& rays,
                                            const std::vector<IntVec>& shiftRays) {
  std::set<IntVec> unique(rays.begin(), rays.end());
  std::vector<IntVec> list(unique.begin(), unique.end());
  std::vector<IntVec> minimal;
  for (const IntVec& y : list) {
    bool reachable = false;
    for (const IntVec& x : list) {
      if (x == y) continue;
      IntVec diff(y.size());
      for (std::size_t k = 0; k < y.size(); ++k) diff[k] = y[k] - x[k];
      if (nonnegIntegerCombination(diff, shiftRays)) {
        reachable = true;
        break;
      }
    }
    if (!reachable) minimal.push_back(y);
  }
  return minimal;
}

}  // namespace cyclecones
