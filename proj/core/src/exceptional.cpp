#include "cyclecones/exceptional.hpp"

#include "cyclecones/linalg.hpp"
#include "cyclecones/monomial.hpp"

#include <stdexcept>

namespace cyclecones {

namespace {

// Class on the blowup of the cycle z inside an exceptional divisor D, given
// the codimension-(n-1-d) restriction polynomial written as the X-class
// `restricted` (so z = restricted|_D).  The class is pinned by the perfect
// pairing: <[z], w> = deg_X(D * restricted * w) for every w of codimension d;
// we assemble those numbers and solve the pairing system.
GradedClass solveFromRestriction(const SpaceSignature& X, const GradedClass& divisor,
                                 const GradedClass& restricted, int d) {
  const int n = X.n;
  const auto testBasis = canonicalBasis(X, d);
  const GradedClass carrier = multiply(divisor, restricted);  // degree n-d
  RatVec t(testBasis.size());
  for (std::size_t j = 0; j < testBasis.size(); ++j)
    t[j] = pair(carrier, GradedClass::monomial(X, testBasis[j]));

  const RatMatrix m = transpose(pairingMatrix(X, n - d));
  const auto x = solveLinear(m, t);
  if (!x || rank(m) != m.size())
    throw std::logic_error("solveFromRestriction: pairing system not uniquely solvable");
  return GradedClass::fromCoords(X, n - d, *x);
}

}  // namespace

GradedClass fiberSliceCycle(const SpaceSignature& X, int i, int d, int rulingShift) {
  const int n = X.n;
  if (i < 1 || i > X.r) throw std::invalid_argument("fiberSliceCycle: line index out of range");
  if (d < 0 || d > n - 2) throw std::invalid_argument("fiberSliceCycle: dimension out of range");
  const GradedClass E = GradedClass::monomial(X, CanonicalMonomial::linePure(i, 1));
  const GradedClass H = GradedClass::hyperplanePower(X, 1);
  // u = H|_E; the shifted ruling class v + c*u restricts from (1+c)H - E.
  const GradedClass vc = Rat(1 + rulingShift) * H - E;
  const GradedClass restricted = multiply(H, power(vc, n - 2 - d));
  return solveFromRestriction(X, E, restricted, d);
}

GradedClass sweepCycle(const SpaceSignature& X, int i, int d, int rulingShift) {
  const int n = X.n;
  if (i < 1 || i > X.r) throw std::invalid_argument("sweepCycle: line index out of range");
  if (d < 1 || d > n - 1) throw std::invalid_argument("sweepCycle: dimension out of range");
  const GradedClass E = GradedClass::monomial(X, CanonicalMonomial::linePure(i, 1));
  const GradedClass H = GradedClass::hyperplanePower(X, 1);
  // The sweep uses the unshifted ruling class v = (v + c*u) - c*u regardless
  // of the splitting in play.
  const GradedClass vc = Rat(1 + rulingShift) * H - E;
  const GradedClass v = vc - Rat(rulingShift) * H;
  return solveFromRestriction(X, E, power(v, n - 1 - d), d);
}

GradedClass pointSubspaceCycle(const SpaceSignature& X, int j, int d) {
  const int n = X.n;
  if (j < 1 || j > X.s) throw std::invalid_argument("pointSubspaceCycle: point index out of range");
  if (d < 0 || d > n - 1) throw std::invalid_argument("pointSubspaceCycle: dimension out of range");
  const GradedClass e = GradedClass::monomial(X, CanonicalMonomial::pointPure(j, 1));
  // The hyperplane of the exceptional P^{n-1} restricts from -e_j.
  return solveFromRestriction(X, e, power(Rat(-1) * e, n - 1 - d), d);
}

}  // namespace cyclecones
