#ifndef CYCLECONES_MONOMIAL_HPP
#define CYCLECONES_MONOMIAL_HPP

#include "cyclecones/space.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace cyclecones {

// The Chow groups of a blowup of P^n along disjoint general lines L_i and
// points p_j have a monomial basis in the hyperplane class H and the
// exceptional divisors E_i (over lines) and e_j (over points).  After
// rewriting, the only monomials that survive in codimension k are:
//
//   Hyperplane   H^k
//   LineMixed    H * E_i^{k-1}   (2 <= k <= n-1)
//   LinePure     E_i^k           (1 <= k <= n-2)
//   PointPure    e_j^k           (1 <= k <= n-1)
//
// plus the fundamental class (k = 0) and H^n (k = n).
enum class MonomialKind { Hyperplane, LineMixed, LinePure, PointPure };

struct CanonicalMonomial {
  MonomialKind kind = MonomialKind::Hyperplane;
  int index = 0;   // 1-based blowup-center index; 0 for Hyperplane
  int degree = 0;  // codimension

  static CanonicalMonomial hyperplane(int k);
  static CanonicalMonomial lineMixed(int i, int k);
  static CanonicalMonomial linePure(int i, int k);
  static CanonicalMonomial pointPure(int j, int k);

  auto operator<=>(const CanonicalMonomial&) const = default;

  // "1", "H^2", "H*E1", "E1^2", "e3", ...
  std::string spelling() const;
};

// Basis of codimension-k classes, ordered Hyperplane, LineMixed (i ascending),
// LinePure (i ascending), PointPure (j ascending).  Note the two bands of a
// single line are not adjacent.  Valid for 0 <= k <= n.
std::vector<CanonicalMonomial> canonicalBasis(const SpaceSignature& X, int k);

// Position of m in canonicalBasis(X, m.degree).  Throws if m is not a basis
// element of X.
std::size_t basisIndex(const SpaceSignature& X, const CanonicalMonomial& m);

// Parses a spelling as produced by CanonicalMonomial::spelling().
CanonicalMonomial monomialFromSpelling(const SpaceSignature& X, const std::string& s);

}  // namespace cyclecones

#endif  // CYCLECONES_MONOMIAL_HPP
