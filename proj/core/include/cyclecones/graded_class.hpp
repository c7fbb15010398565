#ifndef CYCLECONES_GRADED_CLASS_HPP
#define CYCLECONES_GRADED_CLASS_HPP

#include "cyclecones/linalg.hpp"
#include "cyclecones/monomial.hpp"
#include "cyclecones/rational.hpp"
#include "cyclecones/space.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace cyclecones {

// A rational cycle class of pure codimension on a blowup of P^n along general
// lines and points, stored in the canonical monomial basis.  Products of
// total degree > n are represented by a distinct capped-zero state (degree()
// reports n+1) so that accidental use as an honest class is loud.
class GradedClass {
 public:
  GradedClass(const SpaceSignature& X, int degree);  // zero class

  static GradedClass zero(const SpaceSignature& X, int degree);
  static GradedClass cappedZero(const SpaceSignature& X);
  static GradedClass monomial(const SpaceSignature& X, const CanonicalMonomial& m,
                              const Rat& coeff = Rat(1));
  static GradedClass hyperplanePower(const SpaceSignature& X, int k);
  static GradedClass fromCoords(const SpaceSignature& X, int degree, RatVec coords);

  const SpaceSignature& space() const { return space_; }
  int degree() const { return degree_; }
  bool isCapped() const { return capped_; }
  bool isZero() const;
  const RatVec& coords() const { return coords_; }

  Rat coefficient(const CanonicalMonomial& m) const;

  GradedClass& operator+=(const GradedClass& other);
  GradedClass& operator-=(const GradedClass& other);
  GradedClass& operator*=(const Rat& c);
  friend GradedClass operator+(GradedClass a, const GradedClass& b) { return a += b; }
  friend GradedClass operator-(GradedClass a, const GradedClass& b) { return a -= b; }
  friend GradedClass operator*(const Rat& c, GradedClass a) { return a *= c; }
  bool operator==(const GradedClass& other) const;

  // "H^2 - 2*H*E1 + E1^2" style; "0" / "0 (degree > n)" for zero states.
  std::string str() const;

 private:
  SpaceSignature space_;
  int degree_;
  bool capped_ = false;
  RatVec coords_;
};

std::ostream& operator<<(std::ostream& os, const GradedClass& c);

// Ring product.  Bilinear over the monomial products; total degree > n gives
// the capped zero.
GradedClass multiply(const GradedClass& a, const GradedClass& b);
GradedClass power(const GradedClass& a, int m);

// Top intersection number: the H^n coefficient of a top-degree class.
// Requires degree() == n.
Rat degreeNumber(const GradedClass& c);

// degreeNumber(a*b) for complementary degrees.
Rat pair(const GradedClass& a, const GradedClass& b);

// Perfect-pairing matrix between codimension k and codimension n-k, rows
// indexed by canonicalBasis(X, k), columns by canonicalBasis(X, n-k).
RatMatrix pairingMatrix(const SpaceSignature& X, int k);

// degreeNumber(D^n) for a divisor class D (degree() == 1).
Rat selfIntersectionNumber(const GradedClass& divisor);

// Pushforward along the blowdown that forgets the centers absent from
// `target` (same n, target.r <= r, target.s <= s): kept monomials map
// identically, dropped exceptional monomials die except for top-degree
// contributions, which are accounted through H^n.
GradedClass pushforward(const GradedClass& c, const SpaceSignature& target);

// Pullback along the further blowup `target` (same n, target.r >= r,
// target.s >= s).  Monomials map identically: the general centers added by
// `target` are disjoint from cycles supported away from them, and H, E_i, e_j
// pull back to their namesakes.
GradedClass pullback(const GradedClass& c, const SpaceSignature& target);

// -(n+1)H + (n-2) sum E_i + (n-1) sum e_j: pullback canonical plus one
// (codimension - 1) multiple of each exceptional divisor.
GradedClass canonicalClass(const SpaceSignature& X);

// Re-derives the two nontrivial rewriting rules (E_i^{n-1} and e_j^n in terms
// of the basis) from the top intersection numbers by solving the pairing
// equations, and compares against the hard-coded forms.  Runs automatically
// on first ring use per n; throws std::logic_error on disagreement.
void rewriteRuleSelfTest(int n);

}  // namespace cyclecones

#endif  // CYCLECONES_GRADED_CLASS_HPP
