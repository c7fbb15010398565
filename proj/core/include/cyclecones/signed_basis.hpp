#ifndef CYCLECONES_SIGNED_BASIS_HPP
#define CYCLECONES_SIGNED_BASIS_HPP

#include "cyclecones/graded_class.hpp"
#include "cyclecones/linalg.hpp"
#include "cyclecones/monomial.hpp"
#include "cyclecones/space.hpp"

#include <string>
#include <vector>

namespace cyclecones {

// Display basis for tables of codimension-k classes.  Same ordering as the
// canonical basis, but each element carries the sign that makes the standard
// effective cycles (exceptional fibers, sweeps, point cycles) have
// nonnegative coordinates:
//
//   Hyperplane  +H^k
//   LineMixed   (-1)^k     H*E_i^{k-1}   (labelled F_i / f_i / l_i)
//   LinePure    (-1)^{k-1} E_i^k         (labelled G_i / g_i)
//   PointPure   (-1)^{k-1} e_j^k
//
// At k = 1 every sign is +1, so display and canonical coordinates agree.
struct SignedBasis {
  SpaceSignature space;
  int k;

  explicit SignedBasis(const SpaceSignature& X, int degree);

  std::size_t size() const { return signs.size(); }

  std::vector<CanonicalMonomial> monomials;  // canonical order
  std::vector<int> signs;                    // +1 / -1 per column
  std::vector<std::string> labels;           // "H^2", "F1", "G1", "-e3^2", ...
};

// Display coordinates of a codimension-k class.
RatVec toSigned(const SignedBasis& basis, const GradedClass& c);
GradedClass fromSigned(const SignedBasis& basis, const RatVec& coords);

// Pairing matrix expressed in the display bases of codimension k (rows) and
// codimension n-k (columns).
RatMatrix signedPairingMatrix(const SpaceSignature& X, int k);

}  // namespace cyclecones

#endif  // CYCLECONES_SIGNED_BASIS_HPP
