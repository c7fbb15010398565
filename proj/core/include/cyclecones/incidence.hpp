#ifndef CYCLECONES_INCIDENCE_HPP
#define CYCLECONES_INCIDENCE_HPP

#include "cyclecones/graded_class.hpp"
#include "cyclecones/space.hpp"

#include <set>
#include <string>
#include <vector>

namespace cyclecones {

// Incidence data of a d-dimensional linear subspace of P^n relative to the
// blowup centers: the lines it contains, the lines it merely meets, and the
// points it passes through.  Sets are 1-based center indices.
struct IncidenceProfile {
  int d = 0;
  std::set<int> containsLines;
  std::set<int> meetsLines;
  std::set<int> passesThroughPoints;

  std::string str() const;
};

// Dimension count for the family of d-planes with this incidence in general
// position: each contained line costs 2(n-d), each met line n-d-1, each
// point n-d, out of dim G(d,n) = (d+1)(n-d).
Int expectedFamilyDimension(const SpaceSignature& X, const IncidenceProfile& p);

// A general arrangement admits such a d-plane: the family dimension is
// nonnegative and, when the plane is pinned to contained lines / points, the
// span they force fits inside it (2|C| + |P| - 1 <= d, capped at n).
bool feasibleProfile(const SpaceSignature& X, const IncidenceProfile& p);

// Class of the proper transform of a general d-plane with the given
// incidence.  Writing k = n-d, each met line contributes
// (-1)^{k-1} H E_i^{k-1}, each contained line (-1)^{k-1} k H E_i^{k-1}
// + (-1)^k E_i^k, each point (-1)^k e_j^k; hyperplanes (k = 1) are simply
// deg H - sum E_i - sum e_j.  Degenerate profiles that pin the plane to a
// center (e.g. d = 1 containing a line) reduce to the zero class through the
// ring's own rewriting.  Throws unless the profile is feasible or
// assertFeasible is false.
GradedClass properTransformLinear(const SpaceSignature& X, const IncidenceProfile& p,
                                  bool assertFeasible = true);

// Same for a general degree-2 hypersurface section of a (d+1)-plane: a
// d-dimensional quadric containing the C-lines and passing through the
// P-points, meeting the T-lines transversally.  Existence of the quadric is
// not implied by feasibleProfile; pass assertFeasible = false for profiles
// justified externally.
GradedClass properTransformQuadric(const SpaceSignature& X, const IncidenceProfile& p,
                                   bool assertFeasible = true);

struct GeneratorWithProvenance {
  GradedClass cls;
  std::string provenance;  // human-readable construction, e.g. the profile
};

// Generators of the cone of dimension-d cycle classes spanned by linear
// subspaces: proper transforms of general d-planes over all feasible
// profiles, plus the exceptional fiber slices, sweeps, and point subspaces
// of dimension d.  Zero classes are dropped; duplicates are merged (first
// provenance wins).  Sorted canonically on coordinates.
std::vector<GeneratorWithProvenance> linearConeGenerators(const SpaceSignature& X, int d);

}  // namespace cyclecones

#endif  // CYCLECONES_INCIDENCE_HPP
