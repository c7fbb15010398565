#ifndef CYCLECONES_CONE_HPP
#define CYCLECONES_CONE_HPP

#include "cyclecones/linalg.hpp"
#include "cyclecones/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cyclecones {

// A rational polyhedral cone: cone(rays) + span(lineality), in a fixed
// coordinate system of dimension ambientDim.  Rays are primitive integer
// vectors, deduplicated and lex-sorted; the lineality list is a reduced
// basis.  `pairing` is the bilinear form <w, v> = w^T M v used by dualCone;
// nullopt means the standard inner product.  `facets` caches an inequality
// description (normals a with <a, x> per the standard inner product) when one
// is known, e.g. for the output of dualCone.
struct RayCone {
  std::size_t ambientDim = 0;
  std::vector<IntVec> rays;
  std::vector<IntVec> lineality;
  std::optional<RatMatrix> pairing;
  std::optional<std::vector<IntVec>> facets;
};

// Normalizes rays (primitive, dedup, sort) and reduces the lineality basis.
RayCone makeCone(std::size_t ambientDim, const std::vector<IntVec>& rays,
                 std::optional<RatMatrix> pairing = std::nullopt,
                 const std::vector<IntVec>& lineality = {});

// { w : <w, r> >= 0 for all rays r, <w, l> = 0 for all lineality l }, by
// double description with the combinatorial adjacency test.  The dual of a
// non-full-dimensional cone has nonempty lineality; the dual of the trivial
// cone is the full space (all-lineality).  The result carries the transposed
// pairing and its facet normals (the input rays mapped through the pairing).
RayCone dualCone(const RayCone& c);

struct MembershipResult {
  bool inside = false;
  // inside: v = sum lambda[i] * rays[i] + sum mu[j] * lineality[j].
  std::map<std::size_t, Rat> combination;
  std::map<std::size_t, Rat> linealityPart;
  // outside: <separator, rays[i]> >= 0, <separator, lineality> = 0,
  // <separator, v> < 0 (standard inner product).
  RatVec separator;
};

// Exact membership with a verified certificate either way (certificates are
// re-substituted before returning; failure to verify is a logic error).
MembershipResult membership(const RatVec& v, const RayCone& c);
MembershipResult membership(const IntVec& v, const RayCone& c);

// Same cone with the redundant rays dropped: each surviving ray is not a
// nonnegative combination of the other rays and the lineality.  Facet cache
// is discarded.
RayCone extremeRays(const RayCone& c);

bool coneContains(const RayCone& outer, const RayCone& inner);
bool coneEquals(const RayCone& a, const RayCone& b);

// Exact equality of target and sum(parts).
bool decompositionCheck(const RatVec& target, const std::vector<RatVec>& parts);

// Certifies beta = alpha + (nonnegative integer combination of shiftRays)
// with beta a member of `cone`.  Returns the shift coefficients on success.
// shiftRays must be componentwise nonnegative and nonzero.
std::optional<IntVec> shiftCertificate(const IntVec& beta, const IntVec& alpha,
                                       const std::vector<IntVec>& shiftRays,
                                       const RayCone& cone);

// Minimal elements of `rays` under the partial order  x <= y  iff  y - x is
// a nonnegative integer combination of shiftRays (componentwise nonnegative,
// nonzero).  Duplicates are removed; output is lex-sorted.
std::vector<IntVec> maximallyIncidentReduce(const std::vector<IntVec>& rays,
                                            const std::vector<IntVec>& shiftRays);

}  // namespace cyclecones

#endif  // CYCLECONES_CONE_HPP
