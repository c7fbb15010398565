#ifndef CYCLECONES_ORBITS_HPP
#define CYCLECONES_ORBITS_HPP

#include "cyclecones/rational.hpp"
#include "cyclecones/space.hpp"

#include <cstddef>
#include <vector>

namespace cyclecones {

// Coordinate-permutation action of S_r x S_s (relabelling the blown-up lines
// and points) on vectors in a fixed codimension-k basis.  Each line owns a
// tuple of coordinate positions (its bands are not adjacent in the basis
// order), each point one position; the group permutes whole tuples.
struct OrbitSpec {
  std::size_t dim = 0;
  std::vector<std::vector<std::size_t>> lineTuples;
  std::vector<std::vector<std::size_t>> pointTuples;
};

// Tuple layout of canonicalBasis(X, k) (and of the display basis, which
// shares it).
OrbitSpec orbitSpecForBasis(const SpaceSignature& X, int k);

// Canonical orbit representative: line tuples sorted lexicographically,
// point values sorted, both ascending.
IntVec orbitCanonical(const IntVec& v, const OrbitSpec& spec);

bool sameOrbit(const IntVec& a, const IntVec& b, const OrbitSpec& spec);

// All distinct images under the group, lex-sorted.
std::vector<IntVec> orbitExpand(const IntVec& v, const OrbitSpec& spec);

// Distinct canonical representatives of a set, lex-sorted.
std::vector<IntVec> orbitCompressSet(const std::vector<IntVec>& vs, const OrbitSpec& spec);
std::vector<IntVec> orbitExpandSet(const std::vector<IntVec>& vs, const OrbitSpec& spec);

}  // namespace cyclecones

#endif  // CYCLECONES_ORBITS_HPP
