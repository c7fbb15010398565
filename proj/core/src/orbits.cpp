#include "cyclecones/orbits.hpp"

#include "cyclecones/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cyclecones {

namespace {

void validate(const IntVec& v, const OrbitSpec& spec) {
  if (v.size() != spec.dim) throw std::invalid_argument("orbit: vector dimension mismatch");
}

IntVec applyPermutation(const IntVec& v, const OrbitSpec& spec,
                        const std::vector<std::size_t>& linePerm,
                        const std::vector<std::size_t>& pointPerm) {
  IntVec w = v;
  for (std::size_t i = 0; i < spec.lineTuples.size(); ++i)
    for (std::size_t t = 0; t < spec.lineTuples[i].size(); ++t)
      w[spec.lineTuples[i][t]] = v[spec.lineTuples[linePerm[i]][t]];
  for (std::size_t j = 0; j < spec.pointTuples.size(); ++j)
    for (std::size_t t = 0; t < spec.pointTuples[j].size(); ++t)
      w[spec.pointTuples[j][t]] = v[spec.pointTuples[pointPerm[j]][t]];
  return w;
}

}  // namespace

OrbitSpec orbitSpecForBasis(const SpaceSignature& X, int k) {
  const auto basis = canonicalBasis(X, k);
  OrbitSpec spec;
  spec.dim = basis.size();
  std::vector<std::vector<std::size_t>> mixed(X.r), pure(X.r), points(X.s);
  for (std::size_t pos = 0; pos < basis.size(); ++pos) {
    const CanonicalMonomial& m = basis[pos];
    switch (m.kind) {
      case MonomialKind::Hyperplane:
        break;
      case MonomialKind::LineMixed:
        mixed[static_cast<std::size_t>(m.index - 1)].push_back(pos);
        break;
      case MonomialKind::LinePure:
        pure[static_cast<std::size_t>(m.index - 1)].push_back(pos);
        break;
      case MonomialKind::PointPure:
        points[static_cast<std::size_t>(m.index - 1)].push_back(pos);
        break;
    }
  }
  for (int i = 0; i < X.r; ++i) {
    auto tuple = mixed[static_cast<std::size_t>(i)];
    tuple.insert(tuple.end(), pure[static_cast<std::size_t>(i)].begin(),
                 pure[static_cast<std::size_t>(i)].end());
    if (!tuple.empty()) spec.lineTuples.push_back(std::move(tuple));
  }
  for (int j = 0; j < X.s; ++j)
    if (!points[static_cast<std::size_t>(j)].empty())
      spec.pointTuples.push_back(points[static_cast<std::size_t>(j)]);
  return spec;
}

IntVec orbitCanonical(const IntVec& v, const OrbitSpec& spec) {
  validate(v, spec);
  IntVec w = v;
  // Sort the per-line value tuples lexicographically, then the point values:
  // an exchange argument shows this is the lex-least vector in the orbit.
  std::vector<IntVec> lineValues;
  for (const auto& tuple : spec.lineTuples) {
    IntVec vals;
    vals.reserve(tuple.size());
    for (std::size_t pos : tuple) vals.push_back(v[pos]);
    lineValues.push_back(std::move(vals));
  }
  std::sort(lineValues.begin(), lineValues.end());
  for (std::size_t i = 0; i < spec.lineTuples.size(); ++i)
    for (std::size_t t = 0; t < spec.lineTuples[i].size(); ++t)
      w[spec.lineTuples[i][t]] = lineValues[i][t];

  std::vector<IntVec> pointValues;
  for (const auto& tuple : spec.pointTuples) {
    IntVec vals;
    vals.reserve(tuple.size());
    for (std::size_t pos : tuple) vals.push_back(v[pos]);
    pointValues.push_back(std::move(vals));
  }
  std::sort(pointValues.begin(), pointValues.end());
  for (std::size_t j = 0; j < spec.pointTuples.size(); ++j)
    for (std::size_t t = 0; t < spec.pointTuples[j].size(); ++t)
      w[spec.pointTuples[j][t]] = pointValues[j][t];
  return w;
}

bool sameOrbit(const IntVec& a, const IntVec& b, const OrbitSpec& spec) {
  return orbitCanonical(a, spec) == orbitCanonical(b, spec);
}

std::vector<IntVec> orbitExpand(const IntVec& v, const OrbitSpec& spec) {
  validate(v, spec);
  std::vector<std::size_t> linePerm(spec.lineTuples.size());
  std::vector<std::size_t> pointPerm(spec.pointTuples.size());
  std::iota(linePerm.begin(), linePerm.end(), std::size_t{0});
  std::set<IntVec> images;
  do {
    std::iota(pointPerm.begin(), pointPerm.end(), std::size_t{0});
    do {
      images.insert(applyPermutation(v, spec, linePerm, pointPerm));
    } while (std::next_permutation(pointPerm.begin(), pointPerm.end()));
  } while (std::next_permutation(linePerm.begin(), linePerm.end()));
  return {images.begin(), images.end()};
}

std::vector<IntVec> orbitCompressSet(const std::vector<IntVec>& vs, const OrbitSpec& spec) {
  std::set<IntVec> reps;
  for (const IntVec& v : vs) reps.insert(orbitCanonical(v, spec));
  return {reps.begin(), reps.end()};
}

std::vector<IntVec> orbitExpandSet(const std::vector<IntVec>& vs, const OrbitSpec& spec) {
  std::set<IntVec> all;
  for (const IntVec& v : vs)
    for (IntVec& w : orbitExpand(v, spec)) all.insert(std::move(w));
  return {all.begin(), all.end()};
}

}  // namespace cyclecones
