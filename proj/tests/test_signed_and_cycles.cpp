#include <doctest.h>

#include <cyclecones/exceptional.hpp>
#include <cyclecones/graded_class.hpp>
#include <cyclecones/incidence.hpp>
#include <cyclecones/orbits.hpp>
#include <cyclecones/signed_basis.hpp>
#include <cyclecones/space.hpp>
#include <cyclecones/witness.hpp>

#include <algorithm>
#include <set>

#include "oracles.hpp"

using namespace cyclecones;

namespace {

IntVec displayCoords(const SignedBasis& basis, const GradedClass& c) {
  const RatVec v = toSigned(basis, c);
  IntVec out;
  for (const Rat& x : v) {
    REQUIRE(isInteger(x));
    out.push_back(numerator(x));
  }
  return out;
}

}  // namespace

TEST_CASE("display bases carry the expected labels and signs") {
  const SignedBasis b44(SpaceSignature(4, 4, 0), 2);
  CHECK(b44.labels == std::vector<std::string>{"H^2", "F1", "F2", "F3", "F4", "G1",
                                               "G2", "G3", "G4"});
  CHECK(b44.signs == std::vector<int>{1, 1, 1, 1, 1, -1, -1, -1, -1});

  const SignedBasis b55(SpaceSignature(5, 5, 0), 3);
  CHECK(b55.labels == std::vector<std::string>{"H^3", "f1", "f2", "f3", "f4", "f5",
                                               "g1", "g2", "g3", "g4", "g5"});
  CHECK(b55.signs == std::vector<int>{1, -1, -1, -1, -1, -1, 1, 1, 1, 1, 1});

  const SignedBasis b423(SpaceSignature(4, 2, 3), 2);
  CHECK(b423.labels == std::vector<std::string>{"H^2", "F1", "F2", "G1", "G2",
                                                "-e1^2", "-e2^2", "-e3^2"});

  const SignedBasis curves(SpaceSignature(4, 3, 0), 3);
  CHECK(curves.labels == std::vector<std::string>{"l", "l1", "l2", "l3"});
}

TEST_CASE("signed coordinates round-trip") {
  auto gen = oracles::rng(7);
  for (const auto& [n, r, s] :
       std::vector<std::tuple<int, int, int>>{{4, 2, 3}, {5, 5, 0}, {3, 2, 2}}) {
    const SpaceSignature X(n, r, s);
    for (int k = 1; k < n; ++k) {
      const SignedBasis basis(X, k);
      for (int rep = 0; rep < 5; ++rep) {
        const RatVec coords = toRatVec(oracles::randomVec(gen, basis.size(), -4, 4));
        const GradedClass c = fromSigned(basis, coords);
        CHECK(toSigned(basis, c) == coords);
      }
    }
  }
}

TEST_CASE("display pairing blocks for one line center") {
  const RatMatrix m4 = signedPairingMatrix(SpaceSignature(4, 1, 0), 2);
  CHECK(m4 == RatMatrix{{Rat(1), Rat(0), Rat(0)},
                        {Rat(0), Rat(0), Rat(-1)},
                        {Rat(0), Rat(-1), Rat(3)}});
  const RatMatrix m5 = signedPairingMatrix(SpaceSignature(5, 1, 0), 3);
  CHECK(m5 == RatMatrix{{Rat(1), Rat(0), Rat(0)},
                        {Rat(0), Rat(0), Rat(-1)},
                        {Rat(0), Rat(-1), Rat(4)}});
}

TEST_CASE("exceptional cycle classes in display coordinates") {
  const SpaceSignature X4(4, 4, 0);
  const SignedBasis b4(X4, 2);
  CHECK(displayCoords(b4, fiberSliceCycle(X4, 1, 2)) ==
        IntVec{0, 1, 0, 0, 0, 0, 0, 0, 0});
  CHECK(displayCoords(b4, sweepCycle(X4, 1, 2)) == IntVec{0, 1, 0, 0, 0, 1, 0, 0, 0});
  CHECK(displayCoords(b4, sweepCycle(X4, 3, 2)) == IntVec{0, 0, 0, 1, 0, 0, 0, 1, 0});

  // On the fivefold the sweep of lines is 2f + g, not f + g.
  const SpaceSignature X5(5, 5, 0);
  const SignedBasis b5(X5, 3);
  CHECK(displayCoords(b5, fiberSliceCycle(X5, 1, 2)) ==
        IntVec{0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0});
  CHECK(displayCoords(b5, sweepCycle(X5, 1, 2)) ==
        IntVec{0, 2, 0, 0, 0, 0, 1, 0, 0, 0, 0});

  SUBCASE("ruling shifts do not change the class") {
    for (int shift = -2; shift <= 2; ++shift) {
      CHECK(fiberSliceCycle(X5, 2, 2, shift) == fiberSliceCycle(X5, 2, 2));
      CHECK(sweepCycle(X5, 2, 2, shift) == sweepCycle(X5, 2, 2));
      CHECK(sweepCycle(X4, 1, 2, shift) == sweepCycle(X4, 1, 2));
    }
  }

  SUBCASE("planes inside a point blowup are display units") {
    const SpaceSignature X(4, 2, 3);
    const SignedBasis b(X, 2);
    CHECK(displayCoords(b, pointSubspaceCycle(X, 1, 2)) ==
          IntVec{0, 0, 0, 0, 0, 1, 0, 0});
    CHECK(displayCoords(b, pointSubspaceCycle(X, 3, 2)) ==
          IntVec{0, 0, 0, 0, 0, 0, 0, 1});
  }
}

TEST_CASE("proper transforms of linear subvarieties") {
  const SpaceSignature X(4, 4, 0);
  const SignedBasis basis(X, 2);

  IncidenceProfile meetsAll;
  meetsAll.d = 2;
  meetsAll.meetsLines = {1, 2, 3, 4};
  CHECK(displayCoords(basis, properTransformLinear(X, meetsAll)) ==
        IntVec{1, -1, -1, -1, -1, 0, 0, 0, 0});

  IncidenceProfile contains1;
  contains1.d = 2;
  contains1.containsLines = {1};
  contains1.meetsLines = {2, 3};
  CHECK(displayCoords(basis, properTransformLinear(X, contains1)) ==
        IntVec{1, -2, -1, -1, 0, -1, 0, 0, 0});

  SUBCASE("hyperplane transforms subtract center classes linearly") {
    const SpaceSignature Y(4, 2, 3);
    IncidenceProfile h;
    h.d = 3;
    h.containsLines = {1};
    h.passesThroughPoints = {2};
    const GradedClass t = properTransformLinear(Y, h);
    CHECK(t.coefficient(CanonicalMonomial::hyperplane(1)) == Rat(1));
    CHECK(t.coefficient(CanonicalMonomial::linePure(1, 1)) == Rat(-1));
    CHECK(t.coefficient(CanonicalMonomial::linePure(2, 1)) == Rat(0));
    CHECK(t.coefficient(CanonicalMonomial::pointPure(2, 1)) == Rat(-1));
  }
}

TEST_CASE("feasibility bookkeeping for incidence profiles") {
  const SpaceSignature X5(5, 5, 0);

  IncidenceProfile planeMeets4;
  planeMeets4.d = 2;
  planeMeets4.meetsLines = {1, 2, 3, 4};
  CHECK(expectedFamilyDimension(X5, planeMeets4) == Int(1));
  CHECK(feasibleProfile(X5, planeMeets4));

  // A plane containing one line and meeting two more overdraws the budget in
  // five-space; the formula class still exists when feasibility is waived.
  IncidenceProfile overdrawn;
  overdrawn.d = 2;
  overdrawn.containsLines = {1};
  overdrawn.meetsLines = {2, 3};
  CHECK(expectedFamilyDimension(X5, overdrawn) == Int(-1));
  CHECK_FALSE(feasibleProfile(X5, overdrawn));
  CHECK_THROWS(properTransformLinear(X5, overdrawn));
  CHECK_NOTHROW(properTransformLinear(X5, overdrawn, /*assertFeasible=*/false));

  // Spanning constraint: a plane through two blown-up points and a line would
  // span too much.
  const SpaceSignature X(4, 2, 3);
  IncidenceProfile spanning;
  spanning.d = 2;
  spanning.containsLines = {1};
  spanning.passesThroughPoints = {1, 2};
  CHECK_FALSE(feasibleProfile(X, spanning));

  IncidenceProfile planes4;
  planes4.d = 2;
  planes4.meetsLines = {1, 2, 3, 4};
  CHECK(expectedFamilyDimension(SpaceSignature(4, 4, 0), planes4) == Int(2));
}

TEST_CASE("linear cone generator lists") {
  const auto g44 = linearConeGenerators(SpaceSignature(4, 4, 0), 2);
  CHECK(g44.size() == 52);
  const auto g423 = linearConeGenerators(SpaceSignature(4, 2, 3), 2);
  CHECK(g423.size() == 46);

  std::set<std::string> provenance;
  for (const auto& g : g44) {
    CHECK_FALSE(g.cls.isZero());
    CHECK(g.cls.degree() == 2);
    provenance.insert(g.provenance);
  }
  CHECK(provenance.size() == g44.size());
}

TEST_CASE("witness classes match their display vectors") {
  const GradedClass q = witnessClass("quadric-surface-x45");
  const SignedBasis b45(SpaceSignature(4, 5, 0), 2);
  CHECK(displayCoords(b45, q) == IntVec{2, -3, -3, -1, -1, -1, -1, -1, 0, 0, 0});

  IncidenceProfile p;
  p.d = 2;
  p.containsLines = {1, 2};
  p.meetsLines = {3, 4, 5};
  // The profile over-constrains a plane, so the feasibility guard must be
  // waived for the quadric transform (the class is a formal witness, not a
  // member of the generator family).
  CHECK(properTransformQuadric(SpaceSignature(4, 5, 0), p, false) == q);
  CHECK_THROWS(properTransformQuadric(SpaceSignature(4, 5, 0), p));

  CHECK(witnessNames().size() == 3);
  for (const auto& name : witnessNames()) CHECK_FALSE(witnessClass(name).isZero());
  CHECK_THROWS(witnessClass("no-such-witness"));
}

TEST_CASE("orbit canonicalization under center permutations") {
  const SpaceSignature X(4, 4, 0);
  const OrbitSpec spec = orbitSpecForBasis(X, 2);
  REQUIRE(spec.dim == 9);
  REQUIRE(spec.lineTuples.size() == 4);

  const IntVec a{1, -1, 0, 0, 0, 0, 0, 0, 0};
  const IntVec b{1, 0, 0, -1, 0, 0, 0, 0, 0};
  CHECK(sameOrbit(a, b, spec));
  CHECK(orbitCanonical(a, spec) == orbitCanonical(b, spec));
  CHECK(orbitExpand(a, spec).size() == 4);

  // F and G columns travel together under a permutation of the lines.
  const IntVec c{0, 1, 0, 0, 0, 1, 0, 0, 0};  // F1 + G1
  const auto expanded = orbitExpand(c, spec);
  CHECK(expanded.size() == 4);
  for (const auto& v : expanded) {
    std::size_t i = 0;
    while (i < 4 && v[1 + i] == 0) ++i;
    REQUIRE(i < 4);
    CHECK(v[5 + i] == Int(1));
  }

  SUBCASE("compress and expand are inverse on orbit sets") {
    auto gen = oracles::rng(99);
    std::vector<IntVec> vs;
    for (int rep = 0; rep < 12; ++rep) vs.push_back(oracles::randomVec(gen, 9, -2, 2));
    const auto reps = orbitCompressSet(vs, spec);
    const auto full = orbitExpandSet(reps, spec);
    for (const auto& v : vs)
      CHECK(std::find(full.begin(), full.end(), v) != full.end());
    CHECK(orbitCompressSet(full, spec) == reps);
  }

  SUBCASE("point columns permute independently of line columns") {
    const SpaceSignature Y(4, 2, 3);
    const OrbitSpec yspec = orbitSpecForBasis(Y, 2);
    CHECK(yspec.lineTuples.size() == 2);
    CHECK(yspec.pointTuples.size() == 3);
    const IntVec u{0, 0, 0, 0, 0, 1, 0, 0};
    CHECK(orbitExpand(u, yspec).size() == 3);
    CHECK(sameOrbit(u, IntVec{0, 0, 0, 0, 0, 0, 0, 1}, yspec));
    CHECK_FALSE(sameOrbit(u, IntVec{0, 1, 0, 0, 0, 0, 0, 0}, yspec));
  }
}
