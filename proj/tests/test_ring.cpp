#include <doctest.h>

#include <cyclecones/graded_class.hpp>
#include <cyclecones/linalg.hpp>
#include <cyclecones/monomial.hpp>
#include <cyclecones/rational.hpp>
#include <cyclecones/space.hpp>

#include <vector>

#include "oracles.hpp"

using namespace cyclecones;

namespace {

GradedClass H(const SpaceSignature& X) {
  return GradedClass::monomial(X, CanonicalMonomial::hyperplane(1));
}
GradedClass E(const SpaceSignature& X, int i) {
  return GradedClass::monomial(X, CanonicalMonomial::linePure(i, 1));
}
GradedClass e(const SpaceSignature& X, int j) {
  return GradedClass::monomial(X, CanonicalMonomial::pointPure(j, 1));
}

GradedClass randomClass(const SpaceSignature& X, int k, std::mt19937_64& gen) {
  const std::size_t dim = canonicalBasis(X, k).size();
  return GradedClass::fromCoords(X, k, toRatVec(oracles::randomVec(gen, dim, -3, 3)));
}

}  // namespace

TEST_CASE("space signatures validate and print") {
  CHECK(SpaceSignature(4, 2, 3).name() == "X^4_{2,3}");
  CHECK(SpaceSignature(5, 5, 0).name() == "X^5_5");
  CHECK_THROWS(SpaceSignature(1, 0, 0));
  CHECK_THROWS(SpaceSignature(2, 1, 0));  // line centers need n >= 3
  CHECK_THROWS(SpaceSignature(4, -1, 0));
  CHECK_NOTHROW(SpaceSignature(2, 0, 4));
}

TEST_CASE("canonical bases enumerate the expected monomials") {
  const SpaceSignature X(4, 2, 3);
  const auto b1 = canonicalBasis(X, 1);
  REQUIRE(b1.size() == 6);
  CHECK(b1[0].spelling() == "H");
  CHECK(b1[1].spelling() == "E1");
  CHECK(b1[3].spelling() == "e1");

  const auto b2 = canonicalBasis(X, 2);
  REQUIRE(b2.size() == 8);
  CHECK(b2[0].spelling() == "H^2");
  CHECK(b2[1].spelling() == "H*E1");
  CHECK(b2[3].spelling() == "E1^2");
  CHECK(b2[5].spelling() == "e1^2");

  for (int k = 1; k < X.n; ++k) {
    const auto basis = canonicalBasis(X, k);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      CHECK(basisIndex(X, basis[i]) == i);
      CHECK(monomialFromSpelling(X, basis[i].spelling()) == basis[i]);
    }
  }
}

TEST_CASE("top intersection numbers for n = 3..6") {
  for (int n = 3; n <= 6; ++n) {
    CAPTURE(n);
    const SpaceSignature X(n, 1, 1);
    const int sgn = (n % 2 == 0) ? 1 : -1;
    CHECK(degreeNumber(power(H(X), n)) == Rat(1));
    CHECK(degreeNumber(power(E(X, 1), n)) == Rat(sgn * (n - 1)));
    CHECK(degreeNumber(power(e(X, 1), n)) == Rat(-sgn));
    CHECK(degreeNumber(multiply(H(X), power(E(X, 1), n - 1))) == Rat(sgn));
  }
}

TEST_CASE("mixed products vanish as they should") {
  const SpaceSignature X(4, 2, 1);
  CHECK(degreeNumber(multiply(power(H(X), 2), power(E(X, 1), 2))) == Rat(0));
  CHECK(degreeNumber(multiply(power(H(X), 3), e(X, 1))) == Rat(0));
  CHECK(multiply(power(E(X, 1), 2), power(E(X, 2), 2)).isZero());
  CHECK(multiply(power(E(X, 1), 2), power(e(X, 1), 2)).isZero());
  CHECK(multiply(E(X, 1), e(X, 1)).isZero());
}

TEST_CASE("degree-2 rewrite of a line-center square on the threefold") {
  const SpaceSignature X(3, 1, 0);
  const GradedClass sq = power(E(X, 1), 2);  // = -H^2 + 2 H*E1
  CHECK(sq.coefficient(CanonicalMonomial::hyperplane(2)) == Rat(-1));
  CHECK(sq.coefficient(CanonicalMonomial::lineMixed(1, 2)) == Rat(2));
}

TEST_CASE("rewrite rules are self-consistent") {
  for (int n = 3; n <= 6; ++n) CHECK_NOTHROW(rewriteRuleSelfTest(n));
}

TEST_CASE("pairing matrices are nonsingular (samples)") {
  for (const auto& [n, r, s] : std::vector<std::tuple<int, int, int>>{
           {4, 2, 3}, {6, 5, 5}, {3, 2, 2}, {5, 1, 4}}) {
    const SpaceSignature X(n, r, s);
    for (int k = 1; k < n; ++k) {
      CAPTURE(X.name());
      CAPTURE(k);
      const RatMatrix M = pairingMatrix(X, k);
      CHECK(rank(M) == M.size());
    }
  }
}

TEST_CASE("pair agrees with multiply followed by degree") {
  auto gen = oracles::rng(11);
  const SpaceSignature X(5, 2, 2);
  for (int rep = 0; rep < 20; ++rep) {
    const int k = 1 + static_cast<int>(gen() % 4);
    const GradedClass a = randomClass(X, k, gen);
    const GradedClass b = randomClass(X, X.n - k, gen);
    CHECK(pair(a, b) == degreeNumber(multiply(a, b)));
  }
}

TEST_CASE("multiplication is commutative and associative") {
  auto gen = oracles::rng(23);
  for (const auto& [n, r, s] :
       std::vector<std::tuple<int, int, int>>{{4, 3, 1}, {5, 2, 2}, {6, 1, 1}}) {
    const SpaceSignature X(n, r, s);
    for (int rep = 0; rep < 25; ++rep) {
      const GradedClass a = randomClass(X, 1, gen);
      const GradedClass b = randomClass(X, 1, gen);
      const GradedClass c = randomClass(X, 1, gen);
      CHECK(multiply(a, b) == multiply(b, a));
      CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    }
  }
}

TEST_CASE("self-intersection of divisors matches the closed-form oracle") {
  auto gen = oracles::rng(37);
  for (const auto& [n, r, s] : std::vector<std::tuple<int, int, int>>{
           {3, 2, 2}, {4, 3, 2}, {5, 5, 0}, {6, 2, 1}}) {
    const SpaceSignature X(n, r, s);
    for (int rep = 0; rep < 15; ++rep) {
      const IntVec coords = oracles::randomVec(gen, 1 + r + s, -3, 3);
      const GradedClass D = GradedClass::fromCoords(X, 1, toRatVec(coords));
      std::vector<Int> b, c;
      for (int i = 0; i < r; ++i) b.push_back(-coords[1 + i]);
      for (int j = 0; j < s; ++j) c.push_back(-coords[1 + r + j]);
      CHECK(selfIntersectionNumber(D) ==
            Rat(oracles::divisorPower(n, coords[0], b, c)));
    }
  }
}

TEST_CASE("projection formula links pullback and pushforward") {
  auto gen = oracles::rng(41);
  const SpaceSignature big(4, 2, 2);
  const SpaceSignature small(4, 0, 0);
  for (int rep = 0; rep < 10; ++rep) {
    const int k = 1 + static_cast<int>(gen() % 3);
    const GradedClass c = randomClass(small, k, gen);
    const GradedClass d = randomClass(big, big.n - k, gen);
    CHECK(pair(pullback(c, big), d) == pair(c, pushforward(d, small)));
  }
  // Pushforward forgets exceptional classes, pullback embeds hyperplanes.
  CHECK(pushforward(power(E(big, 1), 2), small).isZero());
  CHECK(pullback(H(small), big) == H(big));
}

TEST_CASE("canonical class has the blowup-adjusted coefficients") {
  const SpaceSignature X(4, 2, 3);
  const GradedClass K = canonicalClass(X);
  CHECK(K.coefficient(CanonicalMonomial::hyperplane(1)) == Rat(-5));
  CHECK(K.coefficient(CanonicalMonomial::linePure(1, 1)) == Rat(2));
  CHECK(K.coefficient(CanonicalMonomial::pointPure(3, 1)) == Rat(3));

  const SpaceSignature Y(6, 1, 1);
  const GradedClass KY = canonicalClass(Y);
  CHECK(KY.coefficient(CanonicalMonomial::hyperplane(1)) == Rat(-7));
  CHECK(KY.coefficient(CanonicalMonomial::linePure(1, 1)) == Rat(4));
  CHECK(KY.coefficient(CanonicalMonomial::pointPure(1, 1)) == Rat(5));
}

TEST_CASE("grassmannian degree oracle sanity") {
  CHECK(oracles::grassmannianDegree(1, 3) == Int(2));
  CHECK(oracles::grassmannianDegree(2, 4) == Int(5));
  CHECK(oracles::grassmannianDegree(3, 5) == Int(14));
}
