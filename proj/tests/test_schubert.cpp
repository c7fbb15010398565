#include <doctest.h>

#include <cyclecones/schubert.hpp>

#include "oracles.hpp"

using namespace cyclecones;

TEST_CASE("grassmannian bookkeeping") {
  const Grassmannian g(2, 4);
  CHECK(g.rows() == 3);
  CHECK(g.cols() == 2);
  CHECK(g.dimension() == 6);
  CHECK(g.name() == "G(2,4)");
  CHECK_THROWS(Grassmannian(4, 4));
  CHECK_THROWS(Grassmannian(-1, 3));
}

TEST_CASE("partition validation") {
  const Grassmannian g(1, 3);
  CHECK_NOTHROW(SchubertExpression::sigma(g, {2, 1}));
  CHECK_THROWS(SchubertExpression::sigma(g, {3}));        // exceeds box width
  CHECK_THROWS(SchubertExpression::sigma(g, {1, 1, 1}));  // too many parts
  CHECK_THROWS(SchubertExpression::sigma(g, {1, 2}));     // not weakly decreasing
  CHECK_THROWS(SchubertExpression::sigma(g, {1, -1}));    // negative part
  // Trailing zeros are a legal spelling of the same partition.
  const SchubertExpression padded = SchubertExpression::sigma(g, {1, 0});
  CHECK(padded.coefficient({1}) == 1);
  CHECK(padded.codimension() == 1);
}

TEST_CASE("pieri products on lines in three-space") {
  const Grassmannian g(1, 3);
  const SchubertExpression s1 = SchubertExpression::sigma(g, {1});
  const SchubertExpression sq = s1.pieri(1);
  CHECK(sq.coefficient({2}) == Rat(1));
  CHECK(sq.coefficient({1, 1}) == Rat(1));
  CHECK(sq.terms().size() == 2);

  SchubertExpression acc = SchubertExpression::sigma(g, {});
  for (int i = 0; i < 4; ++i) acc = acc.pieri(1);
  CHECK(acc.coefficient({2, 2}) == Rat(2));  // two lines meet four general lines
  CHECK(acc.codimension() == 4);

  // Multiplying past the box yields zero.
  CHECK(SchubertExpression::sigma(g, {2, 2}).pieri(1).isZero());
}

TEST_CASE("planes meeting four lines and a point condition") {
  const Grassmannian g(2, 4);
  SchubertExpression acc = SchubertExpression::sigma(g, {2});
  for (int i = 0; i < 4; ++i) acc = acc.pieri(1);
  CHECK(acc.coefficient({2, 2, 2}) == Rat(2));
}

TEST_CASE("degrees of grassmannians and point loci") {
  CHECK(schubertVarietyDegree(Grassmannian(1, 3), {}) == Rat(2));
  CHECK(schubertVarietyDegree(Grassmannian(2, 4), {}) == Rat(5));
  CHECK(schubertVarietyDegree(Grassmannian(3, 5), {}) == Rat(14));
  for (const auto& [a, n] : std::vector<std::pair<int, int>>{
           {1, 3}, {1, 4}, {2, 4}, {2, 5}, {3, 5}, {1, 5}}) {
    CAPTURE(a);
    CAPTURE(n);
    CHECK(schubertVarietyDegree(Grassmannian(a, n), {}) ==
          Rat(oracles::grassmannianDegree(static_cast<unsigned>(a),
                                          static_cast<unsigned>(n))));
  }

  // The locus of (n-2)-planes through a fixed point is a proper, smaller-degree
  // subvariety of G(n-2, n).
  CHECK(schubertVarietyDegree(Grassmannian(2, 4), {2}) == Rat(2));
  CHECK(schubertVarietyDegree(Grassmannian(3, 5), {2}) == Rat(5));
  CHECK(schubertVarietyDegree(Grassmannian(2, 4), {2}) <
        schubertVarietyDegree(Grassmannian(2, 4), {}));
  CHECK(schubertVarietyDegree(Grassmannian(3, 5), {2}) <
        schubertVarietyDegree(Grassmannian(3, 5), {}));
}

TEST_CASE("incidence codimensions") {
  CHECK(incidenceCodim(IncidenceCondition::MeetsLine, 2, 4) == 1);
  CHECK(incidenceCodim(IncidenceCondition::MeetsLine, 3, 5) == 1);
  CHECK(incidenceCodim(IncidenceCondition::ContainsLine, 2, 4) == 4);
  CHECK(incidenceCodim(IncidenceCondition::ContainsPoint, 2, 4) == 2);
  CHECK(incidenceCodim(IncidenceCondition::ContainsPoint, 3, 5) == 2);
  CHECK_THROWS(incidenceCodim(IncidenceCondition::MeetsLine, 4, 4));
}

TEST_CASE("expected codimension readings and the flagged discrepancy") {
  CHECK(quadricCoefficientCount(5) == 21);

  const CodimReadings e = expectedCodim(2, 4, 5);
  CHECK(e.literal == 21);
  CHECK(e.capped == 15);

  const CodimReadings v = expectedCodimVertex(2, 4, 5);
  CHECK(v.literal == 21);
  CHECK(v.capped == 17);

  const ConsistencyReport rep = consistencyReport(2, 4, 5);
  CHECK(rep.statedVertexCodim == 17);
  CHECK(rep.workedVertexCodim == 18);
  CHECK(rep.projectiveQuadricDim == 20);
  CHECK(rep.statedDimension == 3);
  CHECK(rep.workedDimension == 2);
  CHECK(rep.mismatch);
  CHECK_FALSE(rep.note.empty());
}
