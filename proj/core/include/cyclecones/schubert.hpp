#ifndef CYCLECONES_SCHUBERT_HPP
#define CYCLECONES_SCHUBERT_HPP

#include "cyclecones/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace cyclecones {

// Schubert calculus on the Grassmannian G(a, n) of projective a-planes in
// P^n, just deep enough for the incidence-variety bookkeeping: classes are
// integer combinations of Schubert classes sigma_lambda with lambda inside
// the (a+1) x (n-a) box, and multiplication is by special classes sigma_p
// only (Pieri's rule: sum over horizontal-strip additions).
struct Grassmannian {
  int a = 1;  // projective dimension of the subspaces
  int n = 3;  // ambient projective dimension

  Grassmannian(int a_, int n_);

  int rows() const { return a + 1; }     // box height
  int cols() const { return n - a; }     // box width
  int dimension() const { return (a + 1) * (n - a); }

  std::string name() const;  // "G(1,3)"
};

// Weakly decreasing, positive parts; must fit the box of the Grassmannian in
// play.  The empty partition is the fundamental class.
using Partition = std::vector<int>;

int partitionWeight(const Partition& p);
std::string partitionName(const Partition& p);  // "σ{2,1}"; empty -> "σ{}"

class SchubertExpression {
 public:
  explicit SchubertExpression(const Grassmannian& g);  // zero
  static SchubertExpression sigma(const Grassmannian& g, const Partition& p);

  const Grassmannian& grassmannian() const { return g_; }
  const std::map<Partition, Rat>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }

  // Homogeneous codimension of the expression; throws if mixed.
  int codimension() const;

  SchubertExpression& operator+=(const SchubertExpression& other);
  SchubertExpression& operator*=(const Rat& c);

  // Pieri: multiply by sigma_p (single-row class), p >= 1.
  SchubertExpression pieri(int p) const;

  Rat coefficient(const Partition& p) const;
  std::string str() const;

 private:
  Grassmannian g_;
  std::map<Partition, Rat> terms_;
  void addTerm(const Partition& p, const Rat& c);
};

// Degree of the Schubert variety of sigma_lambda: the coefficient of the box
// class in sigma_lambda * sigma_1^(dim - |lambda|).  lambda = {} gives the
// degree of G(a,n) itself in the Pluecker embedding.
Rat schubertVarietyDegree(const Grassmannian& g, const Partition& lambda);

// Codimension in G(d, n) of an incidence condition on d-planes.
enum class IncidenceCondition { ContainsLine, MeetsLine, ContainsPoint };
int incidenceCodim(IncidenceCondition c, int d, int n);

// Expected codimension, inside the space of quadric hypersurfaces of P^n, of
// the locus cut out by containing N general lines and having a vertex of
// dimension >= k.  The base count is 3N + k(k+1)/2 (three conditions per
// line, a triangular count for the vertex rank drop), combined with the
// total coefficient count binom(n+2, 2) of a quadric.  Two readings of that
// combination are carried side by side and never merged:
//   literal — outer max with binom(n+2, 2), exactly as the source formula is
//             printed;
//   capped  — outer min, i.e. reading the combination as "capped at the
//             ambient dimension" so oversize conditions mean an empty locus.
struct CodimReadings {
  long long literal = 0;
  long long capped = 0;
};

// Number of coefficients of a quadratic form on P^n: binom(n+2, 2).
long long quadricCoefficientCount(int n);

// e(k, N, n): lines-plus-vertex-rank conditions.  Pre: 0 <= k <= n-1, N >= 0.
CodimReadings expectedCodim(int k, int N, int n);

// Vertex-incidence refinement: adds a "vertex meets a fixed line" condition
// of n-k-1 to the raw condition count before the same outer max/min.
CodimReadings expectedCodimVertex(int k, int N, int n);

// The vertex formula's n-k-1 term disagrees by one with the worked dimension
// count it is meant to summarize (17 vs 18 for k=2, N=4, n=5); both totals
// are reported, together with the locus dimension each implies, and
// `mismatch` is set when they differ.  Neither reading is silently preferred.
struct ConsistencyReport {
  long long statedVertexCodim = 0;  // capped e(k,N,n) + (n-k-1)
  long long workedVertexCodim = 0;  // capped e(k,N,n) + (n-k)
  long long projectiveQuadricDim = 0;  // binom(n+2,2) - 1
  long long statedDimension = 0;    // projectiveQuadricDim - statedVertexCodim
  long long workedDimension = 0;    // projectiveQuadricDim - workedVertexCodim
  bool mismatch = false;
  std::string note;
};

ConsistencyReport consistencyReport(int k, int N, int n);

}  // namespace cyclecones

#endif  // CYCLECONES_SCHUBERT_HPP
