#ifndef CYCLECONES_VERDICT_HPP
#define CYCLECONES_VERDICT_HPP

#include "cyclecones/json_io.hpp"

#include <string>
#include <vector>

namespace cyclecones {

// The two summary grids: for each ambient dimension, whether the cone of
// effective k-cycles on the blowup of r general lines is linearly generated.
// Each verdict carries a second channel recording what backs it up in this
// run: an arithmetic check that actually passed (self-intersection
// negativity, witness non-membership), a proof in the source material that
// this program does not re-derive (nefness arguments, toric cases), or
// propagation (once generation fails at some r it fails for all larger r).
enum class Verdict { Yes, No, Unknown, Blank };
enum class Evidence { ArithmeticallyVerified, PaperAsserted, Propagated, None };

std::string verdictSymbol(Verdict v);    // "yes" -> "+", "no" -> "x", "?" , ""
std::string evidenceName(Evidence e);

struct VerdictCell {
  Verdict verdict = Verdict::Blank;
  Evidence evidence = Evidence::None;
  std::string basis;  // which check or claim backs the entry
};

struct VerdictGrid {
  int dimension = 0;                      // ambient projective dimension
  std::vector<std::string> columnLabels;  // "<=2", "3", ..., "10"
  std::vector<int> kRows;                 // cycle dimensions, top to bottom
  std::vector<std::vector<VerdictCell>> cells;  // [row][column]
};

struct VerdictMatrix {
  VerdictGrid dim4;
  VerdictGrid dim5;
};

// Arithmetic results observed in the current run; only entries backed by a
// passing check may be marked arithmetically verified.
struct EvidenceFlags {
  bool curveSelfIntNegativeP4 = false;  // (3H - sum E)^4 < 0 at r = 10
  bool curveSelfIntNegativeP5 = false;  // (2H - sum E)^5 < 0 at r = 6
  bool quadricWitnessOutside = false;   // 2-cycle witness not in Lin_2(X^4_5)
  bool segreWitnessOutside = false;     // 3-cycle witness not in Lin_3(X^5_4)
  bool cubicDivisorWitnessOutside = false;  // divisor witness not in Lin^1(X^5_4)
};

VerdictMatrix buildVerdictMatrix(const EvidenceFlags& flags);

std::string renderVerdictText(const VerdictMatrix& m);
OrderedJson verdictToJson(const VerdictMatrix& m);

}  // namespace cyclecones

#endif  // CYCLECONES_VERDICT_HPP
