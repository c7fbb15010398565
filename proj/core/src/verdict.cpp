#include "cyclecones/verdict.hpp"

#include <sstream>
#include <stdexcept>

namespace cyclecones {

std::string verdictSymbol(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "+";
    case Verdict::No: return "x";
    case Verdict::Unknown: return "?";
    case Verdict::Blank: return "";
  }
  throw std::logic_error("verdictSymbol: bad enum");
}

std::string evidenceName(Evidence e) {
  switch (e) {
    case Evidence::ArithmeticallyVerified: return "arithmetically-verified";
    case Evidence::PaperAsserted: return "paper-asserted";
    case Evidence::Propagated: return "propagated";
    case Evidence::None: return "none";
  }
  throw std::logic_error("evidenceName: bad enum");
}

namespace {

VerdictCell yes(const std::string& basis) {
  return {Verdict::Yes, Evidence::PaperAsserted, basis};
}

VerdictCell no(bool verified, const std::string& basis) {
  return {Verdict::No,
          verified ? Evidence::ArithmeticallyVerified : Evidence::PaperAsserted, basis};
}

// Once generation fails at some r it fails for every larger r; the grids
// leave those implied cells blank and record the propagation as evidence.
VerdictCell noPropagated() {
  return {Verdict::Blank, Evidence::Propagated, "fails for smaller r"};
}

VerdictCell unknown() { return {Verdict::Unknown, Evidence::None, "open"}; }

}  // namespace

VerdictMatrix buildVerdictMatrix(const EvidenceFlags& flags) {
  VerdictMatrix m;

  // Dimension 4: k-cycles on blowups of P^4 in r lines, r up to 10.
  m.dim4.dimension = 4;
  m.dim4.columnLabels = {"<=2", "3", "4", "5", "6", "7", "8", "9", "10"};
  m.dim4.kRows = {1, 2, 3};
  {
    std::vector<VerdictCell> k1;
    for (int i = 0; i < 6; ++i) k1.push_back(yes("curve cone dual is nef (r <= 7)"));
    k1.push_back(unknown());
    k1.push_back(unknown());
    k1.push_back(no(flags.curveSelfIntNegativeP4, "(3H - sum E)^4 = 81 - 9r < 0 at r = 10"));
    m.dim4.cells.push_back(std::move(k1));

    std::vector<VerdictCell> k2;
    for (int i = 0; i < 3; ++i) k2.push_back(yes("2-cycle dual generators are nef (r <= 4)"));
    k2.push_back(no(flags.quadricWitnessOutside,
                    "quadric surface witness outside Lin_2(X^4_5)"));
    for (int i = 0; i < 5; ++i) k2.push_back(noPropagated());
    m.dim4.cells.push_back(std::move(k2));

    std::vector<VerdictCell> k3;
    for (int i = 0; i < 3; ++i) k3.push_back(yes("divisor dual curve classes are nef (r <= 4)"));
    k3.push_back(no(false, "extremal dual curve class is not nef at r = 5"));
    for (int i = 0; i < 5; ++i) k3.push_back(noPropagated());
    m.dim4.cells.push_back(std::move(k3));
  }

  // Dimension 5: k-cycles on blowups of P^5 in r lines, r up to 6.
  m.dim5.dimension = 5;
  m.dim5.columnLabels = {"<=3", "4", "5", "6"};
  m.dim5.kRows = {1, 2, 3, 4};
  {
    std::vector<VerdictCell> k1;
    for (int i = 0; i < 3; ++i) k1.push_back(yes("curve cone dual is nef (r <= 5)"));
    k1.push_back(no(flags.curveSelfIntNegativeP5, "(2H - sum E)^5 = 32 - 6r < 0 at r = 6"));
    m.dim5.cells.push_back(std::move(k1));

    std::vector<VerdictCell> k2;
    for (int i = 0; i < 3; ++i) k2.push_back(yes("2-cycle dual generators are nef (r <= 5)"));
    k2.push_back(unknown());
    m.dim5.cells.push_back(std::move(k2));

    std::vector<VerdictCell> k3;
    k3.push_back(yes("toric for r <= 3"));
    k3.push_back(no(flags.segreWitnessOutside, "Segre cubic witness outside Lin_3(X^5_4)"));
    for (int i = 0; i < 2; ++i) k3.push_back(noPropagated());
    m.dim5.cells.push_back(std::move(k3));

    std::vector<VerdictCell> k4;
    k4.push_back(yes("toric for r <= 3"));
    k4.push_back(no(flags.cubicDivisorWitnessOutside,
                    "cubic divisor witness outside Lin^1(X^5_4)"));
    for (int i = 0; i < 2; ++i) k4.push_back(noPropagated());
    m.dim5.cells.push_back(std::move(k4));
  }

  return m;
}

namespace {

std::string evidenceMark(const VerdictCell& c) {
  if (c.verdict == Verdict::Blank || c.verdict == Verdict::Unknown) return "";
  switch (c.evidence) {
    case Evidence::ArithmeticallyVerified: return "A";
    case Evidence::PaperAsserted: return "p";
    case Evidence::Propagated: return ".";
    case Evidence::None: return "";
  }
  return "";
}

void renderGrid(std::ostringstream& out, const VerdictGrid& g) {
  out << "Dimension " << g.dimension << "  (+ generated, x not, ? open;"
      << " A arithmetically verified, p paper-asserted, . propagated)\n";
  out << "  k\\r";
  for (const std::string& c : g.columnLabels) out << "\t" << c;
  out << "\n";
  for (std::size_t row = 0; row < g.kRows.size(); ++row) {
    out << "  " << g.kRows[row];
    for (const VerdictCell& cell : g.cells[row]) {
      out << "\t" << verdictSymbol(cell.verdict);
      const std::string mark = evidenceMark(cell);
      if (!mark.empty()) out << "[" << mark << "]";
    }
    out << "\n";
  }
}

}  // namespace

std::string renderVerdictText(const VerdictMatrix& m) {
  std::ostringstream out;
  renderGrid(out, m.dim4);
  out << "\n";
  renderGrid(out, m.dim5);
  return out.str();
}

namespace {

OrderedJson gridToJson(const VerdictGrid& g) {
  OrderedJson out;
  out["dimension"] = g.dimension;
  out["columns"] = g.columnLabels;
  OrderedJson rows = OrderedJson::array();
  for (std::size_t row = 0; row < g.kRows.size(); ++row) {
    OrderedJson cells = OrderedJson::array();
    for (const VerdictCell& c : g.cells[row]) {
      OrderedJson cell;
      cell["verdict"] = c.verdict == Verdict::Yes       ? "yes"
                        : c.verdict == Verdict::No      ? "no"
                        : c.verdict == Verdict::Unknown ? "unknown"
                                                        : "blank";
      cell["evidence"] = evidenceName(c.evidence);
      if (!c.basis.empty()) cell["basis"] = c.basis;
      cells.push_back(std::move(cell));
    }
    rows.push_back(OrderedJson{{"k", g.kRows[row]}, {"cells", std::move(cells)}});
  }
  out["rows"] = std::move(rows);
  return out;
}

}  // namespace

OrderedJson verdictToJson(const VerdictMatrix& m) {
  return OrderedJson{{"dim4", gridToJson(m.dim4)}, {"dim5", gridToJson(m.dim5)}};
}

}  // namespace cyclecones
