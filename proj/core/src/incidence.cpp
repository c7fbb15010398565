#include "cyclecones/incidence.hpp"

#include "cyclecones/exceptional.hpp"
#include "cyclecones/monomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cyclecones {

namespace {

void validateProfile(const SpaceSignature& X, const IncidenceProfile& p) {
  if (p.d < 0 || p.d > X.n - 1)
    throw std::invalid_argument("IncidenceProfile: d out of range");
  for (int i : p.containsLines)
    if (i < 1 || i > X.r) throw std::invalid_argument("IncidenceProfile: line index out of range");
  for (int i : p.meetsLines) {
    if (i < 1 || i > X.r) throw std::invalid_argument("IncidenceProfile: line index out of range");
    if (p.containsLines.count(i))
      throw std::invalid_argument("IncidenceProfile: a line cannot be both contained and met");
  }
  for (int j : p.passesThroughPoints)
    if (j < 1 || j > X.s) throw std::invalid_argument("IncidenceProfile: point index out of range");
}

std::string joinIndices(const std::set<int>& s, const char* prefix) {
  std::ostringstream os;
  bool first = true;
  for (int i : s) {
    if (!first) os << ",";
    os << prefix << i;
    first = false;
  }
  return os.str();
}

GradedClass properTransform(const SpaceSignature& X, const IncidenceProfile& p, int deg,
                            bool assertFeasible) {
  validateProfile(X, p);
  if (assertFeasible && !feasibleProfile(X, p))
    throw std::invalid_argument("properTransform: infeasible incidence profile " + p.str());
  const int n = X.n;
  const int k = n - p.d;
  const GradedClass H = GradedClass::hyperplanePower(X, 1);

  if (k == 1) {
    // Hyperplane sections: containment is a single-multiplicity condition
    // and meeting a line is automatic.
    GradedClass cls = Rat(deg) * GradedClass::hyperplanePower(X, 1);
    for (int i : p.containsLines)
      cls -= GradedClass::monomial(X, CanonicalMonomial::linePure(i, 1));
    for (int j : p.passesThroughPoints)
      cls -= GradedClass::monomial(X, CanonicalMonomial::pointPure(j, 1));
    return cls;
  }

  const Rat sk = (k % 2 == 0) ? Rat(-1) : Rat(1);  // (-1)^{k-1}
  GradedClass cls = Rat(deg) * GradedClass::hyperplanePower(X, k);
  for (int i : p.meetsLines) {
    const GradedClass E = GradedClass::monomial(X, CanonicalMonomial::linePure(i, 1));
    cls += sk * multiply(H, power(E, k - 1));
  }
  for (int i : p.containsLines) {
    const GradedClass E = GradedClass::monomial(X, CanonicalMonomial::linePure(i, 1));
    cls += (Rat(k + deg - 1) * sk) * multiply(H, power(E, k - 1));
    cls -= sk * power(E, k);
  }
  for (int j : p.passesThroughPoints) {
    const GradedClass e = GradedClass::monomial(X, CanonicalMonomial::pointPure(j, 1));
    cls -= sk * power(e, k);
  }
  return cls;
}

}  // namespace

std::string IncidenceProfile::str() const {
  std::ostringstream os;
  os << "d=" << d;
  if (!containsLines.empty()) os << " contains " << joinIndices(containsLines, "L");
  if (!meetsLines.empty()) os << " meets " << joinIndices(meetsLines, "L");
  if (!passesThroughPoints.empty()) os << " through " << joinIndices(passesThroughPoints, "p");
  return os.str();
}

Int expectedFamilyDimension(const SpaceSignature& X, const IncidenceProfile& p) {
  validateProfile(X, p);
  const int n = X.n;
  const int d = p.d;
  Int dim = Int(d + 1) * (n - d);
  dim -= Int(2 * (n - d)) * static_cast<int>(p.containsLines.size());
  dim -= Int(n - d - 1) * static_cast<int>(p.meetsLines.size());
  dim -= Int(n - d) * static_cast<int>(p.passesThroughPoints.size());
  return dim;
}

bool feasibleProfile(const SpaceSignature& X, const IncidenceProfile& p) {
  validateProfile(X, p);
  if (expectedFamilyDimension(X, p) < 0) return false;
  const int pinned =
      2 * static_cast<int>(p.containsLines.size()) +
      static_cast<int>(p.passesThroughPoints.size());
  if (pinned > 0 && std::min(X.n, pinned - 1) > p.d) return false;
  return true;
}

GradedClass properTransformLinear(const SpaceSignature& X, const IncidenceProfile& p,
                                  bool assertFeasible) {
  return properTransform(X, p, 1, assertFeasible);
}

GradedClass properTransformQuadric(const SpaceSignature& X, const IncidenceProfile& p,
                                   bool assertFeasible) {
  return properTransform(X, p, 2, assertFeasible);
}

std::vector<GeneratorWithProvenance> linearConeGenerators(const SpaceSignature& X, int d) {
  if (d < 0 || d > X.n - 1)
    throw std::invalid_argument("linearConeGenerators: d out of range");
  std::map<RatVec, std::string> seen;
  const auto add = [&](const GradedClass& cls, const std::string& provenance) {
    if (cls.isZero()) return;
    seen.emplace(cls.coords(), provenance);
  };

  // Proper transforms of d-planes over every feasible incidence profile:
  // each line is contained, met, or ignored; each point is on or off.
  std::vector<int> lineState(X.r, 0), pointState(X.s, 0);
  const auto buildProfile = [&]() {
    IncidenceProfile p;
    p.d = d;
    for (int i = 0; i < X.r; ++i) {
      if (lineState[i] == 1) p.meetsLines.insert(i + 1);
      if (lineState[i] == 2) p.containsLines.insert(i + 1);
    }
    for (int j = 0; j < X.s; ++j)
      if (pointState[j] == 1) p.passesThroughPoints.insert(j + 1);
    return p;
  };
  const auto enumerate = [&](auto&& self, int linePos, int pointPos) -> void {
    if (linePos < X.r) {
      for (int st = 0; st < 3; ++st) {
        lineState[linePos] = st;
        self(self, linePos + 1, pointPos);
      }
      return;
    }
    if (pointPos < X.s) {
      for (int st = 0; st < 2; ++st) {
        pointState[pointPos] = st;
        self(self, linePos, pointPos + 1);
      }
      return;
    }
    const IncidenceProfile p = buildProfile();
    if (feasibleProfile(X, p)) add(properTransformLinear(X, p), p.str());
  };
  enumerate(enumerate, 0, 0);

  // Linear cycles inside the exceptional divisors.
  for (int i = 1; i <= X.r; ++i) {
    if (d <= X.n - 2)
      add(fiberSliceCycle(X, i, d), "fiber-slice dim " + std::to_string(d) + " in E" + std::to_string(i));
    if (d >= 1)
      add(sweepCycle(X, i, d), "sweep dim " + std::to_string(d) + " in E" + std::to_string(i));
  }
  for (int j = 1; j <= X.s; ++j)
    add(pointSubspaceCycle(X, j, d), "linear subspace dim " + std::to_string(d) + " in e" + std::to_string(j));

  std::vector<GeneratorWithProvenance> out;
  out.reserve(seen.size());
  for (const auto& [coords, provenance] : seen)
    out.push_back({GradedClass::fromCoords(X, X.n - d, RatVec(coords)), provenance});
  return out;
}

}  // namespace cyclecones
