#include "cyclecones/schubert.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cyclecones {

namespace {

Partition normalized(Partition p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

void validateInBox(const Grassmannian& g, const Partition& p) {
  if (static_cast<int>(p.size()) > g.rows())
    throw std::invalid_argument("partition has too many parts for " + g.name());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (p[i] > g.cols())
      throw std::invalid_argument("partition part exceeds the box of " + g.name());
    if (i > 0 && p[i] > p[i - 1])
      throw std::invalid_argument("partition must be weakly decreasing");
  }
}

}  // namespace

Grassmannian::Grassmannian(int a_, int n_) : a(a_), n(n_) {
  if (a < 0 || n <= a)
    throw std::invalid_argument("Grassmannian: need 0 <= a < n");
}

std::string Grassmannian::name() const {
  return "G(" + std::to_string(a) + "," + std::to_string(n) + ")";
}

int partitionWeight(const Partition& p) {
  int w = 0;
  for (int x : p) w += x;
  return w;
}

std::string partitionName(const Partition& p) {
  std::ostringstream os;
  os << "σ{";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) os << ",";
    os << p[i];
  }
  os << "}";
  return os.str();
}

SchubertExpression::SchubertExpression(const Grassmannian& g) : g_(g) {}

SchubertExpression SchubertExpression::sigma(const Grassmannian& g, const Partition& p) {
  const Partition q = normalized(p);
  validateInBox(g, q);
  SchubertExpression e(g);
  e.terms_[q] = 1;
  return e;
}

int SchubertExpression::codimension() const {
  if (terms_.empty()) throw std::logic_error("codimension: zero expression");
  const int w = partitionWeight(terms_.begin()->first);
  for (const auto& [p, c] : terms_)
    if (partitionWeight(p) != w)
      throw std::logic_error("codimension: mixed-degree expression");
  return w;
}

void SchubertExpression::addTerm(const Partition& p, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(p);
  if (it == terms_.end()) {
    terms_.emplace(p, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

SchubertExpression& SchubertExpression::operator+=(const SchubertExpression& other) {
  if (g_.a != other.g_.a || g_.n != other.g_.n)
    throw std::invalid_argument("SchubertExpression: different Grassmannians");
  for (const auto& [p, c] : other.terms_) addTerm(p, c);
  return *this;
}

SchubertExpression& SchubertExpression::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, coeff] : terms_) coeff *= c;
  return *this;
}

SchubertExpression SchubertExpression::pieri(int p) const {
  if (p < 1) throw std::invalid_argument("pieri: p >= 1 required");
  SchubertExpression out(g_);
  const int rows = g_.rows();
  const int cols = g_.cols();
  for (const auto& [lam, c] : terms_) {
    const auto lamAt = [&](int i) {
      return i < static_cast<int>(lam.size()) ? lam[static_cast<std::size_t>(i)] : 0;
    };
    // All horizontal-strip extensions: lam_i <= mu_i <= lam_{i-1}, mu_1 <=
    // cols, total growth exactly p; strips outside the box never arise.
    Partition mu(static_cast<std::size_t>(rows), 0);
    const auto extend = [&](auto&& self, int row, int remaining) -> void {
      if (row == rows) {
        if (remaining == 0) out.addTerm(normalized(mu), c);
        return;
      }
      const int low = lamAt(row);
      const int high = row == 0 ? cols : lamAt(row - 1);
      for (int v = low; v <= high; ++v) {
        const int grow = v - low;
        if (grow > remaining) break;
        mu[static_cast<std::size_t>(row)] = v;
        self(self, row + 1, remaining - grow);
      }
      mu[static_cast<std::size_t>(row)] = low;
    };
    extend(extend, 0, p);
  }
  return out;
}

Rat SchubertExpression::coefficient(const Partition& p) const {
  const auto it = terms_.find(normalized(p));
  return it == terms_.end() ? Rat(0) : it->second;
}

std::string SchubertExpression::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    const Rat abs = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (abs != 1) os << ratToString(abs);
    os << partitionName(p);
  }
  return os.str();
}

Rat schubertVarietyDegree(const Grassmannian& g, const Partition& lambda) {
  SchubertExpression e = SchubertExpression::sigma(g, lambda);
  const int steps = g.dimension() - partitionWeight(normalized(lambda));
  if (steps < 0) throw std::invalid_argument("schubertVarietyDegree: partition exceeds dimension");
  for (int i = 0; i < steps; ++i) e = e.pieri(1);
  const Partition box(static_cast<std::size_t>(g.rows()), g.cols());
  return e.coefficient(box);
}

int incidenceCodim(IncidenceCondition c, int d, int n) {
  if (d < 0 || d >= n) throw std::invalid_argument("incidenceCodim: need 0 <= d < n");
  switch (c) {
    case IncidenceCondition::ContainsLine:
      return 2 * (n - d);
    case IncidenceCondition::MeetsLine:
      return n - d - 1;
    case IncidenceCondition::ContainsPoint:
      return n - d;
  }
  throw std::logic_error("incidenceCodim: unreachable");
}

long long quadricCoefficientCount(int n) {
  return static_cast<long long>(n + 2) * (n + 1) / 2;
}

namespace {

void validateCodimArgs(int k, int N, int n) {
  if (n < 1 || k < 0 || k > n - 1 || N < 0)
    throw std::invalid_argument("expectedCodim: need 0 <= k <= n-1 and N >= 0");
}

long long baseConditionCount(int k, int N) {
  return 3LL * N + static_cast<long long>(k) * (k + 1) / 2;
}

}  // namespace

CodimReadings expectedCodim(int k, int N, int n) {
  validateCodimArgs(k, N, n);
  const long long base = baseConditionCount(k, N);
  const long long q = quadricCoefficientCount(n);
  return {std::max(base, q), std::min(base, q)};
}

CodimReadings expectedCodimVertex(int k, int N, int n) {
  validateCodimArgs(k, N, n);
  const long long base = baseConditionCount(k, N) + (n - k - 1);
  const long long q = quadricCoefficientCount(n);
  return {std::max(base, q), std::min(base, q)};
}

ConsistencyReport consistencyReport(int k, int N, int n) {
  validateCodimArgs(k, N, n);
  const CodimReadings e = expectedCodim(k, N, n);
  const long long q = quadricCoefficientCount(n);
  ConsistencyReport rep;
  rep.statedVertexCodim = std::min(e.capped + (n - k - 1), q);
  rep.workedVertexCodim = std::min(e.capped + (n - k), q);
  rep.projectiveQuadricDim = q - 1;
  rep.statedDimension = rep.projectiveQuadricDim - rep.statedVertexCodim;
  rep.workedDimension = rep.projectiveQuadricDim - rep.workedVertexCodim;
  rep.mismatch = rep.statedVertexCodim != rep.workedVertexCodim;
  rep.note = rep.mismatch
                 ? "vertex-condition term: formula subtracts n-k-1, the worked count subtracts n-k"
                 : "both readings agree";
  return rep;
}

}  // namespace cyclecones
