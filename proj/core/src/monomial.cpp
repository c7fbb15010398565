#include "cyclecones/monomial.hpp"

#include <charconv>
#include <stdexcept>
#include <string>

namespace cyclecones {

namespace {

std::string powerSpelling(const std::string& base, int exp) {
  if (exp == 1) return base;
  return base + "^" + std::to_string(exp);
}

[[noreturn]] void badMonomial(const std::string& what) {
  throw std::invalid_argument("CanonicalMonomial: " + what);
}

}  // namespace

CanonicalMonomial CanonicalMonomial::hyperplane(int k) {
  if (k < 0) badMonomial("negative degree");
  return {MonomialKind::Hyperplane, 0, k};
}

CanonicalMonomial CanonicalMonomial::lineMixed(int i, int k) {
  if (k < 2) badMonomial("H*E^" + std::to_string(k - 1) + " is not a mixed monomial");
  if (i < 1) badMonomial("line index must be positive");
  return {MonomialKind::LineMixed, i, k};
}

CanonicalMonomial CanonicalMonomial::linePure(int i, int k) {
  if (k < 1) badMonomial("E^k needs k >= 1");
  if (i < 1) badMonomial("line index must be positive");
  return {MonomialKind::LinePure, i, k};
}

CanonicalMonomial CanonicalMonomial::pointPure(int j, int k) {
  if (k < 1) badMonomial("e^k needs k >= 1");
  if (j < 1) badMonomial("point index must be positive");
  return {MonomialKind::PointPure, j, k};
}

std::string CanonicalMonomial::spelling() const {
  switch (kind) {
    case MonomialKind::Hyperplane:
      if (degree == 0) return "1";
      return powerSpelling("H", degree);
    case MonomialKind::LineMixed:
      return "H*" + powerSpelling("E" + std::to_string(index), degree - 1);
    case MonomialKind::LinePure:
      return powerSpelling("E" + std::to_string(index), degree);
    case MonomialKind::PointPure:
      return powerSpelling("e" + std::to_string(index), degree);
  }
  badMonomial("unreachable kind");
}

std::vector<CanonicalMonomial> canonicalBasis(const SpaceSignature& X, int k) {
  if (k < 0 || k > X.n) {
    throw std::out_of_range("canonicalBasis: degree " + std::to_string(k) + " outside [0, " +
                            std::to_string(X.n) + "]");
  }
  std::vector<CanonicalMonomial> basis;
  basis.push_back(CanonicalMonomial::hyperplane(k));
  if (k >= 2 && k <= X.n - 1) {
    for (int i = 1; i <= X.r; ++i) basis.push_back(CanonicalMonomial::lineMixed(i, k));
  }
  if (k >= 1 && k <= X.n - 2) {
    for (int i = 1; i <= X.r; ++i) basis.push_back(CanonicalMonomial::linePure(i, k));
  }
  if (k >= 1 && k <= X.n - 1) {
    for (int j = 1; j <= X.s; ++j) basis.push_back(CanonicalMonomial::pointPure(j, k));
  }
  return basis;
}

std::size_t basisIndex(const SpaceSignature& X, const CanonicalMonomial& m) {
  const int k = m.degree;
  const auto fail = [&] {
    throw std::invalid_argument("basisIndex: " + m.spelling() + " is not a basis monomial of " +
                                X.name());
  };
  if (k < 0 || k > X.n) fail();
  std::size_t pos = 0;
  const bool hasMixed = k >= 2 && k <= X.n - 1;
  const bool hasPure = k >= 1 && k <= X.n - 2;
  const bool hasPoint = k >= 1 && k <= X.n - 1;
  switch (m.kind) {
    case MonomialKind::Hyperplane:
      return 0;
    case MonomialKind::LineMixed:
      if (!hasMixed || m.index > X.r) fail();
      return 1 + static_cast<std::size_t>(m.index - 1);
    case MonomialKind::LinePure:
      if (!hasPure || m.index > X.r) fail();
      pos = 1 + (hasMixed ? static_cast<std::size_t>(X.r) : 0);
      return pos + static_cast<std::size_t>(m.index - 1);
    case MonomialKind::PointPure:
      if (!hasPoint || m.index > X.s) fail();
      pos = 1 + (hasMixed ? static_cast<std::size_t>(X.r) : 0) +
            (hasPure ? static_cast<std::size_t>(X.r) : 0);
      return pos + static_cast<std::size_t>(m.index - 1);
  }
  fail();
  return 0;  // unreachable
}

CanonicalMonomial monomialFromSpelling(const SpaceSignature& X, const std::string& s) {
  const auto fail = [&] {
    throw std::invalid_argument("monomialFromSpelling: cannot parse '" + s + "'");
  };
  const auto check = [&](const CanonicalMonomial& m) {
    basisIndex(X, m);  // validates in-range for the space; throws otherwise
    return m;
  };

  const auto parseInt = [&](std::string_view sv) {
    int value = 0;
    const auto res = std::from_chars(sv.data(), sv.data() + sv.size(), value);
    if (res.ec != std::errc() || res.ptr != sv.data() + sv.size()) fail();
    return value;
  };

  // Split an optional trailing "^k".
  std::string_view sv{s};
  int exp = 1;
  if (const auto caret = sv.rfind('^'); caret != std::string_view::npos) {
    exp = parseInt(sv.substr(caret + 1));
    sv = sv.substr(0, caret);
  }

  if (sv == "1" && exp == 1) return check(CanonicalMonomial::hyperplane(0));
  if (sv == "H") return check(CanonicalMonomial::hyperplane(exp));
  if (sv.size() >= 4 && sv.substr(0, 3) == "H*E") {
    return check(CanonicalMonomial::lineMixed(parseInt(sv.substr(3)), exp + 1));
  }
  if (sv.size() >= 2 && sv[0] == 'E') {
    return check(CanonicalMonomial::linePure(parseInt(sv.substr(1)), exp));
  }
  if (sv.size() >= 2 && sv[0] == 'e') {
    return check(CanonicalMonomial::pointPure(parseInt(sv.substr(1)), exp));
  }
  fail();
  return CanonicalMonomial::hyperplane(0);  // unreachable
}

}  // namespace cyclecones
