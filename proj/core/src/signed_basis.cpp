#include "cyclecones/signed_basis.hpp"

#include <stdexcept>

namespace cyclecones {

namespace {

int displaySign(MonomialKind kind, int k) {
  switch (kind) {
    case MonomialKind::Hyperplane:
      return 1;
    case MonomialKind::LineMixed:
      return k % 2 == 0 ? 1 : -1;  // (-1)^k
    case MonomialKind::LinePure:
    case MonomialKind::PointPure:
      return k % 2 == 0 ? -1 : 1;  // (-1)^{k-1}
  }
  throw std::logic_error("displaySign: unreachable");
}

std::string displayLabel(const SpaceSignature& X, const CanonicalMonomial& m, int sign) {
  const int k = m.degree;
  const std::string idx = std::to_string(m.index);
  if (m.kind == MonomialKind::Hyperplane) return k == X.n - 1 ? "l" : m.spelling();
  if (m.kind == MonomialKind::LineMixed) {
    if (k == X.n - 1) return "l" + idx;  // fiber of E_i over its line
    if (k == 2) return "F" + idx;
    if (k == 3 && X.n == 5) return "f" + idx;
  }
  if (m.kind == MonomialKind::LinePure) {
    if (k == 2) return "G" + idx;
    if (k == 3 && X.n == 5) return "g" + idx;
  }
  return (sign < 0 ? "-" : "") + m.spelling();
}

}  // namespace

SignedBasis::SignedBasis(const SpaceSignature& X, int degree) : space(X), k(degree) {
  monomials = canonicalBasis(X, degree);
  signs.reserve(monomials.size());
  labels.reserve(monomials.size());
  for (const CanonicalMonomial& m : monomials) {
    const int sign = displaySign(m.kind, k);
    signs.push_back(sign);
    labels.push_back(displayLabel(X, m, sign));
  }
}

RatVec toSigned(const SignedBasis& basis, const GradedClass& c) {
  if (c.space() != basis.space || c.degree() != basis.k)
    throw std::invalid_argument("toSigned: class does not match basis grade");
  RatVec out(basis.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = c.coords()[i] * basis.signs[i];
  return out;
}

GradedClass fromSigned(const SignedBasis& basis, const RatVec& coords) {
  if (coords.size() != basis.size())
    throw std::invalid_argument("fromSigned: coordinate count mismatch");
  RatVec canonical(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i)
    canonical[i] = coords[i] * basis.signs[i];
  return GradedClass::fromCoords(basis.space, basis.k, std::move(canonical));
}

RatMatrix signedPairingMatrix(const SpaceSignature& X, int k) {
  const SignedBasis rows(X, k);
  const SignedBasis cols(X, X.n - k);
  RatMatrix m = pairingMatrix(X, k);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j)
      m[i][j] *= Rat(rows.signs[i] * cols.signs[j]);
  return m;
}

}  // namespace cyclecones
