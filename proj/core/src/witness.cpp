#include "cyclecones/witness.hpp"

#include "cyclecones/incidence.hpp"
#include "cyclecones/monomial.hpp"
#include "cyclecones/signed_basis.hpp"

#include <stdexcept>

namespace cyclecones {

GradedClass witnessClass(const std::string& name) {
  if (name == "quadric-surface-x45") {
    const SpaceSignature X(4, 5, 0);
    IncidenceProfile p;
    p.d = 2;
    p.containsLines = {1, 2};
    p.meetsLines = {3, 4, 5};
    // The family of such quadrics is nonempty even though no 2-plane has
    // this incidence, so the linear-profile feasibility check must be off.
    return properTransformQuadric(X, p, /*assertFeasible=*/false);
  }
  if (name == "segre-cubic-x54") {
    const SpaceSignature X(5, 4, 0);
    return fromSigned(SignedBasis(X, 2),
                      {3, -4, -4, -4, -4, -1, -1, -1, -1});
  }
  if (name == "cubic-divisor-x54") {
    const SpaceSignature X(5, 4, 0);
    GradedClass cls = Rat(3) * GradedClass::hyperplanePower(X, 1);
    for (int i = 1; i <= 3; ++i)
      cls -= Rat(2) * GradedClass::monomial(X, CanonicalMonomial::linePure(i, 1));
    cls -= GradedClass::monomial(X, CanonicalMonomial::linePure(4, 1));
    return cls;
  }
  throw std::invalid_argument("witnessClass: unknown witness '" + name + "'");
}

std::vector<std::string> witnessNames() {
  return {"quadric-surface-x45", "segre-cubic-x54", "cubic-divisor-x54"};
}

}  // namespace cyclecones
