#include "cyclecones/space.hpp"

#include <stdexcept>
#include <string>

namespace cyclecones {

SpaceSignature::SpaceSignature(int n_, int r_, int s_) : n(n_), r(r_), s(s_) {
  if (n < 2) throw std::invalid_argument("SpaceSignature: need n >= 2");
  if (r < 0 || s < 0) throw std::invalid_argument("SpaceSignature: need r, s >= 0");
  if (r > 0 && n < 3) {
    throw std::invalid_argument("SpaceSignature: line centers require n >= 3");
  }
}

std::string SpaceSignature::name() const {
  std::string out = "X^" + std::to_string(n) + "_";
  if (s == 0) return out + std::to_string(r);
  return out + "{" + std::to_string(r) + "," + std::to_string(s) + "}";
}

}  // namespace cyclecones
