#ifndef CYCLECONES_SPACE_HPP
#define CYCLECONES_SPACE_HPP

#include <compare>
#include <string>

namespace cyclecones {

// The blowup of P^n along r general lines and s general points.
// Throws std::invalid_argument for parameters outside the supported range:
// n >= 2, r,s >= 0, and r >= 1 requires n >= 3 (lines blown up in P^2 are
// divisors already, and the line monomial bands would be empty).
struct SpaceSignature {
  int n = 3;
  int r = 0;
  int s = 0;

  SpaceSignature(int n_, int r_, int s_);

  auto operator<=>(const SpaceSignature&) const = default;

  // e.g. "X^4_{2,3}"
  std::string name() const;
};

}  // namespace cyclecones

#endif  // CYCLECONES_SPACE_HPP
