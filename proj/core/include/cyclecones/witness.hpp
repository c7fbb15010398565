#ifndef CYCLECONES_WITNESS_HPP
#define CYCLECONES_WITNESS_HPP

#include "cyclecones/graded_class.hpp"

#include <string>
#include <vector>

namespace cyclecones {

// Named effective classes used to exhibit cycles outside the linear cones.
//   "quadric-surface-x45":  proper transform on X^4_5 of a quadric surface
//                           containing L_1, L_2 and meeting L_3, L_4, L_5.
//   "segre-cubic-x54":      proper transform on X^5_4 of a degree-3 Segre
//                           threefold P^1 x P^2 containing the four lines.
//   "cubic-divisor-x54":    3H - 2E_1 - 2E_2 - 2E_3 - E_4 on X^5_4.
// Throws std::invalid_argument for unknown names.
GradedClass witnessClass(const std::string& name);

std::vector<std::string> witnessNames();

}  // namespace cyclecones

#endif  // CYCLECONES_WITNESS_HPP
