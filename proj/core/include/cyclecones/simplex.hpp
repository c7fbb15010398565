#ifndef CYCLECONES_SIMPLEX_HPP
#define CYCLECONES_SIMPLEX_HPP

#include "cyclecones/linalg.hpp"
#include "cyclecones/rational.hpp"

#include <optional>
#include <vector>

namespace cyclecones {

// Exact phase-1 simplex for the feasibility system
//     sum_i lambda_i g_i + sum_j mu_j l_j = target,  lambda >= 0, mu free.
// Bland's rule; rationals throughout, so termination is unconditional.
//
// Feasible: returns the lambda/mu of a basic solution.
// Infeasible: returns a Farkas separator w with w.g_i >= 0 for all i,
// w.l_j = 0 for all j, and w.target < 0.
struct ConicSolveResult {
  bool feasible = false;
  RatVec lambda;     // size = generators.size()
  RatVec mu;         // size = lines.size()
  RatVec separator;  // empty when feasible
};

ConicSolveResult solveConicCombination(const std::vector<RatVec>& generators,
                                       const std::vector<RatVec>& lines,
                                       const RatVec& target);

}  // namespace cyclecones

#endif  // CYCLECONES_SIMPLEX_HPP
