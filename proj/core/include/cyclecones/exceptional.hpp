#ifndef CYCLECONES_EXCEPTIONAL_HPP
#define CYCLECONES_EXCEPTIONAL_HPP

#include "cyclecones/graded_class.hpp"
#include "cyclecones/space.hpp"

namespace cyclecones {

// Classes of the standard effective cycles inside the exceptional divisors,
// computed as classes on the blowup.
//
// The divisor E_i over a line is a P^1 x P^{n-2} ruled by the fibers; write
// u = H|_{E_i} for the hyperplane pulled back from the base line and
// v = (H - E_i)|_{E_i} for the hyperplane of the P^{n-2} factor.  Then u^2 = 0
// and deg(u v^{n-2}) = 1.  A class z inside E_i determines a class on the
// blowup through the pairing: <[z], w> = deg_X(E_i * z~ * w) where z~ is any
// polynomial in H, H-E_i restricting to z.  The functions below solve those
// pairing equations against the full codimension basis; nothing about the
// answers is hard-coded (tests pin the resulting closed forms).
//
// `rulingShift` replaces v by v + c*u, an equally valid choice of the second
// ruling class; the solved class on the blowup must not depend on it.

// Dimension-d slice of the fiber ruling: u * v^{n-2-d} inside E_i, for
// 0 <= d <= n-2.  d = 1 is the fiber line class l_i, d = n-2 a full fiber
// hyperplane.
GradedClass fiberSliceCycle(const SpaceSignature& X, int i, int d, int rulingShift = 0);

// Dimension-d sweep: preimage v^{n-1-d} of a general P^{d-1} of the base
// P^{n-2} factor, for 1 <= d <= n-1.  d = n-1 is E_i itself; d = 1 is a
// section sweeping across the ruling.
GradedClass sweepCycle(const SpaceSignature& X, int i, int d, int rulingShift = 0);

// Dimension-d linear subspace inside the exceptional P^{n-1} over the point
// p_j, for 0 <= d <= n-1.  Solved from h = -e_j|_{e_j}; equals
// (-1)^{n+d-1} e_j^{n-d}.
GradedClass pointSubspaceCycle(const SpaceSignature& X, int j, int d);

}  // namespace cyclecones

#endif  // CYCLECONES_EXCEPTIONAL_HPP
