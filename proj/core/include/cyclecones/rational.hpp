#ifndef CYCLECONES_RATIONAL_HPP
#define CYCLECONES_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace cyclecones {

// Exact arithmetic everywhere: intermediate determinants and simplex pivots
// overflow 64-bit integers even for the small spaces handled here.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// "p" for integers, "p/q" otherwise (q > 0, gcd(p,q) = 1).
std::string ratToString(const Rat& x);

// Accepts "p", "p/q", optional leading +/-.  Throws std::invalid_argument.
Rat ratFromString(std::string_view s);

bool isInteger(const Rat& x);

// gcd of all entries, >= 0; 0 for the zero vector.
Int vectorContent(const IntVec& v);

// Clears denominators and divides out the content.  Direction is preserved;
// the zero vector maps to itself.
IntVec primitiveVector(const RatVec& v);
IntVec primitiveVector(const IntVec& v);

RatVec toRatVec(const IntVec& v);

Rat dot(const RatVec& a, const RatVec& b);
Rat dot(const IntVec& a, const RatVec& b);
Int dot(const IntVec& a, const IntVec& b);

// Lexicographic compare, for canonical sorting of ray lists.
int lexCompare(const IntVec& a, const IntVec& b);

}  // namespace cyclecones

#endif  // CYCLECONES_RATIONAL_HPP
