#include "cyclecones/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>

namespace cyclecones {

std::string ratToString(const Rat& x) {
  const Int num = numerator(x);
  const Int den = denominator(x);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rat ratFromString(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rat(Int(std::string(s)));
    }
    Int num{std::string(s.substr(0, slash))};
    Int den{std::string(s.substr(slash + 1))};
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument("bad rational literal '" + std::string(s) + "': " + e.what());
  }
}

bool isInteger(const Rat& x) { return denominator(x) == 1; }

Int vectorContent(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) {
    g = boost::multiprecision::gcd(g, x);
    if (g == 1) break;
  }
  return g;
}

IntVec primitiveVector(const RatVec& v) {
  Int lcmDen = 1;
  for (const Rat& x : v) lcmDen = boost::multiprecision::lcm(lcmDen, denominator(x));
  IntVec scaled(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    scaled[i] = numerator(v[i]) * (lcmDen / denominator(v[i]));
  }
  return primitiveVector(scaled);
}

IntVec primitiveVector(const IntVec& v) {
  const Int g = vectorContent(v);
  if (g == 0 || g == 1) return v;
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

RatVec toRatVec(const IntVec& v) {
  RatVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
  return out;
}

Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rat acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

Rat dot(const IntVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rat acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += Rat(a[i]) * b[i];
  return acc;
}

Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Int acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

int lexCompare(const IntVec& a, const IntVec& b) {
  const std::size_t m = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i] < b[i]) return -1;
    if (a[i] > b[i]) return 1;
  }
  if (a.size() < b.size()) return -1;
  if (a.size() > b.size()) return 1;
  return 0;
}

}  // namespace cyclecones
