// Microbenchmarks for the hot paths: ring multiplication, cone dualization,
// and membership queries with certificates.
#include <benchmark/benchmark.h>

#include <cyclecones/cone.hpp>
#include <cyclecones/graded_class.hpp>
#include <cyclecones/incidence.hpp>
#include <cyclecones/monomial.hpp>
#include <cyclecones/signed_basis.hpp>
#include <cyclecones/space.hpp>

#include <random>
#include <vector>

using namespace cyclecones;

namespace {

GradedClass randomClass(const SpaceSignature& X, int k, std::mt19937_64& gen) {
  std::uniform_int_distribution<int> d(-3, 3);
  RatVec coords(canonicalBasis(X, k).size());
  for (auto& x : coords) x = Rat(d(gen));
  return GradedClass::fromCoords(X, k, coords);
}

struct ConeSetup {
  RayCone cone;
  RayCone dual;
  std::vector<IntVec> probes;
};

// The 46-generator planar cone on the two-line three-point fourfold: the
// largest dualization the table suite performs.
ConeSetup planarConeX423() {
  const SpaceSignature X(4, 2, 3);
  const SignedBasis basis(X, 2);
  std::vector<IntVec> gens;
  for (const auto& g : linearConeGenerators(X, 2)) {
    const RatVec v = toSigned(basis, g.cls);
    IntVec w;
    for (const Rat& x : v) w.push_back(numerator(x));
    gens.push_back(std::move(w));
  }
  ConeSetup s;
  s.cone = makeCone(basis.size(), gens, signedPairingMatrix(X, 2));
  s.dual = dualCone(s.cone);
  std::mt19937_64 gen(17);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int i = 0; i < 16; ++i) {
    IntVec v(basis.size());
    for (auto& x : v) x = Int(d(gen));
    s.probes.push_back(std::move(v));
  }
  return s;
}

void BM_RingMultiply(benchmark::State& state) {
  const SpaceSignature X(6, 5, 5);
  std::mt19937_64 gen(42);
  std::vector<GradedClass> as, bs;
  for (int i = 0; i < 32; ++i) {
    as.push_back(randomClass(X, 2, gen));
    bs.push_back(randomClass(X, 3, gen));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(multiply(as[i % as.size()], bs[i % bs.size()]));
    ++i;
  }
}
BENCHMARK(BM_RingMultiply);

void BM_DualCone(benchmark::State& state) {
  const ConeSetup s = planarConeX423();
  for (auto _ : state) benchmark::DoNotOptimize(dualCone(s.cone));
}
BENCHMARK(BM_DualCone)->Unit(benchmark::kMillisecond);

void BM_Membership(benchmark::State& state) {
  const ConeSetup s = planarConeX423();
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(membership(s.probes[i % s.probes.size()], s.dual));
    ++i;
  }
}
BENCHMARK(BM_Membership);

}  // namespace

BENCHMARK_MAIN();
