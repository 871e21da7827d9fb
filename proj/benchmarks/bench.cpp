#include <benchmark/benchmark.h>

#include "firwb/descent.hpp"
#include "firwb/firmod.hpp"

using namespace firwb;

namespace {

RatFunc R(const char* s) { return parse_ratfunc(s); }

void BM_RatFuncSum(benchmark::State& st) {
  RatFunc a = R("(x1^3 - x2*x3 + 1)/(x1*x2 + x3^2 - 2)"), b = R("(x2^2 + x4)/(x1*x2 + x3^2 - 2)/(x4 + 1)");
  for (auto _ : st) benchmark::DoNotOptimize(a + b);
}
BENCHMARK(BM_RatFuncSum);

void BM_Gcd(benchmark::State& st) {
  Poly c = R("x1*x2 - x3 + 4").num();
  Poly a = c * R("x1^3 + x2*x4 - 7").num(), b = c * R("x3^2*x4 + x1 - x2").num();
  for (auto _ : st) benchmark::DoNotOptimize(Poly::gcd(a, b));
}
BENCHMARK(BM_Gcd);

void BM_RealizeLevelMatrix(benchmark::State& st) {
  auto N = static_cast<std::uint32_t>(st.range(0));
  FirMorphism f = FirMorphism::single(2, 3, {1, 3}, R("t2")) + FirMorphism::single(2, 3, {3, 2}, R("t1 - 1"));
  StdMap m = realize(f);
  for (auto _ : st) benchmark::DoNotOptimize(level_matrix(m, N));
}
BENCHMARK(BM_RealizeLevelMatrix)->DenseRange(3, 6);

void BM_HomBasis(benchmark::State& st) {
  auto r = static_cast<std::uint32_t>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(hom_basis(r, r / 2));
}
BENCHMARK(BM_HomBasis)->DenseRange(2, 4);

void BM_InvariantVectors(benchmark::State& st) {
  ExactMatrix b(3, 3);
  b(0, 0) = R("x1 + 2");
  b(0, 1) = R("x2*x3");
  b(1, 1) = R("x2 - x3 + 1");
  b(1, 2) = R("x1^2");
  b(2, 2) = R("x3 + 5");
  auto rep = SemilinearRep::coboundary(GroupAction::symmetric(3), b);
  for (auto _ : st) benchmark::DoNotOptimize(invariant_vectors(rep));
}
BENCHMARK(BM_InvariantVectors);

void BM_KernelFromP1(benchmark::State& st) {
  FirMorphism f = FirMorphism::single(1, 2, {1}, R("t2^2 - 1")) - FirMorphism::single(1, 2, {2}, R("t1^2 - 1"));
  for (auto _ : st) benchmark::DoNotOptimize(kernel_from_P1({f}, static_cast<std::uint32_t>(st.range(0))));
}
BENCHMARK(BM_KernelFromP1)->Arg(2)->Arg(6);

void BM_Resolve(benchmark::State& st) {
  Presentation p = Presentation::free({2});
  p.add_relation(1, {FirMorphism::single(1, 2, {1}, R("t2")) - FirMorphism::single(1, 2, {2}, R("t1"))});
  for (auto _ : st) benchmark::DoNotOptimize(resolve(p));
}
BENCHMARK(BM_Resolve)->Unit(benchmark::kMillisecond);

void BM_GrothendieckClass(benchmark::State& st) {
  Presentation p = Presentation::free({2, 1});
  p.add_relation(1, {FirMorphism::single(1, 2, {1}, R("1")), FirMorphism::identity(1).scaled(R("-1"))});
  for (auto _ : st) benchmark::DoNotOptimize(grothendieck_class(p));
}
BENCHMARK(BM_GrothendieckClass)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
