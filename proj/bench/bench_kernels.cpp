// Serial reference versus OpenMP kernel for the expensive routines.
// Each benchmark takes the execution mode as its argument: 0 serial, 1 parallel.

#include <benchmark/benchmark.h>

#include "mckay/hilb_fan.hpp"
#include "mckay/io.hpp"
#include "mckay/iterated_fan.hpp"
#include "mckay/quiver_stability.hpp"

using namespace mckay;

namespace {

Exec mode(const benchmark::State& st) { return st.range(0) ? Exec::parallel : Exec::serial; }

AbelianAction group(const char* text) { return parse_group_inline(text); }
NormalChain chain(const char* text) { return parse_chain_inline(text); }

void BM_enumerate(benchmark::State& st) {
  const auto G = group("1/12(1,2,9)");
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_crepant_fans(G, 12, mode(st)));
}

void BM_scan(benchmark::State& st) {
  const auto G = group("1/30(1,3,26)");
  for (auto _ : st) benchmark::DoNotOptimize(g_hilb_fan_scan(G, mode(st)));
}

void BM_iterated(benchmark::State& st) {
  const auto c = chain("1/30(21,1,8)>1/6(3,1,2)>1/2(1,1,0)");
  for (auto _ : st) benchmark::DoNotOptimize(iterated_fan(c, mode(st)));
}

void BM_is_generic(benchmark::State& st) {
  const auto th = theta_construct(chain("1/16(1,3,12)>1/8(1,3,4)"), {std::vector<Rational>{-28, 1, 2, 3, 4, 5, 6, 7},
                                          std::vector<Rational>{-1, 1}});
  for (auto _ : st) benchmark::DoNotOptimize(is_generic(th, mode(st)));
}

void BM_chamber(benchmark::State& st) {
  const auto fan = iterated_fan(chain("1/16(1,3,12)>1/8(1,3,4)"));
  for (auto _ : st) benchmark::DoNotOptimize(chamber_inequalities(fan, mode(st)));
}

}  // namespace

BENCHMARK(BM_enumerate)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_scan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_iterated)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_is_generic)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_chamber)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
