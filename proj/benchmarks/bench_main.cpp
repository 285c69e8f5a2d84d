#include <benchmark/benchmark.h>

#include "openbook/classify.hpp"
#include "openbook/invariants.hpp"
#include "openbook/mcg.hpp"
#include "openbook/surface.hpp"

using namespace openbook;

static void BM_twist_iterate(benchmark::State& state) {
  PlanarSurface S = make_surface(5);
  CurveWord a = curve_from_partition(S, {2, 3});
  CurveWord c = curve_from_partition(S, {3, 4});
  std::int64_t n = state.range(0);
  for (auto _ : state) {
    CurveWord x = a;
    for (int k = 0; k < 4; ++k) x = apply_twist(S, c, n, x);
    benchmark::DoNotOptimize(x.letters.data());
    state.counters["letters"] = static_cast<double>(x.size());
  }
}
BENCHMARK(BM_twist_iterate)->Arg(1)->Arg(2)->Arg(3);

static void BM_intersection_after_twisting(benchmark::State& state) {
  PlanarSurface S = make_surface(5);
  CurveWord a = curve_from_partition(S, {2, 3});
  CurveWord b = curve_from_partition(S, {2, 4});
  CurveWord c = curve_from_partition(S, {3, 4});
  CurveWord ta = a, tb = b;
  for (int k = 0; k < state.range(0); ++k) {
    ta = apply_twist(S, c, 2, ta);
    tb = apply_twist(S, c, 2, tb);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(geometric_intersection(S, ta, tb));
  }
}
BENCHMARK(BM_intersection_after_twisting)->Arg(1)->Arg(3)->Arg(5);

static void BM_mcg_equal_inverse(benchmark::State& state) {
  PlanarSurface S = make_surface(4);
  TwistWord phi = make_twist_word(
      S, {TwistFactor{curve_from_partition(S, {2, 3}), 2},
          TwistFactor{curve_from_partition(S, {1, 2}), -1},
          TwistFactor{curve_from_partition(S, {3}), 1}});
  TwistWord both = concat(phi, inverse(phi));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mcg_is_identity(S, both));
  }
}
BENCHMARK(BM_mcg_equal_inverse);

static void BM_classify_family(benchmark::State& state) {
  FamilyParams v;
  v.p = 1;
  for (int i = 0; i < 4; ++i) v.n[i] = 6;
  OpenBook ob = build_family(v);
  ClassifyOptions opts;
  opts.cap_targets = {{2}};
  for (auto _ : state) {
    Certificate cert = classify(ob, opts);
    benchmark::DoNotOptimize(&cert);
  }
}
BENCHMARK(BM_classify_family);

BENCHMARK_MAIN();
