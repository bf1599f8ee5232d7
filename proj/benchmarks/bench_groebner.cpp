#include <benchmark/benchmark.h>

#include "detgb/determinantal.hpp"

using namespace detgb;

namespace {

RingPtr bench_ring(std::uint32_t m, std::uint32_t n, bool prime_field) {
  Field field = prime_field ? Field::prime(32003) : Field::rationals();
  return make_ring(m, n, std::move(field), TermOrder::row_major_lex(m, n));
}

void BM_MonomialCompare(benchmark::State& state) {
  RingPtr r = bench_ring(3, 5, false);
  Monomial a = Monomial(r->var_count()).times_var(0).times_var(7, 2).times_var(13);
  Monomial b = Monomial(r->var_count()).times_var(0).times_var(8).times_var(14, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(r->order().compare(a, b));
  }
}
BENCHMARK(BM_MonomialCompare);

void BM_MinorsExpansion(benchmark::State& state) {
  std::uint32_t t = static_cast<std::uint32_t>(state.range(0));
  RingPtr r = bench_ring(t, t + 1, false);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        minors_ideal(r, {t, RegionSpec::full(t, t + 1)}).generators().size());
  }
}
BENCHMARK(BM_MinorsExpansion)->Arg(3)->Arg(4)->Arg(5);

void BM_BuchbergerMinors(benchmark::State& state) {
  std::uint32_t n = static_cast<std::uint32_t>(state.range(0));
  bool prime_field = state.range(1) != 0;
  RingPtr r = bench_ring(3, n, prime_field);
  std::vector<Polynomial> gens =
      minors_ideal(r, {2, RegionSpec::full(3, n)}).generators();
  for (auto _ : state) {
    benchmark::DoNotOptimize(buchberger(gens).size());
  }
}
BENCHMARK(BM_BuchbergerMinors)
    ->Args({4, 0})
    ->Args({4, 1})
    ->Args({5, 0})
    ->Args({5, 1});

void BM_NormalForm(benchmark::State& state) {
  RingPtr r = bench_ring(3, 4, false);
  std::vector<Polynomial> gb =
      minors_ideal(r, {2, RegionSpec::full(3, 4)}).groebner_basis().members();
  KnutsonPolynomial kf = knutson_f(r);
  for (auto _ : state) {
    benchmark::DoNotOptimize(normal_form(kf.f, gb).term_count());
  }
}
BENCHMARK(BM_NormalForm);

void BM_Intersect(benchmark::State& state) {
  RingPtr r = bench_ring(3, 4, state.range(0) != 0);
  IdealHandle A = minors_ideal(r, {2, RegionSpec::cols(3, 1, 3)});
  IdealHandle B = minors_ideal(r, {1, RegionSpec::cols(3, 2, 2)});
  for (auto _ : state) {
    benchmark::DoNotOptimize(intersect(A, B).generators().size());
  }
}
BENCHMARK(BM_Intersect)->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();
