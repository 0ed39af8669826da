#include <benchmark/benchmark.h>

#include "shifted/koszul.hpp"
#include "shifted/linear_quotients.hpp"
#include "shifted/nlambda.hpp"
#include "shifted/star_config.hpp"
#include "shifted/symmetric_ideal.hpp"

using namespace shifted;

namespace {

symmetric_ideal example_n4() {
    return symmetric_ideal::normalized(
        4, {partition({1, 1, 2, 2}), partition({0, 2, 2, 2}),
            partition({0, 1, 2, 3})});
}

void BM_betti_quotients_n4(benchmark::State& state) {
    const auto ideal = example_n4();
    for (auto _ : state)
        benchmark::DoNotOptimize(betti_from_quotients(ideal));
}
BENCHMARK(BM_betti_quotients_n4);

void BM_betti_closed_form_n4(benchmark::State& state) {
    const auto ideal = example_n4();
    for (auto _ : state)
        benchmark::DoNotOptimize(betti_closed_form(ideal));
}
BENCHMARK(BM_betti_closed_form_n4);

void BM_betti_oracle_n4(benchmark::State& state) {
    const auto ideal = example_n4();
    for (auto _ : state)
        benchmark::DoNotOptimize(betti_oracle(ideal));
}
BENCHMARK(BM_betti_oracle_n4);

void BM_betti_oracle_lcm_closure_n4(benchmark::State& state) {
    const auto ideal = example_n4();
    oracle_options options;
    options.lcm_closure = true;
    for (auto _ : state)
        benchmark::DoNotOptimize(betti_oracle(ideal, options));
}
BENCHMARK(BM_betti_oracle_lcm_closure_n4);

void BM_colon_verification_n4(benchmark::State& state) {
    const auto ideal = example_n4();
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_linear_quotients(ideal));
}
BENCHMARK(BM_colon_verification_n4);

void BM_star_betti(benchmark::State& state) {
    const star_params params(static_cast<int>(state.range(0)),
                             static_cast<int>(state.range(1)),
                             static_cast<int>(state.range(2)));
    const auto ideal = star_ideal(params);
    for (auto _ : state)
        benchmark::DoNotOptimize(betti_from_quotients(ideal));
}
BENCHMARK(BM_star_betti)->Args({9, 4, 3})->Args({8, 3, 4})->Args({12, 5, 3});

void BM_strongly_shifted_star(benchmark::State& state) {
    const star_params params(7, 3, 4);
    for (auto _ : state) {
        const auto ideal = star_ideal(params);
        benchmark::DoNotOptimize(is_strongly_shifted(ideal));
    }
}
BENCHMARK(BM_strongly_shifted_star);

void BM_orbit_enumeration(benchmark::State& state) {
    const partition lambda({0, 1, 2, 3, 4, 5, 6});
    for (auto _ : state)
        benchmark::DoNotOptimize(orbit(lambda));
}
BENCHMARK(BM_orbit_enumeration);

void BM_weak_poly_generators(benchmark::State& state) {
    const auto ideal = star_ideal(star_params(6, 3, 5));
    for (auto _ : state)
        benchmark::DoNotOptimize(is_weakly_polymatroidal(ideal));
}
BENCHMARK(BM_weak_poly_generators);

} // namespace

BENCHMARK_MAIN();
