#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "ovc3/cyclotomic.hpp"
#include "ovc3/power_series.hpp"
#include "ovc3/qexpansions.hpp"
#include "ovc3/umatrix.hpp"

using namespace ovc3;

namespace {

CycElt random_elt(std::mt19937_64& rng, const RingPtr& R) {
    std::vector<mpz_class> c((size_t)R->degree());
    for (auto& x : c) {
        mpz_class hi = (unsigned long)rng();
        hi <<= 64;
        x = hi + mpz_class((unsigned long)rng());
    }
    return R->from_coeffs(c);
}

PowSeries<CycElt> random_series(std::mt19937_64& rng, const RingPtr& R, int trunc) {
    std::vector<CycElt> c;
    c.reserve((size_t)trunc);
    for (int i = 0; i < trunc; ++i) c.push_back(random_elt(rng, R));
    return PowSeries<CycElt>(Var::q, std::move(c));
}

void BM_ring_mult(benchmark::State& state) {
    auto R = CycRing::make((int)state.range(0), 48);
    std::mt19937_64 rng(7);
    CycElt a = random_elt(rng, R);
    CycElt b = random_elt(rng, R);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_ring_mult)->Arg(1)->Arg(2);

void BM_ring_invert(benchmark::State& state) {
    auto R = CycRing::make((int)state.range(0), 48);
    std::mt19937_64 rng(11);
    CycElt a = random_elt(rng, R);
    while (a.residue() == 0) a = random_elt(rng, R);
    for (auto _ : state) benchmark::DoNotOptimize(invert_unit(a));
}
BENCHMARK(BM_ring_invert)->Arg(1)->Arg(2);

void BM_series_mult(benchmark::State& state) {
    auto R = CycRing::make(1, 32);
    std::mt19937_64 rng(13);
    auto a = random_series(rng, R, (int)state.range(0));
    auto b = random_series(rng, R, (int)state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_series_mult)->Arg(40)->Arg(120);

void BM_theta_qexp(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(theta_qexp((int)state.range(0)));
}
BENCHMARK(BM_theta_qexp)->Arg(300)->Arg(1000);

void BM_g_kappa(benchmark::State& state) {
    CharacterWeight cw(9, 2, 48);
    for (auto _ : state) benchmark::DoNotOptimize(g_kappa(cw, 30, 40));
}
BENCHMARK(BM_g_kappa);

void BM_u_matrix_gf(benchmark::State& state) {
    CharacterWeight cw(9, 2, 48);
    auto g = g_kappa(cw, 30, 40);
    for (auto _ : state) benchmark::DoNotOptimize(u_matrix_gf(cw, 30, g));
}
BENCHMARK(BM_u_matrix_gf);

void BM_char_series(benchmark::State& state) {
    CharacterWeight cw(9, 2, 48);
    UMatrix M = u_matrix_gf(cw, 30, g_kappa(cw, 30, 40));
    for (auto _ : state) benchmark::DoNotOptimize(char_series(M, 8));
}
BENCHMARK(BM_char_series);

void BM_slopes_run(benchmark::State& state) {
    CharacterWeight cw(9, 2, 48);
    for (auto _ : state) benchmark::DoNotOptimize(slopes_run(cw, 8, 27, 120));
}
BENCHMARK(BM_slopes_run);

} // namespace

BENCHMARK_MAIN();
