#include <random>

#include <benchmark/benchmark.h>

#include "binpart/digit_set.hpp"
#include "binpart/factor2.hpp"
#include "binpart/gf2poly.hpp"
#include "binpart/partitions.hpp"
#include "binpart/periodicity.hpp"

using namespace binpart;
using gf2::Poly2;

namespace {

Poly2 random_poly(std::size_t bits, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::uint64_t> limbs((bits + 63) / 64);
    for (auto& l : limbs) l = rng();
    limbs.back() |= std::uint64_t{1} << 63;
    return Poly2::from_limbs(limbs);
}

void BM_MulSchoolbook(benchmark::State& state) {
    const Poly2 a = random_poly(state.range(0), 1), b = random_poly(state.range(0), 2);
    for (auto _ : state) benchmark::DoNotOptimize(gf2::detail::mul_schoolbook(a, b));
}
BENCHMARK(BM_MulSchoolbook)->RangeMultiplier(4)->Range(256, 1 << 16);

void BM_MulPortable(benchmark::State& state) {
    const Poly2 a = random_poly(state.range(0), 1), b = random_poly(state.range(0), 2);
    for (auto _ : state) benchmark::DoNotOptimize(gf2::detail::mul_schoolbook_portable(a, b));
}
BENCHMARK(BM_MulPortable)->RangeMultiplier(4)->Range(256, 1 << 16);

// Public entry point: schoolbook below the threshold, Karatsuba above it.
void BM_Mul(benchmark::State& state) {
    const Poly2 a = random_poly(state.range(0), 1), b = random_poly(state.range(0), 2);
    for (auto _ : state) benchmark::DoNotOptimize(gf2::mul(a, b));
}
BENCHMARK(BM_Mul)->RangeMultiplier(4)->Range(256, 1 << 18);

void BM_MulThreshold(benchmark::State& state) {
    const Poly2 a = random_poly(1 << 16, 1), b = random_poly(1 << 16, 2);
    const std::size_t saved = gf2::detail::karatsuba_threshold_bits();
    gf2::detail::set_karatsuba_threshold_bits(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gf2::mul(a, b));
    gf2::detail::set_karatsuba_threshold_bits(saved);
}
BENCHMARK(BM_MulThreshold)->RangeMultiplier(2)->Range(1024, 1 << 16);

void BM_Square(benchmark::State& state) {
    const Poly2 a = random_poly(state.range(0), 3);
    for (auto _ : state) benchmark::DoNotOptimize(gf2::square(a));
}
BENCHMARK(BM_Square)->RangeMultiplier(4)->Range(256, 1 << 18);

void BM_Period0149(benchmark::State& state) {
    const Poly2 h = gf2::parse_poly("1+x+x^4+x^9");
    for (auto _ : state) benchmark::DoNotOptimize(factor2::period(h));
}
BENCHMARK(BM_Period0149);

void BM_FactorDegree(benchmark::State& state) {
    Poly2 h = random_poly(state.range(0), 4);
    if (!h.constant_term()) h = h + Poly2::one();
    for (auto _ : state) benchmark::DoNotOptimize(factor2::factor(h));
}
BENCHMARK(BM_FactorDegree)->Arg(64)->Arg(256)->Arg(1024);

void BM_CountMod(benchmark::State& state) {
    for (auto _ : state) {
        partitions::ModCountSession f(DigitSet::finite({0, 1, 4, 9}), 2, 2);
        for (std::uint64_t n = 0; n < static_cast<std::uint64_t>(state.range(0)); ++n) benchmark::DoNotOptimize(f.at(n));
    }
}
BENCHMARK(BM_CountMod)->Arg(1000)->Arg(100000);

void BM_CountExactNaturals(benchmark::State& state) {
    for (auto _ : state) {
        partitions::CountSession f(DigitSet::naturals(), 2);
        benchmark::DoNotOptimize(f.at(state.range(0)));
    }
}
BENCHMARK(BM_CountExactNaturals)->Arg(1024)->Arg(4096);

void BM_Complement(benchmark::State& state) {
    const DigitSet a = DigitSet::finite({0, 1, 4, 9});
    for (auto _ : state) benchmark::DoNotOptimize(periodicity::complement(a));
}
BENCHMARK(BM_Complement);

}  // namespace

BENCHMARK_MAIN();
