#include "flagclass/orbit.hpp"
#include "flagclass/polyq.hpp"

#include <benchmark/benchmark.h>

namespace fc = flagclass;

namespace {

fc::FlagContext context(const char* d, std::uint64_t q) {
    return {fc::DimensionVector::parse(d), fc::FiniteField::of_order(q)};
}

void BM_FieldMul(benchmark::State& state) {
    const auto f = fc::FiniteField::of_order(static_cast<std::uint64_t>(state.range(0)));
    fc::Elem acc = 1;
    for (auto _ : state) {
        for (std::uint32_t x = 1; x < f.q(); ++x) acc = f.add(f.mul(acc, static_cast<fc::Elem>(x)), 1);
        benchmark::DoNotOptimize(acc);
    }
    state.SetItemsProcessed(state.iterations() * (f.q() - 1));
}
BENCHMARK(BM_FieldMul)->Arg(7)->Arg(9)->Arg(256)->Arg(65536);

void BM_PartitionP(benchmark::State& state, const char* d, std::uint64_t q) {
    const auto ctx = context(d, q);
    for (auto _ : state) benchmark::DoNotOptimize(fc::partition_orbits(ctx, fc::ActingGroup::P, {fc::kDefaultStateCap, 1}));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ctx.state_count()));
}
BENCHMARK_CAPTURE(BM_PartitionP, d234_q7, "2,3,4", 7)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_PartitionP, d1234_q5, "1,2,3,4", 5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_PartitionP, d12345_q3, "1,2,3,4,5", 3)->Unit(benchmark::kMillisecond);

void BM_NullityHistogram(benchmark::State& state, const char* d, std::uint64_t q) {
    const auto ctx = context(d, q);
    for (auto _ : state) benchmark::DoNotOptimize(fc::nullity_histogram(ctx, {fc::kDefaultStateCap, 1}));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ctx.state_count()));
}
BENCHMARK_CAPTURE(BM_NullityHistogram, d234_q7, "2,3,4", 7)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_NullityHistogram, d1234_q5, "1,2,3,4", 5)->Unit(benchmark::kMillisecond);

void BM_CountClasses(benchmark::State& state, const char* d, std::uint64_t q) {
    const auto ctx = context(d, q);
    for (auto _ : state) benchmark::DoNotOptimize(fc::count_classes(ctx, {fc::kDefaultStateCap, 1}));
}
BENCHMARK_CAPTURE(BM_CountClasses, d1234_q4, "1,2,3,4", 4)->Unit(benchmark::kMillisecond);

void BM_Interpolate(benchmark::State& state) {
    std::vector<std::pair<fc::BigInt, fc::BigInt>> pts;
    for (int q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17})
        pts.emplace_back(q, fc::big_pow(q, 10) - 3 * fc::big_pow(q, 4) + q);
    for (auto _ : state) benchmark::DoNotOptimize(fc::interpolate(pts));
}
BENCHMARK(BM_Interpolate);

}  // namespace

BENCHMARK_MAIN();
