#include <benchmark/benchmark.h>

#include "c2/circle.hpp"
#include "c2/factory.hpp"
#include "c2/forms.hpp"
#include "c2/primes.hpp"

using namespace c2;

static void BM_Sieve(benchmark::State& state) {
    const u64 hi = static_cast<u64>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sieve(2, hi).count());
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Sieve)->Arg(1 << 16)->Arg(1 << 20)->Arg(1 << 24);

static void BM_IsPrime(benchmark::State& state) {
    u64 n = 18446744073709551557ull;
    for (auto _ : state) benchmark::DoNotOptimize(is_prime(n));
}
BENCHMARK(BM_IsPrime);

static void BM_ClassNumber(benchmark::State& state) {
    const u64 d = static_cast<u64>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(class_number(d));
}
// 183, 5095 and certificate-sized discriminants from k = 3, 4 searches
BENCHMARK(BM_ClassNumber)->Arg(183)->Arg(5095)->Arg(262131)->Arg(4194303);

static void BM_Compose(benchmark::State& state) {
    const auto forms = reduced_forms(-4194303);
    std::size_t i = 0;
    for (auto _ : state) {
        const Form& f = forms[i % forms.size()];
        const Form& g = forms[(i * 7 + 3) % forms.size()];
        benchmark::DoNotOptimize(compose(f, g));
        ++i;
    }
}
BENCHMARK(BM_Compose);

static void BM_SearchK4(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(search(4, 1, 1).certificates.size());
}
BENCHMARK(BM_SearchK4)->Unit(benchmark::kMillisecond);

static void BM_R2(benchmark::State& state) {
    const u64 n = static_cast<u64>(state.range(0));
    const auto table = sieve(2, n);
    for (auto _ : state) benchmark::DoNotOptimize(R2(n, table));
}
BENCHMARK(BM_R2)->Arg(200'000)->Arg(2'000'000);

static void BM_CompareWindow(benchmark::State& state) {
    const auto table = sieve(2, 201'000);
    for (auto _ : state) {
        benchmark::DoNotOptimize(compare_window(200'000, 201'000, 2, table, true, 1).size());
    }
}
BENCHMARK(BM_CompareWindow)->Unit(benchmark::kMillisecond);

static void BM_SingularSeries(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(singular_S2(2310 * 8, SeriesMode::series, kDefaultSeriesTruncation).value);
    }
}
BENCHMARK(BM_SingularSeries)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
