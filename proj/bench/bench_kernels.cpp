#include <benchmark/benchmark.h>
#include <omp.h>

#include "partcat/category.hpp"
#include "partcat/determinant.hpp"
#include "partcat/lattice.hpp"
#include "partcat/projectives.hpp"

using namespace partcat;

namespace {

const Category& nc() {
    static Category c = Category::named(Family::NC);
    return c;
}
const Category& p() {
    static Category c = Category::named(Family::P);
    return c;
}

void BM_Gram(benchmark::State& st) {
    Exec ex = st.range(0) ? Exec::Parallel : Exec::Serial;
    const int k = static_cast<int>(st.range(1));
    p().enumerate(0, k);
    for (auto _ : st) benchmark::DoNotOptimize(gram(p(), k, ex));
}
BENCHMARK(BM_Gram)->ArgsProduct({{0, 1}, {6, 7}})->Unit(benchmark::kMillisecond);

void BM_Det(benchmark::State& st) {
    Exec ex = st.range(0) ? Exec::Parallel : Exec::Serial;
    const int k = static_cast<int>(st.range(1));
    ExponentMatrix e = gram(nc(), k).exponents;
    for (auto _ : st) benchmark::DoNotOptimize(det_monomial(e, ex));
}
BENCHMARK(BM_Det)->ArgsProduct({{0, 1}, {4, 5}})->Unit(benchmark::kMillisecond);

// Census has no serial switch; one thread is the serial reference.
void BM_Census(benchmark::State& st) {
    const int saved = omp_get_max_threads();
    omp_set_num_threads(st.range(0) ? saved : 1);
    Category c = Category::named(Family::P);
    for (auto _ : st) benchmark::DoNotOptimize(census(c, static_cast<int>(st.range(1))));
    omp_set_num_threads(saved);
}
BENCHMARK(BM_Census)->ArgsProduct({{0, 1}, {3, 4}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
