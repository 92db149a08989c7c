#include <benchmark/benchmark.h>

#include <utility>
#include <vector>

#include "bfc/asymm.hpp"
#include "bfc/bridge.hpp"
#include "bfc/kernels.hpp"
#include "bfc/symm.hpp"

using namespace bfc;

namespace {

std::vector<std::pair<int, int>> all_pairs(int n)
{
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            pairs.emplace_back(i, j);
    return pairs;
}

// s_lambda truncated to n variables with lambda = (n-2, 1, 1); dense and
// rational.
TruncatedPolynomial schur_input(int n)
{
    std::vector<int> parts(3, 1);
    parts[0] = n - 2;
    SchurExpansion s;
    s.add_term(Partition(parts), Rational(1));
    return truncate_symm(schur_to_power(s), n);
}

template <class Kernel>
void multiply(benchmark::State& state, Kernel kernel)
{
    const int n = static_cast<int>(state.range(0));
    SymmElement p;
    p.add_term(Partition{3, 2, 1}, Rational(1));
    auto a = truncate_symm(p, n);
    auto b = vandermonde(n);
    for (auto _ : state)
        benchmark::DoNotOptimize(kernel(a, b));
    state.counters["terms"] = static_cast<double>(a.size() * b.size());
}

template <class Kernel>
void differences(benchmark::State& state, Kernel kernel)
{
    const int n = static_cast<int>(state.range(0));
    auto f = schur_input(n);
    auto pairs = all_pairs(n);
    for (auto _ : state)
        benchmark::DoNotOptimize(kernel(f, pairs));
}

template <class Kernel>
void alternant(benchmark::State& state, Kernel kernel)
{
    const int n = static_cast<int>(state.range(0));
    std::vector<int> exponents(n);
    for (int j = 0; j < n; ++j)
        exponents[j] = n - j + (j == 0 ? 2 : 0);
    for (auto _ : state)
        benchmark::DoNotOptimize(kernel(exponents));
}

template <class Kernel>
void characters(benchmark::State& state, Kernel kernel)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(kernel(n));
}

void verify(benchmark::State& state, Execution execution)
{
    VerifyOptions options;
    options.execution = execution;
    options.oracle_degree = 6;
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_isometry(static_cast<int>(state.range(0)), options));
}

} // namespace

BENCHMARK_CAPTURE(multiply, serial, kernels::serial::multiply)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(multiply, omp, kernels::omp::multiply)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

BENCHMARK_CAPTURE(differences, serial, kernels::serial::multiply_by_differences)
    ->DenseRange(5, 7)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(differences, omp, kernels::omp::multiply_by_differences)
    ->DenseRange(5, 7)
    ->Unit(benchmark::kMillisecond);

BENCHMARK_CAPTURE(alternant, serial, kernels::serial::alternant)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(alternant, omp, kernels::omp::alternant)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);

BENCHMARK_CAPTURE(characters, serial, kernels::serial::character_matrix)
    ->Arg(10)
    ->Arg(14)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(characters, omp, kernels::omp::character_matrix)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

BENCHMARK_CAPTURE(verify, serial, Execution::serial)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(verify, parallel, Execution::parallel)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
