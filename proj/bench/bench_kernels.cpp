// Serial reference against the OpenMP kernels.  The second argument of each
// benchmark selects the mode: 0 serial, 1 parallel.

#include "telinv/harness.hpp"
#include "telinv/inverse.hpp"
#include "telinv/oracle.hpp"

#include <benchmark/benchmark.h>

#include <omp.h>

using namespace telinv;

namespace {

Execution mode(const benchmark::State& state) { return state.range(1) == 0 ? Execution::Serial : Execution::Parallel; }

void label(benchmark::State& state) {
    state.SetLabel(state.range(1) == 0 ? "serial" : "parallel x" + std::to_string(omp_get_max_threads()));
}

void BM_GeneralInverse(benchmark::State& state) {
    const Matrix a = random_matrix(int(state.range(0)), 1, false);
    const TelescopeOptions opt{8, mode(state)};
    for (auto _ : state) benchmark::DoNotOptimize(general_inverse(a, opt));
    label(state);
}

void BM_Leibniz(benchmark::State& state) {
    const Matrix a = random_matrix(int(state.range(0)), 2, true);
    const Execution exec = mode(state);
    for (auto _ : state) benchmark::DoNotOptimize(leibniz_det(a, exec));
    label(state);
}

void BM_ClosedFormInverse(benchmark::State& state) {
    const Matrix a = random_matrix(int(state.range(0)), 3, false);
    const Execution exec = mode(state);
    for (auto _ : state) benchmark::DoNotOptimize(closed_form_inverse(a, ReprKind::Direct, exec));
    label(state);
}

void BM_Trials(benchmark::State& state) {
    TrialConfig cfg;
    cfg.trials = 2000;
    cfg.size = int(state.range(0));
    cfg.exec = mode(state);
    for (auto _ : state) benchmark::DoNotOptimize(run_trials(cfg));
    state.SetItemsProcessed(state.iterations() * cfg.trials);
    label(state);
}

}  // namespace

BENCHMARK(BM_GeneralInverse)->ArgsProduct({{6, 7}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Leibniz)->ArgsProduct({{8, 9}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClosedFormInverse)->ArgsProduct({{4, 5}, {0, 1}})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Trials)->ArgsProduct({{5}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
