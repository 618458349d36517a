#include <benchmark/benchmark.h>

#include "ecsim/dynamics.hpp"
#include "ecsim/fock.hpp"
#include "ecsim/spectral.hpp"
#include "ecsim/states.hpp"
#include "ecsim/volterra.hpp"

namespace {

const ecsim::dynamics::SystemParams kSys{1.0, 0.5, +1};
const ecsim::spectral::SpectralParams kEnv{0.005, 30.0, 1.0};

void BM_KernelEval(benchmark::State& state) {
    const auto kernel = ecsim::spectral::MemoryKernel::closed_form(kEnv);
    double t = 0.0;
    for (auto _ : state) {
        t += 1e-4;
        benchmark::DoNotOptimize(kernel(t));
    }
}
BENCHMARK(BM_KernelEval);

void BM_VolterraSolve(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const ecsim::volterra::TimeGrid grid{static_cast<double>(n) * 2e-3, 2e-3};
    for (auto _ : state) {
        benchmark::DoNotOptimize(ecsim::dynamics::solve_modes(kSys, kEnv, grid));
    }
    state.SetComplexityN(static_cast<benchmark::IterationCount>(n));
}
BENCHMARK(BM_VolterraSolve)->Range(256, 4096)->Complexity();

void BM_Coefficients(benchmark::State& state) {
    const ecsim::volterra::TimeGrid grid{2.0, 2e-3};
    const auto modes = ecsim::dynamics::solve_modes(kSys, kEnv, grid);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            ecsim::dynamics::coefficients_integral(kSys, kEnv, modes));
    }
}
BENCHMARK(BM_Coefficients);

void BM_ConcurrenceTrack(benchmark::State& state) {
    const ecsim::volterra::TimeGrid grid{2.0, 2e-3};
    const auto modes = ecsim::dynamics::solve_modes(kSys, kEnv, grid);
    const ecsim::states::ECSState s{ecsim::states::ECSKind::phi_minus, {0.8, 0.0}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(ecsim::states::concurrence_track(s, modes));
    }
}
BENCHMARK(BM_ConcurrenceTrack);

void BM_FockStep(benchmark::State& state) {
    const auto cutoff = static_cast<int>(state.range(0));
    const auto space = ecsim::fock::FockSpace::make(cutoff);
    const ecsim::volterra::TimeGrid grid{0.05, 2e-3};
    const auto modes = ecsim::dynamics::solve_modes(kSys, kEnv, grid);
    const auto coeffs = ecsim::dynamics::coefficients_integral(kSys, kEnv, modes);
    const ecsim::states::ECSState s{ecsim::states::ECSKind::phi_minus, {0.8, 0.0}};
    const auto rho0 = ecsim::fock::embed_ecs(s, space);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            ecsim::fock::integrate_master(rho0, coeffs, space, grid));
    }
}
BENCHMARK(BM_FockStep)->Arg(8)->Arg(12)->Arg(16);

} // namespace

BENCHMARK_MAIN();
