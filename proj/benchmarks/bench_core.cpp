// bench_core.cpp — Microbenchmarks for the kernels that dominate scenario
// runtime: state construction, reduction, concurrence, and both propagators

#include "qcr/dynamics.hpp"
#include "qcr/linalg.hpp"
#include "qcr/measures.hpp"
#include "qcr/mismatch.hpp"
#include "qcr/states.hpp"

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

namespace {

using namespace qcr;

dynamics::ModelParams spin_params(int n_spins) {
    dynamics::ModelParams p;
    p.kind = dynamics::ModelKind::spin;
    p.omega = 1.0;
    p.qubit_freqs = {1.0, 1.0};
    p.couplings = {1.0, 1.0};
    p.n_spins = n_spins;
    return p;
}

Vector spin_initial(int n_spins, double zeta_sq) {
    Vector bell = Vector::Zero(4);
    bell(0) = bell(3) = 1.0 / std::sqrt(2.0);
    const auto mode = states::spin_coherent_amplitudes(std::sqrt(zeta_sq), n_spins);
    return linalg::kron_vec(bell, mode.amplitudes);
}

void BM_Kron(benchmark::State& state) {
    const Matrix a = Matrix::Random(4, 4);
    const Matrix b = Matrix::Random(state.range(0), state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(linalg::kron(a, b));
    }
}
BENCHMARK(BM_Kron)->Arg(32)->Arg(128);

void BM_SpinCoherent(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(states::spin_coherent_amplitudes(5.0, n));
    }
}
BENCHMARK(BM_SpinCoherent)->Arg(150)->Arg(10000);

void BM_ReducedDensity(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const dynamics::HilbertSpec spec{2, n + 1};
    const Vector psi = spin_initial(n, 25.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(measures::reduced_two_qubit_density(psi, spec));
    }
}
BENCHMARK(BM_ReducedDensity)->Arg(150)->Arg(2400);

void BM_Concurrence(benchmark::State& state) {
    std::mt19937 rng(5);
    std::normal_distribution<double> dist;
    Matrix g(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) g(i, j) = Complex{dist(rng), dist(rng)};
    Matrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    for (auto _ : state) {
        benchmark::DoNotOptimize(measures::concurrence_and_tangle(rho));
    }
}
BENCHMARK(BM_Concurrence);

void BM_DenseEigh(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Matrix h = dynamics::build_spin_hamiltonian(spin_params(n));
    for (auto _ : state) {
        benchmark::DoNotOptimize(linalg::EigenSystem::decompose(h));
    }
}
BENCHMARK(BM_DenseEigh)->Arg(40)->Arg(150)->Unit(benchmark::kMillisecond);

void BM_SectorBuild(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto p = spin_params(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dynamics::SectorPropagator::build(p));
    }
}
BENCHMARK(BM_SectorBuild)->Arg(150)->Arg(2400)->Unit(benchmark::kMillisecond);

void BM_SectorEvolveStep(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto prop = dynamics::SectorPropagator::build(spin_params(n));
    const auto bound = prop.bind(spin_initial(n, 25.0));
    double t = 0.0;
    for (auto _ : state) {
        t += 0.03;
        benchmark::DoNotOptimize(bound.at(t));
    }
}
BENCHMARK(BM_SectorEvolveStep)->Arg(150)->Arg(2400);

void BM_EnsembleAverage(benchmark::State& state) {
    const auto p = spin_params(25);
    const Vector psi0 = spin_initial(25, 9.0);
    const auto ens = mismatch::gaussian_weight_grid(0.1, 11);
    const auto grid = dynamics::uniform_grid(30.0, 120);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mismatch::ensemble_average_series(p, ens, psi0, grid));
    }
}
BENCHMARK(BM_EnsembleAverage)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
