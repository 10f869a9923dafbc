#include <spinfloq/dynamics.hpp>
#include <spinfloq/full_basis.hpp>
#include <spinfloq/scar.hpp>

#include <benchmark/benchmark.h>

#include <numbers>

using namespace spinfloq;

namespace {

ModelParams figure_params() {
    ModelParams p;
    p.a_xy = 1.3;
    p.a_z = 1.3;
    p.b_z = 100.0;
    p.theta_e = p.theta_n = 0.03 * std::numbers::pi;
    return p;
}

void BM_BuildFloquet(benchmark::State& state) {
    const SectorBasis basis = build_largest_sector(static_cast<int>(state.range(0)));
    const ModelParams params = figure_params();
    for (auto _ : state) benchmark::DoNotOptimize(build_floquet(params, basis));
}
BENCHMARK(BM_BuildFloquet)->Arg(11)->Arg(21);

void BM_SpectralPropagator(benchmark::State& state) {
    const SectorBasis basis = build_largest_sector(21);
    const Matrix u = build_floquet(figure_params(), basis).entries();
    for (auto _ : state) benchmark::DoNotOptimize(spectral_propagator(u));
}
BENCHMARK(BM_SpectralPropagator);

void BM_OrderParameter(benchmark::State& state) {
    const SectorBasis basis = build_largest_sector(21);
    const UnitaryMatrix u = build_floquet(figure_params(), basis);
    const StateVector psi0 = basis_state(basis, basis.twice_j(), Spin::up);
    for (auto _ : state)
        benchmark::DoNotOptimize(order_parameter(u, psi0, state.range(0)));
}
BENCHMARK(BM_OrderParameter)->Arg(10000)->Arg(1000000);

void BM_EvolveDirect(benchmark::State& state) {
    const SectorBasis basis = build_largest_sector(21);
    const UnitaryMatrix u = build_floquet(figure_params(), basis);
    const StateVector psi0 = basis_state(basis, basis.twice_j(), Spin::down);
    for (auto _ : state) benchmark::DoNotOptimize(evolve(u, psi0, 1000, 1));
}
BENCHMARK(BM_EvolveDirect);

void BM_FullFloquet(benchmark::State& state) {
    const FullBasisModel model = FullBasisModel::homogeneous_from(
        figure_params(), static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(full_floquet(model));
}
BENCHMARK(BM_FullFloquet)->Arg(5)->Arg(8);

void BM_ScarScatter(benchmark::State& state) {
    const SectorBasis basis = build_largest_sector(10);
    ModelParams params = figure_params();
    params.a_xy = params.a_z = std::sqrt(2.0);
    for (auto _ : state) benchmark::DoNotOptimize(scar_scatter(params, basis));
}
BENCHMARK(BM_ScarScatter);

}  // namespace

BENCHMARK_MAIN();
