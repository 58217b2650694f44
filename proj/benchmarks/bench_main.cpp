#include <benchmark/benchmark.h>

#include "wigner/closed_forms.hpp"
#include "wigner/liouville.hpp"
#include "wigner/phase_space.hpp"
#include "wigner/special.hpp"

using namespace wigner;

namespace {

void BM_WignerTransform(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const closed_forms::AnalyticState psi(closed_forms::CoherentGaussian{0.0, 0.0}, 1.0);
    const Grid1D x = Grid1D::spanning(-8.0, 8.0, n);
    const PhaseSpaceGrid grid(x, Grid1D::symmetric(8.0, n));
    const WaveSample wave = closed_forms::sample_state(psi, x);
    for (auto _ : state) {
        benchmark::DoNotOptimize(wigner_transform(wave, grid).values.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_WignerTransform)->RangeMultiplier(2)->Range(64, 512)->Unit(benchmark::kMillisecond)->Complexity();

void BM_FlowCoefficients(benchmark::State& state) {
    const double gamma = static_cast<double>(state.range(0)) * 0.25;
    const liouville::OscillatorParams params(gamma, liouville::CosineDrive{0.3, 0.5, 1.7}, 1.0);
    double t = 0.0;
    for (auto _ : state) {
        t += 1e-3;
        benchmark::DoNotOptimize(liouville::flow_coefficients(params, t));
    }
}
BENCHMARK(BM_FlowCoefficients)->Arg(-4)->Arg(0)->Arg(4);

void BM_Erf(benchmark::State& state) {
    double x = -6.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(special::erf(x));
        x = x > 6.0 ? -6.0 : x + 1e-3;
    }
}
BENCHMARK(BM_Erf);

void BM_PropagateField(benchmark::State& state) {
    const closed_forms::AnalyticState psi(closed_forms::CoherentGaussian{-1.0, 0.5}, 1.0);
    const liouville::OscillatorParams params(-0.5, liouville::ConstantDrive{0.2}, 1.0);
    const PhaseSpaceGrid grid(Grid1D::symmetric(6.0, 128), Grid1D::symmetric(6.0, 128));
    const auto initial = liouville::analytic_initial(psi);
    for (auto _ : state) {
        benchmark::DoNotOptimize(liouville::propagate_field(initial, params, 1.0, grid).values.data());
    }
}
BENCHMARK(BM_PropagateField)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
