#include <benchmark/benchmark.h>

#include <numbers>
#include <vector>

#include "lambda_elim/elim.hpp"
#include "lambda_elim/exact.hpp"
#include "lambda_elim/resolvent.hpp"

namespace {

using namespace lambda_elim;

LambdaParams fig2_params() {
    LambdaParams p;
    p.delta = 0.1;
    p.big_delta = 1.0;
    p.omega_a = std::polar(0.1, -std::numbers::pi / 3.0);
    p.omega_b = std::polar(0.1, -std::numbers::pi / 2.0);
    return p;
}

State3 fig2_state() { return State3(std::sqrt(1.0 / 3.0), std::sqrt(2.0 / 3.0), 0.0); }

std::vector<double> grid(int n) {
    std::vector<double> ts(n);
    for (int i = 0; i < n; ++i) ts[i] = 200.0 * i / (n - 1);
    return ts;
}

void BM_Decompose(benchmark::State& state) {
    const auto p = fig2_params();
    const auto psi0 = fig2_state();
    for (auto _ : state) benchmark::DoNotOptimize(decompose(p, psi0));
}
BENCHMARK(BM_Decompose);

void BM_PropagateExact(benchmark::State& state) {
    const auto d = decompose(fig2_params(), fig2_state());
    const auto ts = grid(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(propagate_exact(d, ts));
}
BENCHMARK(BM_PropagateExact)->Arg(256)->Arg(2048);

void BM_PropagateEffective(benchmark::State& state) {
    const auto h = rough_effective(fig2_params());
    const State2 psi0(std::sqrt(1.0 / 3.0), std::sqrt(2.0 / 3.0));
    const auto ts = grid(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(propagate_effective(h, psi0, ts));
}
BENCHMARK(BM_PropagateEffective)->Arg(256)->Arg(2048);

void BM_Residues(benchmark::State& state) {
    const auto p = fig2_params();
    double t = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(residues(p, t));
        t += 0.1;
    }
}
BENCHMARK(BM_Residues);

}  // namespace

BENCHMARK_MAIN();
