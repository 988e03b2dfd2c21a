// Copyright 2026 The thermvqe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <vector>

#include "thermvqe/ansatz.hpp"
#include "thermvqe/exact.hpp"
#include "thermvqe/pauli.hpp"
#include "thermvqe/reweighting.hpp"
#include "thermvqe/vqe.hpp"

namespace {

using namespace thermvqe;

/// TFI chain on q sites with a K = 2^q_a geometric mixing and L layers.
CostContext make_context(int q, int q_a, int layers) {
    const std::size_t levels = std::size_t{1} << q_a;
    return CostContext(build_tfi(q, 1.0, 1.0),
                       mixing_family(MixingFamily::Geometric, levels, 0.9),
                       build_ansatz({.sys_qubits = q, .layers = layers}),
                       RegisterLayout{.aux_qubits = q_a, .sys_qubits = q});
}

std::vector<double> angles(std::size_t count) {
    std::vector<double> theta(count);
    for (std::size_t i = 0; i < count; ++i) {
        theta[i] = 0.1 * static_cast<double>(i % 7) - 0.3;
    }
    return theta;
}

void BM_Cost(benchmark::State &st) {
    const int q = static_cast<int>(st.range(0));
    const auto ctx = make_context(q, q, 6);
    const auto theta = angles(ctx.num_params());
    for (auto _ : st) {
        benchmark::DoNotOptimize(cost(ctx, theta));
    }
}
BENCHMARK(BM_Cost)->DenseRange(2, 5, 1);

void BM_Gradient(benchmark::State &st) {
    const int q = static_cast<int>(st.range(0));
    const auto ctx = make_context(q, q, 6);
    const auto theta = angles(ctx.num_params());
    for (auto _ : st) {
        benchmark::DoNotOptimize(gradient(ctx, theta));
    }
}
BENCHMARK(BM_Gradient)->DenseRange(2, 4, 1);

void BM_ThermalAverage(benchmark::State &st) {
    const auto ctx = make_context(3, 3, 6);
    const auto theta = angles(ctx.num_params());
    const StateVector psi = ctx.prepare(theta);
    const auto spectrum = estimate_spectrum(psi, ctx.mixing(), ctx.hamiltonian());
    for (auto _ : st) {
        benchmark::DoNotOptimize(
            thermal_average(psi, ctx.mixing(), spectrum, ctx.hamiltonian(), 1.0));
    }
}
BENCHMARK(BM_ThermalAverage);

void BM_ExactSolve(benchmark::State &st) {
    const PauliSum h = build_tfi(static_cast<int>(st.range(0)), 1.0, 1.0);
    for (auto _ : st) {
        benchmark::DoNotOptimize(exact_solve(h).eigenvalues.data());
    }
}
BENCHMARK(BM_ExactSolve)->DenseRange(3, 9, 3);

} // namespace
