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

#include "thermvqe/circuit.hpp"
#include "thermvqe/pauli.hpp"
#include "thermvqe/statevector.hpp"

namespace {

using namespace thermvqe;

void BM_ApplyRotX(benchmark::State &st) {
    const int n = static_cast<int>(st.range(0));
    StateVector psi = init_state(n);
    const Gate g = Gate::rx(n / 2, 0.3);
    for (auto _ : st) {
        apply_gate(psi, g);
        benchmark::DoNotOptimize(psi.amplitudes().data());
    }
    st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(psi.size()));
}
BENCHMARK(BM_ApplyRotX)->DenseRange(6, 18, 4);

void BM_ApplyCnot(benchmark::State &st) {
    const int n = static_cast<int>(st.range(0));
    StateVector psi = init_state(n);
    apply_gate(psi, Gate::h(0));
    const Gate g = Gate::cnot(0, n - 1);
    for (auto _ : st) {
        apply_gate(psi, g);
        benchmark::DoNotOptimize(psi.amplitudes().data());
    }
    st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(psi.size()));
}
BENCHMARK(BM_ApplyCnot)->DenseRange(6, 18, 4);

void BM_ExpvalTfi(benchmark::State &st) {
    const int n = static_cast<int>(st.range(0));
    const PauliSum h = build_tfi(n, 1.0, 1.0);
    StateVector psi = init_state(n);
    for (int q = 0; q < n; ++q) {
        apply_gate(psi, Gate::ry(q, 0.1 * (q + 1)));
    }
    for (auto _ : st) {
        benchmark::DoNotOptimize(expval(psi, h));
    }
}
BENCHMARK(BM_ExpvalTfi)->DenseRange(4, 16, 4);

} // namespace
