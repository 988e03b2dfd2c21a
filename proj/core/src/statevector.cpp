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

#include "thermvqe/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>

#include "thermvqe/errors.hpp"

namespace thermvqe {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void check_qubit_count(int num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw SizeError("statevector needs 1.." + std::to_string(kMaxQubits) +
                        " qubits, got " + std::to_string(num_qubits));
    }
}

/// Inserts a zero bit at position `bit` of `i`.
inline std::size_t insert_zero(std::size_t i, int bit) noexcept {
    const std::size_t low = i & ((std::size_t{1} << bit) - 1);
    return ((i >> bit) << (bit + 1)) | low;
}

/// Applies a 2×2 matrix [[m00, m01], [m10, m11]] to qubit `target`.
void apply_1q(std::span<Complex> amps, int num_qubits, int target, Complex m00,
              Complex m01, Complex m10, Complex m11) {
    const std::size_t half = std::size_t{1} << (num_qubits - 1);
    const std::size_t mask = std::size_t{1} << target;
    for (std::size_t i = 0; i < half; ++i) {
        const std::size_t i0 = insert_zero(i, target);
        const std::size_t i1 = i0 | mask;
        const Complex v0 = amps[i0];
        const Complex v1 = amps[i1];
        amps[i0] = m00 * v0 + m01 * v1;
        amps[i1] = m10 * v0 + m11 * v1;
    }
}

void apply_x(std::span<Complex> amps, int num_qubits, int target) {
    const std::size_t half = std::size_t{1} << (num_qubits - 1);
    const std::size_t mask = std::size_t{1} << target;
    for (std::size_t i = 0; i < half; ++i) {
        const std::size_t i0 = insert_zero(i, target);
        std::swap(amps[i0], amps[i0 | mask]);
    }
}

void apply_rz(std::span<Complex> amps, int num_qubits, int target,
              double angle) {
    const Complex lo = std::polar(1.0, -0.5 * angle);
    const Complex hi = std::polar(1.0, 0.5 * angle);
    const std::size_t mask = std::size_t{1} << target;
    const std::size_t dim = std::size_t{1} << num_qubits;
    for (std::size_t i = 0; i < dim; ++i) {
        amps[i] *= (i & mask) ? hi : lo;
    }
}

void apply_cnot(std::span<Complex> amps, int num_qubits, int control,
                int target) {
    const std::size_t quarter = std::size_t{1} << (num_qubits - 2);
    const std::size_t cmask = std::size_t{1} << control;
    const std::size_t tmask = std::size_t{1} << target;
    const int lo = std::min(control, target);
    const int hi = std::max(control, target);
    for (std::size_t i = 0; i < quarter; ++i) {
        const std::size_t base = insert_zero(insert_zero(i, lo), hi) | cmask;
        std::swap(amps[base], amps[base | tmask]);
    }
}

void check_gate_fits(const Gate &gate, int num_qubits) {
    if (gate.target() >= num_qubits) {
        throw IndexError("gate target " + std::to_string(gate.target()) +
                         " outside " + std::to_string(num_qubits) +
                         "-qubit state");
    }
    if (auto c = gate.control(); c && *c >= num_qubits) {
        throw IndexError("gate control " + std::to_string(*c) + " outside " +
                         std::to_string(num_qubits) + "-qubit state");
    }
}

double pauli_branch_sum(std::span<const Complex> amps, std::size_t begin,
                        std::size_t end, std::uint64_t x_mask,
                        std::uint64_t z_mask, int num_y) {
    // P|b⟩ = i^{n_y} (−1)^{|b ∧ z|} |b ⊕ x⟩ and ⟨ψ|P|ψ⟩ is real.
    Complex acc{0.0, 0.0};
    for (std::size_t b = begin; b < end; ++b) {
        const double sign = (std::popcount(b & z_mask) & 1) ? -1.0 : 1.0;
        acc += sign * std::conj(amps[b ^ x_mask]) * amps[b];
    }
    switch (num_y & 3) {
    case 0:
        return acc.real();
    case 1:
        return -acc.imag();
    case 2:
        return -acc.real();
    default:
        return acc.imag();
    }
}

} // namespace

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
    check_qubit_count(num_qubits);
    amps_.assign(std::size_t{1} << num_qubits, Complex{0.0, 0.0});
    amps_[0] = 1.0;
}

StateVector::StateVector(int num_qubits, std::vector<Complex> amps)
    : num_qubits_(num_qubits), amps_(std::move(amps)) {}

StateVector StateVector::basis(int num_qubits, std::uint64_t index) {
    StateVector s(num_qubits);
    if (index >= s.size()) {
        throw IndexError("basis index " + std::to_string(index) +
                         " outside " + std::to_string(num_qubits) +
                         "-qubit register");
    }
    s.amps_[0] = 0.0;
    s.amps_[index] = 1.0;
    return s;
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
    const std::size_t n = amplitudes.size();
    if (n < 2 || !std::has_single_bit(n)) {
        throw ShapeError("amplitude count " + std::to_string(n) +
                         " is not a power of two >= 2");
    }
    const int q = std::countr_zero(n);
    check_qubit_count(q);
    return {q, std::move(amplitudes)};
}

double StateVector::norm() const noexcept {
    double acc = 0.0;
    for (const auto &a : amps_) {
        acc += std::norm(a);
    }
    return std::sqrt(acc);
}

Complex StateVector::inner(const StateVector &other) const {
    if (other.num_qubits_ != num_qubits_) {
        throw ShapeError("inner product of states with different sizes");
    }
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        acc += std::conj(amps_[i]) * other.amps_[i];
    }
    return acc;
}

StateVector init_state(int num_qubits) { return StateVector(num_qubits); }

void apply_gate(StateVector &state, const Gate &gate,
                std::span<const double> params) {
    const int n = state.num_qubits();
    check_gate_fits(gate, n);
    auto amps = state.amplitudes();
    const int t = gate.target();
    switch (gate.kind()) {
    case GateKind::PauliX:
        apply_x(amps, n, t);
        break;
    case GateKind::Hadamard:
        apply_1q(amps, n, t, kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2);
        break;
    case GateKind::SAdjointH:
        apply_1q(amps, n, t, kInvSqrt2, Complex{0.0, -kInvSqrt2}, kInvSqrt2,
                 Complex{0.0, kInvSqrt2});
        break;
    case GateKind::RotX: {
        const double a = gate.angle(params);
        const double c = std::cos(0.5 * a);
        const double s = std::sin(0.5 * a);
        apply_1q(amps, n, t, c, Complex{0.0, -s}, Complex{0.0, -s}, c);
        break;
    }
    case GateKind::RotY: {
        const double a = gate.angle(params);
        const double c = std::cos(0.5 * a);
        const double s = std::sin(0.5 * a);
        apply_1q(amps, n, t, c, -s, s, c);
        break;
    }
    case GateKind::RotZ:
        apply_rz(amps, n, t, gate.angle(params));
        break;
    case GateKind::CNOT:
        apply_cnot(amps, n, *gate.control(), t);
        break;
    }
}

void run_circuit(StateVector &state, const Circuit &circuit,
                 std::span<const double> params) {
    if (circuit.num_qubits() != state.num_qubits()) {
        throw ShapeError("circuit acts on " +
                         std::to_string(circuit.num_qubits()) +
                         " qubits, state has " +
                         std::to_string(state.num_qubits()));
    }
    if (params.size() != circuit.num_params()) {
        throw ShapeError("circuit expects " +
                         std::to_string(circuit.num_params()) +
                         " parameters, got " + std::to_string(params.size()));
    }
    for (const auto &g : circuit.gates()) {
        apply_gate(state, g, params);
    }
}

double expval_pauli_string(const StateVector &state,
                           const PauliString &string, int sys_offset) {
    if (sys_offset < 0 ||
        sys_offset + string.num_qubits() > state.num_qubits()) {
        throw ShapeError("Pauli string of length " +
                         std::to_string(string.num_qubits()) +
                         " at offset " + std::to_string(sys_offset) +
                         " does not fit a " +
                         std::to_string(state.num_qubits()) + "-qubit state");
    }
    return pauli_branch_sum(state.amplitudes(), 0, state.size(),
                            string.x_mask() << sys_offset,
                            string.z_mask() << sys_offset, string.num_y());
}

double expval(const StateVector &state, const PauliSum &observable) {
    double acc = 0.0;
    for (const auto &t : observable.terms()) {
        acc += t.coefficient * expval_pauli_string(state, t.string, 0);
    }
    return acc;
}

double projected_expval(const StateVector &state, std::size_t aux_index,
                        const PauliSum &observable) {
    const int sys = observable.num_qubits();
    if (sys > state.num_qubits()) {
        throw ShapeError("observable wider than state");
    }
    const std::size_t branch = std::size_t{1} << sys;
    const std::size_t branches = state.size() / branch;
    if (aux_index >= branches) {
        throw IndexError("mixing branch " + std::to_string(aux_index) +
                         " outside " + std::to_string(branches) + " branches");
    }
    const std::size_t begin = aux_index * branch;
    double acc = 0.0;
    for (const auto &t : observable.terms()) {
        acc += t.coefficient *
               pauli_branch_sum(state.amplitudes(), begin, begin + branch,
                                t.string.x_mask(), t.string.z_mask(),
                                t.string.num_y());
    }
    return acc;
}

double aux_branch_probability(const StateVector &state, std::size_t aux_index,
                              int sys_qubits) {
    if (sys_qubits < 0 || sys_qubits > state.num_qubits()) {
        throw ShapeError("system block does not fit the state");
    }
    const std::size_t branch = std::size_t{1} << sys_qubits;
    const std::size_t branches = state.size() / branch;
    if (aux_index >= branches) {
        throw IndexError("mixing branch " + std::to_string(aux_index) +
                         " outside " + std::to_string(branches) + " branches");
    }
    double acc = 0.0;
    const auto amps = state.amplitudes();
    for (std::size_t b = aux_index * branch; b < (aux_index + 1) * branch;
         ++b) {
        acc += std::norm(amps[b]);
    }
    return acc;
}

std::vector<std::uint64_t> sample_outcomes(const StateVector &state,
                                           const Circuit &basis_change,
                                           std::uint64_t shots,
                                           std::uint64_t seed) {
    if (shots == 0) {
        throw ArgumentError("shot count must be at least 1");
    }
    StateVector rotated = state;
    run_circuit(rotated, basis_change);

    std::vector<double> cdf(rotated.size());
    double running = 0.0;
    for (std::size_t i = 0; i < rotated.size(); ++i) {
        running += std::norm(rotated[i]);
        cdf[i] = running;
    }
    // Inverse-CDF sampling on raw 64-bit draws keeps the sequence identical
    // across standard library implementations.
    std::mt19937_64 rng(seed);
    std::vector<std::uint64_t> out;
    out.reserve(shots);
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * running;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        if (it == cdf.end()) {
            --it;
        }
        out.push_back(static_cast<std::uint64_t>(it - cdf.begin()));
    }
    return out;
}

std::map<std::uint64_t, std::uint64_t>
sample_counts(const StateVector &state, const Circuit &basis_change,
              std::uint64_t shots, std::uint64_t seed) {
    std::map<std::uint64_t, std::uint64_t> counts;
    for (auto o : sample_outcomes(state, basis_change, shots, seed)) {
        ++counts[o];
    }
    return counts;
}

Eigen::MatrixXcd reduced_density_matrix_sys(const StateVector &state,
                                            int sys_qubits) {
    if (state.num_qubits() > kMaxDensityQubits) {
        throw SizeError("reduced density matrix limited to " +
                        std::to_string(kMaxDensityQubits) + " qubits");
    }
    if (sys_qubits < 1 || sys_qubits > state.num_qubits()) {
        throw ShapeError("system block does not fit the state");
    }
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << sys_qubits);
    const auto branches =
        static_cast<Eigen::Index>(state.size()) / dim;
    // Column k holds the (unnormalized) system amplitudes of branch k.
    Eigen::Map<const Eigen::MatrixXcd> blocks(state.amplitudes().data(), dim,
                                              branches);
    return blocks * blocks.adjoint();
}

} // namespace thermvqe
