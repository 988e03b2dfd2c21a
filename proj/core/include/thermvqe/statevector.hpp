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

#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "thermvqe/circuit.hpp"
#include "thermvqe/limits.hpp"
#include "thermvqe/pauli.hpp"

namespace thermvqe {

using Complex = std::complex<double>;

/// Split of the working register into a mixing (auxiliary) block on the
/// high-order qubits and a system block on the low-order qubits. Basis index
/// b therefore decomposes as b = k·2^sys_qubits + s with k the mixing branch.
struct RegisterLayout {
    int aux_qubits = 0;
    int sys_qubits = 1;

    [[nodiscard]] int total_qubits() const noexcept {
        return aux_qubits + sys_qubits;
    }
    [[nodiscard]] std::size_t num_branches() const noexcept {
        return std::size_t{1} << aux_qubits;
    }
    [[nodiscard]] std::size_t sys_dim() const noexcept {
        return std::size_t{1} << sys_qubits;
    }
};

/// Dense pure state over `num_qubits` qubits; qubit 0 is the least
/// significant bit of the basis index.
class StateVector {
  public:
    /// |0…0⟩; throws SizeError outside 1..kMaxQubits.
    explicit StateVector(int num_qubits);

    static StateVector basis(int num_qubits, std::uint64_t index);

    /// Wraps amplitudes whose length is a power of two. The vector is not
    /// renormalized.
    static StateVector from_amplitudes(std::vector<Complex> amplitudes);

    [[nodiscard]] int num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] std::size_t size() const noexcept { return amps_.size(); }

    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept {
        return amps_;
    }
    [[nodiscard]] std::span<Complex> amplitudes() noexcept { return amps_; }

    [[nodiscard]] const Complex &operator[](std::size_t i) const {
        return amps_[i];
    }
    [[nodiscard]] Complex &operator[](std::size_t i) { return amps_[i]; }

    [[nodiscard]] double norm() const noexcept;

    /// ⟨this|other⟩.
    [[nodiscard]] Complex inner(const StateVector &other) const;

  private:
    StateVector(int num_qubits, std::vector<Complex> amps);

    int num_qubits_;
    std::vector<Complex> amps_;
};

StateVector init_state(int num_qubits);

/// Applies one gate in place. Throws IndexError for qubits outside the
/// state and ParameterError when a slot is not bound by `params`.
void apply_gate(StateVector &state, const Gate &gate,
                std::span<const double> params = {});

/// Applies the gates of `circuit` in order. The circuit must span the whole
/// register and `params` must have exactly circuit.num_params() entries.
void run_circuit(StateVector &state, const Circuit &circuit,
                 std::span<const double> params = {});

/// ⟨ψ| 𝟙 ⊗ P |ψ⟩ with P placed on qubits [sys_offset, sys_offset + |P|).
double expval_pauli_string(const StateVector &state,
                           const PauliString &string, int sys_offset = 0);

/// ⟨ψ| 𝟙 ⊗ O |ψ⟩ with O placed on the low-order qubits.
double expval(const StateVector &state, const PauliSum &observable);

/// ⟨ψ| (|k⟩⟨k|_aux ⊗ O) |ψ⟩. The system block is the low
/// observable.num_qubits() qubits; the remaining qubits form the mixing
/// register.
double projected_expval(const StateVector &state, std::size_t aux_index,
                        const PauliSum &observable);

/// Probability of finding the mixing register in |k⟩.
double aux_branch_probability(const StateVector &state, std::size_t aux_index,
                              int sys_qubits);

/// Computational-basis outcomes of `shots` measurements after applying
/// `basis_change` to a copy of the state, in draw order. Deterministic for a
/// given seed. Throws ArgumentError when shots == 0.
std::vector<std::uint64_t> sample_outcomes(const StateVector &state,
                                           const Circuit &basis_change,
                                           std::uint64_t shots,
                                           std::uint64_t seed);

/// Histogram of sample_outcomes.
std::map<std::uint64_t, std::uint64_t>
sample_counts(const StateVector &state, const Circuit &basis_change,
              std::uint64_t shots, std::uint64_t seed);

/// Tr_aux |ψ⟩⟨ψ| over the low `sys_qubits` qubits. Throws SizeError above
/// kMaxDensityQubits total qubits.
Eigen::MatrixXcd reduced_density_matrix_sys(const StateVector &state,
                                            int sys_qubits);

} // namespace thermvqe
