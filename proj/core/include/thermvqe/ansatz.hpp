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

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "thermvqe/circuit.hpp"
#include "thermvqe/statevector.hpp"

namespace thermvqe {

/// Real, strictly positive, non-increasing, unit-norm amplitudes γ_k of the
/// mixing register. γ_k² is the probability of branch k.
class MixingSpec {
  public:
    /// Smallest admissible γ_k after normalization.
    static constexpr double kFloor = 1e-8;

    /// Normalizes `gammas`, raises entries below kFloor to the floor and
    /// renormalizes. Throws ArgumentError for empty input, non-positive or
    /// non-finite entries, or an increasing sequence.
    static MixingSpec from_gammas(std::vector<double> gammas);

    [[nodiscard]] std::size_t size() const noexcept { return gammas_.size(); }
    [[nodiscard]] std::span<const double> gammas() const noexcept {
        return gammas_;
    }
    [[nodiscard]] double gamma(std::size_t k) const { return gammas_.at(k); }
    /// Branch probability γ_k².
    [[nodiscard]] double weight(std::size_t k) const {
        return gammas_.at(k) * gammas_.at(k);
    }

  private:
    explicit MixingSpec(std::vector<double> gammas)
        : gammas_(std::move(gammas)) {}

    std::vector<double> gammas_;
};

enum class MixingFamily {
    Uniform,   ///< γ_k² = 1/K
    Geometric, ///< γ_k² ∝ r^k, 0 < r < 1
    Boltzmann, ///< γ_k² ∝ e^{−β₀ k}, β₀ > 0
};

MixingFamily parse_mixing_family(const std::string &name);
std::string to_string(MixingFamily family);

/// Builds the named family over K levels; `parameter` is r or β₀.
MixingSpec mixing_family(MixingFamily family, std::size_t num_levels,
                         double parameter = 0.0);

/// Circuit Γ on `aux_qubits` qubits with Γ|0⟩ = Σ_k γ_k|k⟩, built as a
/// binary tree of uniformly controlled Y rotations (each expanded into RY
/// and CNOT gates). Requires mixing.size() == 2^aux_qubits.
Circuit build_mixing_circuit(const MixingSpec &mixing, int aux_qubits);

/// CNOT fan copying aux qubit j onto system qubit j, on the full register
/// (system low, aux high). Throws ShapeError when aux_qubits > sys_qubits.
Circuit build_initializer(int aux_qubits, int sys_qubits);

/// Layered hardware-efficient ansatz: each layer applies RX then RZ on every
/// system qubit followed by a CNOT ring i → (i+1) mod n.
struct AnsatzSpec {
    int sys_qubits = 1;
    int layers = 1;

    [[nodiscard]] std::size_t num_params() const noexcept {
        return 2 * static_cast<std::size_t>(sys_qubits) *
               static_cast<std::size_t>(layers);
    }
};

Circuit build_ansatz(const AnsatzSpec &spec);

/// Σ_k γ_k |k⟩_aux ⊗ U(θ)|k⟩_sys, obtained by running Γ, the initializer
/// and the ansatz on |0⟩.
StateVector prepare_full_state(const MixingSpec &mixing, const Circuit &ansatz,
                               std::span<const double> params,
                               RegisterLayout layout);

/// U(θ)|k⟩ for k < num_states, each on the system register alone.
std::vector<StateVector> frame_states(const Circuit &ansatz,
                                      std::span<const double> params,
                                      std::size_t num_states);

/// Number of mixing qubits for K levels; throws ShapeError unless K is a
/// power of two.
int aux_qubits_for(std::size_t num_levels);

} // namespace thermvqe
