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
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "thermvqe/ansatz.hpp"
#include "thermvqe/exact.hpp"
#include "thermvqe/pauli.hpp"
#include "thermvqe/statevector.hpp"

namespace thermvqe {

/// Branch-resolved expectations of one observable O on a prepared state:
/// projected[k] = ⟨|k⟩⟨k| ⊗ O⟩ and probability[k] = ⟨|k⟩⟨k| ⊗ 𝟙⟩.
struct BranchTable {
    std::vector<double> projected;
    std::vector<double> probability;
};

/// Exact branch table, accumulated per measurement setting of diag_circ(O).
/// The system register is the low O.num_qubits() qubits.
BranchTable branch_table(const StateVector &state, const PauliSum &observable);

/// Estimated low-lying spectrum E_k = ⟨|k⟩⟨k| ⊗ H⟩ / γ_k².
struct SpectrumEstimate {
    std::vector<double> energies;
    /// Jackknife errors; empty for exact expectations.
    std::vector<double> stat_errors;

    [[nodiscard]] std::size_t size() const noexcept { return energies.size(); }
};

/// Throws SingularMixingError when a γ_k is below half the mixing floor.
SpectrumEstimate spectrum_from_branches(const BranchTable &hamiltonian,
                                        const MixingSpec &mixing);

SpectrumEstimate estimate_spectrum(const StateVector &state,
                                   const MixingSpec &mixing,
                                   const PauliSum &hamiltonian);

/// Diagonal reweighting operator e^{−β(E_k − min E)} / γ_k².
struct ReweightingWeights {
    double beta = 0.0;
    std::vector<double> weights;
};

ReweightingWeights reweighting_weights(const SpectrumEstimate &spectrum,
                                       const MixingSpec &mixing, double beta);

/// Σ_k w_k projected_k / Σ_k w_k probability_k. Throws UnderflowError when
/// the denominator drops below 1e-300.
double reweighted_ratio(const BranchTable &observable,
                        const ReweightingWeights &weights);

double thermal_average(const StateVector &state, const MixingSpec &mixing,
                       const SpectrumEstimate &spectrum,
                       const PauliSum &observable, double beta);

struct ThermalPoint {
    double beta = 0.0;
    double value = 0.0;
    std::optional<double> stat_error;
};

struct ThermalCurve {
    std::vector<ThermalPoint> points;
};

/// One thermal average per β from the same state and spectrum estimate.
/// `betas` must be non-negative and strictly increasing.
ThermalCurve beta_sweep(const StateVector &state, const MixingSpec &mixing,
                        const SpectrumEstimate &spectrum,
                        const PauliSum &observable,
                        std::span<const double> betas);

/// Best value reachable at truncation K: the Boltzmann average of O over the
/// K lowest exact eigenstates of H.
double truncation_reference(const PauliSum &hamiltonian,
                            const PauliSum &observable, std::size_t num_levels,
                            double beta);

/// Σ_k γ_k |k⟩ ⊗ |φ_k⟩ built from exact eigenvectors, i.e. the state an
/// ideal variational stage would produce.
StateVector exact_optimum_state(const MixingSpec &mixing,
                                const ExactSolution &solution);

// Shot-based estimation -----------------------------------------------------

struct ShotPlan {
    std::uint64_t shots_per_setting = 4096;
    std::uint64_t seed = 0;
    /// Equal-size shot blocks used for jackknife errors.
    std::size_t blocks = 20;
};

/// Sampled measurements of one observable: for every measurement setting,
/// shots are drawn once, split into consecutive blocks, and reduced to
/// per-block, per-branch sums of Λ and outcome counts.
class SampledBranches {
  public:
    static SampledBranches measure(const StateVector &state,
                                   const PauliSum &observable,
                                   const ShotPlan &plan);

    [[nodiscard]] std::size_t num_blocks() const noexcept {
        return block_shots_.size();
    }
    [[nodiscard]] std::size_t num_branches() const noexcept {
        return num_branches_;
    }

    /// Estimate from every block.
    [[nodiscard]] BranchTable table() const;
    /// Estimate from every block except `block`.
    [[nodiscard]] BranchTable table_without(std::size_t block) const;

  private:
    [[nodiscard]] BranchTable table_excluding(std::optional<std::size_t> skip) const;

    std::size_t num_branches_ = 0;
    std::vector<std::uint64_t> block_shots_;
    // [setting][block][branch]
    std::vector<std::vector<std::vector<double>>> lambda_sums_;
    std::vector<std::vector<std::vector<double>>> counts_;
};

/// Leave-one-block-out jackknife error of an estimator evaluated on the
/// block-deleted samples.
double jackknife_error(std::span<const double> leave_one_out);

SpectrumEstimate estimate_spectrum(const SampledBranches &hamiltonian,
                                   const MixingSpec &mixing);

/// Shot-mode sweep reusing the same samples for every β. Pass the same
/// object twice for energy curves.
ThermalCurve beta_sweep(const SampledBranches &hamiltonian,
                        const SampledBranches &observable,
                        const MixingSpec &mixing,
                        std::span<const double> betas);

} // namespace thermvqe
