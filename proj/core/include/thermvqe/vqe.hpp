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
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "thermvqe/ansatz.hpp"
#include "thermvqe/circuit.hpp"
#include "thermvqe/exact.hpp"
#include "thermvqe/measurement.hpp"
#include "thermvqe/pauli.hpp"
#include "thermvqe/statevector.hpp"

namespace thermvqe {

/// Expectations computed from amplitudes.
struct ExactExpectation {};

/// Expectations estimated from `shots` samples per measurement setting.
struct ShotSampling {
    std::uint64_t shots = 1024;
    std::uint64_t seed = 0;
};

using EvaluationMode = std::variant<ExactExpectation, ShotSampling>;

/// Everything needed to evaluate C(θ) = Σ_k γ_k² ⟨k|U†(θ) H U(θ)|k⟩ as
/// ⟨Ψ_γ(θ)| 𝟙 ⊗ H |Ψ_γ(θ)⟩ on the full register.
///
/// The θ-independent part of the preparation (mixing circuit and
/// initializer) and the measurement settings of H are built once.
class CostContext {
  public:
    CostContext(PauliSum hamiltonian, MixingSpec mixing, Circuit ansatz,
                RegisterLayout layout, EvaluationMode mode = ExactExpectation{});

    [[nodiscard]] const PauliSum &hamiltonian() const noexcept {
        return hamiltonian_;
    }
    [[nodiscard]] const MixingSpec &mixing() const noexcept { return mixing_; }
    [[nodiscard]] const Circuit &ansatz() const noexcept { return ansatz_; }
    [[nodiscard]] RegisterLayout layout() const noexcept { return layout_; }
    [[nodiscard]] const EvaluationMode &mode() const noexcept { return mode_; }
    [[nodiscard]] std::size_t num_params() const noexcept {
        return ansatz_.num_params();
    }
    [[nodiscard]] bool is_exact() const noexcept {
        return std::holds_alternative<ExactExpectation>(mode_);
    }

    [[nodiscard]] CostContext with_mode(EvaluationMode mode) const;

    /// |Ψ_γ(θ)⟩ on the full register.
    [[nodiscard]] StateVector prepare(std::span<const double> params) const;

    /// ⟨𝟙 ⊗ H⟩ on an already prepared full-register state, using this
    /// context's evaluation mode.
    [[nodiscard]] double energy(const StateVector &state) const;

  private:
    PauliSum hamiltonian_;
    MixingSpec mixing_;
    Circuit ansatz_;
    RegisterLayout layout_;
    EvaluationMode mode_;

    StateVector initialized_;
    Circuit full_ansatz_;
    std::vector<Circuit> full_basis_changes_;
    std::vector<std::vector<double>> eigenvalue_tables_;
};

double cost(const CostContext &ctx, std::span<const double> params);

/// Parameter-shift gradient: [C(θ + π/2 e_j) − C(θ − π/2 e_j)] / 2. Throws
/// UnsupportedGateError when a parameter slot drives more than one gate.
std::vector<double> gradient(const CostContext &ctx,
                             std::span<const double> params);

enum class OptimizerMethod {
    Adam, ///< adaptive-moment descent on parameter-shift gradients
    Spsa, ///< simultaneous-perturbation stochastic approximation
};

OptimizerMethod parse_optimizer_method(const std::string &name);
std::string to_string(OptimizerMethod method);

struct OptimizerConfig {
    OptimizerMethod method = OptimizerMethod::Adam;
    std::size_t max_iterations = 3000;
    /// Step size at the first iteration (Adam) or SPSA gain a.
    double learning_rate = 0.05;
    /// Adam step size decays geometrically to this value at max_iterations.
    double final_learning_rate = 0.002;
    /// Stop when the best cost improves by less than this over
    /// `plateau_window` iterations, or when the gradient norm drops below it.
    double tolerance = 1e-7;
    std::size_t plateau_window = 50;
    std::uint64_t seed = 1;
    std::size_t restarts = 3;
    /// Initial angles are drawn uniformly from [−init_range, init_range].
    double init_range = 0.1;
    double adam_beta1 = 0.9;
    double adam_beta2 = 0.999;
    double adam_epsilon = 1e-8;
    /// SPSA perturbation size c.
    double spsa_perturbation = 0.1;

    bool operator==(const OptimizerConfig &) const = default;
};

struct OptResult {
    ParamVector best_params;
    double best_cost = 0.0;
    /// Cost at the start of every iteration of the winning restart.
    std::vector<double> cost_history;
    /// Norm of the gradient (or SPSA gradient estimate) alongside cost_history.
    std::vector<double> grad_norm_history;
    bool converged = false;
    std::size_t iterations_used = 0;
    std::size_t best_restart = 0;
    std::vector<double> restart_best_costs;
};

/// Best-of-N seeded restarts of the configured optimizer. Deterministic for a
/// given config; non-convergence is reported in the result, not thrown.
OptResult minimize(const CostContext &ctx, const OptimizerConfig &config);

/// Σ_{k<K} γ_k² E_k, the smallest cost reachable with non-increasing γ.
double c_min(const MixingSpec &mixing, const ExactSolution &spectrum);

} // namespace thermvqe
