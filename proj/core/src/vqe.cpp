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

#include "thermvqe/vqe.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <random>

#include "thermvqe/errors.hpp"
#include "thermvqe/seeding.hpp"

namespace thermvqe {

namespace {

RegisterLayout checked_layout(const PauliSum &h, const MixingSpec &mixing,
                              const Circuit &ansatz, RegisterLayout layout) {
    if (layout.aux_qubits < 0 || layout.aux_qubits > layout.sys_qubits) {
        throw ShapeError("need 0 <= aux qubits <= system qubits");
    }
    if (mixing.size() != layout.num_branches()) {
        throw ShapeError("mixing has " + std::to_string(mixing.size()) +
                         " levels, register has " +
                         std::to_string(layout.num_branches()) + " branches");
    }
    if (h.num_qubits() != layout.sys_qubits ||
        ansatz.num_qubits() != layout.sys_qubits) {
        throw ShapeError("Hamiltonian and ansatz must act on the " +
                         std::to_string(layout.sys_qubits) +
                         "-qubit system register");
    }
    return layout;
}

StateVector initialized_state(const MixingSpec &mixing, RegisterLayout layout) {
    const int total = layout.total_qubits();
    StateVector s(total);
    run_circuit(s, build_mixing_circuit(mixing, layout.aux_qubits)
                       .embedded(total, layout.sys_qubits));
    run_circuit(s, build_initializer(layout.aux_qubits, layout.sys_qubits));
    return s;
}

double norm2(std::span<const double> v) {
    double acc = 0.0;
    for (double x : v) {
        acc += x * x;
    }
    return std::sqrt(acc);
}

void check_shift_compatible(const Circuit &ansatz) {
    std::vector<int> uses(ansatz.num_params(), 0);
    for (const auto &g : ansatz.gates()) {
        if (auto slot = g.param_slot()) {
            if (!g.is_rotation()) {
                throw UnsupportedGateError(to_string(g.kind()) +
                                           " cannot be differentiated");
            }
            if (++uses[*slot] > 1) {
                throw UnsupportedGateError(
                    "parameter slot " + std::to_string(*slot) +
                    " drives several gates; the two-term shift rule does "
                    "not apply");
            }
        }
    }
}

/// Tracks the incumbent across all evaluations of one optimizer run.
struct RunState {
    std::vector<double> costs;
    std::vector<double> grad_norms;
    std::vector<double> running_best;
    ParamVector best_params;
    double best_cost = std::numeric_limits<double>::infinity();
    bool converged = false;

    void record(double c, double gnorm, std::span<const double> params) {
        costs.push_back(c);
        grad_norms.push_back(gnorm);
        if (c < best_cost) {
            best_cost = c;
            best_params.assign(params.begin(), params.end());
        }
        running_best.push_back(best_cost);
    }

    [[nodiscard]] bool plateaued(std::size_t window, double tol) const {
        const std::size_t t = running_best.size();
        return t > window &&
               running_best[t - 1 - window] - running_best[t - 1] < tol;
    }
};

RunState run_adam(const CostContext &ctx, const OptimizerConfig &cfg,
                  ParamVector theta, std::uint64_t stream_seed) {
    RunState run;
    const std::size_t p = theta.size();
    std::vector<double> m(p, 0.0);
    std::vector<double> v(p, 0.0);
    const double decay =
        cfg.max_iterations > 1
            ? std::log(cfg.final_learning_rate / cfg.learning_rate) /
                  static_cast<double>(cfg.max_iterations - 1)
            : 0.0;
    for (std::size_t t = 0; t < cfg.max_iterations; ++t) {
        std::optional<CostContext> resampled;
        if (!ctx.is_exact()) {
            resampled.emplace(ctx.with_mode(
                ShotSampling{std::get<ShotSampling>(ctx.mode()).shots,
                             derive_seed(stream_seed, t)}));
        }
        const CostContext &step_ctx = resampled ? *resampled : ctx;
        const double c = cost(step_ctx, theta);
        const auto g = gradient(step_ctx, theta);
        const double gnorm = norm2(g);
        run.record(c, gnorm, theta);
        if (gnorm < cfg.tolerance ||
            run.plateaued(cfg.plateau_window, cfg.tolerance)) {
            run.converged = true;
            break;
        }
        const double lr =
            cfg.learning_rate * std::exp(decay * static_cast<double>(t));
        const double b1t =
            1.0 - std::pow(cfg.adam_beta1, static_cast<double>(t + 1));
        const double b2t =
            1.0 - std::pow(cfg.adam_beta2, static_cast<double>(t + 1));
        for (std::size_t j = 0; j < p; ++j) {
            m[j] = cfg.adam_beta1 * m[j] + (1.0 - cfg.adam_beta1) * g[j];
            v[j] = cfg.adam_beta2 * v[j] + (1.0 - cfg.adam_beta2) * g[j] * g[j];
            theta[j] -=
                lr * (m[j] / b1t) / (std::sqrt(v[j] / b2t) + cfg.adam_epsilon);
        }
    }
    return run;
}

RunState run_spsa(const CostContext &ctx, const OptimizerConfig &cfg,
                  ParamVector theta, std::uint64_t stream_seed) {
    // Standard gain sequences a_k = a / (k + 1 + A)^0.602, c_k = c / (k + 1)^0.101.
    constexpr double kAlpha = 0.602;
    constexpr double kGamma = 0.101;
    const double stability = 0.1 * static_cast<double>(cfg.max_iterations);
    RunState run;
    std::mt19937_64 rng(derive_seed(stream_seed, 0xD1CE));
    std::uint64_t evals = 0;
    const auto eval = [&](std::span<const double> x) {
        if (ctx.is_exact()) {
            return cost(ctx, x);
        }
        return cost(ctx.with_mode(ShotSampling{
                        std::get<ShotSampling>(ctx.mode()).shots,
                        derive_seed(stream_seed, evals++)}),
                    x);
    };
    const std::size_t p = theta.size();
    std::vector<double> delta(p);
    std::vector<double> plus(p);
    std::vector<double> minus(p);
    std::vector<double> ghat(p);
    for (std::size_t k = 0; k < cfg.max_iterations; ++k) {
        const double ak =
            cfg.learning_rate /
            std::pow(static_cast<double>(k + 1) + stability, kAlpha);
        const double ck = cfg.spsa_perturbation /
                          std::pow(static_cast<double>(k + 1), kGamma);
        for (std::size_t j = 0; j < p; ++j) {
            delta[j] = (rng() >> 63) ? 1.0 : -1.0;
            plus[j] = theta[j] + ck * delta[j];
            minus[j] = theta[j] - ck * delta[j];
        }
        const double diff = (eval(plus) - eval(minus)) / (2.0 * ck);
        for (std::size_t j = 0; j < p; ++j) {
            ghat[j] = diff * delta[j];
        }
        const double gnorm = norm2(ghat);
        run.record(eval(theta), gnorm, theta);
        if (run.plateaued(cfg.plateau_window, cfg.tolerance)) {
            run.converged = true;
            break;
        }
        for (std::size_t j = 0; j < p; ++j) {
            theta[j] -= ak * ghat[j];
        }
    }
    return run;
}

} // namespace

CostContext::CostContext(PauliSum hamiltonian, MixingSpec mixing,
                         Circuit ansatz, RegisterLayout layout,
                         EvaluationMode mode)
    : hamiltonian_(std::move(hamiltonian)), mixing_(std::move(mixing)),
      ansatz_(std::move(ansatz)),
      layout_(checked_layout(hamiltonian_, mixing_, ansatz_, layout)),
      mode_(mode), initialized_(initialized_state(mixing_, layout_)),
      full_ansatz_(ansatz_.embedded(layout_.total_qubits(), 0)) {
    if (const auto *shots = std::get_if<ShotSampling>(&mode_);
        shots && shots->shots == 0) {
        throw ArgumentError("shot count must be at least 1");
    }
    for (const auto &setting : diag_circ(hamiltonian_)) {
        full_basis_changes_.push_back(
            setting.basis_change.embedded(layout_.total_qubits(), 0));
        eigenvalue_tables_.push_back(setting.eigenvalue_table());
    }
}

CostContext CostContext::with_mode(EvaluationMode mode) const {
    CostContext copy = *this;
    if (const auto *shots = std::get_if<ShotSampling>(&mode);
        shots && shots->shots == 0) {
        throw ArgumentError("shot count must be at least 1");
    }
    copy.mode_ = mode;
    return copy;
}

StateVector CostContext::prepare(std::span<const double> params) const {
    StateVector s = initialized_;
    run_circuit(s, full_ansatz_, params);
    return s;
}

double CostContext::energy(const StateVector &state) const {
    const std::size_t sys_mask = layout_.sys_dim() - 1;
    double total = 0.0;
    for (std::size_t m = 0; m < full_basis_changes_.size(); ++m) {
        const auto &table = eigenvalue_tables_[m];
        if (const auto *shots = std::get_if<ShotSampling>(&mode_)) {
            const auto outcomes =
                sample_outcomes(state, full_basis_changes_[m], shots->shots,
                                derive_seed(shots->seed, m));
            double acc = 0.0;
            for (auto b : outcomes) {
                acc += table[b & sys_mask];
            }
            total += acc / static_cast<double>(shots->shots);
            continue;
        }
        const StateVector *rotated = &state;
        StateVector scratch(1);
        if (!full_basis_changes_[m].empty()) {
            scratch = state;
            run_circuit(scratch, full_basis_changes_[m]);
            rotated = &scratch;
        }
        const auto amps = rotated->amplitudes();
        double acc = 0.0;
        for (std::size_t b = 0; b < amps.size(); ++b) {
            acc += std::norm(amps[b]) * table[b & sys_mask];
        }
        total += acc;
    }
    return total;
}

double cost(const CostContext &ctx, std::span<const double> params) {
    if (params.size() != ctx.num_params()) {
        throw ShapeError("ansatz expects " + std::to_string(ctx.num_params()) +
                         " parameters, got " + std::to_string(params.size()));
    }
    return ctx.energy(ctx.prepare(params));
}

std::vector<double> gradient(const CostContext &ctx,
                             std::span<const double> params) {
    check_shift_compatible(ctx.ansatz());
    if (params.size() != ctx.num_params()) {
        throw ShapeError("ansatz expects " + std::to_string(ctx.num_params()) +
                         " parameters, got " + std::to_string(params.size()));
    }
    constexpr double kShift = std::numbers::pi / 2.0;
    ParamVector shifted(params.begin(), params.end());
    std::vector<double> grad(params.size());
    for (std::size_t j = 0; j < params.size(); ++j) {
        shifted[j] = params[j] + kShift;
        const double up = cost(ctx, shifted);
        shifted[j] = params[j] - kShift;
        const double down = cost(ctx, shifted);
        shifted[j] = params[j];
        grad[j] = 0.5 * (up - down);
    }
    return grad;
}

OptimizerMethod parse_optimizer_method(const std::string &name) {
    if (name == "adam") {
        return OptimizerMethod::Adam;
    }
    if (name == "spsa") {
        return OptimizerMethod::Spsa;
    }
    throw ArgumentError("unknown optimizer method '" + name + "'");
}

std::string to_string(OptimizerMethod method) {
    return method == OptimizerMethod::Adam ? "adam" : "spsa";
}

OptResult minimize(const CostContext &ctx, const OptimizerConfig &config) {
    if (config.max_iterations < 1 || !(config.tolerance > 0.0) ||
        config.restarts < 1 || !(config.learning_rate > 0.0) ||
        !(config.final_learning_rate > 0.0)) {
        throw ArgumentError("optimizer needs max_iterations >= 1, "
                            "restarts >= 1 and positive tolerance and "
                            "learning rates");
    }
    OptResult result;
    result.best_cost = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < config.restarts; ++r) {
        const std::uint64_t stream = derive_seed(config.seed, r);
        std::mt19937_64 rng(stream);
        ParamVector theta(ctx.num_params());
        for (auto &x : theta) {
            const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            x = config.init_range * (2.0 * u - 1.0);
        }
        RunState run = config.method == OptimizerMethod::Adam
                           ? run_adam(ctx, config, std::move(theta), stream)
                           : run_spsa(ctx, config, std::move(theta), stream);
        result.restart_best_costs.push_back(run.best_cost);
        if (run.best_cost < result.best_cost) {
            result.best_cost = run.best_cost;
            result.best_params = std::move(run.best_params);
            result.cost_history = std::move(run.costs);
            result.grad_norm_history = std::move(run.grad_norms);
            result.converged = run.converged;
            result.iterations_used = result.cost_history.size();
            result.best_restart = r;
        }
    }
    return result;
}

double c_min(const MixingSpec &mixing, const ExactSolution &spectrum) {
    if (mixing.size() > spectrum.dimension()) {
        throw ShapeError("mixing has more levels than the spectrum");
    }
    double acc = 0.0;
    for (std::size_t k = 0; k < mixing.size(); ++k) {
        acc += mixing.weight(k) * spectrum.eigenvalues[k];
    }
    return acc;
}

} // namespace thermvqe
