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

#include "thermvqe/reweighting.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "thermvqe/errors.hpp"
#include "thermvqe/measurement.hpp"
#include "thermvqe/seeding.hpp"

namespace thermvqe {

namespace {

constexpr double kUnderflow = 1e-300;

std::size_t branches_of(const StateVector &state, const PauliSum &observable) {
    if (observable.num_qubits() > state.num_qubits()) {
        throw ShapeError("observable wider than the prepared state");
    }
    return state.size() >> observable.num_qubits();
}

void check_betas(std::span<const double> betas) {
    for (std::size_t i = 0; i < betas.size(); ++i) {
        if (!(betas[i] >= 0.0) || !std::isfinite(betas[i])) {
            throw ArgumentError("inverse temperatures must be finite and "
                                "non-negative");
        }
        if (i > 0 && !(betas[i] > betas[i - 1])) {
            throw ArgumentError("inverse temperatures must be strictly "
                                "increasing");
        }
    }
}

void check_mixing_matches(std::size_t branches, const MixingSpec &mixing) {
    if (branches != mixing.size()) {
        throw ShapeError("state has " + std::to_string(branches) +
                         " mixing branches, mixing has " +
                         std::to_string(mixing.size()) + " levels");
    }
}

} // namespace

BranchTable branch_table(const StateVector &state,
                         const PauliSum &observable) {
    const std::size_t branches = branches_of(state, observable);
    const int sys = observable.num_qubits();
    const std::size_t sys_dim = std::size_t{1} << sys;
    BranchTable out{std::vector<double>(branches, 0.0),
                    std::vector<double>(branches, 0.0)};

    for (std::size_t k = 0; k < branches; ++k) {
        double acc = 0.0;
        for (std::size_t s = 0; s < sys_dim; ++s) {
            acc += std::norm(state[k * sys_dim + s]);
        }
        out.probability[k] = acc;
    }

    for (const auto &setting : diag_circ(observable)) {
        const auto table = setting.eigenvalue_table();
        StateVector rotated = state;
        run_circuit(rotated,
                    setting.basis_change.embedded(state.num_qubits(), 0));
        for (std::size_t k = 0; k < branches; ++k) {
            double acc = 0.0;
            for (std::size_t s = 0; s < sys_dim; ++s) {
                acc += std::norm(rotated[k * sys_dim + s]) * table[s];
            }
            out.projected[k] += acc;
        }
    }
    return out;
}

SpectrumEstimate spectrum_from_branches(const BranchTable &hamiltonian,
                                        const MixingSpec &mixing) {
    check_mixing_matches(hamiltonian.projected.size(), mixing);
    SpectrumEstimate out;
    out.energies.resize(mixing.size());
    for (std::size_t k = 0; k < mixing.size(); ++k) {
        if (mixing.gamma(k) < 0.5 * MixingSpec::kFloor) {
            throw SingularMixingError("mixing coefficient " +
                                      std::to_string(k) +
                                      " is below the positivity floor");
        }
        out.energies[k] = hamiltonian.projected[k] / mixing.weight(k);
    }
    return out;
}

SpectrumEstimate estimate_spectrum(const StateVector &state,
                                   const MixingSpec &mixing,
                                   const PauliSum &hamiltonian) {
    check_mixing_matches(branches_of(state, hamiltonian), mixing);
    return spectrum_from_branches(branch_table(state, hamiltonian), mixing);
}

ReweightingWeights reweighting_weights(const SpectrumEstimate &spectrum,
                                       const MixingSpec &mixing, double beta) {
    if (!(beta >= 0.0) || !std::isfinite(beta)) {
        throw ArgumentError("inverse temperature must be finite and "
                            "non-negative");
    }
    check_mixing_matches(spectrum.size(), mixing);
    for (double e : spectrum.energies) {
        if (!std::isfinite(e)) {
            throw DataError("spectrum estimate contains a non-finite energy");
        }
    }
    const double e_min =
        *std::min_element(spectrum.energies.begin(), spectrum.energies.end());
    ReweightingWeights out{beta, std::vector<double>(mixing.size())};
    for (std::size_t k = 0; k < mixing.size(); ++k) {
        out.weights[k] =
            std::exp(-beta * (spectrum.energies[k] - e_min)) / mixing.weight(k);
    }
    return out;
}

double reweighted_ratio(const BranchTable &observable,
                        const ReweightingWeights &weights) {
    if (observable.projected.size() != weights.weights.size()) {
        throw ShapeError("branch table and weights differ in length");
    }
    double num = 0.0;
    double den = 0.0;
    for (std::size_t k = 0; k < weights.weights.size(); ++k) {
        num += weights.weights[k] * observable.projected[k];
        den += weights.weights[k] * observable.probability[k];
    }
    if (!(std::abs(den) >= kUnderflow)) {
        throw UnderflowError("reweighted normalization underflowed at beta = " +
                             std::to_string(weights.beta));
    }
    return num / den;
}

double thermal_average(const StateVector &state, const MixingSpec &mixing,
                       const SpectrumEstimate &spectrum,
                       const PauliSum &observable, double beta) {
    check_mixing_matches(branches_of(state, observable), mixing);
    return reweighted_ratio(branch_table(state, observable),
                            reweighting_weights(spectrum, mixing, beta));
}

ThermalCurve beta_sweep(const StateVector &state, const MixingSpec &mixing,
                        const SpectrumEstimate &spectrum,
                        const PauliSum &observable,
                        std::span<const double> betas) {
    check_betas(betas);
    check_mixing_matches(branches_of(state, observable), mixing);
    const BranchTable table = branch_table(state, observable);
    ThermalCurve curve;
    for (double beta : betas) {
        curve.points.push_back(
            {beta,
             reweighted_ratio(table,
                              reweighting_weights(spectrum, mixing, beta)),
             std::nullopt});
    }
    return curve;
}

double truncation_reference(const PauliSum &hamiltonian,
                            const PauliSum &observable, std::size_t num_levels,
                            double beta) {
    if (observable.num_qubits() != hamiltonian.num_qubits()) {
        throw ShapeError("observable and Hamiltonian act on different "
                         "registers");
    }
    const auto sol = exact_solve(hamiltonian);
    if (num_levels < 1 || num_levels > sol.dimension()) {
        throw SizeError("truncation must keep 1.." +
                         std::to_string(sol.dimension()) + " levels");
    }
    auto levels = level_expectations(sol, observable);
    levels.resize(num_levels);
    return boltzmann_average(sol.eigenvalues, levels, beta);
}

StateVector exact_optimum_state(const MixingSpec &mixing,
                                const ExactSolution &solution) {
    const std::size_t dim = solution.dimension();
    if (mixing.size() > dim) {
        throw ShapeError("more mixing levels than eigenstates");
    }
    std::vector<Complex> amps(mixing.size() * dim, Complex{0.0, 0.0});
    for (std::size_t k = 0; k < mixing.size(); ++k) {
        const auto col = solution.eigenvectors.col(static_cast<Eigen::Index>(k));
        for (std::size_t s = 0; s < dim; ++s) {
            amps[k * dim + s] =
                mixing.gamma(k) * col[static_cast<Eigen::Index>(s)];
        }
    }
    return StateVector::from_amplitudes(std::move(amps));
}

SampledBranches SampledBranches::measure(const StateVector &state,
                                         const PauliSum &observable,
                                         const ShotPlan &plan) {
    if (plan.blocks < 2) {
        throw ArgumentError("jackknife needs at least two shot blocks");
    }
    if (plan.shots_per_setting < plan.blocks) {
        throw ArgumentError("need at least one shot per block");
    }
    SampledBranches out;
    out.num_branches_ = branches_of(state, observable);
    const std::uint64_t n = plan.shots_per_setting;
    const std::size_t nb = plan.blocks;
    for (std::size_t b = 0; b < nb; ++b) {
        out.block_shots_.push_back((b + 1) * n / nb - b * n / nb);
    }
    const int sys = observable.num_qubits();
    const std::uint64_t sys_mask = (std::uint64_t{1} << sys) - 1;
    const auto settings = diag_circ(observable);
    for (std::size_t m = 0; m < settings.size(); ++m) {
        const auto table = settings[m].eigenvalue_table();
        const auto outcomes = sample_outcomes(
            state, settings[m].basis_change.embedded(state.num_qubits(), 0),
            n, derive_seed(plan.seed, m));
        std::vector<std::vector<double>> sums(
            nb, std::vector<double>(out.num_branches_, 0.0));
        std::vector<std::vector<double>> counts(
            nb, std::vector<double>(out.num_branches_, 0.0));
        for (std::size_t b = 0; b < nb; ++b) {
            for (std::uint64_t i = b * n / nb; i < (b + 1) * n / nb; ++i) {
                const auto outcome = outcomes[i];
                const std::size_t k = outcome >> sys;
                sums[b][k] += table[outcome & sys_mask];
                counts[b][k] += 1.0;
            }
        }
        out.lambda_sums_.push_back(std::move(sums));
        out.counts_.push_back(std::move(counts));
    }
    return out;
}

BranchTable
SampledBranches::table_excluding(std::optional<std::size_t> skip) const {
    BranchTable out{std::vector<double>(num_branches_, 0.0),
                    std::vector<double>(num_branches_, 0.0)};
    double shots = 0.0;
    for (std::size_t b = 0; b < block_shots_.size(); ++b) {
        if (b != skip) {
            shots += static_cast<double>(block_shots_[b]);
        }
    }
    const auto settings = static_cast<double>(lambda_sums_.size());
    for (std::size_t m = 0; m < lambda_sums_.size(); ++m) {
        for (std::size_t b = 0; b < block_shots_.size(); ++b) {
            if (b == skip) {
                continue;
            }
            for (std::size_t k = 0; k < num_branches_; ++k) {
                out.projected[k] += lambda_sums_[m][b][k] / shots;
                // Every setting samples the mixing register identically, so
                // branch frequencies are pooled across settings.
                out.probability[k] += counts_[m][b][k] / (shots * settings);
            }
        }
    }
    return out;
}

BranchTable SampledBranches::table() const {
    return table_excluding(std::nullopt);
}

BranchTable SampledBranches::table_without(std::size_t block) const {
    if (block >= block_shots_.size()) {
        throw IndexError("shot block " + std::to_string(block) +
                         " out of range");
    }
    return table_excluding(block);
}

double jackknife_error(std::span<const double> leave_one_out) {
    const auto n = static_cast<double>(leave_one_out.size());
    if (leave_one_out.size() < 2) {
        throw ArgumentError("jackknife needs at least two samples");
    }
    const double mean =
        std::accumulate(leave_one_out.begin(), leave_one_out.end(), 0.0) / n;
    double ss = 0.0;
    for (double x : leave_one_out) {
        ss += (x - mean) * (x - mean);
    }
    return std::sqrt((n - 1.0) / n * ss);
}

SpectrumEstimate estimate_spectrum(const SampledBranches &hamiltonian,
                                   const MixingSpec &mixing) {
    SpectrumEstimate out = spectrum_from_branches(hamiltonian.table(), mixing);
    const std::size_t nb = hamiltonian.num_blocks();
    std::vector<std::vector<double>> partial(mixing.size(),
                                             std::vector<double>(nb));
    for (std::size_t b = 0; b < nb; ++b) {
        const auto e =
            spectrum_from_branches(hamiltonian.table_without(b), mixing);
        for (std::size_t k = 0; k < mixing.size(); ++k) {
            partial[k][b] = e.energies[k];
        }
    }
    for (const auto &p : partial) {
        out.stat_errors.push_back(jackknife_error(p));
    }
    return out;
}

ThermalCurve beta_sweep(const SampledBranches &hamiltonian,
                        const SampledBranches &observable,
                        const MixingSpec &mixing,
                        std::span<const double> betas) {
    check_betas(betas);
    if (hamiltonian.num_blocks() != observable.num_blocks()) {
        throw ShapeError("Hamiltonian and observable samples use different "
                         "block counts");
    }
    const std::size_t nb = hamiltonian.num_blocks();
    const SpectrumEstimate spectrum =
        spectrum_from_branches(hamiltonian.table(), mixing);
    const BranchTable table = observable.table();
    std::vector<SpectrumEstimate> spectra;
    std::vector<BranchTable> tables;
    for (std::size_t b = 0; b < nb; ++b) {
        spectra.push_back(
            spectrum_from_branches(hamiltonian.table_without(b), mixing));
        tables.push_back(observable.table_without(b));
    }
    ThermalCurve curve;
    std::vector<double> partial(nb);
    for (double beta : betas) {
        const double value = reweighted_ratio(
            table, reweighting_weights(spectrum, mixing, beta));
        for (std::size_t b = 0; b < nb; ++b) {
            partial[b] = reweighted_ratio(
                tables[b], reweighting_weights(spectra[b], mixing, beta));
        }
        curve.points.push_back({beta, value, jackknife_error(partial)});
    }
    return curve;
}

} // namespace thermvqe
