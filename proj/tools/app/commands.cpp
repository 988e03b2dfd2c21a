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

#include "app/commands.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "app/io.hpp"
#include "thermvqe/ansatz.hpp"
#include "thermvqe/errors.hpp"
#include "thermvqe/exact.hpp"
#include "thermvqe/seeding.hpp"
#include "thermvqe/vqe.hpp"

namespace thermvqe::app {

namespace {

// Independent random streams derived from the run seed.
constexpr std::uint64_t kOptimizerShotStream = 1;
constexpr std::uint64_t kSweepHamiltonianStream = 2;
constexpr std::uint64_t kSweepObservableStream = 3;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

RegisterLayout layout_of(const RunConfig &cfg) {
    return RegisterLayout{cfg.q_a, cfg.q_s};
}

Circuit ansatz_of(const RunConfig &cfg) {
    return build_ansatz(AnsatzSpec{cfg.q_s, cfg.layers});
}

std::string join(const std::vector<double> &xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += format_double(xs[i]);
    }
    return out;
}

void write_summary(RunSummary &summary) {
    const auto path = summary.config.out / "summary.txt";
    summary.files.push_back(path);
    write_file(path, render_summary(summary));
}

} // namespace

PauliSum build_hamiltonian(const RunConfig &cfg) {
    if (cfg.q_s < 2) {
        // A one-site chain has no bonds; keep only the field term.
        return PauliSum(1, {{-cfg.h, PauliString("Z")}});
    }
    return build_tfi(cfg.q_s, cfg.j, cfg.h, cfg.periodic);
}

PauliSum build_observable(const RunConfig &cfg, const PauliSum &hamiltonian) {
    if (cfg.observable == "energy") {
        return hamiltonian;
    }
    if (!std::filesystem::exists(cfg.observable)) {
        throw IoError("observable file not found: " + cfg.observable);
    }
    PauliSum o = load_observable(cfg.observable);
    if (o.num_qubits() != hamiltonian.num_qubits()) {
        throw ShapeError("observable acts on " +
                         std::to_string(o.num_qubits()) +
                         " qubits, system register has " +
                         std::to_string(hamiltonian.num_qubits()));
    }
    return o;
}

MixingSpec build_mixing(const RunConfig &cfg) {
    return mixing_family(cfg.mixing_family, std::size_t{1} << cfg.q_a,
                         cfg.mixing_param);
}

RunSummary cmd_solve(const RunConfig &cfg, const SolveOptions &opts) {
    validate(cfg);
    RunSummary summary;
    summary.config = cfg;
    const PauliSum h = build_hamiltonian(cfg);
    const MixingSpec mixing = build_mixing(cfg);
    EvaluationMode mode = ExactExpectation{};
    if (cfg.shot_mode) {
        mode = ShotSampling{cfg.shots, derive_seed(cfg.seed, kOptimizerShotStream)};
    }
    const CostContext ctx(h, mixing, ansatz_of(cfg), layout_of(cfg), mode);
    OptimizerConfig opt = cfg.optimizer;
    opt.seed = cfg.seed;

    const auto t0 = Clock::now();
    const OptResult result = minimize(ctx, opt);
    summary.wall_times["solve"] = seconds_since(t0);

    summary.best_cost = result.best_cost;
    summary.converged = result.converged;
    summary.iterations = result.iterations_used;
    if (cfg.oracle) {
        const auto t1 = Clock::now();
        summary.c_min = c_min(mixing, exact_solve(h));
        summary.wall_times["oracle"] = seconds_since(t1);
    }

    const auto theta_path = cfg.out / "theta_star.txt";
    write_theta(theta_path, result.best_params);
    summary.files.push_back(theta_path);
    if (opts.trace) {
        std::string csv = "iteration,cost,grad_norm\n";
        for (std::size_t i = 0; i < result.cost_history.size(); ++i) {
            csv += std::to_string(i) + "," +
                   format_double(result.cost_history[i]) + "," +
                   format_double(result.grad_norm_history[i]) + "\n";
        }
        const auto trace_path = cfg.out / "trace.csv";
        write_file(trace_path, csv);
        summary.files.push_back(trace_path);
    }
    write_summary(summary);
    return summary;
}

RunSummary cmd_sweep(const RunConfig &cfg, const SweepOptions &opts) {
    validate(cfg);
    RunSummary summary;
    summary.config = cfg;
    const PauliSum h = build_hamiltonian(cfg);
    const PauliSum o = build_observable(cfg, h);
    const MixingSpec mixing = build_mixing(cfg);
    const Circuit ansatz = ansatz_of(cfg);
    const auto theta = read_theta(opts.theta.value_or(cfg.out / "theta_star.txt"));
    if (theta.size() != ansatz.num_params()) {
        throw ShapeError("theta file holds " + std::to_string(theta.size()) +
                         " angles, ansatz expects " +
                         std::to_string(ansatz.num_params()));
    }
    const std::vector<double> betas = beta_grid(cfg);

    const auto t0 = Clock::now();
    const StateVector state =
        prepare_full_state(mixing, ansatz, theta, layout_of(cfg));
    SpectrumEstimate spectrum;
    ThermalCurve curve;
    if (cfg.shot_mode) {
        const ShotPlan h_plan{cfg.shots,
                              derive_seed(cfg.seed, kSweepHamiltonianStream),
                              cfg.jackknife_blocks};
        const auto h_samples = SampledBranches::measure(state, h, h_plan);
        spectrum = estimate_spectrum(h_samples, mixing);
        if (cfg.observable == "energy") {
            curve = beta_sweep(h_samples, h_samples, mixing, betas);
        } else {
            const ShotPlan o_plan{cfg.shots,
                                  derive_seed(cfg.seed, kSweepObservableStream),
                                  cfg.jackknife_blocks};
            curve = beta_sweep(h_samples,
                               SampledBranches::measure(state, o, o_plan),
                               mixing, betas);
        }
    } else {
        spectrum = estimate_spectrum(state, mixing, h);
        curve = beta_sweep(state, mixing, spectrum, o, betas);
    }
    summary.wall_times["sweep"] = seconds_since(t0);
    summary.spectrum = spectrum.energies;
    summary.spectrum_errors = spectrum.stat_errors;
    summary.best_cost =
        cost(CostContext(h, mixing, ansatz, layout_of(cfg)), theta);

    std::vector<std::optional<double>> e_exact(spectrum.size());
    std::vector<std::optional<double>> exact(betas.size());
    std::vector<std::optional<double>> reference(betas.size());
    if (cfg.oracle) {
        const auto t1 = Clock::now();
        const ExactSolution sol = exact_solve(h);
        summary.c_min = c_min(mixing, sol);
        for (std::size_t k = 0; k < spectrum.size(); ++k) {
            e_exact[k] = sol.eigenvalues[k];
        }
        for (std::size_t i = 0; i < betas.size(); ++i) {
            exact[i] = exact_thermal_average(h, o, betas[i]);
            reference[i] = truncation_reference(h, o, mixing.size(), betas[i]);
        }
        summary.wall_times["oracle"] = seconds_since(t1);
    }

    std::string spec_csv = "k,E_est,E_exact\n";
    for (std::size_t k = 0; k < spectrum.size(); ++k) {
        spec_csv += std::to_string(k) + "," +
                    format_double(spectrum.energies[k]) + "," +
                    format_optional(e_exact[k]) + "\n";
    }
    std::string curve_csv =
        "beta,estimate,stat_error,exact,truncation_reference,abs_err\n";
    for (std::size_t i = 0; i < curve.points.size(); ++i) {
        const auto &p = curve.points[i];
        std::optional<double> abs_err;
        if (exact[i]) {
            abs_err = std::abs(p.value - *exact[i]);
        }
        curve_csv += format_double(p.beta) + "," + format_double(p.value) +
                     "," + format_optional(p.stat_error) + "," +
                     format_optional(exact[i]) + "," +
                     format_optional(reference[i]) + "," +
                     format_optional(abs_err) + "\n";
    }
    const auto spec_path = cfg.out / "spectrum.csv";
    const auto curve_path = cfg.out / "curve.csv";
    write_file(spec_path, spec_csv);
    write_file(curve_path, curve_csv);
    summary.files.push_back(spec_path);
    summary.files.push_back(curve_path);
    write_summary(summary);
    return summary;
}

RunSummary cmd_oracle(const RunConfig &cfg) {
    validate(cfg);
    RunSummary summary;
    summary.config = cfg;
    const PauliSum h = build_hamiltonian(cfg);
    const PauliSum o = build_observable(cfg, h);
    const auto t0 = Clock::now();
    const ExactSolution sol = exact_solve(h);
    const auto levels = level_expectations(sol, o);
    std::string spec_csv = "k,E_exact\n";
    for (std::size_t k = 0; k < sol.eigenvalues.size(); ++k) {
        spec_csv += std::to_string(k) + "," +
                    format_double(sol.eigenvalues[k]) + "\n";
    }
    std::string curve_csv = "beta,exact\n";
    for (double beta : beta_grid(cfg)) {
        curve_csv += format_double(beta) + "," +
                     format_double(boltzmann_average(sol.eigenvalues, levels,
                                                     beta)) +
                     "\n";
    }
    summary.wall_times["oracle"] = seconds_since(t0);
    summary.spectrum = sol.eigenvalues;
    const auto spec_path = cfg.out / "oracle_spectrum.csv";
    const auto curve_path = cfg.out / "oracle_curve.csv";
    write_file(spec_path, spec_csv);
    write_file(curve_path, curve_csv);
    summary.files.push_back(spec_path);
    summary.files.push_back(curve_path);
    write_summary(summary);
    return summary;
}

std::string render_summary(const RunSummary &summary) {
    std::ostringstream out;
    for (const auto &[key, value] : to_entries(summary.config)) {
        out << key << " = " << value << "\n";
    }
    if (summary.best_cost) {
        out << "result.best_cost = " << format_double(*summary.best_cost) << "\n";
    }
    if (summary.c_min) {
        out << "result.c_min = " << format_double(*summary.c_min) << "\n";
    }
    if (summary.converged) {
        out << "result.converged = " << (*summary.converged ? "true" : "false")
            << "\n";
    }
    if (summary.iterations) {
        out << "result.iterations = " << *summary.iterations << "\n";
    }
    if (!summary.spectrum.empty()) {
        out << "result.spectrum = " << join(summary.spectrum) << "\n";
    }
    if (!summary.spectrum_errors.empty()) {
        out << "result.spectrum_error = " << join(summary.spectrum_errors)
            << "\n";
    }
    for (const auto &[stage, secs] : summary.wall_times) {
        out << "result.seconds." << stage << " = " << format_double(secs)
            << "\n";
    }
    for (const auto &f : summary.files) {
        out << "result.file = " << f.string() << "\n";
    }
    return out.str();
}

} // namespace thermvqe::app
