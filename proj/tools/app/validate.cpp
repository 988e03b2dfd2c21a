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

#include "app/validate.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include <Eigen/QR>

#include "app/commands.hpp"
#include "app/io.hpp"
#include "thermvqe/ansatz.hpp"
#include "thermvqe/errors.hpp"
#include "thermvqe/exact.hpp"
#include "thermvqe/measurement.hpp"
#include "thermvqe/reweighting.hpp"
#include "thermvqe/seeding.hpp"
#include "thermvqe/vqe.hpp"

namespace thermvqe::app {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    int below(int n) {
        return static_cast<int>(engine_() % static_cast<std::uint64_t>(n));
    }
    double normal() {
        // Box-Muller keeps draws identical across standard libraries.
        const double u = 1.0 - uniform();
        return std::sqrt(-2.0 * std::log(u)) * std::cos(kTwoPi * uniform());
    }

  private:
    std::mt19937_64 engine_;
};

StateVector random_state(int n, Rng &rng) {
    std::vector<Complex> amps(std::size_t{1} << n);
    double norm2 = 0.0;
    for (auto &a : amps) {
        a = {rng.normal(), rng.normal()};
        norm2 += std::norm(a);
    }
    for (auto &a : amps) {
        a /= std::sqrt(norm2);
    }
    return StateVector::from_amplitudes(std::move(amps));
}

ParamVector random_angles(std::size_t count, Rng &rng) {
    ParamVector theta(count);
    for (auto &x : theta) {
        x = rng.uniform(0.0, kTwoPi);
    }
    return theta;
}

Gate random_gate(int n, Rng &rng, bool invertible_only) {
    const int kinds = invertible_only ? 6 : 7;
    const int q = rng.below(n);
    switch (rng.below(kinds)) {
    case 0:
        return Gate::x(q);
    case 1:
        return Gate::h(q);
    case 2:
        return Gate::rx(q, rng.uniform(0.0, kTwoPi));
    case 3:
        return Gate::ry(q, rng.uniform(0.0, kTwoPi));
    case 4:
        return Gate::rz(q, rng.uniform(0.0, kTwoPi));
    case 5:
        if (n > 1) {
            const int t = (q + 1 + rng.below(n - 1)) % n;
            return Gate::cnot(q, t);
        }
        return Gate::x(q);
    default:
        return Gate::sdg_h(q);
    }
}

PauliSum random_pauli_sum(int n, std::size_t terms, Rng &rng) {
    static constexpr char kAxes[] = {'I', 'X', 'Y', 'Z'};
    std::vector<PauliTerm> out;
    for (std::size_t t = 0; t < terms; ++t) {
        std::string axes(static_cast<std::size_t>(n), 'I');
        for (auto &c : axes) {
            c = kAxes[rng.below(4)];
        }
        out.push_back({rng.uniform(-1.0, 1.0), PauliString(axes)});
    }
    return PauliSum(n, std::move(out));
}

Eigen::MatrixXcd circuit_matrix(const Circuit &c) {
    const auto dim = std::size_t{1} << c.num_qubits();
    Eigen::MatrixXcd m(dim, dim);
    for (std::size_t col = 0; col < dim; ++col) {
        auto s = StateVector::basis(c.num_qubits(), col);
        run_circuit(s, c);
        for (std::size_t row = 0; row < dim; ++row) {
            m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = s[row];
        }
    }
    return m;
}

Eigen::VectorXcd as_vector(const StateVector &s) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i) {
        v[static_cast<Eigen::Index>(i)] = s[i];
    }
    return v;
}

double max_abs_diff(const StateVector &a, const StateVector &b) {
    double out = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        out = std::max(out, std::abs(a[i] - b[i]));
    }
    return out;
}

struct Context {
    const RunConfig &cfg;
    bool quick;
    Fault fault;
    PauliSum h;
    MixingSpec mixing;
    Circuit ansatz;
    RegisterLayout layout;
    std::vector<double> betas;

    [[nodiscard]] std::size_t count(std::size_t full, std::size_t reduced) const {
        return quick ? reduced : full;
    }
};

using Check = std::function<double(const Context &, Rng &)>;

struct Property {
    const char *name;
    double threshold;
    Check check;
};

double norm_preservation(const Context &c, Rng &rng) {
    const int n = c.layout.total_qubits();
    double worst = 0.0;
    for (std::size_t i = 0; i < c.count(1000, 100); ++i) {
        StateVector s(n);
        for (int g = 0; g < 30; ++g) {
            apply_gate(s, random_gate(n, rng, false));
        }
        worst = std::max(worst, std::abs(s.norm() - 1.0));
    }
    return worst;
}

double unitarity(const Context &c, Rng &rng) {
    const int n = c.layout.total_qubits();
    double worst = 0.0;
    for (std::size_t i = 0; i < c.count(1000, 100); ++i) {
        const StateVector start = random_state(n, rng);
        StateVector s = start;
        const Gate g = random_gate(n, rng, true);
        apply_gate(s, g);
        apply_gate(s, g.inverse({}));
        worst = std::max(worst, max_abs_diff(s, start));
    }
    return worst;
}

double born_consistency(const Context &c, Rng &rng) {
    const int n = std::min(c.cfg.q_s, 4);
    const std::uint64_t shots = c.quick ? 100000 : 1000000;
    const StateVector s = random_state(n, rng);
    Circuit basis(n);
    for (int q = 0; q < n; ++q) {
        switch (rng.below(3)) {
        case 0:
            basis.add(Gate::h(q));
            break;
        case 1:
            basis.add(Gate::sdg_h(q));
            break;
        default:
            break;
        }
    }
    StateVector rotated = s;
    run_circuit(rotated, basis);
    const auto counts = sample_counts(s, basis, shots, rng.below(1 << 30));
    double worst = 0.0;
    for (std::size_t b = 0; b < rotated.size(); ++b) {
        const double p = std::norm(rotated[b]);
        const auto it = counts.find(b);
        const double f =
            static_cast<double>(it == counts.end() ? 0 : it->second) /
            static_cast<double>(shots);
        const double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(shots));
        if (sigma > 0.0) {
            worst = std::max(worst, std::abs(f - p) / sigma);
        }
    }
    return worst;
}

double projector_completeness(const Context &c, Rng &rng) {
    double worst = 0.0;
    for (std::size_t i = 0; i < c.count(100, 20); ++i) {
        const StateVector s = random_state(c.layout.total_qubits(), rng);
        double total = 0.0;
        for (std::size_t k = 0; k < c.layout.num_branches(); ++k) {
            total += aux_branch_probability(s, k, c.layout.sys_qubits);
        }
        worst = std::max(worst, std::abs(total - 1.0));
    }
    return worst;
}

double diagcirc_round_trip(const Context &c, Rng &rng) {
    double worst = 0.0;
    const int max_n = c.quick ? 4 : 5;
    for (std::size_t i = 0; i < c.count(200, 40); ++i) {
        const int n = 1 + rng.below(max_n);
        const PauliSum sum = random_pauli_sum(n, 1 + static_cast<std::size_t>(rng.below(8)), rng);
        const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
        Eigen::MatrixXcd rebuilt = Eigen::MatrixXcd::Zero(dim, dim);
        for (const auto &setting : diag_circ(sum)) {
            const Eigen::MatrixXcd s = circuit_matrix(setting.basis_change.embedded(n, 0));
            Eigen::VectorXcd lambda(dim);
            const auto table = setting.eigenvalue_table();
            for (Eigen::Index b = 0; b < dim; ++b) {
                lambda[b] = table[static_cast<std::size_t>(b)];
            }
            rebuilt += s.adjoint() * lambda.asDiagonal() * s;
        }
        worst = std::max(worst, (rebuilt - to_dense(sum)).cwiseAbs().maxCoeff());
    }
    return worst;
}

double oracle_consistency(const Context &c, Rng &rng) {
    double worst = 0.0;
    for (std::size_t i = 0; i < c.count(100, 20); ++i) {
        const PauliSum sum = random_pauli_sum(3, 6, rng);
        const Eigen::MatrixXcd m = to_dense(sum);
        const StateVector s = random_state(3, rng);
        const Eigen::VectorXcd v = as_vector(s);
        const double dense = (v.adjoint() * m * v)(0, 0).real();
        worst = std::max(worst, std::abs(expval(s, sum) - dense));
    }
    return worst;
}

double thermal_limits(const Context &c, Rng &) {
    double worst = std::abs(exact_thermal_average(c.h, c.h, 0.0) -
                            c.h.normalized_trace());
    const auto sol = exact_solve(c.h);
    const auto levels = level_expectations(sol, c.h);
    double prev = boltzmann_average(sol.eigenvalues, levels, 0.0);
    for (int i = 1; i <= 50; ++i) {
        const double next = boltzmann_average(sol.eigenvalues, levels, 0.1 * i);
        worst = std::max(worst, next - prev);
        prev = next;
    }
    return worst;
}

double degeneracy_detection(const Context &, Rng &) {
    const auto sol = exact_solve(build_tfi(3, 1.0, 0.0, true));
    const auto blocks = degenerate_blocks(sol.eigenvalues);
    const bool ok = blocks.size() == 2 && blocks[0].second - blocks[0].first == 2 &&
                    blocks[1].second - blocks[1].first == 6;
    if (!ok) {
        return 1.0;
    }
    return std::max(std::abs(sol.eigenvalues[0] + 3.0),
                    std::abs(sol.eigenvalues[7] - 1.0));
}

double orthogonality(const Context &c, Rng &rng) {
    double worst = 0.0;
    const std::size_t k_count = c.layout.num_branches();
    for (std::size_t i = 0; i < c.count(100, 20); ++i) {
        const auto frame = frame_states(c.ansatz, random_angles(c.ansatz.num_params(), rng), k_count);
        for (std::size_t k = 0; k < k_count; ++k) {
            for (std::size_t p = 0; p < k_count; ++p) {
                const Complex expected = k == p ? 1.0 : 0.0;
                worst = std::max(worst, std::abs(frame[k].inner(frame[p]) - expected));
            }
        }
    }
    return worst;
}

double mixing_fidelity(const Context &c, Rng &rng) {
    double worst = 0.0;
    for (std::size_t i = 0; i < c.count(100, 20); ++i) {
        const int qa = 1 + rng.below(3);
        std::vector<double> g(std::size_t{1} << qa);
        for (auto &x : g) {
            x = rng.uniform(0.01, 1.0);
        }
        std::sort(g.begin(), g.end(), std::greater<>());
        const auto spec = MixingSpec::from_gammas(g);
        StateVector s(qa);
        run_circuit(s, build_mixing_circuit(spec, qa));
        for (std::size_t k = 0; k < spec.size(); ++k) {
            worst = std::max(worst, std::abs(std::norm(s[k]) - spec.weight(k)));
        }
    }
    return worst;
}

double state_assembly(const Context &c, Rng &rng) {
    double worst = 0.0;
    const std::size_t sys_dim = c.layout.sys_dim();
    for (std::size_t i = 0; i < c.count(50, 10); ++i) {
        const auto theta = random_angles(c.ansatz.num_params(), rng);
        const auto full = prepare_full_state(c.mixing, c.ansatz, theta, c.layout);
        const auto frame = frame_states(c.ansatz, theta, c.mixing.size());
        for (std::size_t k = 0; k < c.mixing.size(); ++k) {
            for (std::size_t s = 0; s < sys_dim; ++s) {
                worst = std::max(worst, std::abs(full[k * sys_dim + s] -
                                                 c.mixing.gamma(k) * frame[k][s]));
            }
        }
    }
    return worst;
}

double phase_freedom(const Context &c, Rng &rng) {
    double worst = 0.0;
    const std::size_t sys_dim = c.layout.sys_dim();
    for (std::size_t i = 0; i < c.count(50, 10); ++i) {
        const auto frame = frame_states(c.ansatz, random_angles(c.ansatz.num_params(), rng),
                                        c.mixing.size());
        std::vector<Complex> plain(c.mixing.size() * sys_dim);
        std::vector<Complex> phased(plain.size());
        for (std::size_t k = 0; k < c.mixing.size(); ++k) {
            const Complex phase = std::polar(1.0, rng.uniform(0.0, kTwoPi));
            for (std::size_t s = 0; s < sys_dim; ++s) {
                plain[k * sys_dim + s] = c.mixing.gamma(k) * frame[k][s];
                phased[k * sys_dim + s] = phase * plain[k * sys_dim + s];
            }
        }
        const auto a = reduced_density_matrix_sys(StateVector::from_amplitudes(plain),
                                                  c.layout.sys_qubits);
        const auto b = reduced_density_matrix_sys(StateVector::from_amplitudes(phased),
                                                  c.layout.sys_qubits);
        worst = std::max(worst, (a - b).cwiseAbs().maxCoeff());
    }
    return worst;
}

double lower_bound(const Context &c, Rng &rng) {
    const CostContext ctx(c.h, c.mixing, c.ansatz, c.layout);
    const double floor = c_min(c.mixing, exact_solve(c.h));
    double worst = 0.0;
    for (std::size_t i = 0; i < c.count(500, 100); ++i) {
        worst = std::max(worst, floor - cost(ctx, random_angles(c.ansatz.num_params(), rng)));
    }
    return worst;
}

double gradient_exactness(const Context &c, Rng &rng) {
    constexpr double kStep = 1e-5;
    const CostContext ctx(c.h, c.mixing, c.ansatz, c.layout);
    double worst = 0.0;
    for (std::size_t i = 0; i < c.count(20, 5); ++i) {
        auto theta = random_angles(c.ansatz.num_params(), rng);
        auto g = gradient(ctx, theta);
        if (c.fault == Fault::Gradient) {
            for (auto &x : g) {
                x = -x;
            }
        }
        for (std::size_t j = 0; j < theta.size(); ++j) {
            const double t = theta[j];
            theta[j] = t + kStep;
            const double up = cost(ctx, theta);
            theta[j] = t - kStep;
            const double down = cost(ctx, theta);
            theta[j] = t;
            const double fd = (up - down) / (2.0 * kStep);
            worst = std::max(worst, std::abs(g[j] - fd) / std::max(std::abs(fd), 1e-3));
        }
    }
    return worst;
}

double shot_unbiasedness(const Context &c, Rng &rng) {
    const auto theta = random_angles(c.ansatz.num_params(), rng);
    const CostContext exact(c.h, c.mixing, c.ansatz, c.layout);
    const double target = cost(exact, theta);
    const std::size_t n = c.count(200, 40);
    const std::uint64_t base = rng.below(1 << 30);
    std::vector<double> samples(n);
    for (std::size_t i = 0; i < n; ++i) {
        samples[i] = cost(exact.with_mode(ShotSampling{4096, derive_seed(base, i)}), theta);
    }
    double mean = 0.0;
    for (double x : samples) {
        mean += x;
    }
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (double x : samples) {
        var += (x - mean) * (x - mean);
    }
    var /= static_cast<double>(n - 1);
    const double se = std::sqrt(var / static_cast<double>(n));
    return se > 0.0 ? std::abs(mean - target) / se : std::abs(mean - target);
}

double monotone_best(const Context &c, Rng &rng) {
    const CostContext ctx(c.h, c.mixing, c.ansatz, c.layout);
    OptimizerConfig opt = c.cfg.optimizer;
    opt.max_iterations = c.count(200, 40);
    opt.restarts = 2;
    opt.seed = static_cast<std::uint64_t>(rng.below(1 << 30));
    const auto result = minimize(ctx, opt);
    double worst = 0.0;
    double running = result.cost_history.front();
    for (double x : result.cost_history) {
        const double next = std::min(running, x);
        worst = std::max(worst, next - running);
        running = next;
    }
    return std::max(worst, std::abs(running - result.best_cost));
}

double permutation_degeneracy(const Context &c, Rng &rng) {
    if (c.cfg.q_s < 2) {
        return 0.0;
    }
    const PauliSum classical = build_tfi(c.cfg.q_s, 1.0, 0.0, c.cfg.periodic);
    const auto sol = exact_solve(classical);
    const CostContext ctx(classical, c.mixing, c.ansatz, c.layout);
    const double reference = ctx.energy(exact_optimum_state(c.mixing, sol));
    double worst = 0.0;
    for (std::size_t i = 0; i < c.count(20, 5); ++i) {
        ExactSolution rotated = sol;
        for (const auto &[b, e] : degenerate_blocks(sol.eigenvalues)) {
            const auto n = static_cast<Eigen::Index>(e - b);
            Eigen::MatrixXcd g(n, n);
            for (Eigen::Index r = 0; r < n; ++r) {
                for (Eigen::Index q = 0; q < n; ++q) {
                    g(r, q) = Complex{rng.normal(), rng.normal()};
                }
            }
            const Eigen::MatrixXcd u = Eigen::HouseholderQR<Eigen::MatrixXcd>(g).householderQ();
            const auto first = static_cast<Eigen::Index>(b);
            rotated.eigenvectors.middleCols(first, n) =
                sol.eigenvectors.middleCols(first, n) * u;
        }
        worst = std::max(worst,
                         std::abs(ctx.energy(exact_optimum_state(c.mixing, rotated)) - reference));
    }
    return worst;
}

double gamma_invariance(const Context &c, Rng &) {
    const auto sol = exact_solve(c.h);
    const std::size_t k_count = c.layout.num_branches();
    const std::vector<MixingSpec> specs = {
        mixing_family(MixingFamily::Uniform, k_count, 0.0),
        mixing_family(MixingFamily::Geometric, k_count, 0.7),
        mixing_family(MixingFamily::Boltzmann, k_count, 1.0),
    };
    std::vector<std::vector<double>> curves;
    for (const auto &m : specs) {
        const auto state = exact_optimum_state(m, sol);
        const auto spectrum = estimate_spectrum(state, m, c.h);
        std::vector<double> values;
        for (const auto &p : beta_sweep(state, m, spectrum, c.h, c.betas).points) {
            values.push_back(p.value);
        }
        curves.push_back(std::move(values));
    }
    double worst = 0.0;
    for (std::size_t f = 1; f < curves.size(); ++f) {
        for (std::size_t i = 0; i < c.betas.size(); ++i) {
            worst = std::max(worst, std::abs(curves[f][i] - curves[0][i]));
        }
    }
    return worst;
}

double shift_invariance(const Context &c, Rng &rng) {
    const auto state = prepare_full_state(c.mixing, c.ansatz,
                                          random_angles(c.ansatz.num_params(), rng), c.layout);
    const auto spectrum = estimate_spectrum(state, c.mixing, c.h);
    double worst = 0.0;
    for (double shift : {1.0, -1.0, 10.0, -10.0}) {
        SpectrumEstimate moved = spectrum;
        for (auto &e : moved.energies) {
            e += shift;
        }
        for (double beta : c.betas) {
            worst = std::max(worst, std::abs(thermal_average(state, c.mixing, moved, c.h, beta) -
                                             thermal_average(state, c.mixing, spectrum, c.h, beta)));
        }
    }
    return worst;
}

double identity_normalization(const Context &c, Rng &rng) {
    const auto state = prepare_full_state(c.mixing, c.ansatz,
                                          random_angles(c.ansatz.num_params(), rng), c.layout);
    const auto spectrum = estimate_spectrum(state, c.mixing, c.h);
    const PauliSum one = PauliSum::identity(c.cfg.q_s);
    double worst = 0.0;
    for (double beta : c.betas) {
        worst = std::max(worst, std::abs(thermal_average(state, c.mixing, spectrum, one, beta) - 1.0));
    }
    return worst;
}

double low_temperature_limit(const Context &c, Rng &) {
    const auto sol = exact_solve(c.h);
    const auto state = exact_optimum_state(c.mixing, sol);
    const auto spectrum = estimate_spectrum(state, c.mixing, c.h);
    const auto levels = level_expectations(sol, c.h);
    const auto ground = degenerate_blocks(sol.eigenvalues).front();
    double expected = 0.0;
    for (std::size_t k = ground.first; k < ground.second; ++k) {
        expected += levels[k];
    }
    expected /= static_cast<double>(ground.second - ground.first);
    return std::abs(thermal_average(state, c.mixing, spectrum, c.h, 50.0) - expected);
}

double consistency_chain(const Context &c, Rng &) {
    const auto sol = exact_solve(c.h);
    const auto state = exact_optimum_state(c.mixing, sol);
    const auto spectrum = estimate_spectrum(state, c.mixing, c.h);
    double worst = 0.0;
    for (double beta : c.betas) {
        worst = std::max(worst, std::abs(thermal_average(state, c.mixing, spectrum, c.h, beta) -
                                         truncation_reference(c.h, c.h, c.mixing.size(), beta)));
    }
    return worst;
}

double config_round_trip(const Context &c, Rng &) {
    std::string text;
    for (const auto &[key, value] : to_entries(c.cfg)) {
        text += key + " = " + value + "\n";
    }
    std::istringstream in(text);
    return parse_config(in) == c.cfg ? 0.0 : 1.0;
}

double reproducibility(const Context &c, Rng &) {
    RunConfig run = c.cfg;
    run.shot_mode = false;
    run.optimizer.max_iterations = c.count(60, 15);
    run.optimizer.restarts = 1;
    const auto root = c.cfg.out / "validate";
    std::vector<std::string> outputs[2];
    for (int r = 0; r < 2; ++r) {
        run.out = root / (r == 0 ? "a" : "b");
        cmd_solve(run, SolveOptions{.trace = true});
        cmd_sweep(run);
        for (const char *f : {"trace.csv", "theta_star.txt", "spectrum.csv", "curve.csv"}) {
            outputs[r].push_back(read_file(run.out / f));
        }
    }
    double differing = 0.0;
    for (std::size_t i = 0; i < outputs[0].size(); ++i) {
        differing += outputs[0][i] == outputs[1][i] ? 0.0 : 1.0;
    }
    return differing;
}

const std::vector<Property> &properties() {
    static const std::vector<Property> table = {
        {"qsim.norm_preservation", 1e-10, norm_preservation},
        {"qsim.unitarity", 1e-12, unitarity},
        {"qsim.born_consistency_sigma", 5.0, born_consistency},
        {"qsim.projector_completeness", 1e-10, projector_completeness},
        {"pauli.diagcirc_round_trip", 1e-12, diagcirc_round_trip},
        {"pauli.oracle_consistency", 1e-10, oracle_consistency},
        {"pauli.thermal_limits", 1e-12, thermal_limits},
        {"pauli.degeneracy_detection", 1e-10, degeneracy_detection},
        {"ansatz.orthogonality", 1e-12, orthogonality},
        {"ansatz.mixing_fidelity", 1e-12, mixing_fidelity},
        {"ansatz.state_assembly", 1e-10, state_assembly},
        {"ansatz.phase_freedom", 1e-12, phase_freedom},
        {"vqe.lower_bound", 1e-9, lower_bound},
        {"vqe.gradient_exactness", 1e-6, gradient_exactness},
        {"vqe.shot_unbiasedness_se", 3.0, shot_unbiasedness},
        {"vqe.monotone_best", 1e-12, monotone_best},
        {"vqe.permutation_degeneracy", 1e-9, permutation_degeneracy},
        {"reweighting.gamma_invariance", 1e-9, gamma_invariance},
        {"reweighting.shift_invariance", 1e-12, shift_invariance},
        {"reweighting.identity_normalization", 0.0, identity_normalization},
        {"reweighting.low_temperature_limit", 1e-6, low_temperature_limit},
        {"reweighting.consistency_chain", 1e-8, consistency_chain},
        {"cli.config_round_trip", 0.0, config_round_trip},
        {"cli.reproducibility", 0.0, reproducibility},
    };
    return table;
}

} // namespace

bool ValidationReport::all_passed() const {
    return std::all_of(results.begin(), results.end(),
                       [](const PropertyResult &r) { return r.passed; });
}

std::string ValidationReport::render() const {
    std::string out;
    for (const auto &r : results) {
        out += std::string(r.passed ? "PASS " : "FAIL ") + r.name +
               " deviation=" + format_double(r.deviation) +
               " threshold=" + format_double(r.threshold) + "\n";
    }
    return out;
}

Fault parse_fault(const std::string &name) {
    if (name == "none") {
        return Fault::None;
    }
    if (name == "gradient") {
        return Fault::Gradient;
    }
    throw ArgumentError("unknown fault '" + name + "'");
}

ValidationReport cmd_validate(const RunConfig &cfg, const ValidateOptions &opts) {
    validate(cfg);
    const Context ctx{cfg,
                      opts.quick,
                      opts.fault,
                      build_hamiltonian(cfg),
                      build_mixing(cfg),
                      build_ansatz(AnsatzSpec{cfg.q_s, cfg.layers}),
                      RegisterLayout{cfg.q_a, cfg.q_s},
                      beta_grid(cfg)};
    ValidationReport report;
    std::uint64_t stream = 0;
    for (const auto &p : properties()) {
        Rng rng(derive_seed(cfg.seed, stream++));
        PropertyResult r{p.name, 0.0, p.threshold, false};
        try {
            r.deviation = p.check(ctx, rng);
            r.passed = r.deviation <= p.threshold;
        } catch (const std::exception &e) {
            r.deviation = std::numeric_limits<double>::infinity();
            r.name += std::string(" (") + e.what() + ")";
        }
        report.results.push_back(std::move(r));
    }
    return report;
}

} // namespace thermvqe::app
