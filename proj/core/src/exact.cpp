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

#include "thermvqe/exact.hpp"

#include <algorithm>
#include <bit>
#include <complex>
#include <cmath>
#include <numeric>

#include "thermvqe/errors.hpp"

namespace thermvqe {

namespace {

void check_dense_size(int num_qubits) {
    if (num_qubits > kMaxDenseQubits) {
        throw SizeError("dense matrices limited to " +
                        std::to_string(kMaxDenseQubits) + " qubits, got " +
                        std::to_string(num_qubits));
    }
}

Eigen::Index argmax_abs(const Eigen::Ref<const Eigen::VectorXcd> &v) {
    Eigen::Index best = 0;
    double best_abs = -1.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        // Strictly greater keeps the lower index on ties.
        if (const double a = std::abs(v[i]); a > best_abs * (1.0 + 1e-12)) {
            best_abs = a;
            best = i;
        }
    }
    return best;
}

} // namespace

Eigen::MatrixXcd to_dense(const PauliSum &observable) {
    check_dense_size(observable.num_qubits());
    const auto dim = Eigen::Index{1} << observable.num_qubits();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    static const std::complex<double> kPhase[4] = {
        {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
    for (const auto &t : observable.terms()) {
        const auto x = static_cast<Eigen::Index>(t.string.x_mask());
        const auto z = t.string.z_mask();
        const std::complex<double> phase = t.coefficient * kPhase[t.string.num_y() & 3];
        for (Eigen::Index b = 0; b < dim; ++b) {
            const bool odd =
                std::popcount(static_cast<std::uint64_t>(b) & z) & 1;
            m(b ^ x, b) += odd ? -phase : phase;
        }
    }
    return m;
}

std::vector<std::pair<std::size_t, std::size_t>>
degenerate_blocks(std::span<const double> eigenvalues, double tolerance) {
    std::vector<std::pair<std::size_t, std::size_t>> blocks;
    std::size_t begin = 0;
    for (std::size_t i = 1; i <= eigenvalues.size(); ++i) {
        if (i == eigenvalues.size() ||
            std::abs(eigenvalues[i] - eigenvalues[i - 1]) >
                tolerance * std::max(1.0, std::abs(eigenvalues[i]))) {
            blocks.emplace_back(begin, i);
            begin = i;
        }
    }
    return blocks;
}

ExactSolution exact_solve(const PauliSum &observable) {
    const Eigen::MatrixXcd dense = to_dense(observable);
    ExactSolution sol;
    Eigen::VectorXd values;
    if (observable.has_y()) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(dense);
        values = es.eigenvalues();
        sol.eigenvectors = es.eigenvectors();
    } else {
        // Without Y terms the matrix is real symmetric.
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense.real());
        values = es.eigenvalues();
        sol.eigenvectors = es.eigenvectors().cast<std::complex<double>>();
    }
    sol.eigenvalues.assign(values.data(), values.data() + values.size());

    for (Eigen::Index k = 0; k < sol.eigenvectors.cols(); ++k) {
        auto col = sol.eigenvectors.col(k);
        const std::complex<double> pivot = col[argmax_abs(col)];
        col *= std::abs(pivot) / pivot;
    }

    for (const auto &[begin, end] : degenerate_blocks(sol.eigenvalues)) {
        if (end - begin < 2) {
            continue;
        }
        std::vector<std::pair<Eigen::Index, Eigen::Index>> keyed;
        for (std::size_t k = begin; k < end; ++k) {
            const auto col = static_cast<Eigen::Index>(k);
            keyed.emplace_back(argmax_abs(sol.eigenvectors.col(col)), col);
        }
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](const auto &a, const auto &b) {
                             return a.first < b.first;
                         });
        Eigen::MatrixXcd block(sol.eigenvectors.rows(),
                               static_cast<Eigen::Index>(end - begin));
        for (std::size_t i = 0; i < keyed.size(); ++i) {
            block.col(static_cast<Eigen::Index>(i)) =
                sol.eigenvectors.col(keyed[i].second);
        }
        sol.eigenvectors.middleCols(static_cast<Eigen::Index>(begin),
                                    block.cols()) = block;
    }
    return sol;
}

std::vector<double> level_expectations(const ExactSolution &solution,
                                       const PauliSum &observable) {
    const Eigen::MatrixXcd o = to_dense(observable);
    if (o.rows() != solution.eigenvectors.rows()) {
        throw ShapeError("observable and Hamiltonian act on different "
                         "registers");
    }
    std::vector<double> out(solution.dimension());
    for (std::size_t k = 0; k < out.size(); ++k) {
        const auto v = solution.eigenvectors.col(static_cast<Eigen::Index>(k));
        out[k] = v.dot(o * v).real();
    }
    return out;
}

double boltzmann_average(std::span<const double> energies,
                         std::span<const double> levels, double beta) {
    if (!(beta >= 0.0)) {
        throw ArgumentError("inverse temperature must be non-negative");
    }
    if (levels.empty() || levels.size() > energies.size()) {
        throw ShapeError("need 1.." + std::to_string(energies.size()) +
                         " levels, got " + std::to_string(levels.size()));
    }
    const std::size_t k_max = levels.size();
    const double e_min =
        *std::min_element(energies.begin(), energies.begin() + k_max);
    double num = 0.0;
    double den = 0.0;
    for (std::size_t k = 0; k < k_max; ++k) {
        const double w = std::exp(-beta * (energies[k] - e_min));
        num += w * levels[k];
        den += w;
    }
    return num / den;
}

double exact_thermal_average(const PauliSum &hamiltonian,
                             const PauliSum &observable, double beta) {
    if (observable.num_qubits() != hamiltonian.num_qubits()) {
        throw ShapeError("observable and Hamiltonian act on different "
                         "registers");
    }
    const auto sol = exact_solve(hamiltonian);
    const auto levels = level_expectations(sol, observable);
    return boltzmann_average(sol.eigenvalues, levels, beta);
}

} // namespace thermvqe
