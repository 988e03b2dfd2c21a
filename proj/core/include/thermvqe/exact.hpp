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
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "thermvqe/pauli.hpp"

namespace thermvqe {

/// Dense 2^n × 2^n matrix of a Pauli sum in the computational basis.
/// Throws SizeError above kMaxDenseQubits.
Eigen::MatrixXcd to_dense(const PauliSum &observable);

/// Full eigendecomposition with ascending eigenvalues. Within a degenerate
/// block, eigenvectors are ordered by the index of their largest-magnitude
/// amplitude, and every eigenvector's largest amplitude is real positive.
struct ExactSolution {
    std::vector<double> eigenvalues;
    Eigen::MatrixXcd eigenvectors; ///< column k is |φ_k⟩

    [[nodiscard]] std::size_t dimension() const noexcept {
        return eigenvalues.size();
    }
};

ExactSolution exact_solve(const PauliSum &observable);

/// Half-open [begin, end) ranges of eigenvalues equal within
/// `tolerance`·max(1, |E|).
std::vector<std::pair<std::size_t, std::size_t>>
degenerate_blocks(std::span<const double> eigenvalues,
                  double tolerance = 1e-9);

/// ⟨φ_k|O|φ_k⟩ for every eigenvector.
std::vector<double> level_expectations(const ExactSolution &solution,
                                       const PauliSum &observable);

/// Σ_{k<K} e^{−βE_k} o_k / Σ_{k<K} e^{−βE_k}, with the lowest retained
/// energy subtracted in the exponent. `levels` may be shorter than
/// `energies`; K = levels.size().
double boltzmann_average(std::span<const double> energies,
                         std::span<const double> levels, double beta);

/// Tr[O e^{−βH}] / Tr[e^{−βH}] via exact_solve(H).
double exact_thermal_average(const PauliSum &hamiltonian,
                             const PauliSum &observable, double beta);

} // namespace thermvqe
