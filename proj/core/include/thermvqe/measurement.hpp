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

#include <cstdint>
#include <vector>

#include "thermvqe/circuit.hpp"
#include "thermvqe/pauli.hpp"

namespace thermvqe {

/// c · Z^{z_mask} in the rotated measurement basis.
struct DiagonalTerm {
    double coefficient;
    std::uint64_t z_mask;
};

/// One measurement circuit: the observable piece S†ΛS, with S a layer of
/// single-qubit basis changes and Λ diagonal in the computational basis.
struct MeasurementSetting {
    Circuit basis_change;
    std::vector<DiagonalTerm> diagonal;

    /// Λ evaluated on computational basis state |b⟩.
    [[nodiscard]] double eigenvalue(std::uint64_t basis_index) const noexcept;

    /// Λ tabulated over all 2^n basis states of the basis-change register.
    [[nodiscard]] std::vector<double> eigenvalue_table() const;
};

/// Splits `observable` into qubit-wise commuting groups, greedily assigning
/// each term to the first compatible group. X qubits are rotated with H and
/// Y qubits with H·S†; identity terms join the first group.
std::vector<MeasurementSetting> diag_circ(const PauliSum &observable);

} // namespace thermvqe
