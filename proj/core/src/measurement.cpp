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

#include "thermvqe/measurement.hpp"

#include <bit>

namespace thermvqe {

namespace {

struct Group {
    std::vector<PauliAxis> basis; // I means "not yet fixed"
    std::vector<DiagonalTerm> diagonal;
};

bool compatible(const Group &g, const PauliString &s) {
    for (int q = 0; q < s.num_qubits(); ++q) {
        const auto a = s.axis(q);
        const auto b = g.basis[static_cast<std::size_t>(q)];
        if (a != PauliAxis::I && b != PauliAxis::I && a != b) {
            return false;
        }
    }
    return true;
}

} // namespace

double MeasurementSetting::eigenvalue(std::uint64_t basis_index) const noexcept {
    double acc = 0.0;
    for (const auto &t : diagonal) {
        acc += (std::popcount(basis_index & t.z_mask) & 1) ? -t.coefficient
                                                           : t.coefficient;
    }
    return acc;
}

std::vector<double> MeasurementSetting::eigenvalue_table() const {
    const std::size_t dim = std::size_t{1} << basis_change.num_qubits();
    std::vector<double> table(dim);
    for (std::size_t b = 0; b < dim; ++b) {
        table[b] = eigenvalue(b);
    }
    return table;
}

std::vector<MeasurementSetting> diag_circ(const PauliSum &observable) {
    const int n = observable.num_qubits();
    std::vector<Group> groups;
    for (const auto &term : observable.terms()) {
        Group *home = nullptr;
        for (auto &g : groups) {
            if (compatible(g, term.string)) {
                home = &g;
                break;
            }
        }
        if (home == nullptr) {
            groups.push_back(
                {std::vector<PauliAxis>(static_cast<std::size_t>(n),
                                        PauliAxis::I),
                 {}});
            home = &groups.back();
        }
        for (int q = 0; q < n; ++q) {
            if (const auto a = term.string.axis(q); a != PauliAxis::I) {
                home->basis[static_cast<std::size_t>(q)] = a;
            }
        }
        home->diagonal.push_back({term.coefficient, term.string.support()});
    }

    std::vector<MeasurementSetting> settings;
    settings.reserve(groups.size());
    for (const auto &g : groups) {
        Circuit c(n);
        for (int q = 0; q < n; ++q) {
            switch (g.basis[static_cast<std::size_t>(q)]) {
            case PauliAxis::X:
                c.add(Gate::h(q));
                break;
            case PauliAxis::Y:
                c.add(Gate::sdg_h(q));
                break;
            default:
                break;
            }
        }
        settings.push_back({std::move(c), g.diagonal});
    }
    return settings;
}

} // namespace thermvqe
