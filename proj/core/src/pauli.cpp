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

#include "thermvqe/pauli.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>

#include "thermvqe/errors.hpp"

namespace thermvqe {

namespace {

void check_qubit_count(int num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw SizeError("Pauli operators need 1.." +
                        std::to_string(kMaxQubits) + " qubits, got " +
                        std::to_string(num_qubits));
    }
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace

PauliString::PauliString(int num_qubits) : num_qubits_(num_qubits) {
    check_qubit_count(num_qubits);
}

PauliString::PauliString(int num_qubits, std::uint64_t x_mask,
                         std::uint64_t z_mask)
    : num_qubits_(num_qubits), x_mask_(x_mask), z_mask_(z_mask) {
    check_qubit_count(num_qubits);
    const std::uint64_t full = (std::uint64_t{1} << num_qubits) - 1;
    if (((x_mask | z_mask) & ~full) != 0) {
        throw IndexError("Pauli mask exceeds " + std::to_string(num_qubits) +
                         " qubits");
    }
}

PauliString::PauliString(std::string_view axes)
    : num_qubits_(static_cast<int>(axes.size())) {
    check_qubit_count(num_qubits_);
    for (int q = 0; q < num_qubits_; ++q) {
        const std::uint64_t bit = std::uint64_t{1} << q;
        switch (axes[static_cast<std::size_t>(q)]) {
        case 'I':
            break;
        case 'X':
            x_mask_ |= bit;
            break;
        case 'Y':
            x_mask_ |= bit;
            z_mask_ |= bit;
            break;
        case 'Z':
            z_mask_ |= bit;
            break;
        default:
            throw ArgumentError("invalid Pauli axis '" +
                                std::string(1, axes[q]) + "' in \"" +
                                std::string(axes) + "\"");
        }
    }
}

PauliString PauliString::from_masks(int num_qubits, std::uint64_t x_mask,
                                    std::uint64_t z_mask) {
    return {num_qubits, x_mask, z_mask};
}

int PauliString::num_y() const noexcept {
    return std::popcount(x_mask_ & z_mask_);
}

PauliAxis PauliString::axis(int qubit) const {
    if (qubit < 0 || qubit >= num_qubits_) {
        throw IndexError("qubit " + std::to_string(qubit) +
                         " outside Pauli string");
    }
    const bool x = (x_mask_ >> qubit) & 1U;
    const bool z = (z_mask_ >> qubit) & 1U;
    if (x && z) {
        return PauliAxis::Y;
    }
    if (x) {
        return PauliAxis::X;
    }
    return z ? PauliAxis::Z : PauliAxis::I;
}

std::string PauliString::to_string() const {
    static constexpr char kChars[] = {'I', 'X', 'Y', 'Z'};
    std::string out;
    out.reserve(static_cast<std::size_t>(num_qubits_));
    for (int q = 0; q < num_qubits_; ++q) {
        out.push_back(kChars[static_cast<int>(axis(q))]);
    }
    return out;
}

PauliSum::PauliSum(int num_qubits) : num_qubits_(num_qubits) {
    check_qubit_count(num_qubits);
}

PauliSum::PauliSum(int num_qubits, std::vector<PauliTerm> terms)
    : num_qubits_(num_qubits), terms_(std::move(terms)) {
    check_qubit_count(num_qubits);
    for (const auto &t : terms_) {
        if (t.string.num_qubits() != num_qubits_) {
            throw ShapeError("Pauli string " + t.string.to_string() +
                             " does not act on " +
                             std::to_string(num_qubits_) + " qubits");
        }
        if (!std::isfinite(t.coefficient)) {
            throw DataError("non-finite Pauli coefficient");
        }
    }
    canonicalize();
}

PauliSum PauliSum::identity(int num_qubits, double coefficient) {
    return PauliSum(num_qubits, {{coefficient, PauliString(num_qubits)}});
}

PauliSum &PauliSum::add_term(double coefficient, const PauliString &string) {
    if (string.num_qubits() != num_qubits_) {
        throw ShapeError("Pauli string " + string.to_string() +
                         " does not act on " + std::to_string(num_qubits_) +
                         " qubits");
    }
    if (!std::isfinite(coefficient)) {
        throw DataError("non-finite Pauli coefficient");
    }
    terms_.push_back({coefficient, string});
    canonicalize();
    return *this;
}

void PauliSum::canonicalize() {
    std::vector<PauliTerm> merged;
    merged.reserve(terms_.size());
    for (const auto &t : terms_) {
        bool found = false;
        for (auto &m : merged) {
            if (m.string == t.string) {
                m.coefficient += t.coefficient;
                found = true;
                break;
            }
        }
        if (!found) {
            merged.push_back(t);
        }
    }
    std::erase_if(merged, [](const PauliTerm &t) {
        return std::abs(t.coefficient) < kDropThreshold;
    });
    terms_ = std::move(merged);
}

bool PauliSum::has_y() const noexcept {
    for (const auto &t : terms_) {
        if (t.string.num_y() > 0) {
            return true;
        }
    }
    return false;
}

double PauliSum::normalized_trace() const noexcept {
    double tr = 0.0;
    for (const auto &t : terms_) {
        if (t.string.is_identity()) {
            tr += t.coefficient;
        }
    }
    return tr;
}

std::string PauliSum::to_text() const {
    std::string out;
    for (const auto &t : terms_) {
        out += format_double(t.coefficient);
        out += ' ';
        out += t.string.to_string();
        out += '\n';
    }
    return out;
}

PauliSum build_tfi(int num_sites, double coupling, double field,
                   bool periodic) {
    if (num_sites < 2) {
        throw ArgumentError("transverse-field Ising chain needs at least 2 "
                            "sites, got " +
                            std::to_string(num_sites));
    }
    std::vector<PauliTerm> terms;
    const int bonds = periodic ? num_sites : num_sites - 1;
    for (int i = 0; i < bonds; ++i) {
        const int j = (i + 1) % num_sites;
        const std::uint64_t mask =
            (std::uint64_t{1} << i) | (std::uint64_t{1} << j);
        terms.push_back(
            {-coupling, PauliString::from_masks(num_sites, mask, 0)});
    }
    for (int i = 0; i < num_sites; ++i) {
        terms.push_back({-field, PauliString::from_masks(
                                     num_sites, 0, std::uint64_t{1} << i)});
    }
    return PauliSum(num_sites, std::move(terms));
}

PauliSum parse_observable(std::istream &in) {
    std::vector<PauliTerm> terms;
    int width = -1;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        std::istringstream fields(line);
        double coefficient = 0.0;
        std::string axes;
        std::string extra;
        if (!(fields >> coefficient >> axes) || (fields >> extra)) {
            throw ArgumentError("observable line " + std::to_string(line_no) +
                                ": expected '<coefficient> <axes>'");
        }
        try {
            PauliString s(axes);
            if (width >= 0 && s.num_qubits() != width) {
                throw ShapeError("axes length " +
                                 std::to_string(s.num_qubits()) +
                                 " differs from " + std::to_string(width));
            }
            width = s.num_qubits();
            terms.push_back({coefficient, s});
        } catch (const Error &e) {
            throw ArgumentError("observable line " + std::to_string(line_no) +
                                ": " + e.what());
        }
    }
    if (width < 0) {
        throw ArgumentError("observable has no terms");
    }
    return PauliSum(width, std::move(terms));
}

PauliSum load_observable(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ArgumentError("cannot open observable file " + path.string());
    }
    return parse_observable(in);
}

} // namespace thermvqe
