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
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "thermvqe/limits.hpp"

namespace thermvqe {

enum class PauliAxis : std::uint8_t { I, X, Y, Z };

/// Tensor product of single-qubit Paulis stored as X and Z bit masks.
///
/// Textual form lists one axis character per qubit, qubit 0 first, so
/// "XZI" is X on qubit 0 and Z on qubit 1. Y is stored with both mask bits
/// set and corresponds to Y = i·X·Z on that qubit.
class PauliString {
  public:
    /// Identity string on `num_qubits` qubits.
    explicit PauliString(int num_qubits);

    /// Parses axis characters from {I, X, Y, Z}; throws ArgumentError.
    explicit PauliString(std::string_view axes);

    static PauliString from_masks(int num_qubits, std::uint64_t x_mask,
                                  std::uint64_t z_mask);

    [[nodiscard]] int num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] std::uint64_t x_mask() const noexcept { return x_mask_; }
    [[nodiscard]] std::uint64_t z_mask() const noexcept { return z_mask_; }
    /// Qubits on which the string acts non-trivially.
    [[nodiscard]] std::uint64_t support() const noexcept {
        return x_mask_ | z_mask_;
    }
    [[nodiscard]] int num_y() const noexcept;
    [[nodiscard]] bool is_identity() const noexcept { return support() == 0; }
    [[nodiscard]] PauliAxis axis(int qubit) const;
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const PauliString &, const PauliString &) = default;

  private:
    PauliString(int num_qubits, std::uint64_t x_mask, std::uint64_t z_mask);

    int num_qubits_;
    std::uint64_t x_mask_ = 0;
    std::uint64_t z_mask_ = 0;
};

struct PauliTerm {
    double coefficient;
    PauliString string;
};

/// Real linear combination of Pauli strings, i.e. a Hermitian operator.
///
/// Terms are kept canonical: duplicate strings are merged (first occurrence
/// fixes the position) and terms with |coefficient| < 1e-14 are dropped.
class PauliSum {
  public:
    static constexpr double kDropThreshold = 1e-14;

    explicit PauliSum(int num_qubits);
    PauliSum(int num_qubits, std::vector<PauliTerm> terms);

    static PauliSum identity(int num_qubits, double coefficient = 1.0);

    PauliSum &add_term(double coefficient, const PauliString &string);

    [[nodiscard]] int num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] const std::vector<PauliTerm> &terms() const noexcept {
        return terms_;
    }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
    [[nodiscard]] bool has_y() const noexcept;
    /// Trace of the operator divided by the Hilbert-space dimension.
    [[nodiscard]] double normalized_trace() const noexcept;

    /// Serializes in the observable file format (17 significant digits).
    [[nodiscard]] std::string to_text() const;

  private:
    void canonicalize();

    int num_qubits_;
    std::vector<PauliTerm> terms_;
};

/// Transverse-field Ising chain: −J Σ X_i X_{i+1} − h Σ Z_i. With
/// `periodic` the bond (q−1, 0) is included. Throws ArgumentError for
/// fewer than two sites.
PauliSum build_tfi(int num_sites, double coupling, double field,
                   bool periodic = true);

/// Reads "<coefficient> <axes>" lines; '#' starts a comment line. All axes
/// strings must have the same length. Throws ArgumentError naming the line.
PauliSum parse_observable(std::istream &in);
PauliSum load_observable(const std::filesystem::path &path);

} // namespace thermvqe
