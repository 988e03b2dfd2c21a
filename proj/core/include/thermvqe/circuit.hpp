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
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace thermvqe {

/// Rotation angles in radians, indexed by parameter slot.
using ParamVector = std::vector<double>;

enum class GateKind {
    PauliX,
    Hadamard,
    SAdjointH, ///< H·S†, rotates the Y eigenbasis onto the Z eigenbasis.
    RotX,
    RotY,
    RotZ,
    CNOT,
};

std::string to_string(GateKind kind);

/// Reference to an entry of the parameter vector bound at execution time.
struct ParamSlot {
    std::size_t index;
};

/// One gate of a circuit. Rotations carry exactly one angle source: either a
/// parameter slot or a fixed angle. Non-parametric gates carry none.
class Gate {
  public:
    static Gate x(int target);
    static Gate h(int target);
    static Gate sdg_h(int target);
    static Gate cnot(int control, int target);
    static Gate rx(int target, ParamSlot slot);
    static Gate rx(int target, double angle);
    static Gate ry(int target, ParamSlot slot);
    static Gate ry(int target, double angle);
    static Gate rz(int target, ParamSlot slot);
    static Gate rz(int target, double angle);

    [[nodiscard]] GateKind kind() const noexcept { return kind_; }
    [[nodiscard]] int target() const noexcept { return target_; }
    [[nodiscard]] std::optional<int> control() const noexcept {
        return control_ < 0 ? std::nullopt : std::optional<int>(control_);
    }
    [[nodiscard]] bool is_rotation() const noexcept;
    [[nodiscard]] std::optional<std::size_t> param_slot() const noexcept;

    /// Resolves the rotation angle; throws ParameterError when the slot is
    /// outside `params` or the gate is not a rotation.
    [[nodiscard]] double angle(std::span<const double> params) const;

    /// The inverse gate with any parameter slot resolved to a fixed angle.
    [[nodiscard]] Gate inverse(std::span<const double> params) const;

    /// Same gate acting on qubits shifted up by `offset`.
    [[nodiscard]] Gate shifted(int offset) const;

  private:
    Gate(GateKind kind, int target, int control,
         std::variant<std::monostate, ParamSlot, double> angle);

    GateKind kind_;
    int target_;
    int control_;
    std::variant<std::monostate, ParamSlot, double> angle_;
};

/// Ordered gate list over a fixed register with `num_params` parameter slots.
class Circuit {
  public:
    explicit Circuit(int num_qubits, std::size_t num_params = 0);

    /// Appends a gate; throws IndexError when a qubit index or parameter slot
    /// falls outside the circuit.
    Circuit &add(const Gate &gate);

    /// Appends every gate of `other`, which must share the register and
    /// parameter layout.
    Circuit &append(const Circuit &other);

    [[nodiscard]] int num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] std::size_t num_params() const noexcept {
        return num_params_;
    }
    [[nodiscard]] const std::vector<Gate> &gates() const noexcept {
        return gates_;
    }
    [[nodiscard]] std::size_t size() const noexcept { return gates_.size(); }
    [[nodiscard]] bool empty() const noexcept { return gates_.empty(); }

    /// Places this circuit on qubits [offset, offset + num_qubits) of a
    /// larger register.
    [[nodiscard]] Circuit embedded(int total_qubits, int offset) const;

  private:
    int num_qubits_;
    std::size_t num_params_;
    std::vector<Gate> gates_;
};

} // namespace thermvqe
