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

#include "thermvqe/circuit.hpp"

#include "thermvqe/errors.hpp"

namespace thermvqe {

std::string to_string(GateKind kind) {
    switch (kind) {
    case GateKind::PauliX:
        return "X";
    case GateKind::Hadamard:
        return "H";
    case GateKind::SAdjointH:
        return "SdgH";
    case GateKind::RotX:
        return "RX";
    case GateKind::RotY:
        return "RY";
    case GateKind::RotZ:
        return "RZ";
    case GateKind::CNOT:
        return "CNOT";
    }
    return "?";
}

Gate::Gate(GateKind kind, int target, int control,
           std::variant<std::monostate, ParamSlot, double> angle)
    : kind_(kind), target_(target), control_(control),
      angle_(std::move(angle)) {
    if (target_ < 0) {
        throw IndexError("gate target qubit must be non-negative");
    }
    if (control_ == target_) {
        throw IndexError("gate control and target must differ");
    }
}

Gate Gate::x(int target) { return {GateKind::PauliX, target, -1, {}}; }
Gate Gate::h(int target) { return {GateKind::Hadamard, target, -1, {}}; }
Gate Gate::sdg_h(int target) { return {GateKind::SAdjointH, target, -1, {}}; }

Gate Gate::cnot(int control, int target) {
    if (control < 0) {
        throw IndexError("CNOT control qubit must be non-negative");
    }
    return {GateKind::CNOT, target, control, {}};
}

Gate Gate::rx(int target, ParamSlot slot) {
    return {GateKind::RotX, target, -1, slot};
}
Gate Gate::rx(int target, double angle) {
    return {GateKind::RotX, target, -1, angle};
}
Gate Gate::ry(int target, ParamSlot slot) {
    return {GateKind::RotY, target, -1, slot};
}
Gate Gate::ry(int target, double angle) {
    return {GateKind::RotY, target, -1, angle};
}
Gate Gate::rz(int target, ParamSlot slot) {
    return {GateKind::RotZ, target, -1, slot};
}
Gate Gate::rz(int target, double angle) {
    return {GateKind::RotZ, target, -1, angle};
}

bool Gate::is_rotation() const noexcept {
    return kind_ == GateKind::RotX || kind_ == GateKind::RotY ||
           kind_ == GateKind::RotZ;
}

std::optional<std::size_t> Gate::param_slot() const noexcept {
    if (const auto *slot = std::get_if<ParamSlot>(&angle_)) {
        return slot->index;
    }
    return std::nullopt;
}

double Gate::angle(std::span<const double> params) const {
    if (const auto *slot = std::get_if<ParamSlot>(&angle_)) {
        if (slot->index >= params.size()) {
            throw ParameterError("parameter slot " +
                                 std::to_string(slot->index) +
                                 " is not bound (have " +
                                 std::to_string(params.size()) + ")");
        }
        return params[slot->index];
    }
    if (const auto *fixed = std::get_if<double>(&angle_)) {
        return *fixed;
    }
    throw ParameterError(to_string(kind_) + " gate has no angle");
}

Gate Gate::inverse(std::span<const double> params) const {
    if (is_rotation()) {
        return {kind_, target_, control_, -angle(params)};
    }
    if (kind_ == GateKind::SAdjointH) {
        // (H·S†)† = S·H has no dedicated kind; callers only invert
        // self-inverse gates and rotations.
        throw ParameterError("SdgH has no inverse in the gate set");
    }
    return *this;
}

Gate Gate::shifted(int offset) const {
    return {kind_, target_ + offset, control_ < 0 ? -1 : control_ + offset,
            angle_};
}

Circuit::Circuit(int num_qubits, std::size_t num_params)
    : num_qubits_(num_qubits), num_params_(num_params) {
    if (num_qubits < 0) {
        throw SizeError("circuit qubit count must be non-negative");
    }
}

Circuit &Circuit::add(const Gate &gate) {
    if (gate.target() >= num_qubits_) {
        throw IndexError("gate target " + std::to_string(gate.target()) +
                         " outside " + std::to_string(num_qubits_) +
                         "-qubit circuit");
    }
    if (auto c = gate.control(); c && *c >= num_qubits_) {
        throw IndexError("gate control " + std::to_string(*c) + " outside " +
                         std::to_string(num_qubits_) + "-qubit circuit");
    }
    if (auto slot = gate.param_slot(); slot && *slot >= num_params_) {
        throw IndexError("parameter slot " + std::to_string(*slot) +
                         " outside circuit with " +
                         std::to_string(num_params_) + " parameters");
    }
    gates_.push_back(gate);
    return *this;
}

Circuit &Circuit::append(const Circuit &other) {
    if (other.num_qubits_ != num_qubits_ ||
        other.num_params_ > num_params_) {
        throw ShapeError("appended circuit does not fit the register");
    }
    for (const auto &g : other.gates_) {
        add(g);
    }
    return *this;
}

Circuit Circuit::embedded(int total_qubits, int offset) const {
    if (offset < 0 || offset + num_qubits_ > total_qubits) {
        throw ShapeError("cannot embed " + std::to_string(num_qubits_) +
                         "-qubit circuit at offset " +
                         std::to_string(offset) + " of " +
                         std::to_string(total_qubits) + " qubits");
    }
    Circuit out(total_qubits, num_params_);
    for (const auto &g : gates_) {
        out.add(g.shifted(offset));
    }
    return out;
}

} // namespace thermvqe
