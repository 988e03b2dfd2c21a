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

#include "thermvqe/ansatz.hpp"

#include <bit>
#include <cmath>
#include <numeric>

#include "thermvqe/errors.hpp"

namespace thermvqe {

namespace {

std::vector<double> normalized(std::vector<double> v) {
    const double n2 = std::inner_product(v.begin(), v.end(), v.begin(), 0.0);
    const double inv = 1.0 / std::sqrt(n2);
    for (auto &x : v) {
        x *= inv;
    }
    return v;
}

/// Appends a Y rotation on `target` by angles[j] when the control qubits
/// (controls[b] carrying bit b of j) hold value j. Uses the Gray-code
/// expansion into 2^m RY and 2^m CNOT gates.
void add_uniformly_controlled_ry(Circuit &c, int target,
                                 std::span<const int> controls,
                                 std::span<const double> angles) {
    const std::size_t n = angles.size();
    if (controls.empty()) {
        c.add(Gate::ry(target, angles[0]));
        return;
    }
    const auto gray = [](std::size_t i) { return i ^ (i >> 1); };
    for (std::size_t i = 0; i < n; ++i) {
        double theta = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const bool odd = std::popcount(j & gray(i)) & 1;
            theta += odd ? -angles[j] : angles[j];
        }
        c.add(Gate::ry(target, theta / static_cast<double>(n)));
        const std::size_t flip = gray(i) ^ gray((i + 1) % n);
        c.add(Gate::cnot(controls[static_cast<std::size_t>(
                             std::countr_zero(flip))],
                         target));
    }
}

} // namespace

MixingSpec MixingSpec::from_gammas(std::vector<double> gammas) {
    if (gammas.empty()) {
        throw ArgumentError("mixing needs at least one coefficient");
    }
    for (double g : gammas) {
        if (!std::isfinite(g) || !(g > 0.0)) {
            throw ArgumentError(
                "mixing coefficients must be finite and strictly positive");
        }
    }
    gammas = normalized(std::move(gammas));
    for (auto &g : gammas) {
        g = std::max(g, kFloor);
    }
    gammas = normalized(std::move(gammas));
    for (std::size_t k = 1; k < gammas.size(); ++k) {
        if (gammas[k] > gammas[k - 1] * (1.0 + 1e-12)) {
            throw ArgumentError("mixing coefficients must be non-increasing "
                                "(gamma_" +
                                std::to_string(k) + " > gamma_" +
                                std::to_string(k - 1) + ")");
        }
    }
    return MixingSpec(std::move(gammas));
}

MixingFamily parse_mixing_family(const std::string &name) {
    if (name == "uniform") {
        return MixingFamily::Uniform;
    }
    if (name == "geometric") {
        return MixingFamily::Geometric;
    }
    if (name == "boltzmann") {
        return MixingFamily::Boltzmann;
    }
    throw ArgumentError("unknown mixing family '" + name + "'");
}

std::string to_string(MixingFamily family) {
    switch (family) {
    case MixingFamily::Uniform:
        return "uniform";
    case MixingFamily::Geometric:
        return "geometric";
    case MixingFamily::Boltzmann:
        return "boltzmann";
    }
    return "?";
}

MixingSpec mixing_family(MixingFamily family, std::size_t num_levels,
                         double parameter) {
    if (num_levels < 1) {
        throw ArgumentError("mixing needs at least one level");
    }
    std::vector<double> probs(num_levels, 1.0);
    switch (family) {
    case MixingFamily::Uniform:
        break;
    case MixingFamily::Geometric:
        if (!(parameter > 0.0 && parameter < 1.0)) {
            throw ArgumentError("geometric mixing ratio must lie in (0, 1)");
        }
        for (std::size_t k = 0; k < num_levels; ++k) {
            probs[k] = std::pow(parameter, static_cast<double>(k));
        }
        break;
    case MixingFamily::Boltzmann:
        if (!(parameter > 0.0) || !std::isfinite(parameter)) {
            throw ArgumentError("Boltzmann mixing needs beta0 > 0");
        }
        for (std::size_t k = 0; k < num_levels; ++k) {
            probs[k] = std::exp(-parameter * static_cast<double>(k));
        }
        break;
    }
    const double total = std::accumulate(probs.begin(), probs.end(), 0.0);
    std::vector<double> gammas(num_levels);
    for (std::size_t k = 0; k < num_levels; ++k) {
        gammas[k] = std::sqrt(probs[k] / total);
    }
    // Deep tails underflow to zero; the floor in from_gammas takes over.
    for (auto &g : gammas) {
        g = std::max(g, MixingSpec::kFloor);
    }
    return MixingSpec::from_gammas(std::move(gammas));
}

int aux_qubits_for(std::size_t num_levels) {
    if (num_levels == 0 || !std::has_single_bit(num_levels)) {
        throw ShapeError("number of mixing levels " +
                         std::to_string(num_levels) +
                         " is not a power of two");
    }
    return std::countr_zero(num_levels);
}

Circuit build_mixing_circuit(const MixingSpec &mixing, int aux_qubits) {
    if (aux_qubits < 0 ||
        mixing.size() != (std::size_t{1} << aux_qubits)) {
        throw ShapeError("mixing with " + std::to_string(mixing.size()) +
                         " levels does not fill " +
                         std::to_string(aux_qubits) + " qubits");
    }
    Circuit c(aux_qubits);
    std::vector<double> probs(mixing.size());
    for (std::size_t k = 0; k < probs.size(); ++k) {
        probs[k] = mixing.weight(k);
    }
    // Top qubit first: each level splits the probability mass of every
    // already-fixed prefix of higher bits between bit t = 0 and bit t = 1.
    for (int t = aux_qubits - 1; t >= 0; --t) {
        const int num_controls = aux_qubits - 1 - t;
        std::vector<int> controls(static_cast<std::size_t>(num_controls));
        std::iota(controls.begin(), controls.end(), t + 1);
        std::vector<double> angles(std::size_t{1} << num_controls);
        for (std::size_t j = 0; j < angles.size(); ++j) {
            double p0 = 0.0;
            double p1 = 0.0;
            for (std::size_t k = 0; k < probs.size(); ++k) {
                if ((k >> (t + 1)) != j) {
                    continue;
                }
                ((k >> t) & 1U ? p1 : p0) += probs[k];
            }
            angles[j] = 2.0 * std::atan2(std::sqrt(p1), std::sqrt(p0));
        }
        add_uniformly_controlled_ry(c, t, controls, angles);
    }
    return c;
}

Circuit build_initializer(int aux_qubits, int sys_qubits) {
    if (aux_qubits < 0 || sys_qubits < 1 || aux_qubits > sys_qubits) {
        throw ShapeError("initializer needs 0 <= aux qubits (" +
                         std::to_string(aux_qubits) + ") <= system qubits (" +
                         std::to_string(sys_qubits) + ")");
    }
    Circuit c(aux_qubits + sys_qubits);
    for (int j = 0; j < aux_qubits; ++j) {
        c.add(Gate::cnot(sys_qubits + j, j));
    }
    return c;
}

Circuit build_ansatz(const AnsatzSpec &spec) {
    if (spec.sys_qubits < 1 || spec.layers < 1) {
        throw ArgumentError("ansatz needs at least one qubit and one layer");
    }
    const int n = spec.sys_qubits;
    Circuit c(n, spec.num_params());
    std::size_t slot = 0;
    for (int layer = 0; layer < spec.layers; ++layer) {
        for (int q = 0; q < n; ++q) {
            c.add(Gate::rx(q, ParamSlot{slot++}));
        }
        for (int q = 0; q < n; ++q) {
            c.add(Gate::rz(q, ParamSlot{slot++}));
        }
        if (n > 1) {
            for (int q = 0; q < n; ++q) {
                c.add(Gate::cnot(q, (q + 1) % n));
            }
        }
    }
    return c;
}

StateVector prepare_full_state(const MixingSpec &mixing, const Circuit &ansatz,
                               std::span<const double> params,
                               RegisterLayout layout) {
    if (ansatz.num_qubits() != layout.sys_qubits) {
        throw ShapeError("ansatz acts on " +
                         std::to_string(ansatz.num_qubits()) +
                         " qubits, system register has " +
                         std::to_string(layout.sys_qubits));
    }
    const int total = layout.total_qubits();
    StateVector state(total);
    run_circuit(state, build_mixing_circuit(mixing, layout.aux_qubits)
                           .embedded(total, layout.sys_qubits));
    run_circuit(state,
                build_initializer(layout.aux_qubits, layout.sys_qubits));
    run_circuit(state, ansatz.embedded(total, 0), params);
    return state;
}

std::vector<StateVector> frame_states(const Circuit &ansatz,
                                      std::span<const double> params,
                                      std::size_t num_states) {
    const int n = ansatz.num_qubits();
    if (num_states > (std::size_t{1} << n)) {
        throw IndexError("cannot build " + std::to_string(num_states) +
                         " frame states on " + std::to_string(n) + " qubits");
    }
    std::vector<StateVector> out;
    out.reserve(num_states);
    for (std::size_t k = 0; k < num_states; ++k) {
        auto s = StateVector::basis(n, k);
        run_circuit(s, ansatz, params);
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace thermvqe
