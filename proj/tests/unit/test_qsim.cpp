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

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "thermvqe/ansatz.hpp"
#include "thermvqe/circuit.hpp"
#include "thermvqe/errors.hpp"
#include "thermvqe/statevector.hpp"

namespace {

using thermvqe::Circuit;
using thermvqe::Complex;
using thermvqe::Gate;
using thermvqe::ParamSlot;
using thermvqe::StateVector;

constexpr double kPi = std::numbers::pi;

Gate random_gate(oracle::Random &rng, int n, std::size_t num_params) {
    const int t = rng.below(n);
    const double a = rng.uniform(0.0, 2.0 * kPi);
    switch (rng.below(n > 1 ? 8 : 7)) {
    case 0:
        return Gate::x(t);
    case 1:
        return Gate::h(t);
    case 2:
        return Gate::sdg_h(t);
    case 3:
        return Gate::rx(t, a);
    case 4:
        return num_params > 0 ? Gate::ry(t, ParamSlot{static_cast<std::size_t>(rng.below(static_cast<int>(num_params)))})
                              : Gate::ry(t, a);
    case 5:
    case 6:
        return Gate::rz(t, a);
    default: {
        int c = rng.below(n - 1);
        if (c >= t) {
            ++c;
        }
        return Gate::cnot(c, t);
    }
    }
}

TEST(StateVector, InitStateIsAllZeros) {
    const auto one = thermvqe::init_state(1);
    ASSERT_EQ(one.size(), 2U);
    EXPECT_EQ(one[0], Complex(1.0, 0.0));
    EXPECT_EQ(one[1], Complex(0.0, 0.0));

    const auto two = thermvqe::init_state(2);
    ASSERT_EQ(two.size(), 4U);
    EXPECT_EQ(two[0], Complex(1.0, 0.0));
    for (std::size_t i = 1; i < 4; ++i) {
        EXPECT_EQ(two[i], Complex(0.0, 0.0));
    }

    const auto six = thermvqe::init_state(6);
    EXPECT_EQ(six.size(), 64U);
    EXPECT_DOUBLE_EQ(six.norm(), 1.0);
}

TEST(StateVector, SizeGuard) {
    EXPECT_THROW(thermvqe::init_state(0), thermvqe::SizeError);
    EXPECT_THROW(thermvqe::init_state(thermvqe::kMaxQubits + 1), thermvqe::SizeError);
}

TEST(ApplyGate, PauliXFlipsQubit) {
    auto s = thermvqe::init_state(1);
    thermvqe::apply_gate(s, Gate::x(0));
    EXPECT_EQ(s[0], Complex(0.0, 0.0));
    EXPECT_EQ(s[1], Complex(1.0, 0.0));
}

TEST(ApplyGate, CnotTruthTable) {
    // |10⟩ with qubit 0 set (the control) is basis index 1.
    auto s = StateVector::basis(2, 0b01);
    thermvqe::apply_gate(s, Gate::cnot(0, 1));
    EXPECT_NEAR(std::abs(s[0b11]), 1.0, 1e-15);

    auto idle = StateVector::basis(2, 0b10);
    thermvqe::apply_gate(idle, Gate::cnot(0, 1));
    EXPECT_NEAR(std::abs(idle[0b10]), 1.0, 1e-15);
}

TEST(ApplyGate, RotXPiIsMinusIX) {
    auto s = thermvqe::init_state(1);
    thermvqe::apply_gate(s, Gate::rx(0, kPi));
    EXPECT_NEAR(std::abs(s[0]), 0.0, 1e-15);
    EXPECT_NEAR(s[1].real(), 0.0, 1e-15);
    EXPECT_NEAR(s[1].imag(), -1.0, 1e-15);
}

TEST(ApplyGate, Errors) {
    auto s = thermvqe::init_state(2);
    EXPECT_THROW(thermvqe::apply_gate(s, Gate::x(2)), thermvqe::IndexError);
    EXPECT_THROW(thermvqe::apply_gate(s, Gate::cnot(0, 5)), thermvqe::IndexError);
    const std::vector<double> params{0.3};
    EXPECT_THROW(thermvqe::apply_gate(s, Gate::rx(0, ParamSlot{1}), params),
                 thermvqe::ParameterError);
}

TEST(ApplyGate, MatchesDenseOracle) {
    oracle::Random rng(11);
    const int n = 4;
    for (int trial = 0; trial < 200; ++trial) {
        const Gate g = random_gate(rng, n, 0);
        const oracle::Vec psi = rng.state(n);
        auto s = oracle::from_vec(psi);
        thermvqe::apply_gate(s, g);
        const oracle::Vec expected = oracle::gate(g, n) * psi;
        EXPECT_LT((oracle::to_vec(s) - expected).cwiseAbs().maxCoeff(), 1e-13)
            << thermvqe::to_string(g.kind()) << " target " << g.target();
    }
}

TEST(Circuit, RejectsOutOfRangeGates) {
    Circuit c(2, 1);
    EXPECT_THROW(c.add(Gate::x(2)), thermvqe::IndexError);
    EXPECT_THROW(c.add(Gate::rz(0, ParamSlot{1})), thermvqe::IndexError);
    EXPECT_NO_THROW(c.add(Gate::rz(1, ParamSlot{0})));
}

TEST(RunCircuit, EmptyAndInvolution) {
    oracle::Random rng(3);
    const auto psi = oracle::from_vec(rng.state(3));
    auto s = psi;
    thermvqe::run_circuit(s, Circuit(3));
    for (std::size_t i = 0; i < s.size(); ++i) {
        EXPECT_EQ(s[i], psi[i]);
    }

    auto zero = thermvqe::init_state(1);
    Circuit xx(1);
    xx.add(Gate::x(0)).add(Gate::x(0));
    thermvqe::run_circuit(zero, xx);
    EXPECT_EQ(zero[0], Complex(1.0, 0.0));
}

TEST(RunCircuit, ShapeErrors) {
    auto s = thermvqe::init_state(3);
    EXPECT_THROW(thermvqe::run_circuit(s, Circuit(2)), thermvqe::ShapeError);
    Circuit c(3, 2);
    const std::vector<double> one{0.1};
    EXPECT_THROW(thermvqe::run_circuit(s, c, one), thermvqe::ShapeError);
}

TEST(RunCircuit, UniformCopyAtZeroAngles) {
    const auto mixing = thermvqe::mixing_family(thermvqe::MixingFamily::Uniform, 8);
    Circuit full(6);
    full.append(thermvqe::build_mixing_circuit(mixing, 3).embedded(6, 3));
    full.append(thermvqe::build_initializer(3, 3));
    auto s = thermvqe::init_state(6);
    thermvqe::run_circuit(s, full);
    for (std::size_t b = 0; b < s.size(); ++b) {
        const std::size_t k = b >> 3;
        const std::size_t sys = b & 7U;
        EXPECT_NEAR(std::abs(s[b]), k == sys ? 1.0 / std::sqrt(8.0) : 0.0, 1e-12) << b;
    }
}

TEST(RunCircuit, MatchesDenseOracleWithParameters) {
    oracle::Random rng(21);
    const int n = 4;
    for (int trial = 0; trial < 20; ++trial) {
        Circuit c(n, 3);
        for (int i = 0; i < 25; ++i) {
            c.add(random_gate(rng, n, 3));
        }
        const auto params = rng.angles(3);
        const oracle::Vec psi = rng.state(n);
        auto s = oracle::from_vec(psi);
        thermvqe::run_circuit(s, c, params);
        const oracle::Vec expected = oracle::circuit(c, params) * psi;
        EXPECT_LT((oracle::to_vec(s) - expected).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(Expval, SingleQubitEigenstates) {
    const auto zero = thermvqe::init_state(1);
    EXPECT_DOUBLE_EQ(thermvqe::expval_pauli_string(zero, thermvqe::PauliString("Z")), 1.0);
    EXPECT_DOUBLE_EQ(thermvqe::expval_pauli_string(zero, thermvqe::PauliString("X")), 0.0);
    auto plus = zero;
    thermvqe::apply_gate(plus, Gate::h(0));
    EXPECT_NEAR(thermvqe::expval_pauli_string(plus, thermvqe::PauliString("X")), 1.0, 1e-15);
}

TEST(Expval, SysOffsetAndShape) {
    // |1⟩ on qubit 2 only.
    const auto s = StateVector::basis(3, 0b100);
    EXPECT_DOUBLE_EQ(thermvqe::expval_pauli_string(s, thermvqe::PauliString("Z"), 2), -1.0);
    EXPECT_DOUBLE_EQ(thermvqe::expval_pauli_string(s, thermvqe::PauliString("Z"), 1), 1.0);
    EXPECT_THROW(thermvqe::expval_pauli_string(s, thermvqe::PauliString("ZZ"), 2),
                 thermvqe::ShapeError);
}

TEST(Expval, RandomStringsMatchDenseQuadraticForm) {
    oracle::Random rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const std::string axes = rng.axes(4);
        const oracle::Vec psi = rng.state(4);
        const double expected = (psi.adjoint() * oracle::pauli_string(axes) * psi)(0, 0).real();
        EXPECT_NEAR(thermvqe::expval_pauli_string(oracle::from_vec(psi),
                                                  thermvqe::PauliString(axes)),
                    expected, 1e-12)
            << axes;
    }
}

TEST(ProjectedExpval, BranchSelection) {
    const auto s = thermvqe::init_state(2);
    const thermvqe::PauliSum z(1, {{1.0, thermvqe::PauliString("Z")}});
    EXPECT_DOUBLE_EQ(thermvqe::projected_expval(s, 0, z), 1.0);
    EXPECT_DOUBLE_EQ(thermvqe::projected_expval(s, 1, z), 0.0);
    EXPECT_THROW(thermvqe::projected_expval(s, 2, z), thermvqe::IndexError);
}

TEST(BranchProbability, MixingFamilies) {
    const auto layout = thermvqe::RegisterLayout{3, 3};
    const auto ansatz = thermvqe::build_ansatz({3, 1});
    const std::vector<double> theta(ansatz.num_params(), 0.0);

    const auto uniform = thermvqe::mixing_family(thermvqe::MixingFamily::Uniform, 8);
    const auto s = thermvqe::prepare_full_state(uniform, ansatz, theta, layout);
    double total = 0.0;
    for (std::size_t k = 0; k < 8; ++k) {
        const double p = thermvqe::aux_branch_probability(s, k, 3);
        EXPECT_NEAR(p, 0.125, 1e-12);
        total += p;
    }
    EXPECT_NEAR(total, 1.0, 1e-12);

    const double r = 0.6;
    const auto geo = thermvqe::mixing_family(thermvqe::MixingFamily::Geometric, 8, r);
    const auto g = thermvqe::prepare_full_state(geo, ansatz, theta, layout);
    const double norm = (1.0 - std::pow(r, 8)) / (1.0 - r);
    for (std::size_t k = 0; k < 8; ++k) {
        EXPECT_NEAR(thermvqe::aux_branch_probability(g, k, 3), std::pow(r, k) / norm, 1e-12);
    }

    const auto pure = thermvqe::init_state(6);
    EXPECT_DOUBLE_EQ(thermvqe::aux_branch_probability(pure, 0, 3), 1.0);
    EXPECT_THROW(thermvqe::aux_branch_probability(pure, 8, 3), thermvqe::IndexError);
}

TEST(Sampling, DeterministicOutcomes) {
    const auto zero = thermvqe::init_state(1);
    const auto counts = thermvqe::sample_counts(zero, Circuit(1), 100, 7);
    ASSERT_EQ(counts.size(), 1U);
    EXPECT_EQ(counts.at(0), 100U);
    EXPECT_THROW(thermvqe::sample_counts(zero, Circuit(1), 0, 7), thermvqe::ArgumentError);
}

TEST(Sampling, SameSeedSameCounts) {
    oracle::Random rng(8);
    const auto s = oracle::from_vec(rng.state(3));
    Circuit hh(3);
    hh.add(Gate::h(0)).add(Gate::sdg_h(2));
    EXPECT_EQ(thermvqe::sample_counts(s, hh, 5000, 42), thermvqe::sample_counts(s, hh, 5000, 42));
    EXPECT_NE(thermvqe::sample_counts(s, hh, 5000, 42), thermvqe::sample_counts(s, hh, 5000, 43));
}

TEST(Sampling, BornRuleWithinFiveSigma) {
    oracle::Random rng(13);
    const oracle::Vec psi = rng.state(3);
    Circuit basis(3);
    basis.add(Gate::h(1)).add(Gate::sdg_h(0));
    const oracle::Vec rotated = oracle::circuit(basis) * psi;
    constexpr std::uint64_t kShots = 1'000'000;
    const auto counts = thermvqe::sample_counts(oracle::from_vec(psi), basis, kShots, 99);
    std::uint64_t total = 0;
    for (Eigen::Index b = 0; b < rotated.size(); ++b) {
        const double p = std::norm(rotated[b]);
        const auto it = counts.find(static_cast<std::uint64_t>(b));
        const double n = it == counts.end() ? 0.0 : static_cast<double>(it->second);
        const double sigma = std::sqrt(kShots * p * (1.0 - p));
        EXPECT_LE(std::abs(n - kShots * p), 5.0 * sigma + 1e-9) << b;
        total += it == counts.end() ? 0 : it->second;
    }
    EXPECT_EQ(total, kShots);
}

TEST(ReducedDensity, ProductAndCopyStates) {
    oracle::Random rng(17);
    const oracle::Vec phi = rng.state(2);
    // |0⟩_aux ⊗ |φ⟩_sys: amplitudes live in the low block.
    oracle::Vec full = oracle::Vec::Zero(8);
    full.head(4) = phi;
    const auto rho = thermvqe::reduced_density_matrix_sys(oracle::from_vec(full), 2);
    EXPECT_LT(oracle::max_abs(rho - phi * phi.adjoint()), 1e-14);

    Circuit copy(6);
    copy.append(thermvqe::build_mixing_circuit(
                    thermvqe::mixing_family(thermvqe::MixingFamily::Uniform, 8), 3)
                    .embedded(6, 3));
    copy.append(thermvqe::build_initializer(3, 3));
    auto s = thermvqe::init_state(6);
    thermvqe::run_circuit(s, copy);
    const auto mixed = thermvqe::reduced_density_matrix_sys(s, 3);
    EXPECT_LT(oracle::max_abs(mixed - oracle::Mat::Identity(8, 8) / 8.0), 1e-12);

    EXPECT_THROW(thermvqe::reduced_density_matrix_sys(thermvqe::init_state(15), 3),
                 thermvqe::SizeError);
}

// Properties -----------------------------------------------------------------

TEST(QsimProperty, NormPreservedByRandomCircuits) {
    oracle::Random rng(101);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 1 + rng.below(5);
        Circuit c(n);
        for (int i = 0; i < 30; ++i) {
            c.add(random_gate(rng, n, 0));
        }
        auto s = oracle::from_vec(rng.state(n));
        thermvqe::run_circuit(s, c);
        ASSERT_NEAR(s.norm(), 1.0, 1e-10);
    }
}

TEST(QsimProperty, GateThenInverseIsIdentity) {
    oracle::Random rng(102);
    const std::vector<double> params{0.7, -1.3};
    for (int trial = 0; trial < 500; ++trial) {
        const Gate g = random_gate(rng, 4, 2);
        if (g.kind() == thermvqe::GateKind::SAdjointH) {
            // Basis-change gate only; it has no inverse in the gate set.
            EXPECT_THROW((void)g.inverse(params), thermvqe::Error);
            continue;
        }
        const auto psi = oracle::from_vec(rng.state(4));
        auto s = psi;
        thermvqe::apply_gate(s, g, params);
        thermvqe::apply_gate(s, g.inverse(params), params);
        for (std::size_t i = 0; i < s.size(); ++i) {
            ASSERT_LT(std::abs(s[i] - psi[i]), 1e-12);
        }
    }
}

TEST(QsimProperty, ReducedDensityIsAState) {
    oracle::Random rng(103);
    for (int trial = 0; trial < 50; ++trial) {
        const auto rho = thermvqe::reduced_density_matrix_sys(oracle::from_vec(rng.state(5)), 3);
        EXPECT_LT(oracle::max_abs(rho - rho.adjoint()), 1e-12);
        EXPECT_NEAR(rho.trace().real(), 1.0, 1e-10);
        Eigen::SelfAdjointEigenSolver<oracle::Mat> es(rho);
        EXPECT_GT(es.eigenvalues().minCoeff(), -1e-10);
    }
}

} // namespace
