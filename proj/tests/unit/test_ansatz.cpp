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

#include <algorithm>
#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "thermvqe/ansatz.hpp"
#include "thermvqe/errors.hpp"
#include "thermvqe/exact.hpp"
#include "thermvqe/pauli.hpp"
#include "thermvqe/reweighting.hpp"
#include "thermvqe/statevector.hpp"
#include "thermvqe/vqe.hpp"

namespace {

using thermvqe::MixingFamily;
using thermvqe::MixingSpec;

thermvqe::StateVector run_on_zero(const thermvqe::Circuit &c) {
    auto s = thermvqe::init_state(c.num_qubits());
    thermvqe::run_circuit(s, c);
    return s;
}

MixingSpec random_mixing(oracle::Random &rng, std::size_t k) {
    std::vector<double> g(k);
    for (auto &x : g) {
        x = rng.uniform(0.01, 1.0);
    }
    std::sort(g.begin(), g.end(), std::greater<>());
    return MixingSpec::from_gammas(g);
}

TEST(MixingSpec, Normalizes) {
    const auto m = MixingSpec::from_gammas({3.0, 4.0 * 0.5, 1.0});
    double total = 0.0;
    for (std::size_t k = 0; k < m.size(); ++k) {
        total += m.weight(k);
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
    EXPECT_NEAR(m.gamma(0) / m.gamma(1), 1.5, 1e-14);
}

TEST(MixingSpec, RejectsInvalidCoefficients) {
    EXPECT_THROW(MixingSpec::from_gammas({}), thermvqe::ArgumentError);
    EXPECT_THROW(MixingSpec::from_gammas({1.0, 0.0}), thermvqe::ArgumentError);
    EXPECT_THROW(MixingSpec::from_gammas({1.0, -0.1}), thermvqe::ArgumentError);
    EXPECT_THROW(MixingSpec::from_gammas({0.5, 1.0}), thermvqe::ArgumentError);
    EXPECT_THROW(MixingSpec::from_gammas({1.0, std::nan("")}), thermvqe::ArgumentError);
}

TEST(MixingSpec, TinyCoefficientsAreFloored) {
    const auto m = MixingSpec::from_gammas({1.0, 1e-12});
    EXPECT_GE(m.gamma(1), MixingSpec::kFloor * (1.0 - 1e-12));
}

TEST(MixingFamily, ClosedForms) {
    const auto u = thermvqe::mixing_family(MixingFamily::Uniform, 8);
    for (std::size_t k = 0; k < 8; ++k) {
        EXPECT_NEAR(u.gamma(k), 1.0 / std::sqrt(8.0), 1e-15);
    }

    const auto g = thermvqe::mixing_family(MixingFamily::Geometric, 2, 0.5);
    EXPECT_NEAR(g.weight(0), 2.0 / 3.0, 1e-15);
    EXPECT_NEAR(g.weight(1), 1.0 / 3.0, 1e-15);

    const double b0 = 0.8;
    const auto b = thermvqe::mixing_family(MixingFamily::Boltzmann, 8, b0);
    double z = 0.0;
    for (int j = 0; j < 8; ++j) {
        z += std::exp(-b0 * j);
    }
    for (std::size_t k = 0; k < 8; ++k) {
        EXPECT_NEAR(b.weight(k), std::exp(-b0 * static_cast<double>(k)) / z, 1e-15);
    }
}

TEST(MixingFamily, ParameterDomain) {
    EXPECT_THROW(thermvqe::mixing_family(MixingFamily::Uniform, 0), thermvqe::ArgumentError);
    EXPECT_THROW(thermvqe::mixing_family(MixingFamily::Geometric, 4, 1.0), thermvqe::ArgumentError);
    EXPECT_THROW(thermvqe::mixing_family(MixingFamily::Geometric, 4, 0.0), thermvqe::ArgumentError);
    EXPECT_THROW(thermvqe::mixing_family(MixingFamily::Boltzmann, 4, 0.0), thermvqe::ArgumentError);
    EXPECT_EQ(thermvqe::parse_mixing_family("geometric"), MixingFamily::Geometric);
    EXPECT_THROW(thermvqe::parse_mixing_family("flat"), thermvqe::ArgumentError);
}

TEST(MixingCircuit, UniformSplit) {
    const auto s = run_on_zero(
        thermvqe::build_mixing_circuit(thermvqe::mixing_family(MixingFamily::Uniform, 2), 1));
    EXPECT_NEAR(s[0].real(), 1.0 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(s[1].real(), 1.0 / std::sqrt(2.0), 1e-15);
}

TEST(MixingCircuit, SkewedProbabilities) {
    const auto m = MixingSpec::from_gammas({std::sqrt(0.99), std::sqrt(0.004), std::sqrt(0.004),
                                            std::sqrt(0.002)});
    const auto s = run_on_zero(thermvqe::build_mixing_circuit(m, 2));
    EXPECT_NEAR(std::norm(s[0]), 0.99, 1e-12);
    EXPECT_NEAR(std::norm(s[3]), 0.002, 1e-12);
}

TEST(MixingCircuit, ShapeErrors) {
    EXPECT_THROW(thermvqe::build_mixing_circuit(thermvqe::mixing_family(MixingFamily::Uniform, 3), 2),
                 thermvqe::ShapeError);
    EXPECT_THROW(thermvqe::aux_qubits_for(6), thermvqe::ShapeError);
    EXPECT_EQ(thermvqe::aux_qubits_for(1), 0);
    EXPECT_EQ(thermvqe::aux_qubits_for(8), 3);
}

TEST(Initializer, BellPair) {
    // aux qubit 1, sys qubit 0.
    thermvqe::Circuit c(2);
    c.add(thermvqe::Gate::h(1));
    c.append(thermvqe::build_initializer(1, 1));
    const auto s = run_on_zero(c);
    EXPECT_NEAR(s[0b00].real(), 1.0 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(s[0b11].real(), 1.0 / std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(std::abs(s[0b01]) + std::abs(s[0b10]), 0.0, 1e-15);
}

TEST(Initializer, CopiesBranchIndex) {
    // q_A = 3, q_S = 4; aux content 5 occupies bits 4..6.
    auto s = thermvqe::StateVector::basis(7, std::uint64_t{5} << 4);
    thermvqe::run_circuit(s, thermvqe::build_initializer(3, 4));
    EXPECT_NEAR(std::abs(s[(std::uint64_t{5} << 4) | 0b0101]), 1.0, 1e-15);
    EXPECT_THROW(thermvqe::build_initializer(3, 2), thermvqe::ShapeError);
}

TEST(Ansatz, Layout) {
    const auto one = thermvqe::build_ansatz({3, 1});
    EXPECT_EQ(one.num_params(), 6U);
    EXPECT_EQ(std::count_if(one.gates().begin(), one.gates().end(),
                            [](const auto &g) { return g.kind() == thermvqe::GateKind::CNOT; }),
              3);
    EXPECT_EQ(thermvqe::build_ansatz({3, 4}).num_params(), 24U);
    EXPECT_THROW(thermvqe::build_ansatz({3, 0}), thermvqe::ArgumentError);

    // Every slot drives exactly one gate.
    std::vector<int> uses(one.num_params(), 0);
    for (const auto &g : one.gates()) {
        if (const auto slot = g.param_slot()) {
            ++uses[*slot];
        }
    }
    EXPECT_TRUE(std::all_of(uses.begin(), uses.end(), [](int u) { return u == 1; }));
}

TEST(Ansatz, ZeroAnglesPermuteBasis) {
    const auto u = thermvqe::build_ansatz({3, 2});
    const std::vector<double> zero(u.num_params(), 0.0);
    const auto frames = thermvqe::frame_states(u, zero, 8);
    std::vector<int> hits(8, 0);
    for (const auto &f : frames) {
        int nonzero = 0;
        for (std::size_t b = 0; b < f.size(); ++b) {
            if (std::abs(f[b]) > 1e-12) {
                ++nonzero;
                EXPECT_NEAR(std::abs(f[b]), 1.0, 1e-12);
                ++hits[b];
            }
        }
        EXPECT_EQ(nonzero, 1);
    }
    EXPECT_TRUE(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
    EXPECT_THROW(thermvqe::frame_states(u, zero, 9), thermvqe::IndexError);
}

TEST(PrepareFullState, UniformZeroAnglesIsCopyState) {
    const auto u = thermvqe::build_ansatz({3, 1});
    const std::vector<double> zero(u.num_params(), 0.0);
    const auto s = thermvqe::prepare_full_state(thermvqe::mixing_family(MixingFamily::Uniform, 8),
                                                u, zero, {3, 3});
    const auto frames = thermvqe::frame_states(u, zero, 8);
    for (std::size_t k = 0; k < 8; ++k) {
        for (std::size_t b = 0; b < 8; ++b) {
            EXPECT_NEAR(std::abs(s[k * 8 + b] - frames[k][b] / std::sqrt(8.0)), 0.0, 1e-12);
        }
    }
}

TEST(PrepareFullState, ShapeErrors) {
    const auto u = thermvqe::build_ansatz({3, 1});
    const std::vector<double> zero(u.num_params(), 0.0);
    const auto m4 = thermvqe::mixing_family(MixingFamily::Uniform, 4);
    EXPECT_THROW(thermvqe::prepare_full_state(m4, u, zero, {3, 3}), thermvqe::ShapeError);
    EXPECT_THROW(thermvqe::prepare_full_state(m4, u, zero, {2, 2}), thermvqe::ShapeError);
    const std::vector<double> short_theta(3, 0.0);
    const auto m8 = thermvqe::mixing_family(MixingFamily::Uniform, 8);
    EXPECT_THROW(thermvqe::prepare_full_state(m8, u, short_theta, {3, 3}), thermvqe::ShapeError);
}

TEST(PrepareFullState, ExactOptimumReducedDensity) {
    const auto h = thermvqe::build_tfi(3, 1.0, 1.0);
    const auto sol = thermvqe::exact_solve(h);
    const auto m = thermvqe::mixing_family(MixingFamily::Boltzmann, 8, 1.0);
    const auto rho = thermvqe::reduced_density_matrix_sys(thermvqe::exact_optimum_state(m, sol), 3);

    // Commutes with H and carries Σ γ_k² on each eigenspace of an
    // independently diagonalized H.
    const oracle::Mat hd = oracle::tfi(3, 1.0, 1.0, true);
    EXPECT_LT(oracle::max_abs(hd * rho - rho * hd), 1e-12);
    Eigen::SelfAdjointEigenSolver<oracle::Mat> es(hd);
    for (const auto &[lo, hi] : thermvqe::degenerate_blocks(sol.eigenvalues)) {
        oracle::Mat proj = oracle::Mat::Zero(8, 8);
        double w = 0.0;
        for (std::size_t k = lo; k < hi; ++k) {
            const auto col = es.eigenvectors().col(static_cast<Eigen::Index>(k));
            proj += col * col.adjoint();
            w += m.weight(k);
        }
        EXPECT_NEAR((proj * rho).trace().real(), w, 1e-12);
    }

    // In the eigenbasis the state was built from, ρ is diag(γ_k²).
    const oracle::Mat in_basis = sol.eigenvectors.adjoint() * rho * sol.eigenvectors;
    oracle::Mat expected = oracle::Mat::Zero(8, 8);
    for (Eigen::Index k = 0; k < 8; ++k) {
        expected(k, k) = m.weight(static_cast<std::size_t>(k));
    }
    EXPECT_LT(oracle::max_abs(in_basis - expected), 1e-12);
}

TEST(PrepareFullState, ConvergedGroundBranchFidelity) {
    // Branch 0 carries almost all weight; a converged run leaves the ground
    // state in that branch.
    const auto h = thermvqe::build_tfi(3, 1.0, 1.0);
    const auto sol = thermvqe::exact_solve(h);
    const auto m = thermvqe::mixing_family(MixingFamily::Geometric, 2, 1e-3);
    const auto u = thermvqe::build_ansatz({3, 4});
    thermvqe::CostContext ctx(h, m, u, {1, 3});
    thermvqe::OptimizerConfig opt;
    opt.restarts = 4;
    opt.init_range = 1.0;
    const auto res = thermvqe::minimize(ctx, opt);
    const auto frames = thermvqe::frame_states(u, res.best_params, 1);
    const oracle::Vec ground = sol.eigenvectors.col(0);
    const double fidelity = std::norm(ground.dot(oracle::to_vec(frames[0])));
    EXPECT_GT(fidelity, 0.99);
}

// Properties -----------------------------------------------------------------

TEST(AnsatzProperty, FramesAreOrthonormal) {
    oracle::Random rng(301);
    const auto u = thermvqe::build_ansatz({3, 4});
    for (int trial = 0; trial < 100; ++trial) {
        const auto frames = thermvqe::frame_states(u, rng.angles(u.num_params()), 8);
        for (std::size_t k = 0; k < 8; ++k) {
            for (std::size_t p = 0; p < 8; ++p) {
                const double delta = k == p ? 1.0 : 0.0;
                ASSERT_LT(std::abs(frames[k].inner(frames[p]) - delta), 1e-12);
            }
        }
    }
}

TEST(AnsatzProperty, MixingCircuitFidelity) {
    oracle::Random rng(302);
    for (int trial = 0; trial < 100; ++trial) {
        const int qa = 1 + rng.below(4);
        const auto m = random_mixing(rng, std::size_t{1} << qa);
        const auto s = run_on_zero(thermvqe::build_mixing_circuit(m, qa));
        for (std::size_t k = 0; k < m.size(); ++k) {
            ASSERT_NEAR(std::norm(s[k]), m.weight(k), 1e-12);
            ASSERT_NEAR(s[k].real(), m.gamma(k), 1e-12);
        }
    }
}

TEST(AnsatzProperty, StateAssemblyMatchesFrames) {
    oracle::Random rng(303);
    const auto u = thermvqe::build_ansatz({3, 3});
    for (int trial = 0; trial < 30; ++trial) {
        const int qa = rng.below(4);
        const auto m = random_mixing(rng, std::size_t{1} << qa);
        const auto theta = rng.angles(u.num_params());
        const auto s = thermvqe::prepare_full_state(m, u, theta, {qa, 3});
        const auto frames = thermvqe::frame_states(u, theta, m.size());
        for (std::size_t k = 0; k < m.size(); ++k) {
            for (std::size_t b = 0; b < 8; ++b) {
                ASSERT_LT(std::abs(s[k * 8 + b] - m.gamma(k) * frames[k][b]), 1e-10);
            }
        }
    }
}

TEST(AnsatzProperty, AnsatzMatchesDenseOracle) {
    oracle::Random rng(304);
    const auto u = thermvqe::build_ansatz({3, 2});
    for (int trial = 0; trial < 10; ++trial) {
        const auto theta = rng.angles(u.num_params());
        const oracle::Mat dense = oracle::circuit(u, theta);
        const auto frames = thermvqe::frame_states(u, theta, 8);
        for (std::size_t k = 0; k < 8; ++k) {
            const oracle::Vec col = dense.col(static_cast<Eigen::Index>(k));
            ASSERT_LT((oracle::to_vec(frames[k]) - col).cwiseAbs().maxCoeff(), 1e-12);
        }
    }
}

} // namespace
