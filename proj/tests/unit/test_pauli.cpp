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
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "thermvqe/errors.hpp"
#include "thermvqe/exact.hpp"
#include "thermvqe/measurement.hpp"
#include "thermvqe/pauli.hpp"
#include "thermvqe/statevector.hpp"

namespace {

using thermvqe::PauliString;
using thermvqe::PauliSum;

PauliSum sum_of(int n, const std::vector<std::pair<double, std::string>> &terms) {
    PauliSum out(n);
    for (const auto &[c, axes] : terms) {
        out.add_term(c, PauliString(axes));
    }
    return out;
}

PauliSum random_sum(oracle::Random &rng, int n, int terms,
                    std::vector<std::pair<double, std::string>> *record = nullptr) {
    std::vector<std::pair<double, std::string>> raw;
    for (int i = 0; i < terms; ++i) {
        raw.emplace_back(rng.uniform(-1.0, 1.0), rng.axes(n));
    }
    if (record != nullptr) {
        *record = raw;
    }
    return sum_of(n, raw);
}

/// Σ_m S_m† Λ_m S_m assembled with oracle matrices.
oracle::Mat reassemble(const std::vector<thermvqe::MeasurementSetting> &settings, int n) {
    const Eigen::Index d = Eigen::Index{1} << n;
    oracle::Mat out = oracle::Mat::Zero(d, d);
    for (const auto &m : settings) {
        oracle::Mat lambda = oracle::Mat::Zero(d, d);
        for (Eigen::Index b = 0; b < d; ++b) {
            lambda(b, b) = m.eigenvalue(static_cast<std::uint64_t>(b));
        }
        const oracle::Mat s = oracle::circuit(m.basis_change);
        out += s.adjoint() * lambda * s;
    }
    return out;
}

void expect_spectrum(const std::vector<double> &got, const std::vector<double> &want,
                     double tol) {
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
        EXPECT_NEAR(got[i], want[i], tol) << "level " << i;
    }
}

TEST(PauliString, TextAndMasks) {
    const PauliString p("XZY");
    EXPECT_EQ(p.num_qubits(), 3);
    EXPECT_EQ(p.x_mask(), 0b101U);
    EXPECT_EQ(p.z_mask(), 0b110U);
    EXPECT_EQ(p.num_y(), 1);
    EXPECT_EQ(p.axis(0), thermvqe::PauliAxis::X);
    EXPECT_EQ(p.to_string(), "XZY");
    EXPECT_EQ(PauliString::from_masks(3, 0b101, 0b110), p);
    EXPECT_TRUE(PauliString(2).is_identity());
    EXPECT_THROW(PauliString("XQ"), thermvqe::ArgumentError);
}

TEST(PauliSum, CanonicalizesDuplicates) {
    const auto s = sum_of(2, {{0.5, "XZ"}, {1.0, "ZZ"}, {0.25, "XZ"}, {-1.0, "ZZ"}});
    ASSERT_EQ(s.size(), 1U);
    EXPECT_DOUBLE_EQ(s.terms()[0].coefficient, 0.75);
    EXPECT_EQ(s.terms()[0].string.to_string(), "XZ");
    EXPECT_THROW(PauliSum(2).add_term(1.0, PauliString("Z")), thermvqe::ShapeError);
}

TEST(PauliSum, ObservableTextRoundTrip) {
    oracle::Random rng(4);
    const auto h = random_sum(rng, 3, 8);
    std::istringstream in(h.to_text());
    const auto back = thermvqe::parse_observable(in);
    ASSERT_EQ(back.size(), h.size());
    for (std::size_t i = 0; i < h.size(); ++i) {
        EXPECT_EQ(back.terms()[i].coefficient, h.terms()[i].coefficient);
        EXPECT_EQ(back.terms()[i].string, h.terms()[i].string);
    }
}

TEST(PauliSum, ParseErrors) {
    std::istringstream bad_number("abc ZZ\n");
    EXPECT_THROW(thermvqe::parse_observable(bad_number), thermvqe::ArgumentError);
    std::istringstream ragged("1.0 ZZ\n1.0 Z\n");
    EXPECT_THROW(thermvqe::parse_observable(ragged), thermvqe::ArgumentError);
    std::istringstream empty("# nothing\n");
    EXPECT_THROW(thermvqe::parse_observable(empty), thermvqe::ArgumentError);
}

TEST(BuildTfi, TermLayout) {
    const auto h = thermvqe::build_tfi(3, 1.0, 1.0, true);
    EXPECT_EQ(h.size(), 6U);
    EXPECT_DOUBLE_EQ(h.normalized_trace(), 0.0);
    EXPECT_EQ(thermvqe::build_tfi(3, 1.0, 1.0, false).size(), 5U);
    EXPECT_THROW(thermvqe::build_tfi(1, 1.0, 1.0), thermvqe::ArgumentError);
}

TEST(BuildTfi, ClassicalLimits) {
    expect_spectrum(thermvqe::exact_solve(thermvqe::build_tfi(3, 1.0, 0.0)).eigenvalues,
                    {-3, -3, 1, 1, 1, 1, 1, 1}, 1e-10);
    expect_spectrum(thermvqe::exact_solve(thermvqe::build_tfi(3, 0.0, 1.0)).eigenvalues,
                    {-3, -1, -1, -1, 1, 1, 1, 3}, 1e-10);
}

TEST(BuildTfi, SpectrumMatchesIndependentOracle) {
    for (const int n : {2, 3, 4}) {
        for (const bool periodic : {true, false}) {
            const auto got = thermvqe::exact_solve(thermvqe::build_tfi(n, 1.0, 1.0, periodic));
            expect_spectrum(got.eigenvalues,
                            oracle::eigenvalues(oracle::tfi(n, 1.0, 1.0, periodic)), 1e-10);
        }
    }
    // Closed form for the periodic three-site chain at J = h = 1.
    expect_spectrum(thermvqe::exact_solve(thermvqe::build_tfi(3, 1.0, 1.0)).eigenvalues,
                    {-4, -2 * std::sqrt(3.0), 0, 0, 0, 2, 2, 2 * std::sqrt(3.0)}, 1e-10);
}

TEST(ToDense, SmallMatrices) {
    const auto z = thermvqe::to_dense(sum_of(1, {{1.0, "Z"}}));
    EXPECT_LT(oracle::max_abs(z - oracle::pauli('Z')), 1e-15);
    const auto x = thermvqe::to_dense(sum_of(1, {{1.0, "X"}}));
    EXPECT_LT(oracle::max_abs(x - oracle::pauli('X')), 1e-15);

    // −X⊗X − Z⊗I − I⊗Z expanded by hand.
    oracle::Mat hand(4, 4);
    hand << -2, 0, 0, -1, //
        0, 0, -1, 0,      //
        0, -1, 0, 0,      //
        -1, 0, 0, 2;
    EXPECT_LT(oracle::max_abs(thermvqe::to_dense(thermvqe::build_tfi(2, 1.0, 1.0, false)) - hand),
              1e-15);

    EXPECT_THROW(thermvqe::to_dense(PauliSum::identity(thermvqe::kMaxDenseQubits + 1)),
                 thermvqe::SizeError);
}

TEST(ToDense, RandomSumsMatchKroneckerOracle) {
    oracle::Random rng(6);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<std::pair<double, std::string>> raw;
        const auto h = random_sum(rng, 3, 6, &raw);
        EXPECT_LT(oracle::max_abs(thermvqe::to_dense(h) - oracle::pauli_sum(raw)), 1e-14);
    }
}

TEST(ExactSolve, SingleQubitZ) {
    const auto sol = thermvqe::exact_solve(sum_of(1, {{1.0, "Z"}}));
    expect_spectrum(sol.eigenvalues, {-1.0, 1.0}, 1e-15);
    EXPECT_NEAR(std::abs(sol.eigenvectors(1, 0)), 1.0, 1e-15);
    EXPECT_NEAR(std::abs(sol.eigenvectors(0, 1)), 1.0, 1e-15);
}

TEST(ExactSolve, ReconstructionAndUnitarity) {
    oracle::Random rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const auto h = random_sum(rng, 4, 10);
        const auto sol = thermvqe::exact_solve(h);
        const auto &v = sol.eigenvectors;
        EXPECT_TRUE(std::is_sorted(sol.eigenvalues.begin(), sol.eigenvalues.end()));
        Eigen::VectorXd e = Eigen::Map<const Eigen::VectorXd>(sol.eigenvalues.data(),
                                                             static_cast<Eigen::Index>(sol.dimension()));
        const oracle::Mat recon = v * e.cast<oracle::cd>().asDiagonal() * v.adjoint();
        EXPECT_LT(oracle::max_abs(recon - thermvqe::to_dense(h)), 1e-9);
        EXPECT_LT(oracle::max_abs(v.adjoint() * v - oracle::Mat::Identity(16, 16)), 1e-10);
    }
}

TEST(ExactSolve, DegenerateBlocks) {
    const auto sol = thermvqe::exact_solve(thermvqe::build_tfi(3, 1.0, 0.0));
    const auto blocks = thermvqe::degenerate_blocks(sol.eigenvalues);
    ASSERT_EQ(blocks.size(), 2U);
    EXPECT_EQ(blocks[0], std::make_pair(std::size_t{0}, std::size_t{2}));
    EXPECT_EQ(blocks[1], std::make_pair(std::size_t{2}, std::size_t{8}));
}

TEST(ExactThermal, Limits) {
    const auto h = thermvqe::build_tfi(3, 1.0, 1.0);
    EXPECT_NEAR(thermvqe::exact_thermal_average(h, h, 0.0), 0.0, 1e-12);
    EXPECT_NEAR(thermvqe::exact_thermal_average(h, h, 50.0), -4.0, 1e-8);
    for (const double beta : {0.0, 0.3, 7.0}) {
        EXPECT_DOUBLE_EQ(thermvqe::exact_thermal_average(h, PauliSum::identity(3), beta), 1.0);
    }
    EXPECT_THROW(thermvqe::exact_thermal_average(h, h, -1.0), thermvqe::ArgumentError);
}

TEST(ExactThermal, MatchesMatrixExponentialOracle) {
    oracle::Random rng(8);
    const auto h = thermvqe::build_tfi(3, 1.0, 1.0);
    const oracle::Mat hd = oracle::tfi(3, 1.0, 1.0, true);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<std::pair<double, std::string>> raw;
        const auto o = random_sum(rng, 3, 4, &raw);
        const oracle::Mat od = oracle::pauli_sum(raw);
        for (const double beta : {0.0, 0.5, 2.0, 5.0}) {
            EXPECT_NEAR(thermvqe::exact_thermal_average(h, o, beta), oracle::gibbs(hd, od, beta),
                        1e-10);
        }
    }
}

TEST(DiagCirc, AlreadyDiagonal) {
    const auto settings = thermvqe::diag_circ(sum_of(2, {{1.0, "ZI"}, {1.0, "IZ"}}));
    ASSERT_EQ(settings.size(), 1U);
    EXPECT_TRUE(settings[0].basis_change.empty());
    EXPECT_EQ(settings[0].diagonal.size(), 2U);
}

TEST(DiagCirc, SingleX) {
    const auto settings = thermvqe::diag_circ(sum_of(1, {{1.0, "X"}}));
    ASSERT_EQ(settings.size(), 1U);
    ASSERT_EQ(settings[0].basis_change.size(), 1U);
    EXPECT_EQ(settings[0].basis_change.gates()[0].kind(), thermvqe::GateKind::Hadamard);
    ASSERT_EQ(settings[0].diagonal.size(), 1U);
    EXPECT_EQ(settings[0].diagonal[0].z_mask, 1U);
}

TEST(DiagCirc, TfiHasTwoGroups) {
    const auto h = thermvqe::build_tfi(3, 1.0, 1.0);
    const auto settings = thermvqe::diag_circ(h);
    ASSERT_EQ(settings.size(), 2U);
    EXPECT_EQ(settings[0].basis_change.size(), 3U);
    EXPECT_TRUE(settings[1].basis_change.empty());
    EXPECT_LT(oracle::max_abs(reassemble(settings, 3) - oracle::tfi(3, 1.0, 1.0, true)), 1e-12);
}

TEST(DiagCirc, EigenvalueTableMatchesPointwise) {
    oracle::Random rng(9);
    const auto settings = thermvqe::diag_circ(random_sum(rng, 3, 6));
    for (const auto &m : settings) {
        const auto table = m.eigenvalue_table();
        ASSERT_EQ(table.size(), 8U);
        for (std::uint64_t b = 0; b < 8; ++b) {
            EXPECT_DOUBLE_EQ(table[b], m.eigenvalue(b));
        }
    }
}

// Properties -----------------------------------------------------------------

TEST(PauliProperty, DiagCircRoundTrip) {
    oracle::Random rng(201);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + rng.below(5);
        std::vector<std::pair<double, std::string>> raw;
        const auto h = random_sum(rng, n, 1 + rng.below(8), &raw);
        const auto settings = thermvqe::diag_circ(h);
        for (const auto &m : settings) {
            for (const auto &g : m.basis_change.gates()) {
                ASSERT_FALSE(g.control().has_value());
            }
        }
        ASSERT_LT(oracle::max_abs(reassemble(settings, n) - oracle::pauli_sum(raw)), 1e-12);
    }
}

TEST(PauliProperty, ExpvalMatchesDenseQuadraticForm) {
    oracle::Random rng(202);
    const auto h = random_sum(rng, 3, 8);
    const oracle::Mat hd = thermvqe::to_dense(h);
    for (int trial = 0; trial < 100; ++trial) {
        const oracle::Vec psi = rng.state(3);
        const double dense = (psi.adjoint() * hd * psi)(0, 0).real();
        EXPECT_NEAR(thermvqe::expval(oracle::from_vec(psi), h), dense, 1e-10);
    }
}

TEST(PauliProperty, ThermalEnergyNonIncreasing) {
    const auto h = thermvqe::build_tfi(3, 1.0, 1.0);
    EXPECT_NEAR(thermvqe::exact_thermal_average(h, h, 0.0), h.normalized_trace(), 1e-12);
    double previous = thermvqe::exact_thermal_average(h, h, 0.0);
    for (int i = 1; i <= 100; ++i) {
        const double e = thermvqe::exact_thermal_average(h, h, 0.05 * i);
        EXPECT_LE(e, previous + 1e-12);
        previous = e;
    }
}

} // namespace
