// Copyright 2026 The utp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include "support/generators.h"
#include "utp/testers.h"

namespace utp {
namespace {

const Complex I1{0, 1};

double vector_phase_distance(const ComplexVector &a, const ComplexVector &b) {
    return 1 - std::abs(inner(a, b));
}

Tester projective(ComplexVector input, ProjectiveMeasurement m) {
    return Tester(ProjectiveTester{PureState(std::move(input)), std::move(m)});
}

TEST(PureState, RejectsUnnormalised) {
    EXPECT_THROW(PureState(ComplexVector{1, 1}), std::invalid_argument);
}

TEST(ProjectiveMeasurement, RejectsNonOrthonormal) {
    std::vector<PureState> basis{PureState(ComplexVector{1, 0}), PureState(ComplexVector{1, 0})};
    EXPECT_THROW(ProjectiveMeasurement{basis}, std::invalid_argument);
    std::vector<PureState> short_basis{PureState(ComplexVector{1, 0})};
    EXPECT_THROW(ProjectiveMeasurement{short_basis}, std::invalid_argument);
}

TEST(Povm, ValidatesElements) {
    ComplexMatrix half = Complex{0.5, 0} * ComplexMatrix::identity(2);
    EXPECT_NO_THROW(Povm({half, half}));
    EXPECT_THROW(Povm({half, half, half}), std::invalid_argument);
    ComplexMatrix neg{{1.5, 0}, {0, -0.5}};
    ComplexMatrix rest{{-0.5, 0}, {0, 1.5}};
    EXPECT_THROW(Povm({neg, rest}), std::invalid_argument);
}

TEST(DensityMatrix, ValidatesTraceAndPositivity) {
    EXPECT_THROW(DensityMatrix(ComplexMatrix::identity(2)), std::invalid_argument);
    ComplexMatrix neg{{1.5, 0}, {0, -0.5}};
    EXPECT_THROW(DensityMatrix{neg}, std::invalid_argument);
}

TEST(OutcomeDistribution, ProjectiveExamples) {
    auto comp = ProjectiveMeasurement::computational(2);
    Tester t = projective(ComplexVector{1, 0}, comp);
    auto p = outcome_distribution(t, pauli(Pauli::I));
    EXPECT_NEAR(p[0], 1, 1e-15);
    EXPECT_NEAR(p[1], 0, 1e-15);
    p = outcome_distribution(t, pauli(Pauli::X));
    EXPECT_NEAR(p[0], 0, 1e-15);
    EXPECT_NEAR(p[1], 1, 1e-15);
    p = outcome_distribution(t, omega(-1));
    EXPECT_NEAR(p[0], 0.5, 1e-15);
    EXPECT_NEAR(p[1], 0.5, 1e-15);
}

TEST(OutcomeDistribution, MesInputInBellBasis) {
    Tester t(MesTester{bell_basis(2)});
    auto p = outcome_distribution(t, pauli(Pauli::I));
    ASSERT_EQ(p.size(), 4u);
    EXPECT_NEAR(p[0], 1, 1e-15);
    for (size_t k = 1; k < 4; k++) {
        EXPECT_NEAR(p[k], 0, 1e-15);
    }
}

TEST(OutcomeDistribution, RejectsDimensionMismatch) {
    Tester t = projective(ComplexVector{1, 0}, ProjectiveMeasurement::computational(2));
    EXPECT_THROW(outcome_distribution(t, UnitaryOperator::identity(3)), std::invalid_argument);
    EXPECT_THROW(projective(ComplexVector{1, 0, 0}, ProjectiveMeasurement::computational(2)), std::invalid_argument);
}

TEST(OutcomeDistribution, PropertyNormalised) {
    SplitMix64 rng(99);
    for (int trial = 0; trial < 1000; trial++) {
        size_t d = 2 + trial % 3;
        Tester t = projective(testing::random_vector(d, rng), testing::random_basis(d, rng));
        auto p = outcome_distribution(t, testing::random_unitary(d, rng));
        double s = 0;
        for (double x : p.probs()) {
            EXPECT_GE(x, 0);
            s += x;
        }
        EXPECT_NEAR(s, 1, 1e-9);
    }
}

TEST(OutcomeDistribution, PropertyProjectiveAgreesWithPovm) {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 200; trial++) {
        size_t d = 2 + trial % 3;
        PureState psi = testing::random_state(d, rng);
        ProjectiveMeasurement m = testing::random_basis(d, rng);
        UnitaryOperator u = testing::random_unitary(d, rng);
        auto a = outcome_distribution(Tester(ProjectiveTester{psi, m}), u);
        auto b = outcome_distribution(Tester(PovmTester{DensityMatrix::from_pure(psi), Povm::from_projective(m)}), u);
        for (size_t k = 0; k < d; k++) {
            EXPECT_NEAR(a[k], b[k], 1e-12);
        }
    }
}

TEST(MesState, Definition) {
    PureState phi = mes_state(2);
    const double s = 1 / std::sqrt(2.0);
    EXPECT_LT(max_abs_diff(phi.amplitudes(), ComplexVector{s, 0, 0, s}), 1e-15);
    for (size_t d = 2; d <= 4; d++) {
        PureState p = mes_state(d);
        EXPECT_NEAR(norm(p.amplitudes()), 1, 1e-15);
        ComplexMatrix mixed = Complex{1 / double(d), 0} * ComplexMatrix::identity(d);
        EXPECT_LT(max_abs_diff(reduced_state(p, d, 0), mixed), 1e-14);
        EXPECT_LT(max_abs_diff(reduced_state(p, d, 1), mixed), 1e-14);
    }
}

TEST(BellBasis, TwoQubitBellStates) {
    MesMeasurement b = bell_basis(2);
    const double s = 1 / std::sqrt(2.0);
    // Index a*2 + b: X^a Z^b (x) I on |Phi+>.
    EXPECT_LT(max_abs_diff(b.vector(0), ComplexVector{s, 0, 0, s}), 1e-15);
    EXPECT_LT(max_abs_diff(b.vector(1), ComplexVector{s, 0, 0, -s}), 1e-15);
    EXPECT_LT(max_abs_diff(b.vector(2), ComplexVector{0, s, s, 0}), 1e-15);
    EXPECT_LT(max_abs_diff(b.vector(3), ComplexVector{0, -s, s, 0}), 1e-15);
}

TEST(BellBasis, OrthonormalAndMaximallyEntangled) {
    for (size_t d = 2; d <= 4; d++) {
        MesMeasurement b = bell_basis(d);
        for (size_t i = 0; i < d * d; i++) {
            for (size_t j = 0; j < d * d; j++) {
                EXPECT_NEAR(std::abs(inner(b.vector(i), b.vector(j))), i == j ? 1.0 : 0.0, 1e-12);
            }
            EXPECT_TRUE(is_unitary(b.local_unitary(i), 1e-12));
        }
    }
}

TEST(MesMeasurement, RejectsProductStates) {
    std::vector<PureState> basis;
    for (size_t k = 0; k < 4; k++) {
        basis.emplace_back(ComplexVector::basis(4, k));
    }
    EXPECT_THROW(MesMeasurement(2, basis), std::invalid_argument);
}

TEST(AbsorbMesInput, MatchesDirectComputation) {
    SplitMix64 rng(5);
    for (int trial = 0; trial < 20; trial++) {
        size_t d = 2 + trial % 2;
        UnitaryOperator c = testing::random_unitary(d, rng);
        UnitaryOperator u = testing::random_unitary(d, rng);
        MesMeasurement m = bell_basis(d);
        ComplexMatrix id = ComplexMatrix::identity(d);
        ComplexVector input = kron(c.matrix(), id) * mes_state(d).amplitudes();
        ComplexVector out = kron(u.matrix(), id) * input;
        auto p = outcome_distribution(Tester(MesTester{absorb_mes_input(m, c)}), u);
        for (size_t i = 0; i < d * d; i++) {
            EXPECT_NEAR(p[i], std::norm(inner(m.vector(i), out)), 1e-12);
        }
    }
}

TEST(TrivialTester, SigmaYEigenbasis) {
    Tester t = trivial_tester(pauli(Pauli::I), pauli(Pauli::Y));
    const auto &m = t.projective().measurement;
    const double s = 1 / std::sqrt(2.0);
    EXPECT_LT(vector_phase_distance(m.vector(0), ComplexVector{s, I1 * s}), 1e-12);
    EXPECT_LT(vector_phase_distance(m.vector(1), ComplexVector{s, -I1 * s}), 1e-12);
    EXPECT_TRUE(is_trivial_measurement(m, pauli(Pauli::I), pauli(Pauli::Y)));
}

TEST(TrivialTester, ComputationalWhenDiagonal) {
    for (auto w : {pauli(Pauli::I), pauli(Pauli::Z)}) {
        Tester t = trivial_tester(pauli(Pauli::I), w);
        const auto &m = t.projective().measurement;
        EXPECT_LT(vector_phase_distance(m.vector(0), ComplexVector{1, 0}), 1e-12);
        EXPECT_LT(vector_phase_distance(m.vector(1), ComplexVector{0, 1}), 1e-12);
    }
}

TEST(TrivialTester, PropertyDeterministicOutcomes) {
    SplitMix64 rng(17);
    for (int trial = 0; trial < 200; trial++) {
        size_t d = 2 + trial % 3;
        auto v = testing::random_unitary(d, rng);
        auto w = testing::random_unitary(d, rng);
        Tester t = trivial_tester(v, w);
        EXPECT_TRUE(is_trivial_measurement(t.projective().measurement, v, w, 1e-8));
        for (const auto &u : {v, w}) {
            auto p = outcome_distribution(t, u);
            EXPECT_NEAR(p[p.mode()], 1, 1e-9);
        }
    }
}

TEST(IsTrivialMeasurement, Examples) {
    EXPECT_FALSE(is_trivial_measurement(ProjectiveMeasurement::computational(2), pauli(Pauli::I), pauli(Pauli::Y)));
    SplitMix64 rng(1);
    auto v = testing::random_unitary(3, rng);
    UnitaryOperator w(std::polar(1.0, 0.4) * v.matrix());
    EXPECT_TRUE(is_trivial_measurement(testing::random_basis(3, rng), v, w));
}

TEST(MesNoTrivialTester, PropertyDiagonalOverlapIsTraceOverD) {
    SplitMix64 rng(606);
    for (int trial = 0; trial < 100; trial++) {
        size_t d = 2 + trial % 2;
        auto v = testing::random_unitary(d, rng);
        auto w = testing::random_unitary(d, rng);
        ComplexMatrix a = (w * v.adjoint()).matrix();
        MesMeasurement b = bell_basis(d);
        ComplexMatrix lifted = kron(a, ComplexMatrix::identity(d));
        double expected = std::abs(trace(a)) / double(d);
        for (size_t i = 0; i < d * d; i++) {
            double diag = std::abs(inner(b.vector(i), lifted * b.vector(i)));
            EXPECT_NEAR(diag, expected, 1e-9);
            EXPECT_LT(diag, 1 - 1e-6);
        }
    }
}

}  // namespace
}  // namespace utp
