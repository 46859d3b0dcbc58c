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

#include <numbers>

#include "support/convert.h"
#include "support/generators.h"
#include "support/oracles.h"
#include "utp/saturation.h"

namespace utp {
namespace {

using std::numbers::pi;
const Complex I1{0, 1};

/// Squared overlaps for (I, A) in the su2 basis, by raw 2x2 arithmetic.
std::array<double, 4> oracle_su2_overlaps(double theta, double phi, const oracle::Mat &a) {
    oracle::C e = std::polar(1.0, phi);
    oracle::Vec c1{std::cos(theta), e * std::sin(theta)};
    oracle::Vec c2{-std::sin(theta), e * std::cos(theta)};
    return {
        std::norm(oracle::sandwich(c1, a, c1)),
        std::norm(oracle::sandwich(c1, a, c2)),
        std::norm(oracle::sandwich(c2, a, c1)),
        std::norm(oracle::sandwich(c2, a, c2)),
    };
}

const oracle::Mat kSigmaY{{0, {0, -1}}, {{0, 1}, 0}};
const oracle::Mat kOmega{{M_SQRT1_2, -M_SQRT1_2}, {M_SQRT1_2, M_SQRT1_2}};

const SweepRecord &at(const Su2Sweep &s, size_t n, size_t a, size_t b) {
    return s.records[a * n + b];
}

TEST(Su2Basis, Examples) {
    auto m = su2_basis(0, 1.3);
    EXPECT_LT(max_abs_diff(m.vector(0), ComplexVector{1, 0}), 1e-15);
    EXPECT_LT(1 - std::abs(inner(m.vector(1), ComplexVector{0, 1})), 1e-15);
    auto q = su2_basis(pi / 4, pi / 2);
    const double s = 1 / std::sqrt(2.0);
    EXPECT_LT(max_abs_diff(q.vector(0), ComplexVector{s, I1 * s}), 1e-15);
    EXPECT_LT(max_abs_diff(q.vector(1), ComplexVector{-s, I1 * s}), 1e-15);
}

TEST(Su2Basis, RejectsOutOfRange) {
    EXPECT_THROW(su2_basis(-0.1, 0), std::invalid_argument);
    EXPECT_THROW(su2_basis(0, pi + 0.1), std::invalid_argument);
    EXPECT_NO_THROW(su2_basis(pi, pi));
}

TEST(Su2Basis, PropertyOrthonormal) {
    SplitMix64 rng(2);
    for (int k = 0; k < 100; k++) {
        auto m = su2_basis(pi * rng.uniform(), pi * rng.uniform());
        EXPECT_LT(std::abs(inner(m.vector(0), m.vector(1))), 1e-12);
    }
}

TEST(Su2Sweep, SigmaYLandmarks) {
    const size_t n = 101;
    auto s = su2_overlap_surface(Su2Pair::IdentitySigmaY, n, n);
    ASSERT_EQ(s.records.size(), n * n);
    // Grid index 25 is pi/4, 50 is pi/2, 12.5 is not on the grid.
    EXPECT_NEAR(at(s, n, 25, 50).max_overlap, 1, 1e-12);
    for (size_t b = 0; b < n; b++) {
        EXPECT_NEAR(at(s, n, 0, b).max_overlap, 1, 1e-12);
        EXPECT_NEAR(at(s, n, 50, b).max_overlap, 1, 1e-12);
        EXPECT_NEAR(at(s, n, 100, b).max_overlap, 1, 1e-12);
    }
    EXPECT_NEAR(at(s, n, 25, 25).max_overlap, 0.5, 1e-12);
}

TEST(Su2Sweep, OmegaMinimum) {
    const size_t n = 101;
    auto s = su2_overlap_surface(Su2Pair::IdentityOmega, n, n);
    EXPECT_NEAR(at(s, n, 25, 0).max_overlap, 0.5, 1e-12);
    double lowest = 1;
    for (const auto &r : s.records) {
        lowest = std::min(lowest, r.max_overlap);
    }
    EXPECT_NEAR(lowest, 0.5, 1e-12);
}

TEST(Su2Sweep, PropertyClosedFormsMatchMatrixProducts) {
    for (auto pair : {Su2Pair::IdentitySigmaY, Su2Pair::IdentityOmega}) {
        auto s = su2_overlap_surface(pair, 101, 101);
        EXPECT_LT(s.max_closed_form_deviation, 1e-12);
        const oracle::Mat &a = pair == Su2Pair::IdentitySigmaY ? kSigmaY : kOmega;
        for (const auto &r : s.records) {
            auto o = oracle_su2_overlaps(r.theta, r.phi, a);
            EXPECT_NEAR(r.max_overlap, *std::max_element(o.begin(), o.end()), 1e-12);
            EXPECT_NEAR(r.diag_overlap, o[0], 1e-12);
            EXPECT_NEAR(r.bound_bits, -std::log2(r.max_overlap), 1e-12);
            EXPECT_GE(r.max_overlap, r.diag_overlap - 1e-12);
        }
    }
}

TEST(Su2Sweep, PropertyOmegaIdentityExposesSquaredCosineVariant) {
    // (1 - sin^2 2t sin^2 p)/2 equals half the sigma_y off-diagonal form with
    // cos 2p, and differs from the cos^2 2p variant away from special angles.
    double worst = 0;
    double variant_gap = 0;
    for (size_t a = 0; a <= 100; a++) {
        for (size_t b = 0; b <= 100; b++) {
            double t = pi * a / 100;
            double p = pi * b / 100;
            double c2 = std::pow(std::cos(t), 2);
            double s2 = std::pow(std::sin(t), 2);
            double lhs = (1 - std::pow(std::sin(2 * t), 2) * std::pow(std::sin(p), 2)) / 2;
            double good = (c2 * c2 + s2 * s2 + 2 * c2 * s2 * std::cos(2 * p)) / 2;
            double variant = (c2 * c2 + s2 * s2 + 2 * c2 * s2 * std::pow(std::cos(2 * p), 2)) / 2;
            worst = std::max(worst, std::abs(lhs - good));
            variant_gap = std::max(variant_gap, std::abs(lhs - variant));
            auto cf = su2_closed_form(Su2Pair::IdentityOmega, t, p);
            EXPECT_NEAR(cf.off_diagonal, lhs, 1e-12);
        }
    }
    EXPECT_LT(worst, 1e-12);
    EXPECT_GT(variant_gap, 0.1);
}

TEST(Su2Sweep, RejectsTinyGrid) {
    EXPECT_THROW(su2_overlap_surface(Su2Pair::IdentityOmega, 1, 5), std::invalid_argument);
}

TEST(Construction, EquatorBasisWithOmega) {
    auto r = saturating_tester_by_construction(su2_basis(pi / 4, 0), pauli(Pauli::I), omega(-1));
    ASSERT_TRUE(r.has_value());
    EXPECT_NEAR(r->achieved.value, 1, 1e-12);
    EXPECT_NEAR(r->bound.value, 1, 1e-12);
    EXPECT_NEAR(r->split.v.value, 0, 1e-12);
    EXPECT_NEAR(r->split.w.value, 1, 1e-12);
    EXPECT_FALSE(r->trivial);
    EXPECT_EQ(r->method, SaturationMethod::RowConstruction);
}

TEST(Construction, ComputationalWithSigmaX) {
    auto r = saturating_tester_by_construction(ProjectiveMeasurement::computational(2), pauli(Pauli::I), pauli(Pauli::X));
    ASSERT_TRUE(r.has_value());
    EXPECT_NEAR(r->achieved.value, 0, 1e-15);
    EXPECT_NEAR(r->bound.value, 0, 1e-15);
}

TEST(Construction, NonFlatRowsNotFound) {
    // W V^dagger with every column distributed as (0.9, 0.1).
    const double a = std::sqrt(0.9);
    const double b = std::sqrt(0.1);
    UnitaryOperator w(ComplexMatrix{{a, -b}, {b, a}});
    auto r = saturating_tester_by_construction(ProjectiveMeasurement::computational(2), pauli(Pauli::I), w);
    EXPECT_FALSE(r.has_value());
}

TEST(Construction, SmallestIndexWins) {
    auto r = saturating_tester_by_construction(ProjectiveMeasurement::computational(3), UnitaryOperator::identity(3), clock_shift_pair(3).p);
    ASSERT_TRUE(r.has_value());
    EXPECT_LT(max_abs_diff(r->tester.projective().input.amplitudes(), ComplexVector::basis(3, 0)), 1e-15);
}

TEST(Search, ComputationalWithSigmaX) {
    auto r = search_min_uncertainty(ProjectiveMeasurement::computational(2), pauli(Pauli::I), pauli(Pauli::X), {500, 5, 1, 1});
    EXPECT_NEAR(r.achieved.value, 0, 1e-9);
}

TEST(Search, EquatorWithOmega) {
    auto r = search_min_uncertainty(su2_basis(pi / 4, 0), pauli(Pauli::I), omega(-1), {2000, 20, 0, 0});
    EXPECT_NEAR(r.achieved.value, 1, 1e-4);
    EXPECT_EQ(r.method, SaturationMethod::NumericalSearch);
}

TEST(Search, DegenerateReturnsTrivialImmediately) {
    SplitMix64 rng(3);
    auto v = testing::random_unitary(3, rng);
    UnitaryOperator w(std::polar(1.0, 1.1) * v.matrix());
    auto r = search_min_uncertainty(testing::random_basis(3, rng), v, w);
    EXPECT_TRUE(r.trivial);
    EXPECT_NEAR(r.achieved.value, 0, 1e-9);
    EXPECT_NEAR(r.bound.value, 0, 1e-9);
}

TEST(Search, RejectsZeroBudget) {
    EXPECT_THROW(search_min_uncertainty(ProjectiveMeasurement::computational(2), pauli(Pauli::I), pauli(Pauli::X), {0, 1, 0, 0}),
                 std::invalid_argument);
}

TEST(Search, PropertyNeverBeatsBoundAndTrivialFlagAgrees) {
    SplitMix64 rng(55);
    for (int trial = 0; trial < 40; trial++) {
        size_t d = 2 + trial % 3;
        auto m = testing::random_basis(d, rng);
        auto v = testing::random_unitary(d, rng);
        auto w = testing::random_unitary(d, rng);
        auto r = search_min_uncertainty(m, v, w, {300, 3, uint64_t(trial), 1});
        EXPECT_GE(r.gap, -1e-9);
        EXPECT_EQ(r.trivial, is_trivial_measurement(m, v, w));
    }
}

TEST(Search, ResultIndependentOfThreadCount) {
    SplitMix64 rng(66);
    auto m = testing::random_basis(3, rng);
    auto v = testing::random_unitary(3, rng);
    auto w = testing::random_unitary(3, rng);
    auto one = search_min_uncertainty(m, v, w, {1000, 8, 9, 1});
    auto many = search_min_uncertainty(m, v, w, {1000, 8, 9, 4});
    EXPECT_EQ(one.achieved.value, many.achieved.value);
    EXPECT_EQ(one.tester.projective().input.amplitudes(), many.tester.projective().input.amplitudes());
}

TEST(StateFromAngles, UnitNorm) {
    SplitMix64 rng(1);
    for (size_t d = 1; d <= 5; d++) {
        std::vector<double> x(2 * d - 2);
        for (auto &a : x) {
            a = 10 * rng.normal();
        }
        EXPECT_NEAR(norm(state_from_angles(x, d)), 1, 1e-14);
    }
    std::vector<double> wrong(3);
    EXPECT_THROW(state_from_angles(wrong, 3), std::invalid_argument);
}

std::vector<UnitaryOperator> quaternion_basis() {
    const int signs[4][3] = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
    std::vector<UnitaryOperator> out;
    for (const auto &s : signs) {
        ComplexMatrix m = ComplexMatrix::identity(2) + I1 * double(s[0]) * pauli(Pauli::X).matrix() +
                          I1 * double(s[1]) * pauli(Pauli::Y).matrix() + I1 * double(s[2]) * pauli(Pauli::Z).matrix();
        out.emplace_back(Complex{0.5, 0} * m);
    }
    return out;
}

TEST(MuubCertify, SigmaYAgainstOmegas) {
    UnitaryBasis b1({pauli(Pauli::I), pauli(Pauli::Y)});
    UnitaryBasis b2({omega(-1), omega(1)});
    auto c = muub_certify_by_saturation(b1, b2);
    EXPECT_TRUE(c.certified);
    EXPECT_TRUE(c.trace_consistent);
    ASSERT_EQ(c.pairs.size(), 4u);
    for (const auto &p : c.pairs) {
        EXPECT_NEAR(p.trace_modulus, std::sqrt(2.0), 1e-9);
        ASSERT_TRUE(p.report.has_value());
        EXPECT_NEAR(p.report->achieved.value, 1, 1e-6);
    }
    auto check = is_muub(b1, b2);
    EXPECT_TRUE(check.flag);
    EXPECT_NEAR(check.kappa, 2, 1e-9);
}

TEST(MuubCertify, PauliAgainstQuaternions) {
    UnitaryBasis paulis({pauli(Pauli::I), pauli(Pauli::X), pauli(Pauli::Y), pauli(Pauli::Z)});
    UnitaryBasis quats(quaternion_basis());
    auto c = muub_certify_by_saturation(paulis, quats);
    EXPECT_TRUE(c.certified);
    EXPECT_TRUE(c.trace_consistent);
    ASSERT_EQ(c.pairs.size(), 16u);
    for (const auto &p : c.pairs) {
        EXPECT_NEAR(p.trace_modulus, 1, 1e-9);
        ASSERT_TRUE(p.report.has_value());
        EXPECT_EQ(p.report->tester.kind(), TesterKind::Mes);
        EXPECT_NEAR(p.report->achieved.value, 2, 1e-6);
    }
    EXPECT_TRUE(is_muub(paulis, quats).flag);
}

TEST(MuubCertify, IdenticalBasesFailOnDiagonal) {
    UnitaryBasis b({pauli(Pauli::I), pauli(Pauli::Y)});
    auto c = muub_certify_by_saturation(b, b);
    EXPECT_FALSE(c.certified);
    for (const auto &p : c.pairs) {
        if (p.m == p.n) {
            EXPECT_FALSE(p.saturated);
        } else {
            EXPECT_TRUE(p.saturated);
        }
    }
}

TEST(MuubCertify, PropertyCertifiedImpliesIsMuub) {
    // Random conjugates L B R of the two certified examples stay MUUBs.
    SplitMix64 rng(404);
    UnitaryBasis b1({pauli(Pauli::I), pauli(Pauli::Y)});
    UnitaryBasis b2({omega(-1), omega(1)});
    for (int trial = 0; trial < 5; trial++) {
        auto l = testing::random_unitary(2, rng);
        auto r = testing::random_unitary(2, rng);
        auto move = [&](const UnitaryBasis &b) {
            std::vector<UnitaryOperator> out;
            for (const auto &e : b.elements()) {
                out.push_back(l * e * r);
            }
            return UnitaryBasis(out, 1e-8);
        };
        UnitaryBasis c1 = move(b1);
        UnitaryBasis c2 = move(b2);
        CertifyOptions opts;
        opts.search.seed = uint64_t(trial);
        auto cert = muub_certify_by_saturation(c1, c2, opts);
        EXPECT_TRUE(cert.certified) << "trial " << trial;
        if (cert.certified) {
            auto check = is_muub(c1, c2);
            EXPECT_TRUE(check.flag);
            EXPECT_NEAR(check.kappa, 2, 1e-9);
        }
    }
}

TEST(ZeroBoundWitness, SigmaXSigmaZ) {
    auto z = zero_bound_witness(pauli(Pauli::X), pauli(Pauli::Z));
    ASSERT_TRUE(z.found);
    EXPECT_FALSE(z.trivial);
    EXPECT_NEAR(z.achieved_bits, 0, 1e-9);
    EXPECT_NEAR(pair_uncertainty(*z.tester, pauli(Pauli::X), pauli(Pauli::Z)).value, 0, 1e-9);
}

TEST(ZeroBoundWitness, ClockShift) {
    auto [p, q] = clock_shift_pair(3);
    auto z = zero_bound_witness(p, q);
    ASSERT_TRUE(z.found);
    EXPECT_FALSE(z.trivial);
    EXPECT_NEAR(z.achieved_bits, 0, 1e-9);
}

TEST(ZeroBoundWitness, OmegaNotFound) {
    EXPECT_FALSE(zero_bound_witness(pauli(Pauli::I), omega(-1)).found);
}

TEST(ZeroBoundWitness, DegenerateIsTrivial) {
    auto z = zero_bound_witness(pauli(Pauli::Y), pauli(Pauli::Y));
    EXPECT_FALSE(z.found);
    EXPECT_TRUE(z.trivial);
    ASSERT_TRUE(z.tester.has_value());
    EXPECT_NEAR(z.achieved_bits, 0, 1e-12);
}

TEST(ZeroBoundWitness, PropertyFoundIffDistinguishable) {
    SplitMix64 rng(500);
    for (int trial = 0; trial < 500; trial++) {
        size_t d = 2 + trial % 2;
        auto v = testing::random_unitary(d, rng);
        auto w = testing::random_unitary(d, rng);
        auto z = zero_bound_witness(v, w);
        ASSERT_EQ(z.found, is_perfectly_distinguishable(v, w)) << "trial " << trial;
        if (z.found) {
            EXPECT_LE(z.achieved_bits, 1e-8);
        }
    }
}

TEST(ZeroBoundWitness, PropertyOrthogonalPairsGetNonTrivialWitness) {
    SplitMix64 rng(501);
    for (int trial = 0; trial < 50; trial++) {
        size_t d = 2 + trial % 3;
        auto v = testing::random_unitary(d, rng);
        UnitaryOperator w = v * testing::random_traceless_unitary(d, rng);
        EXPECT_LT(std::abs(hs_inner(v, w)), 1e-9);
        auto z = zero_bound_witness(v, w);
        ASSERT_TRUE(z.found);
        EXPECT_FALSE(z.trivial);
        EXPECT_LE(pair_uncertainty(*z.tester, v, w).value, 1e-8);
    }
}

TEST(TrivialTesterProperty, ZeroUncertaintyAndFlag) {
    SplitMix64 rng(502);
    for (int trial = 0; trial < 100; trial++) {
        size_t d = 2 + trial % 3;
        auto v = testing::random_unitary(d, rng);
        auto w = testing::random_unitary(d, rng);
        Tester t = trivial_tester(v, w);
        EXPECT_NEAR(pair_uncertainty(t, v, w).value, 0, 1e-8);
        EXPECT_TRUE(is_trivial_measurement(t.projective().measurement, v, w, 1e-8));
    }
}

}  // namespace
}  // namespace utp
