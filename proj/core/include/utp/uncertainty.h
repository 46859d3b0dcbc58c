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

#ifndef UTP_UNCERTAINTY_H
#define UTP_UNCERTAINTY_H

#include <vector>

#include "utp/distribution.h"
#include "utp/operators.h"
#include "utp/testers.h"

namespace utp {

/// Probabilities below this are exact zeros for entropy purposes.
inline constexpr double kZeroProbability = 1e-15;

/// -sum p_i log p_i, with 0 log 0 = 0.
EntropyValue shannon_entropy(const OutcomeDistribution &p, LogBase base = LogBase::Two);

struct PairUncertainty {
    EntropyValue v;
    EntropyValue w;

    EntropyValue total() const {
        return {v.value + w.value, v.base};
    }
};

/// H(T|V) + H(T|W).
EntropyValue pair_uncertainty(
    const Tester &t, const UnitaryOperator &v, const UnitaryOperator &w, LogBase base = LogBase::Two);
PairUncertainty pair_uncertainty_split(
    const Tester &t, const UnitaryOperator &v, const UnitaryOperator &w, LogBase base = LogBase::Two);

/// Dense n x n table of squared overlaps.
struct OverlapMatrix {
    size_t n = 0;
    std::vector<double> values;

    double operator()(size_t i, size_t j) const {
        return values[i * n + j];
    }
};

/// |<chi_i| W V^dagger |chi_j>|^2.
OverlapMatrix overlap_matrix(const ProjectiveMeasurement &m, const UnitaryOperator &v, const UnitaryOperator &w);
/// |<nu_i| (W V^dagger (x) I) |nu_j>|^2.
OverlapMatrix overlap_matrix(const MesMeasurement &m, const UnitaryOperator &v, const UnitaryOperator &w);

struct BoundResult {
    EntropyValue value;
    /// The maximised quantity: a squared overlap, or for POVMs the squared
    /// operator norm, so that value = -log(max_overlap) in every case.
    double max_overlap = 0;
    size_t i = 0;
    size_t j = 0;
};

/// Entropic lower bound from the maximal entry of an overlap table. The
/// arg-max is the first row-major entry exceeding all earlier ones by more
/// than 1e-12.
BoundResult bound_from_overlaps(const OverlapMatrix &overlaps, LogBase base = LogBase::Two);

/// -log max_ij |<chi_i|W V^dagger|chi_j>|^2.
BoundResult projective_bound(
    const ProjectiveMeasurement &m, const UnitaryOperator &v, const UnitaryOperator &w, LogBase base = LogBase::Two);

/// -log max_ij |<nu_i|(W V^dagger (x) I)|nu_j>|^2.
BoundResult mes_bound(
    const MesMeasurement &m, const UnitaryOperator &v, const UnitaryOperator &w, LogBase base = LogBase::Two);

/// -2 log max_ij || sqrt(A M_i A^dagger) sqrt(B M_j B^dagger) || for the
/// rotated POVM pair {A M_i A^dagger}, {B M_j B^dagger}.
BoundResult povm_bound_rotated(
    const Povm &m, const UnitaryOperator &a, const UnitaryOperator &b, LogBase base = LogBase::Two);

/// Entropic bound for a POVM tester probing V or W.
///
/// Outcome probabilities are Tr[M_k U rho U^dagger] = Tr[(U^dagger M_k U) rho],
/// so the measured POVMs are {V^dagger M_i V} and {W^dagger M_j W}. This is
/// povm_bound_rotated(m, V^dagger, W^dagger); for rank-one projective POVMs it
/// coincides with projective_bound.
BoundResult povm_bound(
    const Povm &m, const UnitaryOperator &v, const UnitaryOperator &w, LogBase base = LogBase::Two);

/// Variance-style spread sqrt(1 - |<psi|U|psi>|^2).
double variance_uncertainty(const UnitaryOperator &u, const PureState &psi);

}  // namespace utp

#endif
