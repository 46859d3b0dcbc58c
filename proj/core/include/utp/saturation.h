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

#ifndef UTP_SATURATION_H
#define UTP_SATURATION_H

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "utp/operators.h"
#include "utp/testers.h"
#include "utp/uncertainty.h"

namespace utp {

/// Gap (in bits) below which a tester counts as achieving its bound.
inline constexpr double kSaturationGapBits = 1e-6;

enum class SaturationMethod { RowConstruction, NumericalSearch };

std::string_view method_name(SaturationMethod method);

struct SaturationReport {
    EntropyValue achieved;
    EntropyValue bound;
    /// achieved - bound, same units.
    double gap = 0;
    Tester tester;
    /// The split of `achieved` into H(T|V) and H(T|W).
    PairUncertainty split;
    bool trivial = false;
    SaturationMethod method = SaturationMethod::RowConstruction;
};

/// |chi_1> = cos(theta)|0> + e^{i phi} sin(theta)|1>,
/// |chi_2> = -sin(theta)|0> + e^{i phi} cos(theta)|1>, for theta, phi in [0, pi].
ProjectiveMeasurement su2_basis(double theta, double phi);

enum class Su2Pair {
    IdentitySigmaY,  ///< (I, sigma_y)
    IdentityOmega,   ///< (I, (I - i sigma_y)/sqrt(2))
};

/// The (V, W) operators of a pair.
std::pair<UnitaryOperator, UnitaryOperator> su2_pair_operators(Su2Pair pair);

struct Su2ClosedForm {
    double diagonal;      ///< |<chi_i|A|chi_i>|^2
    double off_diagonal;  ///< |<chi_i|A|chi_j>|^2, i != j
};

/// Closed-form squared overlaps in the basis su2_basis(theta, phi):
///   (I, sigma_y):  sin^2 2t sin^2 p  and  cos^4 t + sin^4 t + 2 cos^2 t sin^2 t cos 2p
///   (I, Omega):    (1 + sin^2 2t sin^2 p)/2  and  (1 - sin^2 2t sin^2 p)/2
/// The (I, sigma_y) off-diagonal term carries cos 2p; the squared cos^2 2p
/// variant is inconsistent with the (I, Omega) identity and with direct
/// matrix products, see docs/overlap_forms.md.
Su2ClosedForm su2_closed_form(Su2Pair pair, double theta, double phi);

struct SweepRecord {
    double theta;
    double phi;
    double max_overlap;
    double diag_overlap;
    double bound_bits;
};

struct Su2Sweep {
    std::vector<SweepRecord> records;
    /// Largest disagreement between matrix-product and closed-form overlaps.
    double max_closed_form_deviation = 0;
};

/// Overlaps on the grid theta_a = a pi/(n_theta - 1), phi_b = b pi/(n_phi - 1),
/// theta-outer. Values come from matrix products; closed forms are evaluated
/// alongside and their worst disagreement reported.
Su2Sweep su2_overlap_surface(Su2Pair pair, size_t n_theta, size_t n_phi);

/// For each basis vector |chi_i> (smallest i first), the input V^dagger|chi_i>
/// makes H(T|V) = 0 and H(T|W) the entropy of column i of |<chi_j|W V^dagger|chi_i>|^2.
/// That tester saturates the bound exactly when the column is uniform on its
/// support and its value equals the global maximal overlap. Returns the first
/// such tester, or nullopt.
std::optional<SaturationReport> saturating_tester_by_construction(
    const ProjectiveMeasurement &m, const UnitaryOperator &v, const UnitaryOperator &w, double tol = kDefaultTol);

struct SearchOptions {
    size_t budget = 5000;
    size_t restarts = 20;
    uint64_t seed = 0;
    size_t threads = 0;
};

/// Minimises the pair uncertainty over pure inputs, parameterised by d - 1
/// hyperspherical magnitude angles and d - 1 relative phases, with
/// multi-start Nelder-Mead. Returns the best tester found (budget exhaustion
/// is not an error). When W V^dagger is proportional to I the search is
/// skipped and the trivial classification is returned.
SaturationReport search_min_uncertainty(
    const ProjectiveMeasurement &m, const UnitaryOperator &v, const UnitaryOperator &w, const SearchOptions &options = {});

/// Input state for the angle parameterisation used by search_min_uncertainty.
ComplexVector state_from_angles(std::span<const double> angles, size_t d);

struct PairWitness {
    size_t m = 0;  ///< index into the second basis (W_m)
    size_t n = 0;  ///< index into the first basis (V_n)
    bool saturated = false;
    /// max_ij | overlap_ij - 1/D | in the best basis found.
    double flatness_deviation = 0;
    /// |Tr(W_m V_n^dagger)|.
    double trace_modulus = 0;
    std::optional<SaturationReport> report;
};

struct MuubCertificate {
    bool certified = false;
    /// When certified, every |Tr(W_m V_n^dagger)| equals sqrt(d) (D = d) or
    /// 1 (D = d^2) within tol.
    bool trace_consistent = false;
    /// Row-major over (m, n).
    std::vector<PairWitness> pairs;
};

struct CertifyOptions {
    double tol = 1e-9;
    SearchOptions search{4000, 8, 0, 0};
};

/// Certifies mutual unbiasedness of two unitary bases through saturation of
/// the maximal bound by every pair (W_m, V_n).
///
/// D = d: searches measurement bases (columns of exp(iH), H a traceless
/// Hermitian combination of d^2 - 1 generators) where every squared overlap
/// of W_m V_n^dagger is 1/d.
/// D = d^2: searches MES measurements {(G X^a Z^b (x) I)|Phi>} over G in U(d)
/// where every squared overlap is 1/d^2.
/// Each search is polished with Gauss-Newton steps. A failed search means
/// "not found within budget", not nonexistence.
MuubCertificate muub_certify_by_saturation(
    const UnitaryBasis &b1, const UnitaryBasis &b2, const CertifyOptions &options = {});

struct ZeroBoundWitness {
    bool found = false;
    std::optional<Tester> tester;
    bool trivial = false;
    /// Pair uncertainty of the returned tester, in bits.
    double achieved_bits = 0;
};

/// When 0 lies in the eigenvalue hull of V^dagger W, builds |chi> as a convex
/// mixture (of at most three eigenvectors) with <chi|V^dagger W|chi> = 0,
/// and the tester with input |chi> measuring in a basis that contains V|chi>
/// and W|chi>, so both outcomes are deterministic.
/// W V^dagger proportional to I is reported as the trivial classification.
ZeroBoundWitness zero_bound_witness(const UnitaryOperator &v, const UnitaryOperator &w, double tol = kDefaultTol);

}  // namespace utp

#endif
