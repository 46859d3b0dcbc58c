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

#ifndef UTP_OPERATORS_H
#define UTP_OPERATORS_H

#include <cstdint>
#include <span>
#include <vector>

#include "utp/linalg.h"

namespace utp {

/// A d x d matrix with U^dagger U = I (within the construction tolerance).
/// Any element of U(d) is accepted; the determinant is not constrained.
class UnitaryOperator {
   public:
    /// Throws std::invalid_argument naming the unitarity invariant on failure.
    explicit UnitaryOperator(ComplexMatrix matrix, double tol = kDefaultTol);

    static UnitaryOperator identity(size_t d);

    size_t dim() const {
        return matrix_.rows();
    }
    const ComplexMatrix &matrix() const {
        return matrix_;
    }

    UnitaryOperator adjoint() const;

   private:
    struct Unchecked {};
    UnitaryOperator(ComplexMatrix matrix, Unchecked) : matrix_(std::move(matrix)) {
    }
    friend UnitaryOperator operator*(const UnitaryOperator &a, const UnitaryOperator &b);

    ComplexMatrix matrix_;
};

UnitaryOperator operator*(const UnitaryOperator &a, const UnitaryOperator &b);

enum class Pauli { I, X, Y, Z };

UnitaryOperator pauli(Pauli which);

/// (I - i sigma_y)/sqrt(2) for sign = -1 and (I + i sigma_y)/sqrt(2) for sign = +1.
UnitaryOperator omega(int sign);

struct ClockShiftPair {
    UnitaryOperator p;  ///< diagonal "clock" in the computational basis
    UnitaryOperator q;  ///< diagonal in the (normalized) Fourier basis
};

/// P = sum_j e^{2 pi i j/d}|a_j><a_j| and Q = sum_k e^{-2 pi i k/d}|b_k><b_k|
/// with j, k in -floor(d/2) .. floor((d-1)/2), |a_j> the computational vector
/// with index j + floor(d/2), and |b_k> = d^{-1/2} sum_j e^{2 pi i jk/d}|a_j>.
/// Satisfies PQ = e^{2 pi i/d} QP. Requires d >= 2.
ClockShiftPair clock_shift_pair(size_t d);

/// Cyclic shift |j> -> |j+1 mod d>.
UnitaryOperator weyl_shift(size_t d);
/// diag(e^{2 pi i j/d}), j = 0..d-1.
UnitaryOperator weyl_clock(size_t d);

/// Hilbert-Schmidt inner product Tr(a^dagger b).
Complex hs_inner(const UnitaryOperator &a, const UnitaryOperator &b);

/// Entrywise equality up to a global phase.
bool equal_up_to_phase(const UnitaryOperator &a, const UnitaryOperator &b, double tol = kDefaultTol);

/// A set of pairwise Hilbert-Schmidt orthogonal unitaries spanning a
/// subspace of dimension d (D = d elements) or all operators (D = d^2).
class UnitaryBasis {
   public:
    /// Throws std::invalid_argument if the element count is not d or d^2,
    /// dimensions differ, or two elements are not orthogonal within tol.
    explicit UnitaryBasis(std::vector<UnitaryOperator> elements, double tol = kDefaultTol);

    size_t dim() const {
        return elements_.front().dim();
    }
    size_t subspace_dim() const {
        return elements_.size();
    }
    std::span<const UnitaryOperator> elements() const {
        return elements_;
    }
    const UnitaryOperator &operator[](size_t k) const {
        return elements_[k];
    }

   private:
    std::vector<UnitaryOperator> elements_;
};

struct MuubCheck {
    bool flag = false;
    /// Mean of |Tr(P_i^dagger Q_j)|^2 over all pairs.
    double kappa = 0;
    /// max - min of |Tr(P_i^dagger Q_j)|^2 over all pairs.
    double spread = 0;
};

/// Mutual unbiasedness of two unitary bases: |Tr(P_i^dagger Q_j)|^2 equals a
/// constant kappa for all i, j. Constancy alone is not enough (two bases of
/// orthogonal subspaces give kappa = 0), so the flag also requires kappa to
/// match the completeness value d^2 / D, i.e. d for D = d and 1 for D = d^2.
MuubCheck is_muub(const UnitaryBasis &b1, const UnitaryBasis &b2, double tol = kDefaultTol);

/// Haar-distributed unitary from the QR decomposition of a complex Gaussian
/// matrix, with R's diagonal made real positive. Deterministic per seed.
UnitaryOperator haar_random_unitary(size_t d, uint64_t seed);

/// Euclidean distance from the origin to the convex hull of points in the
/// complex plane; zero when the origin is inside or on the hull.
double hull_distance_to_origin(std::span<const Complex> points);

/// Single-shot perfect distinguishability: 0 lies in the numerical range of
/// V^dagger W. V^dagger W is normal, so the numerical range is the convex
/// hull of its eigenvalues.
bool is_perfectly_distinguishable(const UnitaryOperator &v, const UnitaryOperator &w, double tol = kDefaultTol);

}  // namespace utp

#endif
