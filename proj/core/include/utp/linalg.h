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

#ifndef UTP_LINALG_H
#define UTP_LINALG_H

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

/// Small dense complex linear algebra.
///
/// Everything here is sized for single systems up to d = 32 and bipartite
/// systems up to d^2 = 1024. All routines are O(n^3) or better and allocate
/// freely; nothing is tuned for large n.
namespace utp {

using Complex = std::complex<double>;

/// Default absolute tolerance used by every validating operation.
inline constexpr double kDefaultTol = 1e-9;

/// Eigenvalues of a unitary closer than this are treated as one cluster.
inline constexpr double kEigenClusterGap = 1e-7;

/// Raised when an iterative routine fails to converge or a numerical
/// precondition (positivity, unitarity) is violated.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class ComplexVector {
   public:
    ComplexVector() = default;
    explicit ComplexVector(size_t dim);
    explicit ComplexVector(std::vector<Complex> entries);
    ComplexVector(std::initializer_list<Complex> entries);

    /// The k-th computational basis vector |k>.
    static ComplexVector basis(size_t dim, size_t k);

    size_t dim() const {
        return entries_.size();
    }
    Complex operator[](size_t k) const {
        return entries_[k];
    }
    Complex &operator[](size_t k) {
        return entries_[k];
    }
    std::span<const Complex> entries() const {
        return entries_;
    }

    bool operator==(const ComplexVector &other) const = default;

   private:
    std::vector<Complex> entries_;
};

/// Row-major dense complex matrix.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    ComplexMatrix(size_t rows, size_t cols);
    ComplexMatrix(size_t rows, size_t cols, std::vector<Complex> entries);
    /// Row-wise literal, e.g. {{0, 1}, {1, 0}}.
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(size_t n);
    static ComplexMatrix diagonal(std::span<const Complex> diag);
    /// Matrix whose k-th column is columns[k].
    static ComplexMatrix from_columns(std::span<const ComplexVector> columns);
    /// |a><b|.
    static ComplexMatrix outer(const ComplexVector &a, const ComplexVector &b);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    bool is_square() const {
        return rows_ == cols_;
    }
    Complex operator()(size_t r, size_t c) const {
        return entries_[r * cols_ + c];
    }
    Complex &operator()(size_t r, size_t c) {
        return entries_[r * cols_ + c];
    }
    std::span<const Complex> entries() const {
        return entries_;
    }
    ComplexVector column(size_t c) const;
    ComplexVector row(size_t r) const;

    bool operator==(const ComplexMatrix &other) const = default;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<Complex> entries_;
};

ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexVector matvec(const ComplexMatrix &a, const ComplexVector &v);
ComplexMatrix adjoint(const ComplexMatrix &a);
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexVector kron(const ComplexVector &a, const ComplexVector &b);
Complex trace(const ComplexMatrix &a);

/// <v|w>, conjugate-linear in v.
Complex inner(const ComplexVector &v, const ComplexVector &w);
double norm(const ComplexVector &v);
ComplexVector normalized(const ComplexVector &v);

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexVector operator*(const ComplexMatrix &a, const ComplexVector &v);
ComplexMatrix operator*(Complex s, const ComplexMatrix &a);
ComplexMatrix operator+(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexVector operator*(Complex s, const ComplexVector &v);
ComplexVector operator+(const ComplexVector &a, const ComplexVector &b);
ComplexVector operator-(const ComplexVector &a, const ComplexVector &b);

/// Largest entrywise modulus of a - b. Shapes must agree.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);
double max_abs_diff(const ComplexVector &a, const ComplexVector &b);

/// Max entrywise deviation of a from e^{i alpha} b after choosing alpha to
/// best align the two (alpha taken from the Hilbert-Schmidt inner product).
double max_abs_diff_up_to_phase(const ComplexMatrix &a, const ComplexMatrix &b);

bool is_unitary(const ComplexMatrix &a, double tol = kDefaultTol);
bool is_hermitian(const ComplexMatrix &a, double tol = kDefaultTol);

struct HermitianEigen {
    std::vector<double> values;  ///< ascending
    ComplexMatrix vectors;       ///< column k pairs with values[k]
};

/// Cyclic complex Jacobi diagonalization of a Hermitian matrix.
/// Only the upper triangle's Hermitian part is meaningful; the input is
/// symmetrized as (a + a^dagger) / 2 before iterating.
HermitianEigen eig_hermitian(const ComplexMatrix &a);

struct UnitaryEigenPair {
    Complex value;
    ComplexVector vector;
};

/// Eigendecomposition of a unitary matrix.
///
/// The real part (U + U^dagger)/2 is diagonalized first; within each cluster
/// of its eigenvalues (gap kEigenClusterGap) the imaginary part
/// (U - U^dagger)/2i is diagonalized on the cluster subspace. The result is
/// sorted by eigenphase in (-pi, pi] (stable, so degenerate clusters keep the
/// order Jacobi produced) and each eigenvector is phase-fixed so its first
/// non-negligible component is real and positive.
///
/// Throws std::invalid_argument if u is not unitary within tol and
/// NumericalError if the Jacobi iteration does not converge.
std::vector<UnitaryEigenPair> eig_unitary(const ComplexMatrix &u, double tol = kDefaultTol);

/// Largest singular value.
double operator_norm(const ComplexMatrix &a);

/// Hermitian PSD square root. Eigenvalues in [-tol, 0) are clamped to zero.
/// Throws std::invalid_argument for non-Hermitian input or eigenvalues below -tol.
ComplexMatrix psd_sqrt(const ComplexMatrix &m, double tol = kDefaultTol);

/// Extends an orthonormal family to an orthonormal basis of C^dim using
/// Gram-Schmidt against the computational basis. The given vectors come
/// first, in order.
std::vector<ComplexVector> complete_orthonormal_basis(std::span<const ComplexVector> vectors, size_t dim);

std::string to_string(const ComplexMatrix &a);

}  // namespace utp

#endif
