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

#include "utp/linalg.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

namespace utp {

namespace {

void require_finite(std::span<const Complex> entries, const char *what) {
    for (const auto &z : entries) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw std::invalid_argument(std::string(what) + " has a non-finite entry");
        }
    }
}

void require_same_shape(const ComplexMatrix &a, const ComplexMatrix &b, const char *op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        std::ostringstream ss;
        ss << op << ": shape mismatch " << a.rows() << "x" << a.cols() << " vs " << b.rows() << "x" << b.cols();
        throw std::invalid_argument(ss.str());
    }
}

void require_same_dim(const ComplexVector &a, const ComplexVector &b, const char *op) {
    if (a.dim() != b.dim()) {
        std::ostringstream ss;
        ss << op << ": dimension mismatch " << a.dim() << " vs " << b.dim();
        throw std::invalid_argument(ss.str());
    }
}

double off_diagonal_norm2(const ComplexMatrix &a) {
    double s = 0;
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t c = 0; c < a.cols(); c++) {
            if (r != c) {
                s += std::norm(a(r, c));
            }
        }
    }
    return s;
}

double frobenius_norm2(const ComplexMatrix &a) {
    double s = 0;
    for (const auto &z : a.entries()) {
        s += std::norm(z);
    }
    return s;
}

// Fixes the global phase so the first component with modulus above 1e-8 is
// real and positive.
ComplexVector phase_fixed(const ComplexVector &v) {
    for (size_t k = 0; k < v.dim(); k++) {
        double m = std::abs(v[k]);
        if (m > 1e-8) {
            return (std::conj(v[k]) / m) * v;
        }
    }
    return v;
}

}  // namespace

ComplexVector::ComplexVector(size_t dim) : entries_(dim) {
}

ComplexVector::ComplexVector(std::vector<Complex> entries) : entries_(std::move(entries)) {
    require_finite(entries_, "ComplexVector");
}

ComplexVector::ComplexVector(std::initializer_list<Complex> entries) : entries_(entries) {
    require_finite(entries_, "ComplexVector");
}

ComplexVector ComplexVector::basis(size_t dim, size_t k) {
    if (k >= dim) {
        throw std::invalid_argument("basis index " + std::to_string(k) + " out of range for dimension " + std::to_string(dim));
    }
    ComplexVector v(dim);
    v[k] = 1;
    return v;
}

ComplexMatrix::ComplexMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {
}

ComplexMatrix::ComplexMatrix(size_t rows, size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows * cols) {
        throw std::invalid_argument(
            "ComplexMatrix: " + std::to_string(entries_.size()) + " entries for shape " + std::to_string(rows) + "x" +
            std::to_string(cols));
    }
    require_finite(entries_, "ComplexMatrix");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            throw std::invalid_argument("ComplexMatrix: ragged row literal");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
    require_finite(entries_, "ComplexMatrix");
}

ComplexMatrix ComplexMatrix::identity(size_t n) {
    ComplexMatrix m(n, n);
    for (size_t k = 0; k < n; k++) {
        m(k, k) = 1;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
    ComplexMatrix m(diag.size(), diag.size());
    for (size_t k = 0; k < diag.size(); k++) {
        m(k, k) = diag[k];
    }
    return m;
}

ComplexMatrix ComplexMatrix::from_columns(std::span<const ComplexVector> columns) {
    if (columns.empty()) {
        return {};
    }
    size_t n = columns[0].dim();
    ComplexMatrix m(n, columns.size());
    for (size_t c = 0; c < columns.size(); c++) {
        if (columns[c].dim() != n) {
            throw std::invalid_argument("from_columns: columns have differing dimensions");
        }
        for (size_t r = 0; r < n; r++) {
            m(r, c) = columns[c][r];
        }
    }
    return m;
}

ComplexMatrix ComplexMatrix::outer(const ComplexVector &a, const ComplexVector &b) {
    ComplexMatrix m(a.dim(), b.dim());
    for (size_t r = 0; r < a.dim(); r++) {
        for (size_t c = 0; c < b.dim(); c++) {
            m(r, c) = a[r] * std::conj(b[c]);
        }
    }
    return m;
}

ComplexVector ComplexMatrix::column(size_t c) const {
    ComplexVector v(rows_);
    for (size_t r = 0; r < rows_; r++) {
        v[r] = (*this)(r, c);
    }
    return v;
}

ComplexVector ComplexMatrix::row(size_t r) const {
    ComplexVector v(cols_);
    for (size_t c = 0; c < cols_; c++) {
        v[c] = (*this)(r, c);
    }
    return v;
}

ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) {
        std::ostringstream ss;
        ss << "matmul: inner dimension mismatch " << a.rows() << "x" << a.cols() << " * " << b.rows() << "x" << b.cols();
        throw std::invalid_argument(ss.str());
    }
    ComplexMatrix out(a.rows(), b.cols());
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t k = 0; k < a.cols(); k++) {
            Complex x = a(r, k);
            if (x == Complex{0, 0}) {
                continue;
            }
            for (size_t c = 0; c < b.cols(); c++) {
                out(r, c) += x * b(k, c);
            }
        }
    }
    return out;
}

ComplexVector matvec(const ComplexMatrix &a, const ComplexVector &v) {
    if (a.cols() != v.dim()) {
        throw std::invalid_argument(
            "matvec: matrix has " + std::to_string(a.cols()) + " columns but vector has dimension " +
            std::to_string(v.dim()));
    }
    ComplexVector out(a.rows());
    for (size_t r = 0; r < a.rows(); r++) {
        Complex s = 0;
        for (size_t c = 0; c < a.cols(); c++) {
            s += a(r, c) * v[c];
        }
        out[r] = s;
    }
    return out;
}

ComplexMatrix adjoint(const ComplexMatrix &a) {
    ComplexMatrix out(a.cols(), a.rows());
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t c = 0; c < a.cols(); c++) {
            out(c, r) = std::conj(a(r, c));
        }
    }
    return out;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t ar = 0; ar < a.rows(); ar++) {
        for (size_t ac = 0; ac < a.cols(); ac++) {
            Complex x = a(ar, ac);
            for (size_t br = 0; br < b.rows(); br++) {
                for (size_t bc = 0; bc < b.cols(); bc++) {
                    out(ar * b.rows() + br, ac * b.cols() + bc) = x * b(br, bc);
                }
            }
        }
    }
    return out;
}

ComplexVector kron(const ComplexVector &a, const ComplexVector &b) {
    ComplexVector out(a.dim() * b.dim());
    for (size_t i = 0; i < a.dim(); i++) {
        for (size_t j = 0; j < b.dim(); j++) {
            out[i * b.dim() + j] = a[i] * b[j];
        }
    }
    return out;
}

Complex trace(const ComplexMatrix &a) {
    if (!a.is_square()) {
        throw std::invalid_argument("trace: matrix is not square");
    }
    Complex s = 0;
    for (size_t k = 0; k < a.rows(); k++) {
        s += a(k, k);
    }
    return s;
}

Complex inner(const ComplexVector &v, const ComplexVector &w) {
    require_same_dim(v, w, "inner");
    Complex s = 0;
    for (size_t k = 0; k < v.dim(); k++) {
        s += std::conj(v[k]) * w[k];
    }
    return s;
}

double norm(const ComplexVector &v) {
    double s = 0;
    for (const auto &z : v.entries()) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

ComplexVector normalized(const ComplexVector &v) {
    double n = norm(v);
    if (n == 0) {
        throw std::invalid_argument("normalized: zero vector");
    }
    return Complex{1.0 / n, 0} * v;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    return matmul(a, b);
}

ComplexVector operator*(const ComplexMatrix &a, const ComplexVector &v) {
    return matvec(a, v);
}

ComplexMatrix operator*(Complex s, const ComplexMatrix &a) {
    ComplexMatrix out = a;
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t c = 0; c < a.cols(); c++) {
            out(r, c) *= s;
        }
    }
    return out;
}

ComplexMatrix operator+(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b, "operator+");
    ComplexMatrix out = a;
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t c = 0; c < a.cols(); c++) {
            out(r, c) += b(r, c);
        }
    }
    return out;
}

ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b, "operator-");
    ComplexMatrix out = a;
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t c = 0; c < a.cols(); c++) {
            out(r, c) -= b(r, c);
        }
    }
    return out;
}

ComplexVector operator*(Complex s, const ComplexVector &v) {
    ComplexVector out = v;
    for (size_t k = 0; k < v.dim(); k++) {
        out[k] *= s;
    }
    return out;
}

ComplexVector operator+(const ComplexVector &a, const ComplexVector &b) {
    require_same_dim(a, b, "operator+");
    ComplexVector out = a;
    for (size_t k = 0; k < a.dim(); k++) {
        out[k] += b[k];
    }
    return out;
}

ComplexVector operator-(const ComplexVector &a, const ComplexVector &b) {
    require_same_dim(a, b, "operator-");
    ComplexVector out = a;
    for (size_t k = 0; k < a.dim(); k++) {
        out[k] -= b[k];
    }
    return out;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b, "max_abs_diff");
    double m = 0;
    for (size_t k = 0; k < a.entries().size(); k++) {
        m = std::max(m, std::abs(a.entries()[k] - b.entries()[k]));
    }
    return m;
}

double max_abs_diff(const ComplexVector &a, const ComplexVector &b) {
    require_same_dim(a, b, "max_abs_diff");
    double m = 0;
    for (size_t k = 0; k < a.dim(); k++) {
        m = std::max(m, std::abs(a[k] - b[k]));
    }
    return m;
}

double max_abs_diff_up_to_phase(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_shape(a, b, "max_abs_diff_up_to_phase");
    Complex overlap = 0;
    for (size_t k = 0; k < a.entries().size(); k++) {
        overlap += std::conj(b.entries()[k]) * a.entries()[k];
    }
    Complex phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : Complex{1, 0};
    return max_abs_diff(a, phase * b);
}

bool is_unitary(const ComplexMatrix &a, double tol) {
    if (!a.is_square()) {
        return false;
    }
    return max_abs_diff(adjoint(a) * a, ComplexMatrix::identity(a.rows())) <= tol;
}

bool is_hermitian(const ComplexMatrix &a, double tol) {
    if (!a.is_square()) {
        return false;
    }
    return max_abs_diff(a, adjoint(a)) <= tol;
}

HermitianEigen eig_hermitian(const ComplexMatrix &input) {
    if (!input.is_square()) {
        throw std::invalid_argument("eig_hermitian: matrix is not square");
    }
    const size_t n = input.rows();
    ComplexMatrix a = Complex{0.5, 0} * (input + adjoint(input));
    ComplexMatrix v = ComplexMatrix::identity(n);

    // Stop once the off-diagonal mass is at rounding level: off <= 1e-14 n |a|_F.
    const double threshold2 = 1e-28 * double(n * n) * std::max(frobenius_norm2(a), 1e-300);
    constexpr int kMaxSweeps = 100;
    bool converged = false;
    for (int sweep = 0; sweep < kMaxSweeps; sweep++) {
        if (off_diagonal_norm2(a) <= threshold2) {
            converged = true;
            break;
        }
        for (size_t p = 0; p + 1 < n; p++) {
            for (size_t q = p + 1; q < n; q++) {
                Complex apq = a(p, q);
                double mag = std::abs(apq);
                if (mag <= 1e-300) {
                    continue;
                }
                // D = diag(1, e^{-i arg(apq)}) makes the 2x2 block real
                // symmetric; then a real rotation zeroes the off-diagonal.
                Complex ph = apq / mag;
                double app = a(p, p).real();
                double aqq = a(q, q).real();
                double theta = 0.5 * std::atan2(2 * mag, aqq - app);
                double c = std::cos(theta);
                double s = std::sin(theta);
                Complex jpp = c;
                Complex jpq = s;
                Complex jqp = -s * std::conj(ph);
                Complex jqq = c * std::conj(ph);

                for (size_t r = 0; r < n; r++) {
                    Complex arp = a(r, p);
                    Complex arq = a(r, q);
                    a(r, p) = arp * jpp + arq * jqp;
                    a(r, q) = arp * jpq + arq * jqq;
                    Complex vrp = v(r, p);
                    Complex vrq = v(r, q);
                    v(r, p) = vrp * jpp + vrq * jqp;
                    v(r, q) = vrp * jpq + vrq * jqq;
                }
                for (size_t c2 = 0; c2 < n; c2++) {
                    Complex apc = a(p, c2);
                    Complex aqc = a(q, c2);
                    a(p, c2) = std::conj(jpp) * apc + std::conj(jqp) * aqc;
                    a(q, c2) = std::conj(jpq) * apc + std::conj(jqq) * aqc;
                }
                a(p, q) = 0;
                a(q, p) = 0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }
    if (!converged && off_diagonal_norm2(a) > threshold2) {
        throw NumericalError("eig_hermitian: Jacobi iteration did not converge");
    }

    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) {
        return a(x, x).real() < a(y, y).real();
    });
    HermitianEigen out;
    out.values.reserve(n);
    out.vectors = ComplexMatrix(n, n);
    for (size_t k = 0; k < n; k++) {
        out.values.push_back(a(order[k], order[k]).real());
        for (size_t r = 0; r < n; r++) {
            out.vectors(r, k) = v(r, order[k]);
        }
    }
    return out;
}

std::vector<UnitaryEigenPair> eig_unitary(const ComplexMatrix &u, double tol) {
    if (!is_unitary(u, tol)) {
        throw std::invalid_argument("eig_unitary: matrix is not unitary within tolerance");
    }
    const size_t n = u.rows();
    ComplexMatrix ud = adjoint(u);
    ComplexMatrix re_part = Complex{0.5, 0} * (u + ud);
    ComplexMatrix im_part = Complex{0, -0.5} * (u - ud);

    HermitianEigen first = eig_hermitian(re_part);
    ComplexMatrix basis = first.vectors;

    size_t start = 0;
    while (start < n) {
        size_t end = start + 1;
        while (end < n && first.values[end] - first.values[end - 1] < kEigenClusterGap) {
            end++;
        }
        if (end - start > 1) {
            size_t k = end - start;
            ComplexMatrix sub(n, k);
            for (size_t r = 0; r < n; r++) {
                for (size_t c = 0; c < k; c++) {
                    sub(r, c) = basis(r, start + c);
                }
            }
            HermitianEigen second = eig_hermitian(adjoint(sub) * im_part * sub);
            ComplexMatrix rotated = sub * second.vectors;
            for (size_t r = 0; r < n; r++) {
                for (size_t c = 0; c < k; c++) {
                    basis(r, start + c) = rotated(r, c);
                }
            }
        }
        start = end;
    }

    std::vector<UnitaryEigenPair> pairs;
    pairs.reserve(n);
    for (size_t k = 0; k < n; k++) {
        ComplexVector vec = phase_fixed(normalized(basis.column(k)));
        Complex lambda = inner(vec, u * vec);
        double m = std::abs(lambda);
        if (m < 0.5) {
            throw NumericalError("eig_unitary: eigenvector residual too large");
        }
        pairs.push_back({lambda / m, std::move(vec)});
    }
    auto phase_of = [](Complex z) {
        double p = std::arg(z);
        return p <= -std::numbers::pi + 1e-12 ? std::numbers::pi : p;
    };
    std::stable_sort(pairs.begin(), pairs.end(), [&](const auto &x, const auto &y) {
        return phase_of(x.value) < phase_of(y.value) - 1e-12;
    });
    return pairs;
}

double operator_norm(const ComplexMatrix &a) {
    if (a.rows() == 0 || a.cols() == 0) {
        return 0;
    }
    HermitianEigen e = eig_hermitian(adjoint(a) * a);
    return std::sqrt(std::max(0.0, e.values.back()));
}

ComplexMatrix psd_sqrt(const ComplexMatrix &m, double tol) {
    if (!is_hermitian(m, tol)) {
        throw std::invalid_argument("psd_sqrt: matrix is not Hermitian within tolerance");
    }
    HermitianEigen e = eig_hermitian(m);
    const size_t n = m.rows();
    std::vector<Complex> roots(n);
    for (size_t k = 0; k < n; k++) {
        if (e.values[k] < -tol) {
            throw std::invalid_argument(
                "psd_sqrt: eigenvalue " + std::to_string(e.values[k]) + " is below -tol");
        }
        roots[k] = std::sqrt(std::max(0.0, e.values[k]));
    }
    return e.vectors * ComplexMatrix::diagonal(roots) * adjoint(e.vectors);
}

std::vector<ComplexVector> complete_orthonormal_basis(std::span<const ComplexVector> vectors, size_t dim) {
    std::vector<ComplexVector> out(vectors.begin(), vectors.end());
    for (const auto &v : out) {
        if (v.dim() != dim) {
            throw std::invalid_argument("complete_orthonormal_basis: vector dimension mismatch");
        }
    }
    auto project_out = [&](ComplexVector w) {
        // Two passes of modified Gram-Schmidt.
        for (int pass = 0; pass < 2; pass++) {
            for (const auto &u : out) {
                w = w - inner(u, w) * u;
            }
        }
        return w;
    };
    for (size_t k = 0; k < dim && out.size() < dim; k++) {
        ComplexVector w = project_out(ComplexVector::basis(dim, k));
        if (norm(w) > 1e-6) {
            out.push_back(normalized(w));
        }
    }
    if (out.size() != dim) {
        throw NumericalError("complete_orthonormal_basis: input family is not orthonormal");
    }
    return out;
}

std::string to_string(const ComplexMatrix &a) {
    std::ostringstream ss;
    ss << "[";
    for (size_t r = 0; r < a.rows(); r++) {
        ss << (r ? ", [" : "[");
        for (size_t c = 0; c < a.cols(); c++) {
            Complex z = a(r, c);
            ss << (c ? ", " : "") << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
        }
        ss << "]";
    }
    ss << "]";
    return ss.str();
}

}  // namespace utp
