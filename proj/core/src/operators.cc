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

#include "utp/operators.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "utp/rng.h"

namespace utp {

namespace {

constexpr double kPi = std::numbers::pi;

Complex unit_phase(double angle) {
    return std::polar(1.0, angle);
}

double cross(Complex o, Complex a, Complex b) {
    return (a.real() - o.real()) * (b.imag() - o.imag()) - (a.imag() - o.imag()) * (b.real() - o.real());
}

double segment_distance_to_origin(Complex a, Complex b) {
    Complex ab = b - a;
    double len2 = std::norm(ab);
    if (len2 == 0) {
        return std::abs(a);
    }
    // Project the origin onto the segment.
    double t = -(a.real() * ab.real() + a.imag() * ab.imag()) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(a + t * ab);
}

}  // namespace

UnitaryOperator::UnitaryOperator(ComplexMatrix matrix, double tol) : matrix_(std::move(matrix)) {
    if (!matrix_.is_square() || matrix_.rows() == 0) {
        throw std::invalid_argument(
            "invariant violated: UnitaryOperator must be a non-empty square matrix, got " +
            std::to_string(matrix_.rows()) + "x" + std::to_string(matrix_.cols()));
    }
    double dev = max_abs_diff(utp::adjoint(matrix_) * matrix_, ComplexMatrix::identity(matrix_.rows()));
    if (dev > tol) {
        throw std::invalid_argument(
            "invariant violated: UnitaryOperator unitarity (max |U^dagger U - I| = " + std::to_string(dev) +
            " exceeds tolerance)");
    }
}

UnitaryOperator UnitaryOperator::identity(size_t d) {
    return UnitaryOperator(ComplexMatrix::identity(d), Unchecked{});
}

UnitaryOperator UnitaryOperator::adjoint() const {
    return UnitaryOperator(utp::adjoint(matrix_), Unchecked{});
}

UnitaryOperator operator*(const UnitaryOperator &a, const UnitaryOperator &b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument(
            "operator dimension mismatch: " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
    }
    return UnitaryOperator(a.matrix() * b.matrix(), UnitaryOperator::Unchecked{});
}

UnitaryOperator pauli(Pauli which) {
    const Complex i{0, 1};
    switch (which) {
        case Pauli::I:
            return UnitaryOperator::identity(2);
        case Pauli::X:
            return UnitaryOperator(ComplexMatrix{{0, 1}, {1, 0}});
        case Pauli::Y:
            return UnitaryOperator(ComplexMatrix{{0, -i}, {i, 0}});
        case Pauli::Z:
            return UnitaryOperator(ComplexMatrix{{1, 0}, {0, -1}});
    }
    throw std::invalid_argument("unknown Pauli");
}

UnitaryOperator omega(int sign) {
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("omega: sign must be +1 or -1");
    }
    const Complex i{0, 1};
    ComplexMatrix m = ComplexMatrix::identity(2) + (double(sign) * i) * pauli(Pauli::Y).matrix();
    return UnitaryOperator(Complex{1 / std::numbers::sqrt2, 0} * m);
}

ClockShiftPair clock_shift_pair(size_t d) {
    if (d < 2) {
        throw std::invalid_argument("clock_shift_pair: d must be at least 2, got " + std::to_string(d));
    }
    const long offset = long(d / 2);
    const double dd = double(d);
    auto label = [&](size_t index) {
        return long(index) - offset;
    };

    std::vector<Complex> p_diag(d);
    for (size_t a = 0; a < d; a++) {
        p_diag[a] = unit_phase(2 * kPi * double(label(a)) / dd);
    }

    ComplexMatrix q(d, d);
    const double scale = 1 / std::sqrt(dd);
    for (size_t kk = 0; kk < d; kk++) {
        long k = label(kk);
        std::vector<Complex> b(d);
        for (size_t a = 0; a < d; a++) {
            b[a] = scale * unit_phase(2 * kPi * double(label(a) * k) / dd);
        }
        Complex eig = unit_phase(-2 * kPi * double(k) / dd);
        for (size_t r = 0; r < d; r++) {
            for (size_t c = 0; c < d; c++) {
                q(r, c) += eig * b[r] * std::conj(b[c]);
            }
        }
    }
    return {UnitaryOperator(ComplexMatrix::diagonal(p_diag)), UnitaryOperator(std::move(q))};
}

UnitaryOperator weyl_shift(size_t d) {
    ComplexMatrix m(d, d);
    for (size_t j = 0; j < d; j++) {
        m((j + 1) % d, j) = 1;
    }
    return UnitaryOperator(std::move(m));
}

UnitaryOperator weyl_clock(size_t d) {
    std::vector<Complex> diag(d);
    for (size_t j = 0; j < d; j++) {
        diag[j] = unit_phase(2 * kPi * double(j) / double(d));
    }
    return UnitaryOperator(ComplexMatrix::diagonal(diag));
}

Complex hs_inner(const UnitaryOperator &a, const UnitaryOperator &b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument(
            "hs_inner: dimension mismatch " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
    }
    // Tr(a^dagger b) = sum_rc conj(a_rc) b_rc
    Complex s = 0;
    auto ea = a.matrix().entries();
    auto eb = b.matrix().entries();
    for (size_t k = 0; k < ea.size(); k++) {
        s += std::conj(ea[k]) * eb[k];
    }
    return s;
}

bool equal_up_to_phase(const UnitaryOperator &a, const UnitaryOperator &b, double tol) {
    return a.dim() == b.dim() && max_abs_diff_up_to_phase(a.matrix(), b.matrix()) <= tol;
}

UnitaryBasis::UnitaryBasis(std::vector<UnitaryOperator> elements, double tol) : elements_(std::move(elements)) {
    if (elements_.empty()) {
        throw std::invalid_argument("invariant violated: UnitaryBasis is empty");
    }
    const size_t d = elements_.front().dim();
    const size_t n = elements_.size();
    if (n != d && n != d * d) {
        throw std::invalid_argument(
            "invariant violated: UnitaryBasis must have d or d^2 elements (d = " + std::to_string(d) + "), got " +
            std::to_string(n));
    }
    for (size_t i = 0; i < n; i++) {
        if (elements_[i].dim() != d) {
            throw std::invalid_argument("invariant violated: UnitaryBasis elements have differing dimensions");
        }
        for (size_t j = i + 1; j < n; j++) {
            double overlap = std::abs(hs_inner(elements_[i], elements_[j]));
            if (overlap > tol) {
                throw std::invalid_argument(
                    "invariant violated: UnitaryBasis orthogonality, |Tr(P_" + std::to_string(i) + "^dagger P_" +
                    std::to_string(j) + ")| = " + std::to_string(overlap));
            }
        }
    }
}

MuubCheck is_muub(const UnitaryBasis &b1, const UnitaryBasis &b2, double tol) {
    if (b1.dim() != b2.dim() || b1.subspace_dim() != b2.subspace_dim()) {
        throw std::invalid_argument("is_muub: bases differ in dimension or subspace dimension");
    }
    const size_t n = b1.subspace_dim();
    double lo = INFINITY;
    double hi = -INFINITY;
    double sum = 0;
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            double v = std::norm(hs_inner(b1[i], b2[j]));
            lo = std::min(lo, v);
            hi = std::max(hi, v);
            sum += v;
        }
    }
    MuubCheck out;
    out.kappa = sum / double(n * n);
    out.spread = hi - lo;
    const double d = double(b1.dim());
    const double expected = d * d / double(n);
    out.flag = out.spread <= tol && std::abs(out.kappa - expected) <= tol;
    return out;
}

UnitaryOperator haar_random_unitary(size_t d, uint64_t seed) {
    if (d == 0) {
        throw std::invalid_argument("haar_random_unitary: d must be at least 1");
    }
    SplitMix64 rng(seed);
    std::vector<ComplexVector> cols;
    cols.reserve(d);
    for (size_t c = 0; c < d; c++) {
        std::vector<Complex> z(d);
        for (auto &x : z) {
            double re = rng.normal();
            double im = rng.normal();
            x = Complex{re, im} / std::numbers::sqrt2;
        }
        cols.emplace_back(std::move(z));
    }
    // Gram-Schmidt produces Q with R's diagonal real positive, which is the
    // phase-fixed QR that makes Q Haar distributed.
    std::vector<ComplexVector> q;
    q.reserve(d);
    for (size_t c = 0; c < d; c++) {
        ComplexVector w = cols[c];
        for (int pass = 0; pass < 2; pass++) {
            for (const auto &u : q) {
                w = w - inner(u, w) * u;
            }
        }
        q.push_back(normalized(w));
    }
    return UnitaryOperator(ComplexMatrix::from_columns(q));
}

double hull_distance_to_origin(std::span<const Complex> points) {
    if (points.empty()) {
        throw std::invalid_argument("hull_distance_to_origin: no points");
    }
    std::vector<Complex> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end(), [](Complex a, Complex b) {
        return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() == 1) {
        return std::abs(pts[0]);
    }

    // Andrew's monotone chain, counter-clockwise, collinear points dropped.
    std::vector<Complex> hull(2 * pts.size());
    size_t k = 0;
    for (const auto &p : pts) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) {
            k--;
        }
        hull[k++] = p;
    }
    for (size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) {
            k--;
        }
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);

    if (hull.size() <= 2) {
        return segment_distance_to_origin(hull.front(), hull.back());
    }
    bool inside = true;
    double best = INFINITY;
    for (size_t i = 0; i < hull.size(); i++) {
        Complex a = hull[i];
        Complex b = hull[(i + 1) % hull.size()];
        if (cross(a, b, Complex{0, 0}) < 0) {
            inside = false;
        }
        best = std::min(best, segment_distance_to_origin(a, b));
    }
    return inside ? 0.0 : best;
}

bool is_perfectly_distinguishable(const UnitaryOperator &v, const UnitaryOperator &w, double tol) {
    if (v.dim() != w.dim()) {
        throw std::invalid_argument("is_perfectly_distinguishable: dimension mismatch");
    }
    auto eig = eig_unitary((v.adjoint() * w).matrix(), std::max(tol, kDefaultTol));
    std::vector<Complex> values;
    values.reserve(eig.size());
    for (const auto &e : eig) {
        values.push_back(e.value);
    }
    return hull_distance_to_origin(values) <= tol;
}

}  // namespace utp
