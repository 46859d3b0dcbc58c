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

#include "utp/testers.h"

#include <cmath>

namespace utp {

namespace {

std::string dims(size_t a, size_t b) {
    return std::to_string(a) + " vs " + std::to_string(b);
}

ComplexMatrix reshape(const ComplexVector &v, size_t d) {
    ComplexMatrix m(d, d);
    for (size_t r = 0; r < d; r++) {
        for (size_t c = 0; c < d; c++) {
            m(r, c) = v[r * d + c];
        }
    }
    return m;
}

ComplexVector flatten(const ComplexMatrix &m) {
    return ComplexVector(std::vector<Complex>(m.entries().begin(), m.entries().end()));
}

}  // namespace

PureState::PureState(ComplexVector amplitudes, double tol) : amplitudes_(std::move(amplitudes)) {
    double n = norm(amplitudes_);
    if (amplitudes_.dim() == 0 || std::abs(n - 1) > tol) {
        throw std::invalid_argument(
            "invariant violated: PureState unit norm (norm = " + std::to_string(n) + ", dim = " +
            std::to_string(amplitudes_.dim()) + ")");
    }
}

ProjectiveMeasurement::ProjectiveMeasurement(std::vector<PureState> basis, double tol) : basis_(std::move(basis)) {
    if (basis_.empty()) {
        throw std::invalid_argument("invariant violated: ProjectiveMeasurement basis is empty");
    }
    const size_t d = basis_.front().dim();
    if (basis_.size() != d) {
        throw std::invalid_argument(
            "invariant violated: ProjectiveMeasurement completeness (" + std::to_string(basis_.size()) +
            " vectors in dimension " + std::to_string(d) + ")");
    }
    for (size_t i = 0; i < d; i++) {
        if (basis_[i].dim() != d) {
            throw std::invalid_argument("invariant violated: ProjectiveMeasurement vectors have differing dimensions");
        }
        for (size_t j = i + 1; j < d; j++) {
            double ov = std::abs(inner(basis_[i].amplitudes(), basis_[j].amplitudes()));
            if (ov > tol) {
                throw std::invalid_argument(
                    "invariant violated: ProjectiveMeasurement orthonormality, |<chi_" + std::to_string(i) +
                    "|chi_" + std::to_string(j) + ">| = " + std::to_string(ov));
            }
        }
    }
}

ProjectiveMeasurement ProjectiveMeasurement::computational(size_t d) {
    std::vector<PureState> basis;
    basis.reserve(d);
    for (size_t k = 0; k < d; k++) {
        basis.emplace_back(ComplexVector::basis(d, k));
    }
    return ProjectiveMeasurement(std::move(basis));
}

ProjectiveMeasurement ProjectiveMeasurement::from_unitary(const UnitaryOperator &u) {
    std::vector<PureState> basis;
    basis.reserve(u.dim());
    for (size_t k = 0; k < u.dim(); k++) {
        basis.emplace_back(u.matrix().column(k));
    }
    return ProjectiveMeasurement(std::move(basis));
}

ComplexMatrix ProjectiveMeasurement::as_matrix() const {
    std::vector<ComplexVector> cols;
    cols.reserve(basis_.size());
    for (const auto &b : basis_) {
        cols.push_back(b.amplitudes());
    }
    return ComplexMatrix::from_columns(cols);
}

DensityMatrix::DensityMatrix(ComplexMatrix matrix, double tol) : matrix_(std::move(matrix)) {
    if (!matrix_.is_square() || matrix_.rows() == 0) {
        throw std::invalid_argument("invariant violated: DensityMatrix must be a non-empty square matrix");
    }
    if (!is_hermitian(matrix_, tol)) {
        throw std::invalid_argument("invariant violated: DensityMatrix is not Hermitian");
    }
    Complex tr = trace(matrix_);
    if (std::abs(tr - Complex{1, 0}) > tol) {
        throw std::invalid_argument("invariant violated: DensityMatrix trace is " + std::to_string(tr.real()) + ", not 1");
    }
    double lowest = eig_hermitian(matrix_).values.front();
    if (lowest < -tol) {
        throw std::invalid_argument(
            "invariant violated: DensityMatrix positivity (eigenvalue " + std::to_string(lowest) + ")");
    }
}

DensityMatrix DensityMatrix::from_pure(const PureState &psi) {
    return DensityMatrix(ComplexMatrix::outer(psi.amplitudes(), psi.amplitudes()));
}

Povm::Povm(std::vector<ComplexMatrix> elements, double tol, double sum_tol) : elements_(std::move(elements)) {
    if (elements_.empty()) {
        throw std::invalid_argument("invariant violated: Povm has no elements");
    }
    const size_t d = elements_.front().rows();
    ComplexMatrix sum(d, d);
    for (size_t k = 0; k < elements_.size(); k++) {
        const auto &m = elements_[k];
        if (!m.is_square() || m.rows() != d) {
            throw std::invalid_argument("invariant violated: Povm elements must all be " + std::to_string(d) + "x" + std::to_string(d));
        }
        if (!is_hermitian(m, tol)) {
            throw std::invalid_argument("invariant violated: Povm element " + std::to_string(k) + " is not Hermitian");
        }
        double lowest = eig_hermitian(m).values.front();
        if (lowest < -tol) {
            throw std::invalid_argument(
                "invariant violated: Povm element " + std::to_string(k) + " positivity (eigenvalue " +
                std::to_string(lowest) + ")");
        }
        sum = sum + m;
    }
    double dev = max_abs_diff(sum, ComplexMatrix::identity(d));
    if (dev > sum_tol) {
        throw std::invalid_argument(
            "invariant violated: Povm completeness (max |sum M_k - I| = " + std::to_string(dev) + ")");
    }
}

Povm Povm::from_projective(const ProjectiveMeasurement &m) {
    std::vector<ComplexMatrix> elements;
    elements.reserve(m.dim());
    for (size_t i = 0; i < m.dim(); i++) {
        elements.push_back(ComplexMatrix::outer(m.vector(i), m.vector(i)));
    }
    return Povm(std::move(elements));
}

MesMeasurement::MesMeasurement(size_t local_dim, std::vector<PureState> basis, double tol, double unitary_tol)
    : local_dim_(local_dim), basis_(std::move(basis)) {
    const size_t n = local_dim * local_dim;
    if (local_dim < 2 || basis_.size() != n) {
        throw std::invalid_argument(
            "invariant violated: MesMeasurement needs d^2 = " + std::to_string(n) + " vectors with d >= 2, got " +
            std::to_string(basis_.size()));
    }
    for (size_t i = 0; i < n; i++) {
        if (basis_[i].dim() != n) {
            throw std::invalid_argument("invariant violated: MesMeasurement vector dimension must be d^2");
        }
        for (size_t j = i + 1; j < n; j++) {
            double ov = std::abs(inner(basis_[i].amplitudes(), basis_[j].amplitudes()));
            if (ov > tol) {
                throw std::invalid_argument(
                    "invariant violated: MesMeasurement orthonormality, |<nu_" + std::to_string(i) + "|nu_" +
                    std::to_string(j) + ">| = " + std::to_string(ov));
            }
        }
        if (!is_unitary(local_unitary(i), unitary_tol)) {
            throw std::invalid_argument(
                "invariant violated: MesMeasurement element " + std::to_string(i) + " is not maximally entangled");
        }
    }
}

ComplexMatrix MesMeasurement::local_unitary(size_t i) const {
    return Complex{std::sqrt(double(local_dim_)), 0} * reshape(basis_[i].amplitudes(), local_dim_);
}

std::string_view kind_name(TesterKind kind) {
    switch (kind) {
        case TesterKind::Projective:
            return "projective";
        case TesterKind::Mes:
            return "mes";
        case TesterKind::Povm:
            return "povm";
    }
    return "unknown";
}

Tester::Tester(ProjectiveTester t) : value_(std::move(t)) {
    const auto &p = projective();
    if (p.input.dim() != p.measurement.dim()) {
        throw std::invalid_argument("invariant violated: Tester input/measurement dimensions " + dims(p.input.dim(), p.measurement.dim()));
    }
}

Tester::Tester(MesTester t) : value_(std::move(t)) {
}

Tester::Tester(PovmTester t) : value_(std::move(t)) {
    const auto &p = povm();
    if (p.input.dim() != p.measurement.dim()) {
        throw std::invalid_argument("invariant violated: Tester input/measurement dimensions " + dims(p.input.dim(), p.measurement.dim()));
    }
}

TesterKind Tester::kind() const {
    return TesterKind(value_.index());
}

size_t Tester::dim() const {
    switch (kind()) {
        case TesterKind::Projective:
            return projective().measurement.dim();
        case TesterKind::Mes:
            return mes().measurement.local_dim();
        case TesterKind::Povm:
            return povm().measurement.dim();
    }
    return 0;
}

OutcomeDistribution outcome_distribution(const Tester &t, const UnitaryOperator &u) {
    if (t.dim() != u.dim()) {
        throw std::invalid_argument("outcome_distribution: tester dimension " + dims(t.dim(), u.dim()) + " of operator");
    }
    std::vector<double> probs;
    switch (t.kind()) {
        case TesterKind::Projective: {
            const auto &p = t.projective();
            ComplexVector evolved = u.matrix() * p.input.amplitudes();
            for (size_t i = 0; i < p.measurement.dim(); i++) {
                probs.push_back(std::norm(inner(p.measurement.vector(i), evolved)));
            }
            break;
        }
        case TesterKind::Mes: {
            const auto &m = t.mes().measurement;
            const size_t d = m.local_dim();
            // (U (x) I)|Phi> has amplitude U_jk / sqrt(d) on |jk>.
            ComplexVector evolved = Complex{1 / std::sqrt(double(d)), 0} * flatten(u.matrix());
            for (size_t i = 0; i < d * d; i++) {
                probs.push_back(std::norm(inner(m.vector(i), evolved)));
            }
            break;
        }
        case TesterKind::Povm: {
            const auto &p = t.povm();
            ComplexMatrix evolved = u.matrix() * p.input.matrix() * adjoint(u.matrix());
            for (const auto &m : p.measurement.elements()) {
                probs.push_back(trace(m * evolved).real());
            }
            break;
        }
    }
    return OutcomeDistribution(std::move(probs));
}

PureState mes_state(size_t d) {
    if (d < 2) {
        throw std::invalid_argument("mes_state: d must be at least 2");
    }
    ComplexVector v(d * d);
    for (size_t i = 0; i < d; i++) {
        v[i * d + i] = 1 / std::sqrt(double(d));
    }
    return PureState(std::move(v));
}

MesMeasurement bell_basis(size_t d) {
    if (d < 2) {
        throw std::invalid_argument("bell_basis: d must be at least 2");
    }
    const ComplexMatrix x = weyl_shift(d).matrix();
    const ComplexMatrix z = weyl_clock(d).matrix();
    const double scale = 1 / std::sqrt(double(d));
    std::vector<PureState> basis;
    basis.reserve(d * d);
    ComplexMatrix xa = ComplexMatrix::identity(d);
    for (size_t a = 0; a < d; a++) {
        ComplexMatrix xazb = xa;
        for (size_t b = 0; b < d; b++) {
            basis.emplace_back(Complex{scale, 0} * flatten(xazb));
            xazb = xazb * z;
        }
        xa = x * xa;
    }
    return MesMeasurement(d, std::move(basis));
}

ComplexMatrix reduced_state(const PureState &psi, size_t local_dim, int subsystem) {
    const size_t d = local_dim;
    if (psi.dim() != d * d) {
        throw std::invalid_argument("reduced_state: state dimension is not local_dim^2");
    }
    ComplexMatrix c = reshape(psi.amplitudes(), d);
    if (subsystem == 0) {
        return c * adjoint(c);
    }
    if (subsystem == 1) {
        ComplexMatrix ct(d, d);
        for (size_t r = 0; r < d; r++) {
            for (size_t k = 0; k < d; k++) {
                ct(k, r) = c(r, k);
            }
        }
        return ct * adjoint(ct);
    }
    throw std::invalid_argument("reduced_state: subsystem must be 0 or 1");
}

MesMeasurement absorb_mes_input(const MesMeasurement &m, const UnitaryOperator &c) {
    const size_t d = m.local_dim();
    if (c.dim() != d) {
        throw std::invalid_argument("absorb_mes_input: dimension " + dims(c.dim(), d));
    }
    // (I (x) conj(C))|nu> reshaped is N conj(C)^T = N C^dagger.
    ComplexMatrix cd = adjoint(c.matrix());
    std::vector<PureState> basis;
    basis.reserve(d * d);
    for (size_t i = 0; i < d * d; i++) {
        basis.emplace_back(flatten(reshape(m.vector(i), d) * cd));
    }
    return MesMeasurement(d, std::move(basis));
}

Tester trivial_tester(const UnitaryOperator &v, const UnitaryOperator &w) {
    if (v.dim() != w.dim()) {
        throw std::invalid_argument("trivial_tester: dimension " + dims(v.dim(), w.dim()));
    }
    auto eig = eig_unitary((w * v.adjoint()).matrix());
    std::vector<PureState> basis;
    basis.reserve(eig.size());
    for (const auto &e : eig) {
        basis.emplace_back(e.vector);
    }
    ProjectiveMeasurement m(std::move(basis));
    PureState input(normalized(v.adjoint().matrix() * m.vector(0)));
    return Tester(ProjectiveTester{std::move(input), std::move(m)});
}

bool is_trivial_measurement(
    const ProjectiveMeasurement &m, const UnitaryOperator &v, const UnitaryOperator &w, double tol) {
    if (m.dim() != v.dim() || v.dim() != w.dim()) {
        throw std::invalid_argument("is_trivial_measurement: dimension mismatch");
    }
    ComplexMatrix a = (w * v.adjoint()).matrix();
    for (size_t i = 0; i < m.dim(); i++) {
        const auto &chi = m.vector(i);
        ComplexVector image = a * chi;
        ComplexVector residual = image - inner(chi, image) * chi;
        if (norm(residual) >= tol) {
            return false;
        }
    }
    return true;
}

}  // namespace utp
