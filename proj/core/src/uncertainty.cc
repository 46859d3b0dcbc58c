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

#include "utp/uncertainty.h"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace utp {

OutcomeDistribution::OutcomeDistribution(std::vector<double> probs, double tol) : probs_(std::move(probs)) {
    if (probs_.empty()) {
        throw std::invalid_argument("invariant violated: OutcomeDistribution is empty");
    }
    double sum = 0;
    for (auto &p : probs_) {
        if (!std::isfinite(p) || p < -1e-12 || p > 1 + 1e-12) {
            throw std::invalid_argument("invariant violated: OutcomeDistribution entry " + std::to_string(p) + " outside [0, 1]");
        }
        p = std::clamp(p, 0.0, 1.0);
        sum += p;
    }
    if (std::abs(sum - 1) > tol) {
        throw std::invalid_argument("invariant violated: OutcomeDistribution sums to " + std::to_string(sum));
    }
}

size_t OutcomeDistribution::mode() const {
    return size_t(std::max_element(probs_.begin(), probs_.end()) - probs_.begin());
}

std::string_view unit_name(LogBase base) {
    return base == LogBase::Two ? "bits" : "nats";
}

EntropyValue shannon_entropy(const OutcomeDistribution &p, LogBase base) {
    double h = 0;
    for (double x : p.probs()) {
        if (x > kZeroProbability) {
            h -= x * log_in(x, base);
        }
    }
    return {std::max(h, 0.0), base};
}

PairUncertainty pair_uncertainty_split(
    const Tester &t, const UnitaryOperator &v, const UnitaryOperator &w, LogBase base) {
    if (v.dim() != w.dim()) {
        throw std::invalid_argument("pair_uncertainty: operators have different dimensions");
    }
    return {
        shannon_entropy(outcome_distribution(t, v), base),
        shannon_entropy(outcome_distribution(t, w), base),
    };
}

EntropyValue pair_uncertainty(const Tester &t, const UnitaryOperator &v, const UnitaryOperator &w, LogBase base) {
    return pair_uncertainty_split(t, v, w, base).total();
}

OverlapMatrix overlap_matrix(const ProjectiveMeasurement &m, const UnitaryOperator &v, const UnitaryOperator &w) {
    if (m.dim() != v.dim() || v.dim() != w.dim()) {
        throw std::invalid_argument("overlap_matrix: dimension mismatch");
    }
    const size_t n = m.dim();
    ComplexMatrix chi = m.as_matrix();
    // Entry (i, j) of chi^dagger A chi is <chi_i|A|chi_j>.
    ComplexMatrix rep = adjoint(chi) * (w * v.adjoint()).matrix() * chi;
    OverlapMatrix out{n, std::vector<double>(n * n)};
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            out.values[i * n + j] = std::norm(rep(i, j));
        }
    }
    return out;
}

OverlapMatrix overlap_matrix(const MesMeasurement &m, const UnitaryOperator &v, const UnitaryOperator &w) {
    const size_t d = m.local_dim();
    if (v.dim() != d || w.dim() != d) {
        throw std::invalid_argument("overlap_matrix: dimension mismatch");
    }
    // <nu_i|(A (x) I)|nu_j> = Tr(N_i^dagger A N_j) / d.
    const size_t n = d * d;
    ComplexMatrix a = (w * v.adjoint()).matrix();
    std::vector<ComplexMatrix> images;
    std::vector<ComplexMatrix> locals;
    images.reserve(n);
    locals.reserve(n);
    for (size_t j = 0; j < n; j++) {
        locals.push_back(m.local_unitary(j));
        images.push_back(a * locals.back());
    }
    OverlapMatrix out{n, std::vector<double>(n * n)};
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            Complex s = 0;
            auto li = locals[i].entries();
            auto ij = images[j].entries();
            for (size_t k = 0; k < li.size(); k++) {
                s += std::conj(li[k]) * ij[k];
            }
            out.values[i * n + j] = std::norm(s / double(d));
        }
    }
    return out;
}

BoundResult bound_from_overlaps(const OverlapMatrix &overlaps, LogBase base) {
    BoundResult r;
    double best = -1;
    for (size_t i = 0; i < overlaps.n; i++) {
        for (size_t j = 0; j < overlaps.n; j++) {
            double x = overlaps(i, j);
            if (x > best + 1e-12) {
                r.i = i;
                r.j = j;
            }
            best = std::max(best, x);
        }
    }
    r.max_overlap = std::min(best, 1.0);
    r.value = {r.max_overlap > 0 ? std::max(0.0, -log_in(r.max_overlap, base)) : INFINITY, base};
    return r;
}

BoundResult projective_bound(
    const ProjectiveMeasurement &m, const UnitaryOperator &v, const UnitaryOperator &w, LogBase base) {
    return bound_from_overlaps(overlap_matrix(m, v, w), base);
}

BoundResult mes_bound(const MesMeasurement &m, const UnitaryOperator &v, const UnitaryOperator &w, LogBase base) {
    return bound_from_overlaps(overlap_matrix(m, v, w), base);
}

BoundResult povm_bound_rotated(const Povm &m, const UnitaryOperator &a, const UnitaryOperator &b, LogBase base) {
    if (m.dim() != a.dim() || a.dim() != b.dim()) {
        throw std::invalid_argument("povm_bound: dimension mismatch");
    }
    // sqrt(A M A^dagger) = A sqrt(M) A^dagger, so the norm of the product is
    // || sqrt(M_i) A^dagger B sqrt(M_j) ||.
    std::vector<ComplexMatrix> roots;
    roots.reserve(m.size());
    for (const auto &e : m.elements()) {
        roots.push_back(psd_sqrt(e));
    }
    ComplexMatrix link = (a.adjoint() * b).matrix();
    const size_t n = m.size();
    OverlapMatrix squared{n, std::vector<double>(n * n)};
    for (size_t i = 0; i < n; i++) {
        ComplexMatrix left = roots[i] * link;
        for (size_t j = 0; j < n; j++) {
            double s = operator_norm(left * roots[j]);
            squared.values[i * n + j] = s * s;
        }
    }
    return bound_from_overlaps(squared, base);
}

BoundResult povm_bound(const Povm &m, const UnitaryOperator &v, const UnitaryOperator &w, LogBase base) {
    return povm_bound_rotated(m, v.adjoint(), w.adjoint(), base);
}

double variance_uncertainty(const UnitaryOperator &u, const PureState &psi) {
    if (u.dim() != psi.dim()) {
        throw std::invalid_argument("variance_uncertainty: dimension mismatch");
    }
    double e = std::norm(inner(psi.amplitudes(), u.matrix() * psi.amplitudes()));
    return std::sqrt(std::max(0.0, 1 - e));
}

}  // namespace utp
