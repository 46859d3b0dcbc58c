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

#include "utp/saturation.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "utp/nelder_mead.h"

namespace utp {

namespace {

constexpr double kPi = std::numbers::pi;

bool proportional_to_identity(const ComplexMatrix &a, double tol) {
    return max_abs_diff_up_to_phase(a, ComplexMatrix::identity(a.rows())) <= tol;
}

double entropy_bits(std::span<const double> probs) {
    double h = 0;
    for (double p : probs) {
        if (p > kZeroProbability) {
            h -= p * std::log2(p);
        }
    }
    return h;
}

SaturationReport make_report(
    Tester tester,
    const UnitaryOperator &v,
    const UnitaryOperator &w,
    EntropyValue bound,
    bool trivial,
    SaturationMethod method) {
    PairUncertainty split = pair_uncertainty_split(tester, v, w, LogBase::Two);
    EntropyValue achieved = split.total();
    double gap = achieved.value - bound.value;
    return SaturationReport{achieved, bound, gap, std::move(tester), split, trivial, method};
}

/// Basis of traceless Hermitian d x d matrices (generalized Gell-Mann).
std::vector<ComplexMatrix> traceless_hermitian_generators(size_t d) {
    std::vector<ComplexMatrix> gens;
    for (size_t j = 0; j < d; j++) {
        for (size_t k = j + 1; k < d; k++) {
            ComplexMatrix s(d, d);
            s(j, k) = 1;
            s(k, j) = 1;
            gens.push_back(std::move(s));
            ComplexMatrix a(d, d);
            a(j, k) = Complex{0, -1};
            a(k, j) = Complex{0, 1};
            gens.push_back(std::move(a));
        }
    }
    for (size_t l = 1; l < d; l++) {
        ComplexMatrix z(d, d);
        double scale = std::sqrt(2.0 / double(l * (l + 1)));
        for (size_t j = 0; j < l; j++) {
            z(j, j) = scale;
        }
        z(l, l) = -double(l) * scale;
        gens.push_back(std::move(z));
    }
    return gens;
}

/// exp(i sum_k x_k G_k).
ComplexMatrix unitary_from_generators(std::span<const double> x, std::span<const ComplexMatrix> gens) {
    const size_t d = gens.front().rows();
    ComplexMatrix h(d, d);
    for (size_t k = 0; k < gens.size(); k++) {
        h = h + Complex{x[k], 0} * gens[k];
    }
    HermitianEigen e = eig_hermitian(h);
    std::vector<Complex> phases(d);
    for (size_t k = 0; k < d; k++) {
        phases[k] = std::polar(1.0, e.values[k]);
    }
    return e.vectors * ComplexMatrix::diagonal(phases) * adjoint(e.vectors);
}

/// Solves the dense real system a x = b in place by Gaussian elimination with
/// partial pivoting. Returns false when singular.
bool solve_dense(std::vector<double> a, std::vector<double> &b, size_t n) {
    for (size_t col = 0; col < n; col++) {
        size_t piv = col;
        for (size_t r = col + 1; r < n; r++) {
            if (std::abs(a[r * n + col]) > std::abs(a[piv * n + col])) {
                piv = r;
            }
        }
        if (std::abs(a[piv * n + col]) < 1e-300) {
            return false;
        }
        if (piv != col) {
            for (size_t c = 0; c < n; c++) {
                std::swap(a[col * n + c], a[piv * n + c]);
            }
            std::swap(b[col], b[piv]);
        }
        for (size_t r = col + 1; r < n; r++) {
            double f = a[r * n + col] / a[col * n + col];
            for (size_t c = col; c < n; c++) {
                a[r * n + c] -= f * a[col * n + c];
            }
            b[r] -= f * b[col];
        }
    }
    for (size_t i = n; i-- > 0;) {
        double s = b[i];
        for (size_t c = i + 1; c < n; c++) {
            s -= a[i * n + c] * b[c];
        }
        b[i] = s / a[i * n + i];
    }
    return true;
}

using Residuals = std::function<std::vector<double>(std::span<const double>)>;

double sum_squares(const std::vector<double> &r) {
    double s = 0;
    for (double x : r) {
        s += x * x;
    }
    return s;
}

/// Levenberg-Marquardt refinement with central-difference Jacobians.
std::vector<double> polish_least_squares(const Residuals &residuals, std::vector<double> x, int iterations) {
    const size_t n = x.size();
    std::vector<double> r = residuals(x);
    double cost = sum_squares(r);
    double mu = 1e-6;
    for (int it = 0; it < iterations && cost > 1e-30; it++) {
        const size_t m = r.size();
        std::vector<double> jac(m * n);
        for (size_t k = 0; k < n; k++) {
            const double h = 1e-6;
            std::vector<double> xp = x;
            std::vector<double> xm = x;
            xp[k] += h;
            xm[k] -= h;
            std::vector<double> rp = residuals(xp);
            std::vector<double> rm = residuals(xm);
            for (size_t i = 0; i < m; i++) {
                jac[i * n + k] = (rp[i] - rm[i]) / (2 * h);
            }
        }
        std::vector<double> jtj(n * n);
        std::vector<double> jtr(n);
        for (size_t i = 0; i < m; i++) {
            for (size_t a = 0; a < n; a++) {
                jtr[a] += jac[i * n + a] * r[i];
                for (size_t b = 0; b < n; b++) {
                    jtj[a * n + b] += jac[i * n + a] * jac[i * n + b];
                }
            }
        }
        bool improved = false;
        for (int attempt = 0; attempt < 8 && !improved; attempt++) {
            std::vector<double> lhs = jtj;
            for (size_t a = 0; a < n; a++) {
                lhs[a * n + a] += mu * (1 + jtj[a * n + a]);
            }
            std::vector<double> step = jtr;
            if (!solve_dense(lhs, step, n)) {
                mu *= 10;
                continue;
            }
            std::vector<double> candidate = x;
            for (size_t a = 0; a < n; a++) {
                candidate[a] -= step[a];
            }
            std::vector<double> rc = residuals(candidate);
            double c = sum_squares(rc);
            if (c < cost) {
                x = std::move(candidate);
                r = std::move(rc);
                cost = c;
                mu = std::max(mu / 10, 1e-15);
                improved = true;
            } else {
                mu *= 10;
            }
        }
        if (!improved) {
            break;
        }
    }
    return x;
}

struct FlatSearchResult {
    ComplexMatrix frame;  ///< the unitary G found
    double flatness = 0;  ///< max_ij |overlap_ij - 1/D|
};

/// Minimises sum_ij (D overlap_ij(G) - 1)^2 over G = exp(iH), then polishes.
FlatSearchResult search_flat_frame(
    const std::function<std::vector<double>(const ComplexMatrix &)> &overlaps,
    size_t d,
    double subspace_dim,
    const SearchOptions &options) {
    const auto gens = traceless_hermitian_generators(d);
    const size_t n_params = gens.size();
    Residuals residuals = [&](std::span<const double> x) {
        std::vector<double> ov = overlaps(unitary_from_generators(x, gens));
        for (auto &o : ov) {
            o = subspace_dim * o - 1;
        }
        return ov;
    };
    Objective objective = [&](std::span<const double> x) {
        return sum_squares(residuals(x));
    };
    StartSampler sampler = [&](size_t, SplitMix64 &rng) {
        std::vector<double> x(n_params);
        for (auto &v : x) {
            v = (2 * rng.uniform() - 1) * kPi;
        }
        return x;
    };
    MultiStartOptions ms;
    ms.budget = options.budget;
    ms.restarts = options.restarts;
    ms.seed = options.seed;
    ms.threads = options.threads;
    ms.initial_step = 0.3;
    ms.target = 1e-24;
    MultiStartResult best = multi_start_minimize(objective, sampler, ms);
    std::vector<double> x = polish_least_squares(residuals, best.best.x, 40);

    FlatSearchResult out{unitary_from_generators(x, gens), 0};
    for (double r : residuals(x)) {
        out.flatness = std::max(out.flatness, std::abs(r) / subspace_dim);
    }
    return out;
}

/// Barycentric weights (over at most three eigenvalues) placing 0 in their
/// convex hull, or empty.
std::vector<std::pair<size_t, double>> zero_mixture(std::span<const Complex> values, double tol) {
    const size_t n = values.size();
    for (size_t a = 0; a < n; a++) {
        if (std::abs(values[a]) <= tol) {
            return {{a, 1.0}};
        }
    }
    for (size_t a = 0; a < n; a++) {
        for (size_t b = a + 1; b < n; b++) {
            Complex ab = values[b] - values[a];
            double len2 = std::norm(ab);
            if (len2 == 0) {
                continue;
            }
            double t = -(values[a].real() * ab.real() + values[a].imag() * ab.imag()) / len2;
            if (t < 0 || t > 1) {
                continue;
            }
            if (std::abs(values[a] + t * ab) <= tol) {
                return {{a, 1 - t}, {b, t}};
            }
        }
    }
    for (size_t a = 0; a < n; a++) {
        for (size_t b = a + 1; b < n; b++) {
            for (size_t c = b + 1; c < n; c++) {
                // Solve wa pa + wb pb + wc pc = 0 with wa + wb + wc = 1.
                Complex pa = values[a], pb = values[b], pc = values[c];
                double det = (pb.real() - pa.real()) * (pc.imag() - pa.imag()) -
                             (pc.real() - pa.real()) * (pb.imag() - pa.imag());
                if (std::abs(det) < 1e-14) {
                    continue;
                }
                double wb = ((-pa.real()) * (pc.imag() - pa.imag()) - (pc.real() - pa.real()) * (-pa.imag())) / det;
                double wc = ((pb.real() - pa.real()) * (-pa.imag()) - (-pa.real()) * (pb.imag() - pa.imag())) / det;
                double wa = 1 - wb - wc;
                if (wa >= -1e-12 && wb >= -1e-12 && wc >= -1e-12) {
                    wa = std::max(wa, 0.0);
                    wb = std::max(wb, 0.0);
                    wc = std::max(wc, 0.0);
                    double s = wa + wb + wc;
                    return {{a, wa / s}, {b, wb / s}, {c, wc / s}};
                }
            }
        }
    }
    return {};
}

}  // namespace

std::string_view method_name(SaturationMethod method) {
    return method == SaturationMethod::RowConstruction ? "row-construction" : "numerical-search";
}

ProjectiveMeasurement su2_basis(double theta, double phi) {
    constexpr double slack = 1e-12;
    if (!(theta >= -slack && theta <= kPi + slack && phi >= -slack && phi <= kPi + slack)) {
        throw std::invalid_argument(
            "su2_basis: angles must lie in [0, pi], got theta = " + std::to_string(theta) + ", phi = " +
            std::to_string(phi));
    }
    double c = std::cos(theta);
    double s = std::sin(theta);
    Complex e = std::polar(1.0, phi);
    std::vector<PureState> basis;
    basis.emplace_back(ComplexVector{c, e * s});
    basis.emplace_back(ComplexVector{-s, e * c});
    return ProjectiveMeasurement(std::move(basis));
}

std::pair<UnitaryOperator, UnitaryOperator> su2_pair_operators(Su2Pair pair) {
    if (pair == Su2Pair::IdentitySigmaY) {
        return {pauli(Pauli::I), pauli(Pauli::Y)};
    }
    return {pauli(Pauli::I), omega(-1)};
}

Su2ClosedForm su2_closed_form(Su2Pair pair, double theta, double phi) {
    double c2 = std::cos(theta) * std::cos(theta);
    double s2 = std::sin(theta) * std::sin(theta);
    double s2t = std::sin(2 * theta);
    double sp = std::sin(phi);
    double k = s2t * s2t * sp * sp;
    if (pair == Su2Pair::IdentitySigmaY) {
        return {k, c2 * c2 + s2 * s2 + 2 * c2 * s2 * std::cos(2 * phi)};
    }
    return {(1 + k) / 2, (1 - k) / 2};
}

Su2Sweep su2_overlap_surface(Su2Pair pair, size_t n_theta, size_t n_phi) {
    if (n_theta < 2 || n_phi < 2) {
        throw std::invalid_argument("su2_overlap_surface: grid needs at least 2 points per axis");
    }
    auto [v, w] = su2_pair_operators(pair);
    auto grid = [](size_t k, size_t n) {
        return k + 1 == n ? kPi : double(k) * kPi / double(n - 1);
    };
    Su2Sweep out;
    out.records.reserve(n_theta * n_phi);
    for (size_t a = 0; a < n_theta; a++) {
        double theta = grid(a, n_theta);
        for (size_t b = 0; b < n_phi; b++) {
            double phi = grid(b, n_phi);
            OverlapMatrix o = overlap_matrix(su2_basis(theta, phi), v, w);
            double mx = std::min(1.0, *std::max_element(o.values.begin(), o.values.end()));
            Su2ClosedForm cf = su2_closed_form(pair, theta, phi);
            double dev = std::max({
                std::abs(o(0, 0) - cf.diagonal),
                std::abs(o(1, 1) - cf.diagonal),
                std::abs(o(0, 1) - cf.off_diagonal),
                std::abs(o(1, 0) - cf.off_diagonal),
            });
            out.max_closed_form_deviation = std::max(out.max_closed_form_deviation, dev);
            out.records.push_back({theta, phi, mx, o(0, 0), 0.0 - std::log2(mx)});
        }
    }
    return out;
}

std::optional<SaturationReport> saturating_tester_by_construction(
    const ProjectiveMeasurement &m, const UnitaryOperator &v, const UnitaryOperator &w, double tol) {
    OverlapMatrix o = overlap_matrix(m, v, w);
    BoundResult bound = bound_from_overlaps(o);
    const size_t d = m.dim();
    for (size_t i = 0; i < d; i++) {
        // Column i: distribution of outcomes j when probing W with V^dagger|chi_i>.
        size_t support = 0;
        double top = 0;
        for (size_t j = 0; j < d; j++) {
            if (o(j, i) > tol) {
                support++;
                top = std::max(top, o(j, i));
            }
        }
        if (support == 0) {
            continue;
        }
        double level = 1.0 / double(support);
        bool flat = true;
        for (size_t j = 0; j < d && flat; j++) {
            if (o(j, i) > tol && std::abs(o(j, i) - level) > tol) {
                flat = false;
            }
        }
        if (!flat || std::abs(level - bound.max_overlap) > tol) {
            continue;
        }
        PureState input(normalized(v.adjoint().matrix() * m.vector(i)));
        bool trivial = is_trivial_measurement(m, v, w, std::max(tol, kDefaultTol));
        return make_report(
            Tester(ProjectiveTester{std::move(input), m}), v, w, bound.value, trivial, SaturationMethod::RowConstruction);
    }
    return std::nullopt;
}

ComplexVector state_from_angles(std::span<const double> angles, size_t d) {
    if (angles.size() != 2 * d - 2) {
        throw std::invalid_argument("state_from_angles: expected 2d - 2 angles");
    }
    ComplexVector psi(d);
    double carry = 1;
    for (size_t k = 0; k + 1 < d; k++) {
        psi[k] = carry * std::cos(angles[k]);
        carry *= std::sin(angles[k]);
    }
    psi[d - 1] = carry;
    for (size_t k = 1; k < d; k++) {
        psi[k] *= std::polar(1.0, angles[d - 2 + k]);
    }
    return psi;
}

SaturationReport search_min_uncertainty(
    const ProjectiveMeasurement &m, const UnitaryOperator &v, const UnitaryOperator &w, const SearchOptions &options) {
    if (options.budget == 0) {
        throw std::invalid_argument("search_min_uncertainty: budget must be at least 1");
    }
    if (m.dim() != v.dim() || v.dim() != w.dim()) {
        throw std::invalid_argument("search_min_uncertainty: dimension mismatch");
    }
    const size_t d = m.dim();
    BoundResult bound = projective_bound(m, v, w);
    ComplexMatrix a = (w * v.adjoint()).matrix();
    if (d == 1 || proportional_to_identity(a, kDefaultTol)) {
        PureState input(normalized(v.adjoint().matrix() * m.vector(0)));
        return make_report(
            Tester(ProjectiveTester{std::move(input), m}), v, w, bound.value, true, SaturationMethod::NumericalSearch);
    }

    ComplexMatrix chi_dag = adjoint(m.as_matrix());
    const ComplexMatrix vm = chi_dag * v.matrix();
    const ComplexMatrix wm = chi_dag * w.matrix();
    Objective objective = [&](std::span<const double> x) {
        ComplexVector psi = state_from_angles(x, d);
        ComplexVector av = vm * psi;
        ComplexVector aw = wm * psi;
        std::vector<double> pv(d);
        std::vector<double> pw(d);
        for (size_t i = 0; i < d; i++) {
            pv[i] = std::norm(av[i]);
            pw[i] = std::norm(aw[i]);
        }
        return entropy_bits(pv) + entropy_bits(pw);
    };
    StartSampler sampler = [&](size_t, SplitMix64 &rng) {
        std::vector<double> x(2 * d - 2);
        for (size_t k = 0; k + 1 < d; k++) {
            x[k] = rng.uniform() * kPi / 2;
        }
        for (size_t k = d - 1; k < x.size(); k++) {
            x[k] = rng.uniform() * 2 * kPi;
        }
        return x;
    };
    MultiStartOptions ms;
    ms.budget = options.budget;
    ms.restarts = options.restarts;
    ms.seed = options.seed;
    ms.threads = options.threads;
    ms.initial_step = 0.4;
    ms.target = bound.value.value;
    MultiStartResult best = multi_start_minimize(objective, sampler, ms);

    PureState input(normalized(state_from_angles(best.best.x, d)));
    bool trivial = is_trivial_measurement(m, v, w);
    return make_report(
        Tester(ProjectiveTester{std::move(input), m}), v, w, bound.value, trivial, SaturationMethod::NumericalSearch);
}

MuubCertificate muub_certify_by_saturation(const UnitaryBasis &b1, const UnitaryBasis &b2, const CertifyOptions &options) {
    if (b1.dim() != b2.dim() || b1.subspace_dim() != b2.subspace_dim()) {
        throw std::invalid_argument("muub_certify_by_saturation: bases differ in dimension or subspace dimension");
    }
    const size_t d = b1.dim();
    const size_t big_d = b1.subspace_dim();
    const bool full_space = big_d == d * d && d > 1;
    const double expected_trace = full_space ? 1.0 : std::sqrt(double(d));
    const double tol = options.tol;

    const MesMeasurement bell = bell_basis(std::max<size_t>(d, 2));
    std::vector<ComplexMatrix> weyl;
    if (full_space) {
        for (size_t i = 0; i < d * d; i++) {
            weyl.push_back(bell.local_unitary(i));
        }
    }

    MuubCertificate cert;
    cert.certified = true;
    cert.trace_consistent = true;
    for (size_t mi = 0; mi < big_d; mi++) {
        for (size_t ni = 0; ni < big_d; ni++) {
            const UnitaryOperator &vn = b1[ni];
            const UnitaryOperator &wm = b2[mi];
            PairWitness pw;
            pw.m = mi;
            pw.n = ni;
            ComplexMatrix a = (wm * vn.adjoint()).matrix();
            pw.trace_modulus = std::abs(trace(a));

            if (proportional_to_identity(a, kDefaultTol)) {
                // Overlap 1 on the diagonal in every basis.
                pw.flatness_deviation = 1 - 1.0 / double(big_d);
            } else {
                SearchOptions search = options.search;
                search.seed = derive_seed(options.search.seed, mi * big_d + ni);
                if (!full_space) {
                    auto overlaps = [&](const ComplexMatrix &g) {
                        ComplexMatrix rep = adjoint(g) * a * g;
                        std::vector<double> out;
                        out.reserve(d * d);
                        for (const auto &z : rep.entries()) {
                            out.push_back(std::norm(z));
                        }
                        return out;
                    };
                    FlatSearchResult found = search_flat_frame(overlaps, d, double(d), search);
                    pw.flatness_deviation = found.flatness;
                    if (found.flatness <= tol) {
                        // The frame is unitary only up to rounding; re-orthonormalise through the
                        // measurement constructor's tolerance.
                        ProjectiveMeasurement meas = ProjectiveMeasurement::from_unitary(UnitaryOperator(found.frame, 1e-8));
                        pw.report = saturating_tester_by_construction(meas, vn, wm, std::max(10 * tol, 1e-10));
                    }
                } else {
                    auto overlaps = [&](const ComplexMatrix &g) {
                        ComplexMatrix rotated = adjoint(g) * a * g;
                        std::vector<ComplexMatrix> images;
                        images.reserve(weyl.size());
                        for (const auto &b : weyl) {
                            images.push_back(rotated * b);
                        }
                        std::vector<double> out;
                        out.reserve(weyl.size() * weyl.size());
                        for (size_t i = 0; i < weyl.size(); i++) {
                            auto bi = weyl[i].entries();
                            for (size_t j = 0; j < weyl.size(); j++) {
                                auto ij = images[j].entries();
                                Complex s = 0;
                                for (size_t k = 0; k < bi.size(); k++) {
                                    s += std::conj(bi[k]) * ij[k];
                                }
                                out.push_back(std::norm(s / double(d)));
                            }
                        }
                        return out;
                    };
                    FlatSearchResult found = search_flat_frame(overlaps, d, double(d * d), search);
                    pw.flatness_deviation = found.flatness;
                    if (found.flatness <= tol) {
                        UnitaryOperator g(found.frame, 1e-8);
                        std::vector<PureState> states;
                        states.reserve(d * d);
                        for (const auto &b : weyl) {
                            ComplexMatrix n = g.matrix() * b;
                            std::vector<Complex> flat(n.entries().begin(), n.entries().end());
                            ComplexVector vec(std::move(flat));
                            states.emplace_back(Complex{1 / std::sqrt(double(d)), 0} * vec);
                        }
                        MesMeasurement meas(d, std::move(states));
                        // Input (V_n^dagger N_0 (x) I)|Phi> is deterministic under V_n.
                        UnitaryOperator c = vn.adjoint() * UnitaryOperator(meas.local_unitary(0), 1e-8);
                        MesMeasurement absorbed = absorb_mes_input(meas, c);
                        BoundResult bound = mes_bound(absorbed, vn, wm);
                        pw.report = make_report(
                            Tester(MesTester{std::move(absorbed)}), vn, wm, bound.value, false,
                            SaturationMethod::NumericalSearch);
                    }
                }
            }

            pw.saturated = pw.report.has_value() && std::abs(pw.report->gap) <= kSaturationGapBits &&
                           std::abs(pw.report->achieved.value - std::log2(double(big_d))) <= kSaturationGapBits;
            cert.certified = cert.certified && pw.saturated;
            if (std::abs(pw.trace_modulus - expected_trace) > tol) {
                cert.trace_consistent = false;
            }
            cert.pairs.push_back(std::move(pw));
        }
    }
    if (!cert.certified) {
        cert.trace_consistent = false;
    }
    return cert;
}

ZeroBoundWitness zero_bound_witness(const UnitaryOperator &v, const UnitaryOperator &w, double tol) {
    if (v.dim() != w.dim()) {
        throw std::invalid_argument("zero_bound_witness: dimension mismatch");
    }
    ZeroBoundWitness out;
    const size_t d = v.dim();
    ComplexMatrix wv = (w * v.adjoint()).matrix();
    if (proportional_to_identity(wv, std::max(tol, kDefaultTol))) {
        Tester t = trivial_tester(v, w);
        out.achieved_bits = pair_uncertainty(t, v, w).value;
        out.tester = std::move(t);
        out.trivial = true;
        return out;
    }

    UnitaryOperator link = v.adjoint() * w;
    auto eig = eig_unitary(link.matrix(), std::max(tol, kDefaultTol));
    std::vector<Complex> values;
    for (const auto &e : eig) {
        values.push_back(e.value);
    }
    if (hull_distance_to_origin(values) > tol) {
        return out;
    }
    auto mixture = zero_mixture(values, std::max(tol, 1e-12));
    if (mixture.empty()) {
        return out;
    }
    ComplexVector chi(d);
    for (const auto &[k, weight] : mixture) {
        chi = chi + Complex{std::sqrt(weight), 0} * eig[k].vector;
    }
    chi = normalized(chi);

    ComplexVector first = normalized(v.matrix() * chi);
    ComplexVector second = w.matrix() * chi;
    second = normalized(second - inner(first, second) * first);
    std::vector<ComplexVector> seed{first, second};
    std::vector<PureState> basis;
    for (auto &b : complete_orthonormal_basis(seed, d)) {
        basis.emplace_back(std::move(b));
    }
    ProjectiveMeasurement meas(std::move(basis));
    out.trivial = is_trivial_measurement(meas, v, w, std::max(tol, kDefaultTol));
    Tester t(ProjectiveTester{PureState(chi), std::move(meas)});
    out.achieved_bits = pair_uncertainty(t, v, w).value;
    out.tester = std::move(t);
    out.found = true;
    return out;
}

}  // namespace utp
