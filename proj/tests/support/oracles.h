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


// Independent reference computations. These avoid the library's linear
// algebra on purpose: raw nested vectors, textbook formulas, no shared code.

#ifndef UTP_TESTS_ORACLES_H
#define UTP_TESTS_ORACLES_H

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

namespace utp::oracle {

using C = std::complex<double>;
using Mat = std::vector<std::vector<C>>;
using Vec = std::vector<C>;

inline Mat mul(const Mat &a, const Mat &b) {
    size_t n = a.size(), m = b[0].size(), k = b.size();
    Mat out(n, Vec(m));
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < m; j++) {
            for (size_t l = 0; l < k; l++) {
                out[i][j] += a[i][l] * b[l][j];
            }
        }
    }
    return out;
}

inline Mat dagger(const Mat &a) {
    Mat out(a[0].size(), Vec(a.size()));
    for (size_t i = 0; i < a.size(); i++) {
        for (size_t j = 0; j < a[0].size(); j++) {
            out[j][i] = std::conj(a[i][j]);
        }
    }
    return out;
}

/// <x|A|y>.
inline C sandwich(const Vec &x, const Mat &a, const Vec &y) {
    C s = 0;
    for (size_t i = 0; i < x.size(); i++) {
        for (size_t j = 0; j < y.size(); j++) {
            s += std::conj(x[i]) * a[i][j] * y[j];
        }
    }
    return s;
}

inline double entropy_bits(const std::vector<double> &p) {
    double h = 0;
    for (double x : p) {
        if (x > 0) {
            h -= x * std::log2(x);
        }
    }
    return h;
}

/// max_ij |<chi_i|W V^dagger|chi_j>|^2 over a basis given as vectors.
inline double max_overlap(const std::vector<Vec> &chi, const Mat &v, const Mat &w) {
    Mat a = mul(w, dagger(v));
    double best = 0;
    for (const auto &x : chi) {
        for (const auto &y : chi) {
            best = std::max(best, std::norm(sandwich(x, a, y)));
        }
    }
    return best;
}

/// 0 lies in the convex hull of points on the unit circle iff no open
/// half-plane through 0 contains them all, i.e. iff every gap between
/// consecutive phases is at most pi.
inline bool circle_hull_contains_origin(std::vector<C> points, double slack = 1e-9) {
    std::vector<double> phases;
    for (auto p : points) {
        phases.push_back(std::arg(p));
    }
    std::sort(phases.begin(), phases.end());
    double widest = phases.front() + 2 * std::numbers::pi - phases.back();
    for (size_t k = 1; k < phases.size(); k++) {
        widest = std::max(widest, phases[k] - phases[k - 1]);
    }
    return widest <= std::numbers::pi + slack;
}

/// Reference SplitMix64 written out from the published constants.
inline uint64_t splitmix64_output(uint64_t seed, uint64_t n) {
    uint64_t z = seed + (n + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline double unit_from(uint64_t x) {
    return double(x >> 11) / 9007199254740992.0;
}

}  // namespace utp::oracle

#endif
