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

#include "utp/nelder_mead.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace utp {

namespace {

struct Vertex {
    std::vector<double> x;
    double f;
};

class Simplex {
   public:
    Simplex(const Objective &f, const NelderMeadOptions &options, size_t &evaluations)
        : f_(f), options_(options), evaluations_(evaluations) {
    }

    bool exhausted() const {
        return evaluations_ >= options_.max_evaluations;
    }

    double eval(std::span<const double> x) {
        evaluations_++;
        double v = f_(x);
        return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
    }

    // Runs one simplex from `start` until collapse, target, or budget.
    // Returns true when the simplex collapsed.
    bool run(Vertex &best, double step) {
        const size_t n = best.x.size();
        std::vector<Vertex> s;
        s.reserve(n + 1);
        s.push_back(best);
        for (size_t k = 0; k < n && !exhausted(); k++) {
            std::vector<double> x = best.x;
            x[k] += step;
            double v = eval(x);
            s.push_back({std::move(x), v});
        }
        if (s.size() != n + 1) {
            return false;
        }

        std::vector<double> centroid(n);
        auto point = [&](double t, const std::vector<double> &worst) {
            std::vector<double> x(n);
            for (size_t k = 0; k < n; k++) {
                x[k] = centroid[k] + t * (worst[k] - centroid[k]);
            }
            return x;
        };

        while (true) {
            std::sort(s.begin(), s.end(), [](const Vertex &a, const Vertex &b) {
                return a.f < b.f;
            });
            if (s.front().f < best.f) {
                best = s.front();
            }
            if (best.f <= options_.target || exhausted()) {
                return false;
            }
            double spread = s.back().f - s.front().f;
            double size = 0;
            for (size_t v = 1; v <= n; v++) {
                for (size_t k = 0; k < n; k++) {
                    size = std::max(size, std::abs(s[v].x[k] - s[0].x[k]));
                }
            }
            if (spread <= options_.ftol && size <= options_.xtol) {
                return true;
            }
            if (size <= 1e-14) {
                return true;
            }

            std::fill(centroid.begin(), centroid.end(), 0.0);
            for (size_t v = 0; v < n; v++) {
                for (size_t k = 0; k < n; k++) {
                    centroid[k] += s[v].x[k] / double(n);
                }
            }
            Vertex &worst = s.back();
            std::vector<double> xr = point(-1.0, worst.x);
            double fr = eval(xr);
            if (fr < s.front().f) {
                std::vector<double> xe = point(-2.0, worst.x);
                double fe = exhausted() ? fr + 1 : eval(xe);
                worst = fe < fr ? Vertex{std::move(xe), fe} : Vertex{std::move(xr), fr};
                continue;
            }
            if (fr < s[n - 1].f) {
                worst = {std::move(xr), fr};
                continue;
            }
            if (exhausted()) {
                continue;
            }
            bool outside = fr < worst.f;
            std::vector<double> xc = point(outside ? -0.5 : 0.5, worst.x);
            double fc = eval(xc);
            if (fc < std::min(fr, worst.f)) {
                worst = {std::move(xc), fc};
                continue;
            }
            // Shrink toward the best vertex.
            for (size_t v = 1; v <= n && !exhausted(); v++) {
                for (size_t k = 0; k < n; k++) {
                    s[v].x[k] = s[0].x[k] + 0.5 * (s[v].x[k] - s[0].x[k]);
                }
                s[v].f = eval(s[v].x);
            }
        }
    }

   private:
    const Objective &f_;
    const NelderMeadOptions &options_;
    size_t &evaluations_;
};

}  // namespace

NelderMeadResult nelder_mead(const Objective &f, std::vector<double> x0, const NelderMeadOptions &options) {
    if (x0.empty()) {
        throw std::invalid_argument("nelder_mead: empty starting point");
    }
    NelderMeadResult result;
    Simplex simplex(f, options, result.evaluations);
    Vertex best{std::move(x0), 0};
    best.f = simplex.eval(best.x);

    double step = options.initial_step;
    double previous = std::numeric_limits<double>::infinity();
    while (!simplex.exhausted() && best.f > options.target) {
        bool collapsed = simplex.run(best, step);
        if (!collapsed) {
            break;
        }
        if (!(best.f < previous)) {
            result.converged = true;
            break;
        }
        previous = best.f;
        step = std::max(step * 0.1, 1e-9);
    }
    result.x = std::move(best.x);
    result.value = best.f;
    return result;
}

MultiStartResult multi_start_minimize(const Objective &f, const StartSampler &sampler, const MultiStartOptions &options) {
    if (options.restarts == 0 || options.budget == 0) {
        throw std::invalid_argument("multi_start_minimize: budget and restarts must be positive");
    }
    const size_t restarts = std::min(options.restarts, options.budget);
    std::vector<NelderMeadResult> results(restarts);
    std::vector<std::exception_ptr> errors(restarts);

    auto run_one = [&](size_t r) noexcept {
        try {
            SplitMix64 rng(derive_seed(options.seed, r));
            std::vector<double> x0 = sampler(r, rng);
            NelderMeadOptions nm;
            // Spread the remainder over the first restarts so the total is exact.
            nm.max_evaluations = options.budget / restarts + (r < options.budget % restarts ? 1 : 0);
            nm.initial_step = options.initial_step;
            nm.target = options.target;
            results[r] = nelder_mead(f, std::move(x0), nm);
        } catch (...) {
            errors[r] = std::current_exception();
        }
    };

    size_t threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, restarts);
    if (threads <= 1) {
        for (size_t r = 0; r < restarts; r++) {
            run_one(r);
        }
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (size_t t = 0; t < threads; t++) {
            pool.emplace_back([&, t] {
                for (size_t r = t; r < restarts; r += threads) {
                    run_one(r);
                }
            });
        }
    }

    for (const auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }

    MultiStartResult out;
    for (size_t r = 0; r < restarts; r++) {
        out.evaluations += results[r].evaluations;
        if (r == 0 || results[r].value < out.best.value) {
            out.best = results[r];
            out.best_restart = r;
        }
    }
    return out;
}

}  // namespace utp
