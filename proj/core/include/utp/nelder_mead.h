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

#ifndef UTP_NELDER_MEAD_H
#define UTP_NELDER_MEAD_H

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "utp/rng.h"

namespace utp {

using Objective = std::function<double(std::span<const double>)>;

struct NelderMeadOptions {
    size_t max_evaluations = 1000;
    double initial_step = 0.5;
    /// Converged when the simplex's value spread and edge length both drop
    /// below these.
    double ftol = 1e-15;
    double xtol = 1e-10;
    /// Stop as soon as a vertex reaches this value.
    double target = -std::numeric_limits<double>::infinity();
};

struct NelderMeadResult {
    std::vector<double> x;
    double value = std::numeric_limits<double>::infinity();
    size_t evaluations = 0;
    bool converged = false;
};

/// Downhill simplex with the standard coefficients (reflect 1, expand 2,
/// contract 1/2, shrink 1/2). When the simplex collapses before the budget is
/// spent, it is rebuilt around the best vertex with a tenth of the previous
/// step; the run ends once a rebuild fails to improve the best value.
NelderMeadResult nelder_mead(const Objective &f, std::vector<double> x0, const NelderMeadOptions &options);

struct MultiStartOptions {
    /// Total objective evaluations across all restarts.
    size_t budget = 5000;
    size_t restarts = 20;
    uint64_t seed = 0;
    double initial_step = 0.5;
    double target = -std::numeric_limits<double>::infinity();
    /// 0 picks std::thread::hardware_concurrency().
    size_t threads = 0;
};

struct MultiStartResult {
    NelderMeadResult best;
    size_t best_restart = 0;
    size_t evaluations = 0;
};

/// Generates a starting point for restart r from its private generator.
using StartSampler = std::function<std::vector<double>(size_t restart, SplitMix64 &rng)>;

/// Independent Nelder-Mead runs, one per restart, each with budget/restarts
/// evaluations and a generator seeded by derive_seed(seed, restart). Restarts
/// may run concurrently; the winner is the minimum of (value, restart index),
/// so the result does not depend on scheduling.
MultiStartResult multi_start_minimize(const Objective &f, const StartSampler &sampler, const MultiStartOptions &options);

}  // namespace utp

#endif
