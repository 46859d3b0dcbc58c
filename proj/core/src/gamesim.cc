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


#include "utp/gamesim.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "utp/rng.h"

namespace utp {

namespace {

size_t sample(std::span<const double> probs, double u) {
    double acc = 0;
    for (size_t k = 0; k < probs.size(); k++) {
        acc += probs[k];
        if (u < acc) {
            return k;
        }
    }
    // Rounding can leave the total a hair below 1; fall back to the last
    // outcome with nonzero weight.
    for (size_t k = probs.size(); k-- > 0;) {
        if (probs[k] > 0) {
            return k;
        }
    }
    return probs.size() - 1;
}

std::vector<double> frequencies(const std::vector<uint64_t> &counts) {
    uint64_t total = std::accumulate(counts.begin(), counts.end(), uint64_t{0});
    std::vector<double> out(counts.size());
    if (total > 0) {
        for (size_t k = 0; k < counts.size(); k++) {
            out[k] = double(counts[k]) / double(total);
        }
    }
    return out;
}

}  // namespace

EntropyValue empirical_entropy(std::span<const uint64_t> counts, LogBase base) {
    uint64_t total = std::accumulate(counts.begin(), counts.end(), uint64_t{0});
    if (total == 0) {
        throw std::invalid_argument("empirical_entropy: histogram has no counts");
    }
    double h = 0;
    for (uint64_t c : counts) {
        if (c > 0) {
            double p = double(c) / double(total);
            h -= p * log_in(p, base);
        }
    }
    return {std::max(h, 0.0), base};
}

GameTranscript run_game(const GameConfig &cfg) {
    if (cfg.trials == 0) {
        throw std::invalid_argument("invariant violated: GameConfig trials must be at least 1");
    }
    if (!(cfg.operator_bias >= 0 && cfg.operator_bias <= 1)) {
        throw std::invalid_argument("invariant violated: GameConfig operator_bias must lie in [0, 1]");
    }
    if (cfg.v.dim() != cfg.tester.dim() || cfg.w.dim() != cfg.tester.dim()) {
        throw std::invalid_argument("run_game: operator and tester dimensions differ");
    }
    const OutcomeDistribution pv = outcome_distribution(cfg.tester, cfg.v);
    const OutcomeDistribution pw = outcome_distribution(cfg.tester, cfg.w);
    const size_t guess_v = pv.mode();
    const size_t guess_w = pw.mode();

    GameTranscript out;
    out.counts_v.assign(pv.size(), 0);
    out.counts_w.assign(pw.size(), 0);
    out.trials = cfg.trials;
    out.seed = cfg.seed;
    uint64_t hits = 0;
    for (uint64_t t = 0; t < cfg.trials; t++) {
        double u1 = SplitMix64::to_unit(SplitMix64::at(cfg.seed, 2 * t));
        double u2 = SplitMix64::to_unit(SplitMix64::at(cfg.seed, 2 * t + 1));
        if (u1 < cfg.operator_bias) {
            size_t k = sample(pv.probs(), u2);
            out.counts_v[k]++;
            hits += k == guess_v;
        } else {
            size_t k = sample(pw.probs(), u2);
            out.counts_w[k]++;
            hits += k == guess_w;
        }
    }

    out.empirical_v = frequencies(out.counts_v);
    out.empirical_w = frequencies(out.counts_w);
    auto side = [&](const std::vector<uint64_t> &counts) {
        bool played = std::any_of(counts.begin(), counts.end(), [](uint64_t c) {
            return c > 0;
        });
        return played ? empirical_entropy(counts, cfg.base).value : 0.0;
    };
    out.empirical = {side(out.counts_v) + side(out.counts_w), cfg.base};
    out.analytic = {shannon_entropy(pv, cfg.base).value + shannon_entropy(pw, cfg.base).value, cfg.base};
    out.guess_success_rate = double(hits) / double(cfg.trials);
    return out;
}

}  // namespace utp
