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


#ifndef UTP_GAMESIM_H
#define UTP_GAMESIM_H

#include <cstdint>
#include <span>
#include <vector>

#include "utp/testers.h"
#include "utp/uncertainty.h"

namespace utp {

struct GameConfig {
    Tester tester;
    UnitaryOperator v;
    UnitaryOperator w;
    size_t trials = 1;
    uint64_t seed = 0;
    /// Probability that Bob applies v.
    double operator_bias = 0.5;
    LogBase base = LogBase::Two;
};

struct GameTranscript {
    std::vector<uint64_t> counts_v;
    std::vector<uint64_t> counts_w;
    /// Frequencies per side; all zeros when that side was never played.
    std::vector<double> empirical_v;
    std::vector<double> empirical_w;
    EntropyValue empirical;
    EntropyValue analytic;
    /// Fraction of trials where Alice's modal guess matched Bob's outcome.
    double guess_success_rate = 0;
    size_t trials = 0;
    uint64_t seed = 0;

    bool operator==(const GameTranscript &) const = default;
};

/// Simulates the guessing game. Trial t draws two uniforms,
/// u1 = to_unit(at(seed, 2t)) and u2 = to_unit(at(seed, 2t + 1)) from
/// SplitMix64: Bob applies v iff u1 < operator_bias, and the outcome is the
/// smallest k whose cumulative probability exceeds u2. Alice guesses the
/// modal outcome of the analytic distribution for the announced operator.
GameTranscript run_game(const GameConfig &cfg);

/// Plug-in Shannon entropy of a histogram. Throws on an empty or all-zero
/// histogram.
EntropyValue empirical_entropy(std::span<const uint64_t> counts, LogBase base = LogBase::Two);

}  // namespace utp

#endif
