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

#ifndef UTP_RNG_H
#define UTP_RNG_H

#include <cmath>
#include <cstdint>
#include <numbers>

namespace utp {

/// SplitMix64 (Steele, Lea, Flood 2014).
///
/// State transition: state += 0x9E3779B97F4A7C15; the output is the mix of
/// the new state. Because the state advances by a constant, the n-th output
/// (n = 0, 1, ...) of a generator seeded with s is mix(s + (n + 1) * gamma)
/// and can be computed directly with `at`; this is what makes per-trial
/// streams splittable.
class SplitMix64 {
   public:
    using result_type = uint64_t;
    static constexpr uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

    explicit SplitMix64(uint64_t seed) : state_(seed) {
    }

    static constexpr uint64_t mix(uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Output number n of a generator seeded with seed.
    static constexpr uint64_t at(uint64_t seed, uint64_t n) {
        return mix(seed + (n + 1) * kGamma);
    }

    /// Uniform double in [0, 1) from the top 53 bits.
    static constexpr double to_unit(uint64_t x) {
        return double(x >> 11) * 0x1.0p-53;
    }

    static constexpr uint64_t min() {
        return 0;
    }
    static constexpr uint64_t max() {
        return UINT64_MAX;
    }

    uint64_t operator()() {
        state_ += kGamma;
        return mix(state_);
    }

    double uniform() {
        return to_unit((*this)());
    }

    /// Standard normal via Box-Muller (one value per call, two draws).
    double normal() {
        double u1 = uniform();
        double u2 = uniform();
        if (u1 < 0x1.0p-60) {
            u1 = 0x1.0p-60;
        }
        return std::sqrt(-2 * std::log(u1)) * std::cos(2 * std::numbers::pi * u2);
    }

   private:
    uint64_t state_;
};

/// Derives an independent child seed, e.g. one per restart or per instance.
constexpr uint64_t derive_seed(uint64_t seed, uint64_t stream) {
    return SplitMix64::mix(SplitMix64::at(seed, stream) ^ 0xD1B54A32D192ED03ULL);
}

}  // namespace utp

#endif
