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

#ifndef UTP_DISTRIBUTION_H
#define UTP_DISTRIBUTION_H

#include <cmath>
#include <span>
#include <string_view>
#include <vector>

#include "utp/linalg.h"

namespace utp {

/// Probability vector over measurement outcomes. Entries within 1e-12 of
/// [0, 1] are clamped into it; the sum must be 1 within tol.
class OutcomeDistribution {
   public:
    explicit OutcomeDistribution(std::vector<double> probs, double tol = kDefaultTol);

    size_t size() const {
        return probs_.size();
    }
    double operator[](size_t k) const {
        return probs_[k];
    }
    std::span<const double> probs() const {
        return probs_;
    }
    /// Index of the largest probability (smallest index on ties).
    size_t mode() const;

   private:
    std::vector<double> probs_;
};

enum class LogBase { Two, Natural };

inline double log_in(double x, LogBase base) {
    return base == LogBase::Two ? std::log2(x) : std::log(x);
}

std::string_view unit_name(LogBase base);

struct EntropyValue {
    double value = 0;
    LogBase base = LogBase::Two;

    double bits() const {
        return base == LogBase::Two ? value : value / std::log(2.0);
    }

    bool operator==(const EntropyValue &) const = default;
};

}  // namespace utp

#endif
