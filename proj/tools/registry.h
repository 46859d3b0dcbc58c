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


// Parsing of the textual operator, measurement and angle specs accepted on
// the command line.

#ifndef UTP_TOOLS_REGISTRY_H
#define UTP_TOOLS_REGISTRY_H

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "utp/operators.h"
#include "utp/testers.h"

namespace utp::cli {

/// Evaluates an angle in radians: numbers, `pi`, + - * / and parentheses,
/// e.g. "pi/4", "3*pi/8", "-0.25". Throws std::invalid_argument.
double parse_angle(const std::string &text);

/// Named operators (pauli-x, pauli-y, pauli-z, identity or i, clock, shift,
/// omega-minus, omega-plus) or a path to a JSON operator literal. `dim` sizes
/// identity, clock and shift.
UnitaryOperator parse_operator(const std::string &spec, size_t dim);

/// Splits "a,b,c" and parses each element.
std::vector<UnitaryOperator> parse_operator_list(const std::string &spec, size_t dim);

using Measurement = std::variant<ProjectiveMeasurement, MesMeasurement, Povm>;

/// "su2:theta,phi", "computational", "bell", or a path to a JSON measurement
/// (told apart by its "kind"). `dim` is the dimension of the tested system.
Measurement parse_measurement(const std::string &spec, size_t dim);

/// Input states for projective testers: "basis:k" (computational), "chi:k"
/// (k-th measurement vector), "vdag-chi:k" (V^dagger applied to it), or a JSON
/// state literal.
PureState parse_input(const std::string &spec, const ProjectiveMeasurement &m, const UnitaryOperator &v);

}  // namespace utp::cli

#endif
