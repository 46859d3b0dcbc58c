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


#ifndef UTP_IO_H
#define UTP_IO_H

#include <filesystem>

#include <nlohmann/json.hpp>

#include "utp/gamesim.h"
#include "utp/operators.h"
#include "utp/testers.h"

namespace utp {

using Json = nlohmann::ordered_json;

// Matrix literals are {"dim": d, "re": [[...]], "im": [[...]]} (rows outer);
// vector literals are {"dim": d, "re": [...], "im": [...]}. Loaders
// re-validate every invariant and throw std::invalid_argument naming the
// violated one.

Json matrix_to_json(const ComplexMatrix &m);
ComplexMatrix matrix_from_json(const Json &j);

Json vector_to_json(const ComplexVector &v);
ComplexVector vector_from_json(const Json &j);

Json operator_to_json(const UnitaryOperator &u);
UnitaryOperator operator_from_json(const Json &j);

Json state_to_json(const PureState &psi);
PureState state_from_json(const Json &j);

// Measurements carry a "kind" of "projective" ({"basis": [vector...]}),
// "mes" ({"local_dim": d, "basis": [vector...]}) or "povm"
// ({"elements": [matrix...]}).
Json measurement_to_json(const ProjectiveMeasurement &m);
Json measurement_to_json(const MesMeasurement &m);
Json measurement_to_json(const Povm &m);
ProjectiveMeasurement projective_measurement_from_json(const Json &j);
MesMeasurement mes_measurement_from_json(const Json &j);
Povm povm_from_json(const Json &j);

/// {"kind": ..., "input": ..., "measurement": ...}. The MES input is always
/// the canonical |Phi>; a POVM input is a density-matrix literal.
Json tester_to_json(const Tester &t);
Tester tester_from_json(const Json &j);

Json transcript_to_json(const GameTranscript &t);

/// Parses a file, reporting malformed JSON as std::invalid_argument.
Json read_json_file(const std::filesystem::path &path);

}  // namespace utp

#endif
