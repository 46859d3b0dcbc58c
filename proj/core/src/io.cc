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


#include "utp/io.h"

#include <fstream>
#include <stdexcept>

namespace utp {

namespace {

[[noreturn]] void fail(const std::string &what) {
    throw std::invalid_argument(what);
}

const Json &field(const Json &j, const char *key, const char *context) {
    if (!j.is_object() || !j.contains(key)) {
        fail(std::string(context) + ": missing field \"" + key + "\"");
    }
    return j.at(key);
}

double number(const Json &j, const char *context) {
    if (!j.is_number()) {
        fail(std::string(context) + ": expected a number, got " + j.dump());
    }
    return j.get<double>();
}

size_t dim_field(const Json &j, const char *context) {
    const Json &d = field(j, "dim", context);
    if (!d.is_number_integer() || d.get<long long>() < 1) {
        fail(std::string(context) + ": \"dim\" must be a positive integer");
    }
    return d.get<size_t>();
}

/// Wraps constructor failures so the message says which literal was rejected.
template <class F>
auto validated(const char *context, F &&build) {
    try {
        return build();
    } catch (const std::invalid_argument &e) {
        throw std::invalid_argument(std::string(context) + ": " + e.what());
    }
}

template <class T, class F>
std::vector<T> array_of(const Json &j, const char *context, F &&item) {
    if (!j.is_array() || j.empty()) {
        fail(std::string(context) + ": expected a non-empty array");
    }
    std::vector<T> out;
    out.reserve(j.size());
    for (const auto &e : j) {
        out.push_back(item(e));
    }
    return out;
}

}  // namespace

Json matrix_to_json(const ComplexMatrix &m) {
    Json re = Json::array();
    Json im = Json::array();
    for (size_t r = 0; r < m.rows(); r++) {
        Json rr = Json::array();
        Json ii = Json::array();
        for (size_t c = 0; c < m.cols(); c++) {
            rr.push_back(m(r, c).real());
            ii.push_back(m(r, c).imag());
        }
        re.push_back(std::move(rr));
        im.push_back(std::move(ii));
    }
    return Json{{"dim", m.rows()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

ComplexMatrix matrix_from_json(const Json &j) {
    const char *ctx = "matrix literal";
    const size_t d = dim_field(j, ctx);
    const Json &re = field(j, "re", ctx);
    const Json &im = field(j, "im", ctx);
    if (!re.is_array() || !im.is_array() || re.size() != d || im.size() != d) {
        fail("matrix literal: \"re\" and \"im\" must each have dim = " + std::to_string(d) + " rows");
    }
    ComplexMatrix m(d, d);
    for (size_t r = 0; r < d; r++) {
        if (!re[r].is_array() || !im[r].is_array() || re[r].size() != d || im[r].size() != d) {
            fail("matrix literal: row " + std::to_string(r) + " must have dim = " + std::to_string(d) + " entries");
        }
        for (size_t c = 0; c < d; c++) {
            m(r, c) = Complex{number(re[r][c], ctx), number(im[r][c], ctx)};
        }
    }
    return m;
}

Json vector_to_json(const ComplexVector &v) {
    Json re = Json::array();
    Json im = Json::array();
    for (size_t k = 0; k < v.dim(); k++) {
        re.push_back(v[k].real());
        im.push_back(v[k].imag());
    }
    return Json{{"dim", v.dim()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

ComplexVector vector_from_json(const Json &j) {
    const char *ctx = "vector literal";
    const size_t d = dim_field(j, ctx);
    const Json &re = field(j, "re", ctx);
    const Json &im = field(j, "im", ctx);
    if (!re.is_array() || !im.is_array() || re.size() != d || im.size() != d) {
        fail("vector literal: \"re\" and \"im\" must each have dim = " + std::to_string(d) + " entries");
    }
    ComplexVector v(d);
    for (size_t k = 0; k < d; k++) {
        v[k] = Complex{number(re[k], ctx), number(im[k], ctx)};
    }
    return v;
}

Json operator_to_json(const UnitaryOperator &u) {
    return matrix_to_json(u.matrix());
}

UnitaryOperator operator_from_json(const Json &j) {
    ComplexMatrix m = matrix_from_json(j);
    return validated("operator literal", [&] {
        return UnitaryOperator(std::move(m));
    });
}

Json state_to_json(const PureState &psi) {
    return vector_to_json(psi.amplitudes());
}

PureState state_from_json(const Json &j) {
    ComplexVector v = vector_from_json(j);
    return validated("state literal", [&] {
        return PureState(std::move(v));
    });
}

Json measurement_to_json(const ProjectiveMeasurement &m) {
    Json basis = Json::array();
    for (const auto &b : m.basis()) {
        basis.push_back(state_to_json(b));
    }
    return Json{{"kind", "projective"}, {"basis", std::move(basis)}};
}

Json measurement_to_json(const MesMeasurement &m) {
    Json basis = Json::array();
    for (const auto &b : m.basis()) {
        basis.push_back(state_to_json(b));
    }
    return Json{{"kind", "mes"}, {"local_dim", m.local_dim()}, {"basis", std::move(basis)}};
}

Json measurement_to_json(const Povm &m) {
    Json elements = Json::array();
    for (const auto &e : m.elements()) {
        elements.push_back(matrix_to_json(e));
    }
    return Json{{"kind", "povm"}, {"elements", std::move(elements)}};
}

ProjectiveMeasurement projective_measurement_from_json(const Json &j) {
    auto basis = array_of<PureState>(field(j, "basis", "projective measurement"), "projective measurement basis", state_from_json);
    return validated("projective measurement", [&] {
        return ProjectiveMeasurement(std::move(basis));
    });
}

MesMeasurement mes_measurement_from_json(const Json &j) {
    const Json &d = field(j, "local_dim", "mes measurement");
    if (!d.is_number_integer() || d.get<long long>() < 1) {
        fail("mes measurement: \"local_dim\" must be a positive integer");
    }
    auto basis = array_of<PureState>(field(j, "basis", "mes measurement"), "mes measurement basis", state_from_json);
    return validated("mes measurement", [&] {
        return MesMeasurement(d.get<size_t>(), std::move(basis));
    });
}

Povm povm_from_json(const Json &j) {
    auto elements = array_of<ComplexMatrix>(field(j, "elements", "povm"), "povm elements", matrix_from_json);
    return validated("povm", [&] {
        return Povm(std::move(elements));
    });
}

Json tester_to_json(const Tester &t) {
    switch (t.kind()) {
        case TesterKind::Projective:
            return Json{
                {"kind", "projective"},
                {"input", state_to_json(t.projective().input)},
                {"measurement", measurement_to_json(t.projective().measurement)},
            };
        case TesterKind::Mes: {
            const MesMeasurement &m = t.mes().measurement;
            return Json{
                {"kind", "mes"},
                {"input", state_to_json(mes_state(m.local_dim()))},
                {"measurement", measurement_to_json(m)},
            };
        }
        case TesterKind::Povm:
            return Json{
                {"kind", "povm"},
                {"input", matrix_to_json(t.povm().input.matrix())},
                {"measurement", measurement_to_json(t.povm().measurement)},
            };
    }
    fail("tester: unknown kind");
}

Tester tester_from_json(const Json &j) {
    const Json &kind = field(j, "kind", "tester");
    if (!kind.is_string()) {
        fail("tester: \"kind\" must be a string");
    }
    const std::string k = kind.get<std::string>();
    const Json &meas = field(j, "measurement", "tester");
    if (k == "projective") {
        PureState input = state_from_json(field(j, "input", "tester"));
        ProjectiveMeasurement m = projective_measurement_from_json(meas);
        return validated("tester", [&] {
            return Tester(ProjectiveTester{std::move(input), std::move(m)});
        });
    }
    if (k == "mes") {
        MesMeasurement m = mes_measurement_from_json(meas);
        if (j.contains("input")) {
            PureState input = state_from_json(j.at("input"));
            PureState phi = mes_state(m.local_dim());
            if (input.dim() != phi.dim() || std::abs(inner(phi.amplitudes(), input.amplitudes())) < 1 - kDefaultTol) {
                fail("tester: invariant violated: MES tester input must be the canonical maximally entangled state");
            }
        }
        return Tester(MesTester{std::move(m)});
    }
    if (k == "povm") {
        ComplexMatrix rho = matrix_from_json(field(j, "input", "tester"));
        DensityMatrix input = validated("density matrix literal", [&] {
            return DensityMatrix(std::move(rho));
        });
        Povm m = povm_from_json(meas);
        return validated("tester", [&] {
            return Tester(PovmTester{std::move(input), std::move(m)});
        });
    }
    fail("tester: unknown kind \"" + k + "\" (expected projective, mes or povm)");
}

Json transcript_to_json(const GameTranscript &t) {
    return Json{
        {"counts_v", t.counts_v},
        {"counts_w", t.counts_w},
        {"empirical_bits", t.empirical.bits()},
        {"analytic_bits", t.analytic.bits()},
        {"seed", t.seed},
        {"trials", t.trials},
        {"guess_success_rate", t.guess_success_rate},
        {"empirical_v", t.empirical_v},
        {"empirical_w", t.empirical_w},
    };
}

Json read_json_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        fail("cannot open " + path.string());
    }
    try {
        return Json::parse(in);
    } catch (const Json::parse_error &e) {
        fail("malformed JSON in " + path.string() + ": " + e.what());
    }
}

}  // namespace utp
