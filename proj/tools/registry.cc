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


#include "registry.h"

#include <cctype>
#include <charconv>
#include <filesystem>
#include <numbers>
#include <stdexcept>

#include "utp/io.h"
#include "utp/saturation.h"

namespace utp::cli {

namespace {

class AngleParser {
   public:
    explicit AngleParser(const std::string &text) : s_(text) {
    }

    double parse() {
        double v = expr();
        skip();
        if (pos_ != s_.size()) {
            error("unexpected '" + std::string(1, s_[pos_]) + "'");
        }
        return v;
    }

   private:
    [[noreturn]] void error(const std::string &why) const {
        throw std::invalid_argument("bad angle \"" + s_ + "\": " + why);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
            pos_++;
        }
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            pos_++;
            return true;
        }
        return false;
    }

    double expr() {
        double v = term();
        while (true) {
            if (eat('+')) {
                v += term();
            } else if (eat('-')) {
                v -= term();
            } else {
                return v;
            }
        }
    }

    double term() {
        double v = factor();
        while (true) {
            if (eat('*')) {
                v *= factor();
            } else if (eat('/')) {
                double d = factor();
                if (d == 0) {
                    error("division by zero");
                }
                v /= d;
            } else {
                return v;
            }
        }
    }

    double factor() {
        if (eat('-')) {
            return -factor();
        }
        if (eat('+')) {
            return factor();
        }
        if (eat('(')) {
            double v = expr();
            if (!eat(')')) {
                error("missing ')'");
            }
            return v;
        }
        skip();
        if (s_.compare(pos_, 2, "pi") == 0) {
            pos_ += 2;
            return std::numbers::pi;
        }
        const char *begin = s_.data() + pos_;
        const char *end = s_.data() + s_.size();
        double v = 0;
        auto [ptr, ec] = std::from_chars(begin, end, v);
        if (ec != std::errc() || ptr == begin) {
            error("expected a number or pi");
        }
        pos_ += size_t(ptr - begin);
        return v;
    }

    std::string s_;
    size_t pos_ = 0;
};

bool looks_like_path(const std::string &spec) {
    return spec.find('/') != std::string::npos || spec.ends_with(".json") || std::filesystem::exists(spec);
}

size_t parse_index(const std::string &text, const std::string &spec) {
    size_t k = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), k);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw std::invalid_argument("bad index in \"" + spec + "\"");
    }
    return k;
}

}  // namespace

double parse_angle(const std::string &text) {
    return AngleParser(text).parse();
}

UnitaryOperator parse_operator(const std::string &spec, size_t dim) {
    if (spec == "pauli-x") {
        return pauli(Pauli::X);
    }
    if (spec == "pauli-y") {
        return pauli(Pauli::Y);
    }
    if (spec == "pauli-z") {
        return pauli(Pauli::Z);
    }
    if (spec == "identity" || spec == "i") {
        return UnitaryOperator::identity(dim);
    }
    if (spec == "clock") {
        return clock_shift_pair(dim).p;
    }
    if (spec == "shift") {
        return clock_shift_pair(dim).q;
    }
    if (spec == "omega-minus") {
        return omega(-1);
    }
    if (spec == "omega-plus") {
        return omega(1);
    }
    if (looks_like_path(spec)) {
        return operator_from_json(read_json_file(spec));
    }
    throw std::invalid_argument(
        "unknown operator \"" + spec +
        "\"; use pauli-x, pauli-y, pauli-z, identity, clock, shift, omega-minus, omega-plus or a JSON file");
}

std::vector<UnitaryOperator> parse_operator_list(const std::string &spec, size_t dim) {
    std::vector<UnitaryOperator> out;
    size_t start = 0;
    while (true) {
        size_t comma = spec.find(',', start);
        std::string item = spec.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (item.empty()) {
            throw std::invalid_argument("empty element in operator list \"" + spec + "\"");
        }
        out.push_back(parse_operator(item, dim));
        if (comma == std::string::npos) {
            return out;
        }
        start = comma + 1;
    }
}

Measurement parse_measurement(const std::string &spec, size_t dim) {
    if (spec.starts_with("su2:")) {
        std::string rest = spec.substr(4);
        size_t comma = rest.find(',');
        if (comma == std::string::npos) {
            throw std::invalid_argument("su2 measurement needs two angles, e.g. su2:pi/4,0");
        }
        if (dim != 2) {
            throw std::invalid_argument("dimension mismatch: su2 measurements act on d = 2, operators have d = " + std::to_string(dim));
        }
        return su2_basis(parse_angle(rest.substr(0, comma)), parse_angle(rest.substr(comma + 1)));
    }
    if (spec == "computational") {
        return ProjectiveMeasurement::computational(dim);
    }
    if (spec == "bell") {
        return bell_basis(dim);
    }
    if (looks_like_path(spec)) {
        Json j = read_json_file(spec);
        std::string kind = j.is_object() && j.contains("kind") && j["kind"].is_string() ? j["kind"].get<std::string>() : "";
        if (kind == "projective") {
            return projective_measurement_from_json(j);
        }
        if (kind == "mes") {
            return mes_measurement_from_json(j);
        }
        if (kind == "povm") {
            return povm_from_json(j);
        }
        throw std::invalid_argument(spec + ": measurement \"kind\" must be projective, mes or povm");
    }
    throw std::invalid_argument(
        "unknown measurement \"" + spec + "\"; use su2:THETA,PHI, computational, bell or a JSON file");
}

PureState parse_input(const std::string &spec, const ProjectiveMeasurement &m, const UnitaryOperator &v) {
    auto indexed = [&](const std::string &prefix) -> std::optional<size_t> {
        if (!spec.starts_with(prefix)) {
            return std::nullopt;
        }
        size_t k = parse_index(spec.substr(prefix.size()), spec);
        if (k >= m.dim()) {
            throw std::invalid_argument("input index " + std::to_string(k) + " out of range for d = " + std::to_string(m.dim()));
        }
        return k;
    };
    if (auto k = indexed("basis:")) {
        return PureState(ComplexVector::basis(m.dim(), *k));
    }
    if (auto k = indexed("chi:")) {
        return PureState(m.vector(*k));
    }
    if (auto k = indexed("vdag-chi:")) {
        return PureState(normalized(v.adjoint().matrix() * m.vector(*k)));
    }
    if (looks_like_path(spec)) {
        return state_from_json(read_json_file(spec));
    }
    throw std::invalid_argument("unknown input \"" + spec + "\"; use basis:K, chi:K, vdag-chi:K or a JSON file");
}

}  // namespace utp::cli
