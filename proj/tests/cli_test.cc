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


#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "cli.h"
#include "registry.h"
#include "utp/io.h"

namespace utp::cli {
namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

Json json_of(const Result &r) {
    return Json::parse(r.out);
}

std::vector<std::string> lines_of(const std::string &s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);) {
        out.push_back(line);
    }
    return out;
}

TEST(AngleParser, Expressions) {
    using std::numbers::pi;
    EXPECT_DOUBLE_EQ(parse_angle("pi/4"), pi / 4);
    EXPECT_DOUBLE_EQ(parse_angle("3*pi/8"), 3 * pi / 8);
    EXPECT_DOUBLE_EQ(parse_angle("-0.25"), -0.25);
    EXPECT_DOUBLE_EQ(parse_angle(" (pi - 1) / 2 "), (pi - 1) / 2);
    EXPECT_DOUBLE_EQ(parse_angle("0"), 0);
    EXPECT_THROW(parse_angle("pie"), std::invalid_argument);
    EXPECT_THROW(parse_angle("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_angle(""), std::invalid_argument);
}

TEST(Cli, BoundExample) {
    auto r = invoke({"bound", "--v", "identity", "--w", "pauli-x", "--measurement", "computational"});
    ASSERT_EQ(r.code, 0) << r.err;
    Json j = json_of(r);
    EXPECT_EQ(j["bound_bits"], 0.0);
    EXPECT_EQ(j["argmax"], Json::array({0, 1}));
    EXPECT_TRUE(r.err.empty());
}

TEST(Cli, BoundInNatsAndBell) {
    auto r = invoke({"bound", "--w", "omega-minus", "--measurement", "su2:pi/4,0", "--log-base", "e"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NEAR(json_of(r)["bound_nats"].get<double>(), std::log(2.0), 1e-12);
    r = invoke({"bound", "--w", "omega-minus", "--measurement", "bell"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NEAR(json_of(r)["bound_bits"].get<double>(), 1, 1e-12);
}

TEST(Cli, SweepOmegaCsv) {
    auto r = invoke({"sweep", "--pair", "i-omega", "--grid", "101"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto lines = lines_of(r.out);
    ASSERT_EQ(lines.size(), 10202u);
    EXPECT_EQ(lines[0], "theta,phi,max_overlap,diag_overlap,bound_bits");
    double lowest = 2;
    for (size_t k = 1; k < lines.size(); k++) {
        std::istringstream row(lines[k]);
        std::string field;
        std::vector<double> values;
        while (std::getline(row, field, ',')) {
            values.push_back(std::stod(field));
        }
        ASSERT_EQ(values.size(), 5u);
        lowest = std::min(lowest, values[2]);
    }
    EXPECT_NEAR(lowest, 0.5, 1e-9);
    // Theta is the outer loop.
    EXPECT_EQ(lines[1].substr(0, 2), "0,");
    EXPECT_EQ(lines[2].substr(0, 2), "0,");
}

TEST(Cli, SweepJson) {
    auto r = invoke({"sweep", "--pair", "i-sigmay", "--n-theta", "3", "--n-phi", "2", "--output", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    Json j = json_of(r);
    EXPECT_EQ(j["records"].size(), 6u);
    EXPECT_LT(j["max_closed_form_deviation"].get<double>(), 1e-12);
}

TEST(Cli, MuubCheckExample) {
    auto r = invoke({"muub-check", "--basis1", "i,pauli-y", "--basis2", "omega-minus,omega-plus"});
    ASSERT_EQ(r.code, 0) << r.err;
    Json j = json_of(r);
    EXPECT_EQ(j["certified"], true);
    EXPECT_EQ(j["kappa"], 2.0);
}

TEST(Cli, DistinguishExample) {
    auto r = invoke({"distinguish", "--v", "pauli-x", "--w", "pauli-z"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(json_of(r)["distinguishable"], true);
    r = invoke({"distinguish", "--v", "identity", "--w", "omega-minus"});
    EXPECT_EQ(json_of(r)["distinguishable"], false);
}

TEST(Cli, ClockShiftNeedDim) {
    auto r = invoke({"distinguish", "--v", "clock", "--w", "shift", "--dim", "5"});
    ASSERT_EQ(r.code, 0) << r.err;
    Json j = json_of(r);
    EXPECT_EQ(j["distinguishable"], true);
    EXPECT_EQ(j["trivial"], false);
    EXPECT_LT(j["witness_bits"].get<double>(), 1e-9);
}

TEST(Cli, EntropyAndPovmAndMesBounds) {
    auto r = invoke({"entropy", "--w", "omega-minus", "--measurement", "su2:pi/4,0", "--input", "vdag-chi:0"});
    ASSERT_EQ(r.code, 0) << r.err;
    Json j = json_of(r);
    EXPECT_NEAR(j["total_bits"].get<double>(), 1, 1e-12);
    EXPECT_NEAR(j["bound_bits"].get<double>(), 1, 1e-12);
    r = invoke({"povm-bound", "--w", "omega-minus", "--povm", "su2:pi/4,0"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NEAR(json_of(r)["bound_bits"].get<double>(), 1, 1e-12);
    r = invoke({"mes-bound", "--w", "omega-minus"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NEAR(json_of(r)["bound_bits"].get<double>(), 1, 1e-12);
    r = invoke({"entropy", "--w", "pauli-x", "--measurement", "bell"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(json_of(r)["kind"], "mes");
}

TEST(Cli, SearchAndGameAreReproducible) {
    std::vector<std::string> search{"search", "--w", "omega-minus", "--measurement", "su2:pi/4,0", "--budget", "800", "--seed", "5"};
    auto a = invoke(search);
    auto b = invoke(search);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    EXPECT_NEAR(json_of(a)["achieved_bits"].get<double>(), 1, 1e-4);

    std::vector<std::string> game{"game", "--w", "omega-minus", "--measurement", "su2:pi/4,0", "--trials", "100000", "--seed", "7"};
    a = invoke(game);
    b = invoke(game);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    Json j = json_of(a);
    EXPECT_NEAR(j["empirical_bits"].get<double>(), 1, 0.02);
    EXPECT_EQ(j["seed"], 7);

    game.insert(game.end(), {"--output", "csv"});
    auto csv = lines_of(invoke(game).out);
    ASSERT_EQ(csv.size(), 5u);
    EXPECT_EQ(csv[0], "operator,outcome,count");
}

TEST(Cli, OperatorsFromJsonFiles) {
    auto path = std::filesystem::temp_directory_path() / "utp_cli_test_op.json";
    std::ofstream(path) << R"({"dim": 2, "re": [[0, 1], [1, 0]], "im": [[0, 0], [0, 0]]})";
    auto r = invoke({"bound", "--w", path.string(), "--measurement", "computational"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(json_of(r)["bound_bits"], 0.0);
    std::filesystem::remove(path);
}

TEST(Cli, UsageErrorsExitTwo) {
    auto r = invoke({"bound", "--v", "foo", "--w", "pauli-x", "--measurement", "computational"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("unknown operator \"foo\""), std::string::npos);
    EXPECT_TRUE(r.out.empty());

    r = invoke({"bound", "--v", "clock", "--dim", "3", "--w", "pauli-x", "--measurement", "computational"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("dimension mismatch"), std::string::npos);

    auto path = std::filesystem::temp_directory_path() / "utp_cli_test_bad.json";
    std::ofstream(path) << "{not json";
    r = invoke({"bound", "--w", path.string(), "--measurement", "computational"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("malformed JSON"), std::string::npos);
    std::filesystem::remove(path);

    EXPECT_EQ(invoke({}).code, 2);
    EXPECT_EQ(invoke({"frobnicate"}).code, 2);
    EXPECT_EQ(invoke({"sweep"}).code, 2);
    EXPECT_EQ(invoke({"sweep", "--pair", "i-x"}).code, 2);
    EXPECT_EQ(invoke({"bound", "--w", "pauli-x", "--measurement", "su2:pi/4"}).code, 2);
    EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(Cli, LogGoesToStderrOnly) {
    ::setenv("UTP_LOG", "debug", 1);
    auto r = invoke({"sweep", "--pair", "i-omega", "--grid", "3"});
    ::unsetenv("UTP_LOG");
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.err.find("[utp]"), std::string::npos);
    EXPECT_EQ(r.out.find("[utp"), std::string::npos);
    auto quiet = invoke({"sweep", "--pair", "i-omega", "--grid", "3"});
    EXPECT_TRUE(quiet.err.empty());
    EXPECT_EQ(quiet.out, r.out);
}

}  // namespace
}  // namespace utp::cli
