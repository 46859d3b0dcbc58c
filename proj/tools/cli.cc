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


#include "cli.h"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <sstream>

#include "registry.h"
#include "utp/gamesim.h"
#include "utp/io.h"
#include "utp/saturation.h"

namespace utp::cli {

namespace {

enum class LogLevel { Quiet, Info, Debug };

class Log {
   public:
    Log(std::ostream &err) : err_(err) {
        const char *env = std::getenv("UTP_LOG");
        std::string v = env ? env : "quiet";
        if (v == "info") {
            level_ = LogLevel::Info;
        } else if (v == "debug") {
            level_ = LogLevel::Debug;
        }
    }

    void info(const std::string &msg) const {
        if (level_ >= LogLevel::Info) {
            err_ << "[utp] " << msg << "\n";
        }
    }
    void debug(const std::string &msg) const {
        if (level_ >= LogLevel::Debug) {
            err_ << "[utp:debug] " << msg << "\n";
        }
    }

   private:
    std::ostream &err_;
    LogLevel level_ = LogLevel::Quiet;
};

struct Options {
    std::string v = "identity";
    std::string w;
    std::string measurement;
    std::string input;
    std::string tester;
    std::string pair;
    std::string basis1;
    std::string basis2;
    std::string output;
    std::string log_base = "2";
    size_t dim = 2;
    size_t grid = 101;
    size_t n_theta = 0;
    size_t n_phi = 0;
    size_t budget = SearchOptions{}.budget;
    size_t restarts = SearchOptions{}.restarts;
    size_t threads = 0;
    size_t trials = 100000;
    uint64_t seed = 0;
    double bias = 0.5;
    double tol = 1e-9;
};

LogBase base_of(const Options &o) {
    return o.log_base == "e" ? LogBase::Natural : LogBase::Two;
}

std::string unit_key(const char *stem, LogBase base) {
    return std::string(stem) + "_" + std::string(unit_name(base));
}

std::string csv_number(double x) {
    std::ostringstream s;
    s << std::setprecision(12) << (x == 0 ? 0.0 : x);
    return s.str();
}

std::pair<UnitaryOperator, UnitaryOperator> operator_pair(const Options &o) {
    UnitaryOperator v = parse_operator(o.v, o.dim);
    UnitaryOperator w = parse_operator(o.w, o.dim);
    if (v.dim() != w.dim()) {
        throw std::invalid_argument(
            "dimension mismatch: --v has d = " + std::to_string(v.dim()) + " but --w has d = " + std::to_string(w.dim()));
    }
    return {std::move(v), std::move(w)};
}

Json bound_json(const BoundResult &b) {
    Json j;
    j[unit_key("bound", b.value.base)] = b.value.value;
    j["argmax"] = {b.i, b.j};
    j["max_overlap"] = b.max_overlap;
    return j;
}

BoundResult any_bound(const Measurement &m, const UnitaryOperator &v, const UnitaryOperator &w, LogBase base) {
    return std::visit(
        [&](const auto &meas) -> BoundResult {
            using T = std::decay_t<decltype(meas)>;
            if constexpr (std::is_same_v<T, ProjectiveMeasurement>) {
                if (meas.dim() != v.dim()) {
                    throw std::invalid_argument("dimension mismatch: measurement has d = " + std::to_string(meas.dim()));
                }
                return projective_bound(meas, v, w, base);
            } else if constexpr (std::is_same_v<T, MesMeasurement>) {
                if (meas.local_dim() != v.dim()) {
                    throw std::invalid_argument("dimension mismatch: MES measurement has local d = " + std::to_string(meas.local_dim()));
                }
                return mes_bound(meas, v, w, base);
            } else {
                if (meas.dim() != v.dim()) {
                    throw std::invalid_argument("dimension mismatch: POVM has d = " + std::to_string(meas.dim()));
                }
                return povm_bound(meas, v, w, base);
            }
        },
        m);
}

/// Tester from --tester, or from --measurement plus --input.
Tester resolve_tester(const Options &o, const UnitaryOperator &v) {
    if (!o.tester.empty()) {
        Tester t = tester_from_json(read_json_file(o.tester));
        if (t.dim() != v.dim()) {
            throw std::invalid_argument("dimension mismatch: tester acts on d = " + std::to_string(t.dim()));
        }
        return t;
    }
    if (o.measurement.empty()) {
        throw std::invalid_argument("give either --tester FILE or --measurement SPEC");
    }
    Measurement m = parse_measurement(o.measurement, v.dim());
    if (auto *p = std::get_if<ProjectiveMeasurement>(&m)) {
        if (p->dim() != v.dim()) {
            throw std::invalid_argument("dimension mismatch: measurement has d = " + std::to_string(p->dim()));
        }
        PureState input = parse_input(o.input.empty() ? "chi:0" : o.input, *p, v);
        return Tester(ProjectiveTester{std::move(input), std::move(*p)});
    }
    if (auto *mes = std::get_if<MesMeasurement>(&m)) {
        return Tester(MesTester{std::move(*mes)});
    }
    throw std::invalid_argument("POVM testers need a density-matrix input; pass them with --tester FILE");
}

int cmd_bound(const Options &o, std::ostream &out) {
    auto [v, w] = operator_pair(o);
    out << bound_json(any_bound(parse_measurement(o.measurement, v.dim()), v, w, base_of(o))).dump() << "\n";
    return kExitOk;
}

int cmd_povm_bound(const Options &o, std::ostream &out) {
    auto [v, w] = operator_pair(o);
    Measurement m = parse_measurement(o.measurement, v.dim());
    if (auto *p = std::get_if<ProjectiveMeasurement>(&m)) {
        m = Povm::from_projective(*p);
    }
    if (!std::holds_alternative<Povm>(m)) {
        throw std::invalid_argument("povm-bound needs a projective or POVM measurement");
    }
    out << bound_json(any_bound(m, v, w, base_of(o))).dump() << "\n";
    return kExitOk;
}

int cmd_mes_bound(const Options &o, std::ostream &out) {
    auto [v, w] = operator_pair(o);
    Measurement m = parse_measurement(o.measurement.empty() ? "bell" : o.measurement, v.dim());
    if (!std::holds_alternative<MesMeasurement>(m)) {
        throw std::invalid_argument("mes-bound needs an MES measurement (bell or a JSON file of kind mes)");
    }
    out << bound_json(any_bound(m, v, w, base_of(o))).dump() << "\n";
    return kExitOk;
}

int cmd_entropy(const Options &o, std::ostream &out) {
    auto [v, w] = operator_pair(o);
    const LogBase base = base_of(o);
    Tester t = resolve_tester(o, v);
    PairUncertainty split = pair_uncertainty_split(t, v, w, base);
    Json j;
    j[unit_key("h_v", base)] = split.v.value;
    j[unit_key("h_w", base)] = split.w.value;
    j[unit_key("total", base)] = split.total().value;
    j["kind"] = kind_name(t.kind());
    switch (t.kind()) {
        case TesterKind::Projective:
            j[unit_key("bound", base)] = projective_bound(t.projective().measurement, v, w, base).value.value;
            break;
        case TesterKind::Mes:
            j[unit_key("bound", base)] = mes_bound(t.mes().measurement, v, w, base).value.value;
            break;
        case TesterKind::Povm:
            j[unit_key("bound", base)] = povm_bound(t.povm().measurement, v, w, base).value.value;
            break;
    }
    out << j.dump() << "\n";
    return kExitOk;
}

int cmd_sweep(const Options &o, std::ostream &out, const Log &log) {
    Su2Pair pair;
    if (o.pair == "i-omega") {
        pair = Su2Pair::IdentityOmega;
    } else if (o.pair == "i-sigmay") {
        pair = Su2Pair::IdentitySigmaY;
    } else {
        throw std::invalid_argument("unknown --pair \"" + o.pair + "\"; use i-omega or i-sigmay");
    }
    size_t nt = o.n_theta ? o.n_theta : o.grid;
    size_t np = o.n_phi ? o.n_phi : o.grid;
    Su2Sweep sweep = su2_overlap_surface(pair, nt, np);
    log.info("sweep: " + std::to_string(sweep.records.size()) + " points, closed-form deviation " +
             std::to_string(sweep.max_closed_form_deviation));
    if (o.output == "json") {
        Json records = Json::array();
        for (const auto &r : sweep.records) {
            records.push_back({
                {"theta", r.theta},
                {"phi", r.phi},
                {"max_overlap", r.max_overlap},
                {"diag_overlap", r.diag_overlap},
                {"bound_bits", r.bound_bits},
            });
        }
        Json j{{"pair", o.pair}, {"max_closed_form_deviation", sweep.max_closed_form_deviation}, {"records", records}};
        out << j.dump() << "\n";
        return kExitOk;
    }
    std::string buf = "theta,phi,max_overlap,diag_overlap,bound_bits\n";
    for (const auto &r : sweep.records) {
        buf += csv_number(r.theta) + "," + csv_number(r.phi) + "," + csv_number(r.max_overlap) + "," +
               csv_number(r.diag_overlap) + "," + csv_number(r.bound_bits) + "\n";
    }
    out << buf;
    return kExitOk;
}

int cmd_search(const Options &o, std::ostream &out, const Log &log) {
    auto [v, w] = operator_pair(o);
    Measurement m = parse_measurement(o.measurement, v.dim());
    auto *p = std::get_if<ProjectiveMeasurement>(&m);
    if (!p) {
        throw std::invalid_argument("search needs a projective measurement");
    }
    if (p->dim() != v.dim()) {
        throw std::invalid_argument("dimension mismatch: measurement has d = " + std::to_string(p->dim()));
    }
    SaturationReport r = search_min_uncertainty(*p, v, w, {o.budget, o.restarts, o.seed, o.threads});
    log.info("search: achieved " + std::to_string(r.achieved.value) + " bits, gap " + std::to_string(r.gap));
    Json j{
        {"achieved_bits", r.achieved.value},
        {"bound_bits", r.bound.value},
        {"gap_bits", r.gap},
        {"saturated", std::abs(r.gap) <= kSaturationGapBits},
        {"h_v_bits", r.split.v.value},
        {"h_w_bits", r.split.w.value},
        {"trivial", r.trivial},
        {"method", method_name(r.method)},
        {"seed", o.seed},
        {"budget", o.budget},
        {"restarts", o.restarts},
        {"tester", tester_to_json(r.tester)},
    };
    out << j.dump() << "\n";
    return kExitOk;
}

int cmd_muub_check(const Options &o, std::ostream &out, const Log &log) {
    UnitaryBasis b1(parse_operator_list(o.basis1, o.dim));
    UnitaryBasis b2(parse_operator_list(o.basis2, o.dim));
    if (b1.dim() != b2.dim() || b1.subspace_dim() != b2.subspace_dim()) {
        throw std::invalid_argument("dimension mismatch: the two bases differ in d or in size");
    }
    MuubCheck check = is_muub(b1, b2, o.tol);
    CertifyOptions opts;
    opts.tol = o.tol;
    opts.search = {o.budget, o.restarts, o.seed, o.threads};
    MuubCertificate cert = muub_certify_by_saturation(b1, b2, opts);
    Json pairs = Json::array();
    for (const auto &p : cert.pairs) {
        log.debug("pair (" + std::to_string(p.m) + ", " + std::to_string(p.n) + ") flatness " +
                  std::to_string(p.flatness_deviation));
        pairs.push_back({
            {"m", p.m},
            {"n", p.n},
            {"saturated", p.saturated},
            {"trace_modulus", p.trace_modulus},
            {"flatness_deviation", p.flatness_deviation},
            {"achieved_bits", p.report ? Json(p.report->achieved.value) : Json(nullptr)},
        });
    }
    Json j{
        {"certified", cert.certified},
        {"kappa", std::round(check.kappa * 1e12) / 1e12},
        {"is_muub", check.flag},
        {"trace_consistent", cert.trace_consistent},
        {"pairs", pairs},
    };
    out << j.dump() << "\n";
    return kExitOk;
}

int cmd_distinguish(const Options &o, std::ostream &out) {
    auto [v, w] = operator_pair(o);
    bool yes = is_perfectly_distinguishable(v, w, o.tol);
    Json j{{"distinguishable", yes}};
    UnitaryOperator link = v.adjoint() * w;
    std::vector<Complex> values;
    for (const auto &e : eig_unitary(link.matrix())) {
        values.push_back(e.value);
    }
    j["hull_distance"] = hull_distance_to_origin(values);
    ZeroBoundWitness z = zero_bound_witness(v, w, o.tol);
    if (z.found) {
        j["witness"] = tester_to_json(*z.tester);
        j["witness_bits"] = z.achieved_bits;
        j["trivial"] = z.trivial;
    }
    out << j.dump() << "\n";
    return kExitOk;
}

int cmd_game(const Options &o, std::ostream &out) {
    auto [v, w] = operator_pair(o);
    GameConfig cfg{resolve_tester(o, v), v, w, o.trials, o.seed, o.bias, base_of(o)};
    GameTranscript t = run_game(cfg);
    if (o.output == "csv") {
        std::string buf = "operator,outcome,count\n";
        for (size_t k = 0; k < t.counts_v.size(); k++) {
            buf += "v," + std::to_string(k) + "," + std::to_string(t.counts_v[k]) + "\n";
        }
        for (size_t k = 0; k < t.counts_w.size(); k++) {
            buf += "w," + std::to_string(k) + "," + std::to_string(t.counts_w[k]) + "\n";
        }
        out << buf;
        return kExitOk;
    }
    out << transcript_to_json(t).dump() << "\n";
    return kExitOk;
}

void add_operators(CLI::App *sub, Options &o) {
    sub->add_option("--v", o.v, "first operator: named or JSON file")->capture_default_str();
    sub->add_option("--w", o.w, "second operator: named or JSON file")->required();
    sub->add_option("--dim", o.dim, "dimension for identity, clock and shift")->capture_default_str();
}

void add_base(CLI::App *sub, Options &o) {
    sub->add_option("--log-base", o.log_base, "entropy base")->check(CLI::IsMember({"2", "e"}))->capture_default_str();
}

void add_search_flags(CLI::App *sub, Options &o, const SearchOptions &defaults) {
    sub->add_option("--budget", o.budget, "total objective evaluations")
        ->default_str(std::to_string(defaults.budget))
        ->check(CLI::PositiveNumber);
    sub->add_option("--restarts", o.restarts, "independent simplex starts")
        ->default_str(std::to_string(defaults.restarts))
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", o.seed, "seed")->capture_default_str();
    sub->add_option("--threads", o.threads, "worker threads, 0 = all cores")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    Options o;
    Log log(err);
    CLI::App app{"Entropic uncertainty of unitary operators"};
    app.name("utp");
    app.require_subcommand(1);

    auto *bound = app.add_subcommand("bound", "maximal-overlap entropic bound for a measurement");
    add_operators(bound, o);
    bound->add_option("--measurement", o.measurement, "su2:THETA,PHI | computational | bell | JSON file")->required();
    add_base(bound, o);

    auto *entropy = app.add_subcommand("entropy", "pair uncertainty of one tester");
    add_operators(entropy, o);
    entropy->add_option("--measurement", o.measurement, "measurement spec");
    entropy->add_option("--input", o.input, "basis:K | chi:K | vdag-chi:K | JSON file (default chi:0)");
    entropy->add_option("--tester", o.tester, "tester JSON file");
    add_base(entropy, o);

    auto *sweep = app.add_subcommand("sweep", "overlap surface over the SU(2) measurement family");
    sweep->add_option("--pair", o.pair, "i-omega | i-sigmay")->required();
    sweep->add_option("--grid", o.grid, "points per axis")->capture_default_str();
    sweep->add_option("--n-theta", o.n_theta, "theta points (overrides --grid)");
    sweep->add_option("--n-phi", o.n_phi, "phi points (overrides --grid)");
    o.output = "";
    sweep->add_option("--output", o.output, "csv (default) | json")->check(CLI::IsMember({"csv", "json"}));

    auto *search = app.add_subcommand("search", "numerically minimise the pair uncertainty over inputs");
    add_operators(search, o);
    search->add_option("--measurement", o.measurement, "projective measurement spec")->required();
    add_search_flags(search, o, SearchOptions{});

    auto *muub = app.add_subcommand("muub-check", "certify mutual unbiasedness by saturation");
    muub->add_option("--basis1", o.basis1, "comma-separated operators")->required();
    muub->add_option("--basis2", o.basis2, "comma-separated operators")->required();
    muub->add_option("--dim", o.dim, "dimension for identity, clock and shift")->capture_default_str();
    muub->add_option("--tol", o.tol, "flatness tolerance")->capture_default_str();
    add_search_flags(muub, o, CertifyOptions{}.search);

    auto *distinguish = app.add_subcommand("distinguish", "perfect distinguishability of two unitaries");
    add_operators(distinguish, o);
    distinguish->add_option("--tol", o.tol, "hull tolerance")->capture_default_str();

    auto *game = app.add_subcommand("game", "Monte Carlo guessing game");
    add_operators(game, o);
    game->add_option("--measurement", o.measurement, "measurement spec");
    game->add_option("--input", o.input, "input spec (default chi:0)");
    game->add_option("--tester", o.tester, "tester JSON file");
    game->add_option("--trials", o.trials, "number of rounds")->capture_default_str()->check(CLI::PositiveNumber);
    game->add_option("--seed", o.seed, "seed")->capture_default_str();
    game->add_option("--bias", o.bias, "probability Bob applies V")->capture_default_str()->check(CLI::Range(0.0, 1.0));
    game->add_option("--output", o.output, "json (default) | csv")->check(CLI::IsMember({"csv", "json"}));
    add_base(game, o);

    auto *povm = app.add_subcommand("povm-bound", "operator-norm bound for a POVM");
    add_operators(povm, o);
    povm->add_option("--measurement,--povm", o.measurement, "POVM JSON file or projective spec")->required();
    add_base(povm, o);

    auto *mes = app.add_subcommand("mes-bound", "bound for a maximally entangled tester");
    add_operators(mes, o);
    mes->add_option("--measurement", o.measurement, "bell (default) | JSON file of kind mes");
    add_base(mes, o);

    // Defaults that differ between subcommands.
    muub->preparse_callback([&](size_t) {
        o.budget = CertifyOptions{}.search.budget;
        o.restarts = CertifyOptions{}.search.restarts;
    });

    std::vector<const char *> argv{"utp"};
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        log.debug("subcommand " + app.get_subcommands().front()->get_name());
        if (bound->parsed()) {
            return cmd_bound(o, out);
        }
        if (entropy->parsed()) {
            return cmd_entropy(o, out);
        }
        if (sweep->parsed()) {
            return cmd_sweep(o, out, log);
        }
        if (search->parsed()) {
            return cmd_search(o, out, log);
        }
        if (muub->parsed()) {
            return cmd_muub_check(o, out, log);
        }
        if (distinguish->parsed()) {
            return cmd_distinguish(o, out);
        }
        if (game->parsed()) {
            return cmd_game(o, out);
        }
        if (povm->parsed()) {
            return cmd_povm_bound(o, out);
        }
        if (mes->parsed()) {
            return cmd_mes_bound(o, out);
        }
    } catch (const NumericalError &e) {
        err << "utp: numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::invalid_argument &e) {
        err << "utp: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "utp: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitUsage;
}

}  // namespace utp::cli
