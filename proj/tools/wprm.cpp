/*
   Copyright 2026 the wprm authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// wprm: evaluation codes on weighted projective planes P(1,a,b) over GF(q).
// Every numeric claim the tool prints is backed by at least two independent
// computation routes; `sweep` runs the full cross-validation grid.

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "wprm/serialize.hpp"
#include "wprm/sweep.hpp"
#include "wprm/wprm.hpp"

namespace {

using namespace wprm;

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(output_path);
    if (!out) throw Error(ErrorKind::invalid_argument, "cannot open " + output_path);
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
}

struct Args {
    int q = 0, a = 1, b = 1, d = 0;
    int d_min = 2, d_max = -1;
    std::string mode, format, output;
    long long budget = 0;
    std::vector<int> only;
};

long long effective_budget(const Args& args) {
    return args.budget > 0 ? args.budget : default_budget();
}

int run_points(const Args& args) {
    WeightedSpace space({1, args.a, args.b});
    Gf field(args.q);
    PointSet pts = enumerate_points(space, field);
    if (args.format == "csv") {
        std::ostringstream os;
        os << "x1,x2,x3\n";
        for (const auto& p : pts.points) os << p[0] << ',' << p[1] << ',' << p[2] << '\n';
        emit(os.str(), args.output);
    } else {
        emit(point_set_to_json(pts).dump(2), args.output);
    }
    return 0;
}

int run_basis(const Args& args) {
    WeightedSpace space({1, args.a, args.b});
    RingPtr ring = Ring::make(space, Gf(args.q));
    auto basis = monomial_basis(space, args.d);
    if (args.format == "json") {
        json j = json::array();
        for (const auto& m : basis)
            j.push_back({{"exponents", m.exps},
                         {"text", to_string(Gpoly::monomial(ring, m.exps, 1))}});
        emit(j.dump(2), args.output);
    } else {
        std::ostringstream os;
        for (const auto& m : basis) os << to_string(Gpoly::monomial(ring, m.exps, 1)) << '\n';
        emit(os.str(), args.output);
    }
    return 0;
}

int run_hilbert(const Args& args) {
    const int q = args.q, b = args.b, d_max = args.d_max;
    if (d_max < 0) throw Error(ErrorKind::invalid_argument, "--d-max is required");
    const std::string mode = args.mode.empty() ? "all" : args.mode;
    std::vector<std::pair<int, long long>> rows;
    const bool closed_defined = !(q > b && b == 1);

    std::vector<long long> series;
    if (mode == "series" || mode == "all")
        series = series_expand(series_numerator(q, 1, b), d_max);
    std::optional<PointSet> pts;
    RingPtr ring;
    if (mode == "oracle" || mode == "all") {
        ring = Ring::make(WeightedSpace({1, 1, b}), Gf(q));
        pts = enumerate_points(ring->space, ring->field);
    }
    for (int d = 0; d <= d_max; ++d) {
        long long h = 0;
        if (mode == "closed") {
            h = hf_closed(q, b, d);
        } else if (mode == "series") {
            h = series[d];
        } else if (mode == "oracle") {
            h = hf_oracle(*ring, std::span<const Coords>(pts->points), d);
        } else if (mode == "all") {
            const long long hs = series[d];
            const long long ho = hf_oracle(*ring, std::span<const Coords>(pts->points), d);
            if (hs != ho)
                throw Error(ErrorKind::oracle_disagreement,
                            "series H(" + std::to_string(d) + ") = " + std::to_string(hs) +
                                " but oracle gives " + std::to_string(ho));
            if (closed_defined) {
                const long long hc = hf_closed(q, b, d);
                if (hc != hs)
                    throw Error(ErrorKind::oracle_disagreement,
                                "closed form H(" + std::to_string(d) + ") = " +
                                    std::to_string(hc) + " but series gives " +
                                    std::to_string(hs));
            }
            h = hs;
        } else {
            throw Error(ErrorKind::invalid_argument, "unknown mode " + mode);
        }
        rows.emplace_back(d, h);
    }
    if (args.format == "json")
        emit(hilbert_rows_to_json(rows).dump(2), args.output);
    else
        emit(hilbert_rows_to_csv(rows), args.output);
    return 0;
}

int run_series(const Args& args) {
    HilbertSeries s = series_numerator(args.q, args.a, args.b);
    if (args.format == "csv") {
        std::ostringstream os;
        os << "degree,coeff\n";
        for (const auto& [deg, c] : s.numerator) os << deg << ',' << c << '\n';
        emit(os.str(), args.output);
    } else {
        emit(series_to_json(s).dump(2), args.output);
    }
    return 0;
}

int run_regset(const Args& args) {
    const int first = regularity_first(args.q, args.b);
    if (args.format == "csv") {
        std::ostringstream os;
        os << "first,step\n" << first << ',' << args.b << '\n';
        emit(os.str(), args.output);
    } else {
        json j{{"first", first},
               {"step", args.b},
               {"membership", "d in the set iff d >= first and d is a multiple of step"}};
        emit(j.dump(2), args.output);
    }
    return 0;
}

DistanceMode parse_mode(const std::string& mode) {
    if (mode.empty() || mode == "both") return DistanceMode::both;
    if (mode == "formula") return DistanceMode::formula;
    if (mode == "oracle") return DistanceMode::oracle;
    throw Error(ErrorKind::invalid_argument, "unknown mode " + mode);
}

int run_params(const Args& args) {
    CodeParams p = code_params(args.q, args.b, args.d, parse_mode(args.mode),
                               effective_budget(args));
    emit(code_params_to_json(p).dump(2), args.output);
    return 0;
}

int run_mindist(const Args& args) {
    CodeParams p = code_params(args.q, args.b, args.d, parse_mode(args.mode),
                               effective_budget(args));
    json j{{"delta", p.delta}, {"provenance", provenance_name(p.delta_provenance)}};
    emit(j.dump(2), args.output);
    return 0;
}

int run_genmat(const Args& args) {
    RingPtr ring = Ring::make(WeightedSpace({1, 1, args.b}), Gf(args.q));
    PointSet pts = enumerate_points(ring->space, ring->field);
    GeneratorMatrix g = build_generator_matrix(ring, args.d, pts.points);
    GenmatFormat fmt = GenmatFormat::plain;
    if (args.format == "csv") fmt = GenmatFormat::csv;
    else if (args.format == "json") fmt = GenmatFormat::json;
    else if (!args.format.empty() && args.format != "plain")
        throw Error(ErrorKind::invalid_argument, "unknown format " + args.format);
    emit(export_genmat(g, fmt), args.output);
    return 0;
}

int run_verify(const Args& args) {
    const int q = args.q, a = args.a, b = args.b;
    ResolutionData res = resolution_data(q, a, b);
    VerificationReport rep = verify_resolution(res);
    const int d_max = args.d_max >= 0 ? args.d_max : 3 * q * b;
    PointSet pts = enumerate_points(res.gens.ring->space, res.gens.ring->field);
    GenerationReport gen = check_generation(res.gens, pts, d_max);
    std::string detail = gen.pass() ? "all degrees agree"
                                    : "first disagreement at d=" +
                                          std::to_string(gen.disagreeing_degrees.front());
    rep.checks.push_back(
        {"generation_up_to_d" + std::to_string(d_max), gen.pass(), detail});
    emit(report_to_json(rep, q, a, b).dump(2), args.output);
    return rep.all_pass() ? 0 : 1;
}

int run_table(const Args& args) {
    if (args.d_max < 0) throw Error(ErrorKind::invalid_argument, "--d-max is required");
    auto rows = table_rows(args.q, args.b, args.d_min, args.d_max);
    if (args.format == "json")
        emit(table_rows_to_json(rows).dump(2), args.output);
    else
        emit(table_rows_to_csv(rows), args.output);
    return 0;
}

int run_sweep(const Args& args) {
    std::set<int> only(args.only.begin(), args.only.end());
    SweepReport report = run_acceptance_sweep(only);
    std::ostringstream os;
    if (args.format == "json") {
        json j = json::array();
        for (const auto& c : report.criteria) {
            json jc{{"criterion", c.index}, {"title", c.title},       {"pass", c.pass},
                    {"cases", c.cases},     {"failures", c.failure_count}, {"seconds", c.seconds}};
            jc["failure_samples"] = c.failures;
            j.push_back(jc);
        }
        os << j.dump(2) << '\n';
    } else {
        for (const auto& c : report.criteria) {
            os << "criterion " << c.index << ": " << (c.pass ? "PASS" : "FAIL") << " - "
               << c.title << " (" << c.cases << " cases, " << c.seconds << "s)\n";
            for (const auto& f : c.failures) os << "    " << f << '\n';
        }
        os << (report.all_pass() ? "sweep: all criteria passed\n" : "sweep: FAILURES\n");
    }
    emit(os.str(), args.output);
    return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"evaluation codes on weighted projective planes P(1,a,b) over GF(q)"};
    app.require_subcommand(1);
    Args args;

    auto add_common = [&](CLI::App* sub, bool need_q = true) {
        if (need_q) sub->add_option("--q", args.q, "field order (prime power)")->required();
        sub->add_option("--format", args.format, "output format");
        sub->add_option("--output", args.output, "write output to a file instead of stdout");
    };

    auto* points = app.add_subcommand("points", "list canonical rational points of P(1,a,b)");
    add_common(points);
    points->add_option("--a", args.a, "second weight (default 1)");
    points->add_option("--b", args.b, "third weight")->required();

    auto* basis = app.add_subcommand("basis", "list the degree-d monomial basis");
    add_common(basis);
    basis->add_option("--a", args.a, "second weight (default 1)");
    basis->add_option("--b", args.b, "third weight")->required();
    basis->add_option("--d", args.d, "weighted degree")->required();

    auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of P(1,1,b)(F_q)");
    add_common(hilbert);
    hilbert->add_option("--b", args.b, "third weight")->required();
    hilbert->add_option("--d-max", args.d_max, "largest degree")->required();
    hilbert->add_option("--mode", args.mode, "closed|series|oracle|all (default all)");

    auto* series = app.add_subcommand("series", "Hilbert series numerator of P(1,a,b)(F_q)");
    add_common(series);
    series->add_option("--a", args.a, "second weight (default 1)");
    series->add_option("--b", args.b, "third weight")->required();

    auto* regset = app.add_subcommand("regset", "regularity set of P(1,1,b)(F_q)");
    add_common(regset);
    regset->add_option("--b", args.b, "third weight")->required();

    auto* params = app.add_subcommand("params", "code parameters [N, K, delta]");
    add_common(params);
    params->add_option("--b", args.b, "third weight")->required();
    params->add_option("--d", args.d, "code degree")->required();
    params->add_option("--mode", args.mode, "formula|oracle|both (default both)");
    params->add_option("--budget", args.budget, "codeword budget for the oracle");

    auto* mindist = app.add_subcommand("mindist", "minimum distance of C_{d,Y}");
    add_common(mindist);
    mindist->add_option("--b", args.b, "third weight")->required();
    mindist->add_option("--d", args.d, "code degree")->required();
    mindist->add_option("--mode", args.mode, "formula|oracle|both (default both)");
    mindist->add_option("--budget", args.budget, "codeword budget for the oracle");

    auto* genmat = app.add_subcommand("genmat", "emit the generator matrix");
    add_common(genmat);
    genmat->add_option("--b", args.b, "third weight")->required();
    genmat->add_option("--d", args.d, "code degree")->required();

    auto* verify = app.add_subcommand("verify", "verify ideal generators and resolution");
    add_common(verify);
    verify->add_option("--a", args.a, "second weight (default 1)");
    verify->add_option("--b", args.b, "third weight")->required();
    verify->add_option("--d-max", args.d_max, "generation check bound (default 3qb)");

    auto* table = app.add_subcommand("table", "per-degree table of (d, N, K, delta)");
    add_common(table);
    table->add_option("--b", args.b, "third weight")->required();
    table->add_option("--d-min", args.d_min, "first degree (default 2)");
    table->add_option("--d-max", args.d_max, "last degree")->required();

    auto* sweep = app.add_subcommand("sweep", "run the full cross-validation grid");
    add_common(sweep, false);
    sweep->add_option("--only", args.only, "criteria to run (1..10; default all)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (app.got_subcommand(points)) return run_points(args);
        if (app.got_subcommand(basis)) return run_basis(args);
        if (app.got_subcommand(hilbert)) return run_hilbert(args);
        if (app.got_subcommand(series)) return run_series(args);
        if (app.got_subcommand(regset)) return run_regset(args);
        if (app.got_subcommand(params)) return run_params(args);
        if (app.got_subcommand(mindist)) return run_mindist(args);
        if (app.got_subcommand(genmat)) return run_genmat(args);
        if (app.got_subcommand(verify)) return run_verify(args);
        if (app.got_subcommand(table)) return run_table(args);
        if (app.got_subcommand(sweep)) return run_sweep(args);
    } catch (const wprm::Error& e) {
        std::cerr << e.what() << '\n';
        return e.kind() == wprm::ErrorKind::oracle_disagreement ? 1 : 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
