/*
   Copyright 2026 The scatplane authors

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

#include "scatplane/cli.hpp"

#include <chrono>
#include <fstream>
#include <memory>
#include <numeric>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "scatplane/field.hpp"
#include "scatplane/linpoly.hpp"
#include "scatplane/lp.hpp"
#include "scatplane/plane.hpp"
#include "scatplane/quasifield.hpp"
#include "scatplane/spread.hpp"
#include "scatplane/subspace.hpp"

namespace scatplane::cli {
namespace {

using nlohmann::json;

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    try {
        json j;
        in >> j;
        return j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("parse error in '" + path + "': " + e.what());
    }
}

FieldSpec parse_field_spec(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("field spec: expected a JSON object");
    FieldSpec spec;
    try {
        spec.p = j.at("p").get<std::uint32_t>();
        spec.e = j.at("e").get<std::uint32_t>();
        spec.t = j.at("t").get<std::uint32_t>();
        if (j.contains("modulus")) spec.modulus = j.at("modulus").get<std::vector<std::uint32_t>>();
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("field spec: ") + e.what());
    }
    return spec;
}

Elt parse_element_json(const FieldTower& tw, const json& j, const std::string& where) {
    if (j.is_string()) return tw.parse_element(j.get<std::string>());
    if (j.is_number_unsigned()) {
        const std::uint64_t idx = j.get<std::uint64_t>();
        if (idx >= tw.order())
            throw std::invalid_argument(where + ": element index " + std::to_string(idx) + " out of range");
        return Elt(idx);
    }
    throw std::invalid_argument(where + ": expected element text or index");
}

LinearizedPoly parse_poly(const FieldTower& tw, const json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("coeffs"))
        throw std::invalid_argument(where + ": expected {\"coeffs\": [...]}");
    const json& arr = j.at("coeffs");
    if (!arr.is_array() || arr.size() != tw.t())
        throw std::invalid_argument(where + ": coeffs must hold exactly t = " + std::to_string(tw.t()) +
                                    " entries");
    std::vector<Elt> coeffs;
    coeffs.reserve(tw.t());
    for (std::size_t i = 0; i < arr.size(); ++i)
        coeffs.push_back(parse_element_json(tw, arr[i], where + ": coeffs[" + std::to_string(i) + "]"));
    return LinearizedPoly(tw, std::move(coeffs));
}

json semilinear_json(const FieldTower& tw, const SemilinearMap& m) {
    json matrix = json::array();
    matrix.push_back(json::array({tw.format_element(m.a), tw.format_element(m.b)}));
    matrix.push_back(json::array({tw.format_element(m.c), tw.format_element(m.d)}));
    return json{{"matrix", std::move(matrix)}, {"sigma", m.sigma}};
}

void emit_report(const json& report, const std::string& out_path, std::ostream& out) {
    const std::string text = report.dump(2) + "\n";
    if (out_path.empty() || out_path == "-") {
        out << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot write '" + out_path + "'");
    f << text;
    if (!f.good()) throw std::runtime_error("write failure on '" + out_path + "'");
}

struct Args {
    std::string field_path;
    std::vector<std::string> poly_paths;
    std::string group = "GL";
    std::string mode = "structural";
    std::string b_text;
    std::uint32_t s = 0;
    unsigned workers = 1;
    bool force = false;
    bool timing = false;
    std::string out_path = "-";
};

struct Outcome {
    int code = 0;
    json results;
};

std::unique_ptr<FieldTower> build_tower(const Args& a) {
    return std::make_unique<FieldTower>(parse_field_spec(load_json_file(a.field_path)), a.force);
}

std::vector<LinearizedPoly> load_polys(const FieldTower& tw, const Args& a, std::size_t expected) {
    if (a.poly_paths.size() != expected)
        throw std::invalid_argument("expected " + std::to_string(expected) + " --poly argument(s), got " +
                                    std::to_string(a.poly_paths.size()));
    std::vector<LinearizedPoly> polys;
    for (const auto& path : a.poly_paths) polys.push_back(parse_poly(tw, load_json_file(path), path));
    return polys;
}

Outcome cmd_scattered(const Args& a) {
    auto tower = build_tower(a);
    const auto polys = load_polys(*tower, a, 1);
    const bool sc = is_scattered(polys[0]);
    return {sc ? 0 : 1, json{{"scattered", sc}}};
}

Outcome cmd_quasifield(const Args& a) {
    auto tower = build_tower(a);
    const auto polys = load_polys(*tower, a, 1);
    if (!is_scattered(polys[0]))
        throw std::domain_error("quasifield construction requires a scattered polynomial");
    LinearizedPoly f = polys[0];
    json normalization;
    const LinearSet ls = linear_set(f);
    if (ls.contains(0) || ls.contains(1)) {
        auto [g, mu] = normalize_poly(f);
        normalization = semilinear_json(*tower, mu);
        f = g;
    }
    const Quasifield qf = Quasifield::build(f);
    const AxiomReport axioms = verify_axioms(qf);
    const std::vector<Elt> kern = kernel(qf);
    const StructureFlags flags = structure_flags(qf);
    json res{{"loop", axioms.loop},
             {"left_distributive", axioms.left_distributive},
             {"solvability", axioms.solvability},
             {"kernel_order", kern.size()},
             {"right_distributive", flags.right_distributive},
             {"associative", flags.associative},
             {"counterexample",
              axioms.counterexample.empty() ? json() : json(axioms.counterexample)},
             {"normalization", normalization}};
    return {axioms.pass() ? 0 : 1, std::move(res)};
}

json spread_report(const Spread& s, const PlanarReport& rep) {
    std::size_t replaced = 0, desarguesian = 0;
    json tags = json::array();
    for (const auto& comp : s.components()) {
        if (comp.tag.kind == ComponentTag::Kind::Replaced)
            ++replaced;
        else
            ++desarguesian;
        tags.push_back(comp.tag.text(s.tower()));
    }
    return json{{"components", s.components().size()},
                {"planar", rep.pass()},
                {"replaced", replaced},
                {"desarguesian", desarguesian},
                {"tags", std::move(tags)},
                {"witness", rep.witness.empty() ? json() : json(rep.witness)}};
}

Outcome cmd_spread(const Args& a) {
    auto tower = build_tower(a);
    const auto polys = load_polys(*tower, a, 1);
    const Spread s = spread_from_poly(polys[0]);
    const PlanarReport rep = verify_planar(s);
    return {rep.pass() ? 0 : 1, spread_report(s, rep)};
}

Outcome cmd_plane(const Args& a) {
    auto tower = build_tower(a);
    const auto polys = load_polys(*tower, a, 1);
    const Spread s = spread_from_poly(polys[0]);
    const TranslationPlane plane = plane_from_spread(s);
    const VerifyMode mode = a.mode == "direct" ? VerifyMode::Direct : VerifyMode::Structural;
    const AffineReport aff = verify_affine(plane, mode);
    json coll;
    try {
        coll = collineation_order(polys[0], Group::GL, SearchOptions{a.workers, a.force});
    } catch (const std::domain_error&) {
    } catch (const GuardError&) {
    }
    json res{{"points", plane.point_count()},
             {"lines", plane.line_count()},
             {"affine_axioms", aff.pass ? "pass" : "fail"},
             {"mode", aff.mode},
             {"collineation_order_GL", coll},
             {"witness", aff.witness.empty() ? json() : json(aff.witness)}};
    return {aff.pass ? 0 : 1, std::move(res)};
}

Outcome cmd_equiv(const Args& a) {
    auto tower = build_tower(a);
    const auto polys = load_polys(*tower, a, 2);
    const auto witness = equivalence_fast(polys[0], polys[1], SearchOptions{a.workers, a.force});
    json res{{"equivalent", witness.has_value()},
             {"witness", witness ? semilinear_json(*tower, *witness) : json()}};
    return {witness ? 0 : 1, std::move(res)};
}

Outcome cmd_stab(const Args& a) {
    auto tower = build_tower(a);
    const auto polys = load_polys(*tower, a, 1);
    const Group group = a.group == "GammaL" ? Group::GammaL : Group::GL;
    const std::uint64_t order = stabilizer_order(polys[0], group, SearchOptions{a.workers, a.force});
    return {0, json{{"group", a.group}, {"order", order}}};
}

Outcome cmd_lp_census(const Args& a) {
    auto tower = build_tower(a);
    if (a.s == 0) throw std::invalid_argument("lp-census requires --s >= 1");
    const LpCensusReport rep = lp_census(*tower, a.s, SearchOptions{a.workers, a.force});
    json reps = json::array();
    for (Elt b : rep.representatives) reps.push_back(tower->format_element(b));
    json res{{"q", rep.q},
             {"t", rep.t},
             {"s", rep.s},
             {"classes", rep.classes},
             {"solver_classes", rep.solver_classes},
             {"theorem_count", rep.theorem_count},
             {"lower_bound", rep.lower_bound},
             {"agree_solver_vs_ejj", rep.agree_solver_vs_ejj},
             {"reduced_s_values", rep.reduced_s_values},
             {"total_all_s", rep.total_all_s},
             {"theorem_matches", rep.theorem_matches},
             {"representatives", std::move(reps)}};
    return {rep.agree_solver_vs_ejj ? 0 : 1, std::move(res)};
}

Outcome cmd_andre_check(const Args& a) {
    auto tower = build_tower(a);
    if (a.b_text.empty()) throw std::invalid_argument("andre-check requires --b");
    if (a.s == 0) throw std::invalid_argument("andre-check requires --s >= 1");
    const Elt omega = tower->parse_element(a.b_text);
    const Spread ps = pseudoregulus_spread(*tower, omega, a.s);
    const Elt xi = tower->rel_norm(omega);
    const Spread an = andre_spread(*tower, {{xi, a.s}});
    const bool equal = spreads_setwise_equal(ps, an);
    const bool planar = verify_planar(ps).pass() && verify_planar(an).pass();
    json res{{"equal", equal},
             {"planar", planar},
             {"components", ps.components().size()},
             {"xi", tower->format_element(xi)}};
    return {equal && planar ? 0 : 1, std::move(res)};
}

Outcome cmd_pseudoregulus_class(const Args& a) {
    auto tower = build_tower(a);
    std::vector<std::uint32_t> svals;
    for (std::uint32_t s = 1; s < tower->t(); ++s)
        if (std::gcd<std::uint64_t>(s, tower->t()) == 1) svals.push_back(s);
    std::vector<LinearizedPoly> family;
    for (std::uint32_t s : svals) family.push_back(LinearizedPoly::monomial(*tower, 1, s));
    const auto partition = orbit_census(family, SearchOptions{a.workers, a.force});
    json orbits = json::array();
    bool pairing_ok = true;
    for (const auto& orbit : partition) {
        json one = json::array();
        for (std::size_t idx : orbit) one.push_back(svals[idx]);
        // the theorem pairs s with t-s and nothing else
        if (orbit.size() > 2) pairing_ok = false;
        for (std::size_t idx : orbit) {
            const std::uint32_t mate = tower->t() - svals[idx];
            bool mate_inside = false;
            for (std::size_t other : orbit)
                if (svals[other] == mate) mate_inside = true;
            pairing_ok = pairing_ok && mate_inside;
        }
        orbits.push_back(std::move(one));
    }
    std::uint64_t expected = 0;  // reduced s values: phi(t)/2 for t > 2
    for (std::uint32_t s : svals)
        if (2 * s <= tower->t()) ++expected;
    const bool matches = partition.size() == expected && pairing_ok;
    json res{{"s_values", svals},
             {"orbits", std::move(orbits)},
             {"count", partition.size()},
             {"phi_t_over_2", expected},
             {"matches_theorem", matches}};
    return {matches ? 0 : 1, std::move(res)};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"translation planes from scattered linearized polynomials"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    Args a;
    struct Cmd {
        const char* name;
        const char* desc;
        Outcome (*fn)(const Args&);
        std::size_t polys;  // 0 = none, otherwise exact count
    };
    const Cmd cmds[] = {
        {"scattered", "test scatteredness of a linearized polynomial", cmd_scattered, 1},
        {"quasifield", "build Q_f and verify the quasifield axioms", cmd_quasifield, 1},
        {"spread", "build the spread B_f and verify planarity", cmd_spread, 1},
        {"plane", "build A_f and verify the affine axioms", cmd_plane, 1},
        {"equiv", "decide GammaL-equivalence of two polynomials", cmd_equiv, 2},
        {"stab", "collineation-group order (spread stabilizer)", cmd_stab, 1},
        {"lp-census", "classify the LP planes at fixed s", cmd_lp_census, 0},
        {"andre-check", "pseudoregulus spread vs single Andre replacement", cmd_andre_check, 0},
        {"pseudoregulus-class", "orbit census of the monomials x^{q^s}", cmd_pseudoregulus_class, 0},
    };
    for (const Cmd& c : cmds) {
        CLI::App* sub = app.add_subcommand(c.name, c.desc);
        sub->add_option("--field", a.field_path, "field spec JSON path")->required();
        if (c.polys > 0)
            sub->add_option("--poly", a.poly_paths, "polynomial JSON path (repeatable)")->required();
        sub->add_option("--group", a.group, "collineation group")
            ->check(CLI::IsMember({"GL", "GammaL"}));
        sub->add_option("--s", a.s, "Frobenius exponent s");
        sub->add_option("--b", a.b_text, "field element (text syntax)");
        sub->add_option("--workers", a.workers, "worker threads for searches");
        sub->add_option("--out", a.out_path, "report path ('-' = stdout)");
        sub->add_option("--mode", a.mode, "plane verification mode")
            ->check(CLI::IsMember({"structural", "direct"}));
        sub->add_flag("--force", a.force, "override size guards");
        sub->add_flag("--timing", a.timing, "measure wall time (breaks byte determinism)");
    }

    std::vector<const char*> argv;
    argv.push_back("scatplane");
    for (const auto& s : args) argv.push_back(s.c_str());
    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    if (a.force) err << "warning: size guards disabled (--force)\n";
    try {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        std::string name;
        for (const Cmd& c : cmds)
            if (app.got_subcommand(c.name)) {
                name = c.name;
                outcome = c.fn(a);
                break;
            }
        const auto stop = std::chrono::steady_clock::now();
        const std::int64_t ms =
            a.timing ? std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count() : 0;
        json report{{"command", name},
                    {"results", std::move(outcome.results)},
                    {"timing_ms", ms},
                    {"version", kVersion}};
        emit_report(report, a.out_path, out);
        return outcome.code;
    } catch (const GuardError& e) {
        err << "guard: " << e.what() << " (rerun with --force to override)\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace scatplane::cli
