#include "commands.hpp"

#include "innc/error.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <sstream>

namespace innc::cli {

std::string hyperplane_text(const RationalVector& a, const Rational& c) {
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        Rational mag = abs(a[i]);
        std::string term = (mag == 1 ? "" : to_string(mag) + "*") + "x" + std::to_string(i + 1);
        if (s.empty())
            s = (a[i] < 0 ? "-" : "") + term;
        else
            s += (a[i] < 0 ? " - " : " + ") + term;
    }
    if (s.empty()) s = "0";
    return s + " = " + to_string(c);
}

namespace {

std::string dump(const Json& j) { return j.dump(); }

AbelianGroup fixture_h1(const Fixture& f) {
    if (!f.payload.contains("divisor")) throw SchemaError("fixture " + f.name + " carries no divisor data");
    return abelianized_pi1(divisor_from_json(f.payload["divisor"]));
}

std::vector<Character> grid(const ChainComplex& c, long order_bound) {
    std::vector<Character> out;
    const auto& map = c.character_map();
    for (auto& chi : characters_of_order_at_most(map.ambient_dim, order_bound)) {
        if (chi.is_identity()) continue;
        bool ok = std::all_of(map.relations.begin(), map.relations.end(),
                              [&](const Exponent& rel) { return is_integer(chi.pair(rel)); });
        if (ok) out.push_back(std::move(chi));
    }
    return out;
}

std::vector<TranslatedSubtorus> payload_candidates(const Json& payload) {
    std::vector<TranslatedSubtorus> out;
    if (payload.contains("candidates"))
        for (const auto& s : payload["candidates"]) out.push_back(subtorus_from_json(s));
    return out;
}

struct Pullbacks {
    std::vector<std::pair<std::string, TranslatedSubtorus>> components;
    bool pairwise_distinct = true;
};

Pullbacks pullbacks(const Fixture& f) {
    Pullbacks p;
    TranslatedSubtorus target = subtorus_from_json(require(f.payload, "target"));
    for (const auto& m : payload_maps(f.payload))
        p.components.emplace_back(m.name, pullback_subtorus(m.matrix, target).canonical());
    for (std::size_t i = 0; i < p.components.size(); ++i)
        for (std::size_t j = i + 1; j < p.components.size(); ++j)
            if (p.components[i].second == p.components[j].second) p.pairwise_distinct = false;
    return p;
}

}  // namespace

CommandResult cmd_h1(const Fixture& f) {
    AbelianGroup g = fixture_h1(f);
    CommandResult r;
    r.json = Json{{"fixture", f.name}, {"h1", to_json(g)}};
    r.table = f.name + "\nH_1 = " + g.to_string() + "\n";
    return r;
}

CommandResult cmd_charvar(const Fixture& f, std::size_t k, long order_bound) {
    CommandResult r;
    std::ostringstream t;
    if (f.kind == "projective-config") {
        Pullbacks p = pullbacks(f);
        Json comps = Json::array();
        t << f.name << ": candidate components of V_" << k << " pulled back along " << p.components.size()
          << " maps\n";
        for (const auto& [name, s] : p.components) {
            comps.push_back(Json{{"map", name}, {"subtorus", to_json(s)}});
            t << "  " << name << "  dim " << s.dimension() << "  " << s.to_string() << "\n";
        }
        t << "pairwise distinct: " << (p.pairwise_distinct ? "yes" : "no") << "\n";
        r.json = Json{{"fixture", f.name}, {"depth", k}, {"components", comps}, {"pairwise_distinct", p.pairwise_distinct}};
        r.table = t.str();
        return r;
    }
    if (f.kind != "arrangement-cone") throw SchemaError("charvar needs an arrangement-cone or projective-config fixture");
    ChainComplex c = build_complex(f.payload);
    const std::size_t degree = payload_degree(f.payload);
    HomologyEvaluator ev(c);
    CharVarReport rep;
    rep.depth = k;
    rep.degree = degree;
    rep.order_bound = order_bound;
    for (auto& chi : grid(c, order_bound)) {
        bool m = k == 0 || ev.dim(chi, degree) >= k;
        (m ? rep.members : rep.non_members).push_back(std::move(chi));
    }
    for (const auto& s : payload_candidates(f.payload)) {
        auto v = verify_subtorus(c, s, k, degree, std::max(order_bound, 2L));
        rep.candidates.push_back(v.candidates.front());
    }
    r.json = to_json(rep);
    r.json["fixture"] = f.name;
    t << f.name << ": V_" << k << "(H_" << degree << ") on characters of order <= " << order_bound << "\n";
    t << "members: " << rep.members.size() << "  non-members: " << rep.non_members.size() << "\n";
    for (const auto& cand : rep.candidates) {
        t << "  " << cand.subtorus.to_string() << "  " << to_string(cand.status);
        if (cand.witness) t << "  witness " << cand.witness->to_string();
        t << "\n";
    }
    r.table = t.str();
    return r;
}

CommandResult cmd_polytope(const Fixture& f, const std::string& sub) {
    if (f.kind != "local-germ") throw SchemaError("polytope commands need a local-germ fixture");
    CatalogEntry cat = payload_catalog(f.payload);
    CommandResult r;
    std::ostringstream t;
    Json out{{"fixture", f.name}, {"catalog", cat.name}};
    if (sub == "faces" || sub == "exp") {
        Json polys = Json::array();
        for (std::size_t i = 0; i < cat.polytopes.size(); ++i) {
            Json faces = Json::array();
            t << cat.name << " polytope " << i << "\n";
            for (const auto& face : polytope_faces(cat.polytopes[i].polytope)) {
                TranslatedSubtorus e = exp_face(face.geometry);
                Json fj = sub == "faces" ? to_json(face) : Json::object();
                fj["hyperplane_text"] = hyperplane_text(face.a, face.c);
                fj["exp"] = to_json(e);
                faces.push_back(fj);
                t << "  " << hyperplane_text(face.a, face.c) << "  dim " << face.geometry.span.dim << "  exp "
                  << e.canonical().to_string() << "\n";
            }
            polys.push_back(Json{{"index", i}, {"faces", faces}});
        }
        out["polytopes"] = polys;
    } else if (sub == "contributing") {
        Json verdicts = Json::array();
        const Json& queries = require(f.payload, "contributing");
        for (const auto& q : queries) {
            RationalVector d = rational_vector_from_json(require(q, "d"));
            Rational l = rational_from_json(require(q, "l"));
            long k = q.value("k", 1L);
            for (std::size_t i = 0; i < cat.polytopes.size(); ++i)
                for (const auto& face : polytope_faces(cat.polytopes[i].polytope)) {
                    auto v = contributing_face_test(face.geometry, d, l, k);
                    Json vj = to_json(v);
                    vj["polytope"] = i;
                    vj["face"] = hyperplane_text(face.a, face.c);
                    vj["query"] = hyperplane_text(d, l);
                    verdicts.push_back(vj);
                    t << "  face " << hyperplane_text(face.a, face.c) << " in {" << hyperplane_text(d, l)
                      << "}: " << (v.contained ? "contained" : "not contained") << "\n";
                }
        }
        out["verdicts"] = verdicts;
    } else if (sub == "global") {
        auto region_json = [&](const std::vector<LocalCondition>& conds, std::size_t r_dim) {
            GlobalRegion g = global_polytope(conds, r_dim);
            t << "global region in dimension " << r_dim << ": " << g.cells.size() << " cells\n";
            for (const auto& c : g.cells)
                t << "  levels " << Json(c.levels).dump() << "  vertices " << c.closure_vertices.size() << "\n";
            return to_json(g);
        };
        if (f.payload.contains("global")) {
            const auto& g = f.payload["global"];
            std::vector<LocalCondition> conds;
            for (const auto& c : require(g, "conditions")) {
                std::size_t idx = require(c, "polytope").get<std::size_t>();
                if (idx >= cat.polytopes.size()) throw SchemaError("condition references missing polytope");
                LocalToGlobalMap m;
                for (long j : long_vector_from_json(require(c, "components"))) m.components.push_back(j);
                m.a = int_matrix_from_json(require(c, "a"));
                conds.push_back({LocalRegion::of(cat.polytopes[idx].polytope), m});
            }
            out["global"] = region_json(conds, require(g, "r").get<std::size_t>());
        } else {
            // identity map: every polytope read on the torus of its own branches
            Json regions = Json::array();
            for (const auto& p : cat.polytopes) {
                LocalToGlobalMap m;
                for (std::size_t j = 0; j < cat.dim; ++j) m.components.push_back(j);
                m.a = IntMatrix::identity(cat.dim);
                regions.push_back(region_json({{LocalRegion::of(p.polytope), m}}, cat.dim));
            }
            out["global"] = regions;
        }
    } else {
        throw SchemaError("unknown polytope subcommand '" + sub + "'");
    }
    r.json = out;
    r.table = t.str();
    return r;
}

namespace {

BuildOptions payload_options(const Json& payload) {
    BuildOptions o;
    if (payload.contains("options")) {
        o.include_empty_stratum = payload["options"].value("include_empty_stratum", o.include_empty_stratum);
        o.exceptional_only = payload["options"].value("exceptional_only", o.exceptional_only);
    }
    return o;
}

ZetaFunction fixture_zeta(const Fixture& f, ResolutionDatum* rd_out = nullptr) {
    if (f.kind != "resolution") throw SchemaError("zeta commands need a resolution fixture");
    ResolutionDatum rd = resolution_from_json(require(f.payload, "datum"));
    if (rd_out) *rd_out = rd;
    return build_zeta(rd, payload_options(f.payload));
}

}  // namespace

CommandResult cmd_zeta(const Fixture& f, const std::string& realization, const std::optional<Character>& chi,
                       long order_bound) {
    ResolutionDatum rd;
    ZetaFunction z = fixture_zeta(f, &rd);
    std::vector<std::string> names;
    for (const auto& c : rd.components) names.push_back(c.name);
    CommandResult r;
    Json out{{"fixture", f.name}, {"zeta", to_json(z)}, {"zeta_text", z.to_string(names)}};
    std::ostringstream t;
    t << f.name << ": " << z.terms.size() << " terms\nZ = " << z.to_string(names) << "\n";
    if (realization == "top") {
        auto e = e_top_realization(z);
        out["e_top"] = to_json(e);
        t << "e_top = " << e.to_string() << "\n";
    } else if (realization == "hodge") {
        auto h = hodge_realization(z);
        out["hodge"] = to_json(h);
        t << "e_h = " << h.to_string() << "\n";
    } else if (realization == "limit") {
        Json lim = Json::array();
        auto one = [&](const Character& c) {
            long v = limit_at_infinity(z, c);
            lim.push_back(Json{{"chi", to_json(c)}, {"value", v}});
            t << "  " << c.to_string() << "  " << v << "\n";
        };
        if (chi) {
            one(*chi);
        } else {
            for (const auto& c : characters_of_order_at_most(rd.r, order_bound))
                if (!c.is_identity()) one(c);
        }
        out["limits"] = lim;
    } else {
        throw SchemaError("unknown zeta realization '" + realization + "'");
    }
    r.json = out;
    r.table = t.str();
    return r;
}

namespace {

void expect_eq(std::vector<std::string>& diffs, const std::string& key, const Json& want, const Json& got) {
    if (want != got) diffs.push_back(key + ": expected " + dump(want) + ", got " + dump(got));
}

std::vector<std::string> check_cone(const Fixture& f, const Json& exp) {
    std::vector<std::string> diffs;
    if (exp.contains("h1")) expect_eq(diffs, "h1", exp["h1"], fixture_h1(f).to_string());
    if (exp.contains("support")) {
        ChainComplex c = build_complex(f.payload);
        if (exp.contains("dd_zero")) expect_eq(diffs, "dd_zero", exp["dd_zero"], c.verify_dd_zero());
        TranslatedSubtorus s = subtorus_from_json(exp["support"]);
        const long on = require(exp, "dim_on").get<long>();
        const long off = exp.value("dim_off", 0L);
        const std::size_t degree = payload_degree(f.payload);
        HomologyEvaluator ev(c);
        std::size_t bad = 0;
        for (const auto& chi : grid(c, exp.value("order_bound", 3L))) {
            long want = s.contains(chi) ? on : off;
            long got = static_cast<long>(ev.dim(chi, degree));
            if (want != got && bad++ < 3)
                diffs.push_back("dim H_" + std::to_string(degree) + " at " + chi.to_string() + ": expected " +
                                std::to_string(want) + ", got " + std::to_string(got));
        }
        if (bad > 3) diffs.push_back(std::to_string(bad - 3) + " further characters differ");
    }
    return diffs;
}

std::vector<std::string> check_projective(const Fixture& f, const Json& exp) {
    std::vector<std::string> diffs;
    if (exp.contains("h1")) expect_eq(diffs, "h1", exp["h1"], fixture_h1(f).to_string());
    if (exp.contains("component_dims") || exp.contains("pairwise_distinct")) {
        Pullbacks p = pullbacks(f);
        Json dims = Json::array();
        for (const auto& c : p.components) dims.push_back(c.second.dimension());
        if (exp.contains("component_dims")) expect_eq(diffs, "component_dims", exp["component_dims"], dims);
        if (exp.contains("pairwise_distinct"))
            expect_eq(diffs, "pairwise_distinct", exp["pairwise_distinct"], p.pairwise_distinct);
    }
    return diffs;
}

std::vector<std::string> check_germ(const Fixture& f, const Json& exp) {
    std::vector<std::string> diffs;
    if (exp.contains("faces") || exp.contains("exp")) {
        CatalogEntry cat = payload_catalog(f.payload);
        Json faces = Json::array(), exps = Json::array();
        for (const auto& p : cat.polytopes)
            for (const auto& face : polytope_faces(p.polytope)) {
                faces.push_back(hyperplane_text(face.a, face.c));
                exps.push_back(exp_face(face.geometry).canonical().to_string());
            }
        if (exp.contains("faces")) expect_eq(diffs, "faces", exp["faces"], faces);
        if (exp.contains("exp")) expect_eq(diffs, "exp", exp["exp"], exps);
    }
    if (exp.contains("genera")) {
        Json gen = Json::array();
        for (const auto& b : payload_branch_data(f.payload)) gen.push_back(riemann_hurwitz_genus(b));
        expect_eq(diffs, "genera", exp["genera"], gen);
    }
    if (exp.contains("cw_sums_equal_genus")) {
        bool ok = true;
        for (const auto& b : payload_branch_data(f.payload)) {
            auto d = chevalley_weil_dims(b);
            long s = 0;
            for (long x : d) s += x;
            ok = ok && s == riemann_hurwitz_genus(b);
        }
        expect_eq(diffs, "cw_sums_equal_genus", exp["cw_sums_equal_genus"], ok);
    }
    return diffs;
}

std::vector<std::string> check_resolution(const Fixture& f, const Json& exp) {
    std::vector<std::string> diffs;
    ResolutionDatum rd;
    ZetaFunction z = fixture_zeta(f, &rd);
    if (exp.contains("term_count")) expect_eq(diffs, "term_count", exp["term_count"], z.terms.size());
    if (exp.contains("e_top")) expect_eq(diffs, "e_top", exp["e_top"], e_top_realization(z).to_string());
    if (exp.contains("hodge")) expect_eq(diffs, "hodge", exp["hodge"], hodge_realization(z).to_string());
    if (exp.contains("limits"))
        for (const auto& l : exp["limits"]) {
            Character chi = character_from_json(require(l, "chi"));
            expect_eq(diffs, "limit at " + chi.to_string(), require(l, "value"), limit_at_infinity(z, chi));
        }
    return diffs;
}

}  // namespace

std::vector<std::string> check_fixture(const Fixture& f) {
    if (!f.expected) return {};
    const Json& exp = *f.expected;
    if (f.kind == "arrangement-cone") return check_cone(f, exp);
    if (f.kind == "projective-config") return check_projective(f, exp);
    if (f.kind == "local-germ") return check_germ(f, exp);
    return check_resolution(f, exp);
}

SelftestOutcome cmd_selftest(const std::vector<std::string>& paths) {
    SelftestOutcome o;
    for (const auto& p : paths) {
        std::string label = p;
        try {
            Fixture f = load_fixture(p);
            label = f.name;
            if (!f.expected) {
                ++o.skipped;
                o.lines.push_back("SKIP " + label + ": no expected block");
                continue;
            }
            auto diffs = check_fixture(f);
            if (diffs.empty()) {
                ++o.passed;
                o.lines.push_back("PASS " + label);
            } else {
                ++o.failed;
                o.lines.push_back("FAIL " + label);
                for (const auto& d : diffs) o.lines.push_back("    " + d);
            }
        } catch (const std::exception& e) {
            ++o.failed;
            o.lines.push_back("FAIL " + label + ": " + e.what());
        }
    }
    return o;
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Characteristic varieties, polytopes of quasiadjunction and zeta functions in exact arithmetic"};
    app.fallthrough();
    bool as_table = false, as_json = false, selftest_flag = false;
    app.add_flag("--json", as_json, "JSON output (default)");
    app.add_flag("--table", as_table, "human-readable output");
    app.add_flag("--selftest", selftest_flag, "run every bundled fixture against its expected block");

    std::string fixture;
    std::size_t k = 1;
    long order_bound = 4;
    std::string chi_text, sub, realization, dir;
    std::vector<std::string> files;

    auto* h1 = app.add_subcommand("h1", "abelianized fundamental group of the complement");
    h1->add_option("--fixture", fixture, "fixture path or bundled name")->required();
    auto* charvar = app.add_subcommand("charvar", "characteristic variety report");
    charvar->add_option("--fixture", fixture, "fixture path or bundled name")->required();
    charvar->add_option("--k", k, "depth k of V_k")->capture_default_str();
    charvar->add_option("--order-bound", order_bound, "maximal character order")->capture_default_str();
    auto* polytope = app.add_subcommand("polytope", "polytopes of quasiadjunction");
    polytope->add_option("mode", sub, "faces | global | contributing | exp")
        ->required()
        ->check(CLI::IsMember({"faces", "global", "contributing", "exp"}));
    polytope->add_option("--fixture", fixture, "fixture path or bundled name")->required();
    auto* zeta = app.add_subcommand("zeta", "zeta function realizations");
    zeta->add_option("realization", realization, "top | hodge | limit")
        ->required()
        ->check(CLI::IsMember({"top", "hodge", "limit"}));
    zeta->add_option("--fixture", fixture, "fixture path or bundled name")->required();
    zeta->add_option("--chi", chi_text, "character as a/b,c/d,...");
    zeta->add_option("--order-bound", order_bound, "maximal order when --chi is absent")->capture_default_str();
    auto* selftest = app.add_subcommand("selftest", "check fixtures against their expected blocks");
    selftest->add_option("--dir", dir, "fixture directory (default: bundled)");
    selftest->add_option("files", files, "fixture files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);
        err << "error: " << e.what() << "\n";
        return 2;
    }
    if (as_json && as_table) {
        err << "error: --json and --table are exclusive\n";
        return 2;
    }

    try {
        auto emit = [&](const CommandResult& r) {
            if (as_table)
                out << r.table;
            else
                out << r.json.dump(2) << "\n";
        };
        if (selftest_flag || selftest->parsed()) {
            std::vector<std::string> paths = files;
            if (paths.empty()) paths = fixture_paths(dir.empty() ? bundled_fixture_dir() : dir);
            auto o = cmd_selftest(paths);
            for (const auto& l : o.lines) out << l << "\n";
            out << o.passed << " passed, " << o.failed << " failed, " << o.skipped << " skipped\n";
            return o.failed ? 1 : 0;
        }
        if (h1->parsed()) {
            emit(cmd_h1(load_fixture(fixture)));
        } else if (charvar->parsed()) {
            emit(cmd_charvar(load_fixture(fixture), k, order_bound));
        } else if (polytope->parsed()) {
            emit(cmd_polytope(load_fixture(fixture), sub));
        } else if (zeta->parsed()) {
            std::optional<Character> chi;
            if (!chi_text.empty()) chi = Character::parse(chi_text);
            emit(cmd_zeta(load_fixture(fixture), realization, chi, order_bound));
        } else {
            out << app.help();
            return 2;
        }
        return 0;
    } catch (const SchemaError& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace innc::cli
