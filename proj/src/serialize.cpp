#include "innc/serialize.hpp"

#include "innc/error.hpp"

#include <algorithm>

namespace innc {

const Json& require(const Json& j, const std::string& key) {
    if (!j.is_object()) throw SchemaError("expected an object holding '" + key + "'");
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError("missing field '" + key + "'");
    return *it;
}

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const RationalVector& v) {
    Json out = Json::array();
    for (const auto& q : v) out.push_back(to_string(q));
    return out;
}

Json to_json(const IntMatrix& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols; ++j) row.push_back(to_long(m.at(i, j)));
        out.push_back(row);
    }
    return out;
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw SchemaError("rationals are integers or \"p/q\" strings, got " + j.dump());
}

RationalVector rational_vector_from_json(const Json& j) {
    if (!j.is_array()) throw SchemaError("expected an array of rationals");
    RationalVector v;
    for (const auto& x : j) v.push_back(rational_from_json(x));
    return v;
}

std::vector<long> long_vector_from_json(const Json& j) {
    if (!j.is_array()) throw SchemaError("expected an array of integers");
    std::vector<long> v;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw SchemaError("expected an integer, got " + x.dump());
        v.push_back(x.get<long>());
    }
    return v;
}

IntMatrix int_matrix_from_json(const Json& j, std::size_t cols_if_empty) {
    if (!j.is_array()) throw SchemaError("expected a matrix (array of rows)");
    std::vector<std::vector<long>> rows;
    for (const auto& r : j) rows.push_back(long_vector_from_json(r));
    for (const auto& r : rows)
        if (r.size() != rows.front().size()) throw SchemaError("ragged matrix");
    return IntMatrix::from_rows(rows, cols_if_empty);
}

Json to_json(const Character& chi) { return to_json(chi.kappas()); }

Character character_from_json(const Json& j) {
    if (j.is_string()) return Character::parse(j.get<std::string>());
    return Character::from_log(rational_vector_from_json(j));
}

Json to_json(const TranslatedSubtorus& s) {
    TranslatedSubtorus c = s.canonical();
    return Json{{"ambient_dim", s.ambient_dim()},
                {"equations", to_json(c.equations())},
                {"offset", to_json(c.offset())},
                {"dimension", c.dimension()},
                {"text", c.to_string()}};
}

TranslatedSubtorus subtorus_from_json(const Json& j) {
    RationalVector b = rational_vector_from_json(require(j, "offset"));
    std::size_t cols = j.contains("ambient_dim") ? require(j, "ambient_dim").get<std::size_t>() : 0;
    IntMatrix A = int_matrix_from_json(require(j, "equations"), cols);
    if (A.rows != b.size()) throw SchemaError("subtorus offset length differs from equation count");
    return TranslatedSubtorus(A, b);
}

Json to_json(const AbelianGroup& g) {
    Json t = Json::array();
    for (const auto& x : g.torsion) t.push_back(to_long(x));
    return Json{{"free_rank", g.free_rank}, {"torsion", t}, {"text", g.to_string()}};
}

Json to_json(const DivisorData& d) {
    Json comps = Json::array();
    for (const auto& c : d.components) comps.push_back(Json{{"name", c.name}, {"degree", c.degree}});
    Json out{{"components", comps},
             {"pairing", to_json(d.pairing)},
             {"hypotheses",
              {{"simply_connected", d.hypotheses.simply_connected},
               {"ample", d.hypotheses.ample},
               {"normal_crossings_outside_isolated", d.hypotheses.normal_crossings_outside_isolated}}}};
    if (d.boundary) out["boundary"] = to_json(*d.boundary);
    return out;
}

DivisorData divisor_from_json(const Json& j) {
    DivisorData d;
    for (const auto& c : require(j, "components"))
        d.components.push_back({require(c, "name").get<std::string>(), c.value("degree", 0L)});
    d.pairing = int_matrix_from_json(require(j, "pairing"), d.components.size());
    if (d.pairing.cols != d.components.size()) throw SchemaError("pairing columns differ from component count");
    if (j.contains("boundary")) {
        d.boundary = int_matrix_from_json(j["boundary"], d.components.size());
        if (d.boundary->cols != d.components.size()) throw SchemaError("boundary columns differ from component count");
    }
    if (j.contains("hypotheses")) {
        const auto& h = j["hypotheses"];
        d.hypotheses.simply_connected = h.value("simply_connected", false);
        d.hypotheses.ample = h.value("ample", false);
        d.hypotheses.normal_crossings_outside_isolated = h.value("normal_crossings_outside_isolated", false);
    }
    return d;
}

Json to_json(const CharacterMap& m) {
    return Json{{"ambient_dim", m.ambient_dim},
                {"variable_images", m.variable_images},
                {"relations", m.relations},
                {"description", m.description}};
}

CharacterMap character_map_from_json(const Json& j) {
    CharacterMap m;
    m.ambient_dim = require(j, "ambient_dim").get<std::size_t>();
    for (const auto& e : require(j, "variable_images")) m.variable_images.push_back(long_vector_from_json(e));
    if (j.contains("relations"))
        for (const auto& e : j["relations"]) m.relations.push_back(long_vector_from_json(e));
    m.description = j.value("description", std::string());
    for (const auto& e : m.variable_images)
        if (e.size() != m.ambient_dim) throw SchemaError("variable image length differs from ambient_dim");
    return m;
}

namespace {

Json poly_matrix_json(const PolyMatrix& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols; ++j) row.push_back(m.at(i, j).to_string());
        out.push_back(row);
    }
    return out;
}

PolyMatrix poly_matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, std::size_t nvars) {
    if (!j.is_array() || j.size() != rows) throw SchemaError("differential has wrong row count");
    PolyMatrix m(rows, cols, nvars);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) throw SchemaError("differential has wrong column count");
        for (std::size_t c = 0; c < cols; ++c) {
            const auto& e = j[i][c];
            if (e.is_number_integer())
                m.at(i, c) = LaurentPoly::constant(nvars, Rational(e.get<long>()));
            else if (e.is_string())
                m.at(i, c) = LaurentPoly::parse(e.get<std::string>(), nvars);
            else
                throw SchemaError("polynomial entries are strings");
        }
    }
    return m;
}

}  // namespace

Json to_json(const ChainComplex& c) {
    Json d = Json::array();
    for (const auto& m : c.differentials()) d.push_back(poly_matrix_json(m));
    return Json{{"nvars", c.nvars()}, {"ranks", c.ranks()}, {"differentials", d}, {"map", to_json(c.character_map())}};
}

ChainComplex complex_from_json(const Json& j) {
    std::size_t nvars = require(j, "nvars").get<std::size_t>();
    auto ranks = require(j, "ranks").get<std::vector<std::size_t>>();
    const auto& dj = require(j, "differentials");
    if (ranks.empty() || dj.size() + 1 != ranks.size()) throw SchemaError("need one differential per positive degree");
    std::vector<PolyMatrix> ds;
    for (std::size_t k = 1; k < ranks.size(); ++k) ds.push_back(poly_matrix_from_json(dj[k - 1], ranks[k - 1], ranks[k], nvars));
    CharacterMap map = j.contains("map") ? character_map_from_json(j["map"]) : CharacterMap::identity(nvars);
    return ChainComplex(nvars, ranks, ds, map);
}

Json to_json(const ModulePresentation& p) {
    return Json{{"nvars", p.nvars},
                {"generators", p.generators()},
                {"relations", p.relations()},
                {"phi", poly_matrix_json(p.phi)},
                {"map", to_json(p.map)}};
}

Json to_json(const CharVarReport& r) {
    Json members = Json::array(), non = Json::array(), cands = Json::array();
    for (const auto& c : r.members) members.push_back(to_json(c));
    for (const auto& c : r.non_members) non.push_back(to_json(c));
    for (const auto& c : r.candidates) {
        Json cj{{"subtorus", to_json(c.subtorus)}, {"status", to_string(c.status)}};
        if (c.witness) cj["witness"] = to_json(*c.witness);
        cands.push_back(cj);
    }
    return Json{{"depth", r.depth},
                {"degree", r.degree},
                {"order_bound", r.order_bound},
                {"members", members},
                {"non_members", non},
                {"candidates", cands}};
}

Json to_json(const QPolytope& p) {
    Json ineqs = Json::array();
    for (const auto& q : p.inequalities()) ineqs.push_back(Json{{"a", to_json(q.a)}, {"c", to_json(q.c)}});
    return Json{{"dim", p.dim()}, {"inequalities", ineqs}};
}

QPolytope polytope_from_json(const Json& j) {
    std::size_t dim = require(j, "dim").get<std::size_t>();
    std::vector<Inequality> ineqs;
    for (const auto& q : require(j, "inequalities")) {
        Inequality in{rational_vector_from_json(require(q, "a")), rational_from_json(require(q, "c"))};
        if (in.a.size() != dim) throw SchemaError("inequality length differs from dim");
        ineqs.push_back(std::move(in));
    }
    return QPolytope(dim, std::move(ineqs));
}

Json to_json(const FaceGeometry& f) {
    Json verts = Json::array();
    for (const auto& v : f.vertices) verts.push_back(to_json(v));
    return Json{{"ambient", f.ambient},
                {"dim", f.span.dim},
                {"vertices", verts},
                {"span", {{"equations", to_json(f.span.equations)}, {"rhs", to_json(f.span.rhs)}}}};
}

Json to_json(const QFace& f) {
    return Json{{"hyperplane", {{"a", to_json(f.a)}, {"c", to_json(f.c)}}}, {"geometry", to_json(f.geometry)}};
}

Json to_json(const CatalogEntry& e) {
    Json ps = Json::array();
    for (const auto& p : e.polytopes) {
        Json pj = to_json(p.polytope);
        if (p.k) pj["k"] = *p.k;
        if (p.level) pj["level"] = *p.level;
        ps.push_back(pj);
    }
    return Json{{"name", e.name}, {"dim", e.dim}, {"polytopes", ps}};
}

CatalogEntry catalog_from_json(const Json& j) {
    CatalogEntry e;
    e.name = require(j, "name").get<std::string>();
    e.dim = require(j, "dim").get<std::size_t>();
    for (const auto& pj : require(j, "polytopes")) {
        Json body = pj;
        if (!body.contains("dim")) body["dim"] = e.dim;
        CatalogPolytope cp{polytope_from_json(body), std::nullopt, std::nullopt};
        if (cp.polytope.dim() != e.dim) throw SchemaError("catalog polytope dim differs from entry dim");
        if (pj.contains("k")) cp.k = pj["k"].get<long>();
        if (pj.contains("level")) cp.level = pj["level"].get<long>();
        e.polytopes.push_back(std::move(cp));
    }
    return e;
}

Json to_json(const ContributingVerdict& v) {
    Json out{{"contained", v.contained}, {"depth", v.depth}};
    if (v.witness) out["witness"] = to_json(*v.witness);
    if (v.predicted) out["predicted"] = to_json(*v.predicted);
    return out;
}

Json to_json(const GlobalRegion& g) {
    Json cells = Json::array();
    for (const auto& c : g.cells) {
        Json verts = Json::array();
        for (const auto& v : c.closure_vertices) verts.push_back(to_json(v));
        cells.push_back(Json{{"levels", c.levels}, {"closure_vertices", verts}});
    }
    return Json{{"r", g.r}, {"cells", cells}};
}

Json to_json(const BranchDatum& b) {
    return Json{{"m", b.m}, {"a", b.a}, {"a_infinity", b.a_infinity()}};
}

BranchDatum branch_from_json(const Json& j) {
    BranchDatum b;
    b.m = require(j, "m").get<long>();
    b.a = long_vector_from_json(require(j, "a"));
    return b;
}

Json to_json(const QuasiadjunctionReport& r) {
    Json rows = Json::array();
    for (const auto& row : r.rows) {
        Json rj{{"k", row.k},
                {"chi", to_json(row.chi)},
                {"cw_index", row.cw_index},
                {"cw_raw", row.cw_raw},
                {"cw_gated", row.cw_gated},
                {"kills_exceptional", row.kills_exceptional},
                {"agrees", row.agrees}};
        rj["face_level"] = row.face_level ? Json(*row.face_level) : Json(nullptr);
        rows.push_back(rj);
    }
    return Json{{"r", r.r},
                {"m", r.m},
                {"rows", rows},
                {"agreements", r.agreements},
                {"disagreements", r.disagreements},
                {"raw_disagreements", r.raw_disagreements}};
}

Json to_json(const EPoly& e) {
    Json terms = Json::array();
    for (const auto& [k, c] : e.terms()) terms.push_back(Json{{"pu", k.first}, {"pv", k.second}, {"coeff", c.get_str()}});
    return Json{{"terms", terms}, {"text", e.to_string()}};
}

EPoly epoly_from_json(const Json& j) {
    EPoly e;
    for (const auto& t : require(j, "terms")) {
        const auto& c = require(t, "coeff");
        Integer coeff = c.is_string() ? Integer(c.get<std::string>()) : Integer(c.get<long>());
        e.add_term(require(t, "pu").get<long>(), require(t, "pv").get<long>(), coeff);
    }
    return e;
}

Json to_json(const ResolutionDatum& rd) {
    Json comps = Json::array(), strata = Json::array();
    for (const auto& c : rd.components)
        comps.push_back(Json{{"name", c.name}, {"a", c.a}, {"c", c.c}, {"exceptional", c.exceptional}});
    for (const auto& s : rd.strata) {
        Json names = Json::array();
        for (auto i : s.subset) names.push_back(rd.components[i].name);
        Json sj{{"subset", names}};
        if (s.euler) sj["euler"] = *s.euler;
        if (s.hodge) sj["hodge"] = to_json(*s.hodge);
        strata.push_back(sj);
    }
    Json out{{"r", rd.r}, {"components", comps}, {"strata", strata}};
    if (rd.total_euler) out["total_euler"] = *rd.total_euler;
    return out;
}

ResolutionDatum resolution_from_json(const Json& j) {
    ResolutionDatum rd;
    rd.r = require(j, "r").get<std::size_t>();
    for (const auto& c : require(j, "components"))
        rd.components.push_back({require(c, "name").get<std::string>(), long_vector_from_json(require(c, "a")),
                                 require(c, "c").get<long>(), c.value("exceptional", true)});
    for (const auto& s : require(j, "strata")) {
        Stratum st;
        for (const auto& n : require(s, "subset")) {
            std::size_t idx = rd.components.size();
            for (std::size_t i = 0; i < rd.components.size(); ++i)
                if (rd.components[i].name == n.get<std::string>()) idx = i;
            if (idx == rd.components.size()) throw InvalidArgument("stratum references unknown component " + n.dump());
            st.subset.push_back(idx);
        }
        std::sort(st.subset.begin(), st.subset.end());
        if (s.contains("euler")) st.euler = s["euler"].get<long>();
        if (s.contains("hodge")) st.hodge = epoly_from_json(s["hodge"]);
        rd.strata.push_back(std::move(st));
    }
    if (j.contains("total_euler")) rd.total_euler = j["total_euler"].get<long>();
    rd.validate();
    return rd;
}

namespace {

Json subset_names(const std::vector<std::size_t>& subset) { return Json(subset); }

}  // namespace

Json to_json(const ZetaFunction& z) {
    Json terms = Json::array();
    for (const auto& t : z.terms) {
        Json factors = Json::array();
        for (const auto& f : t.factors) factors.push_back(Json{{"c", f.c}, {"a", f.a}});
        Json tj{{"subset", subset_names(t.subset)}, {"factors", factors}};
        if (t.euler) tj["euler"] = *t.euler;
        if (t.hodge) tj["hodge"] = to_json(*t.hodge);
        terms.push_back(tj);
    }
    return Json{{"r", z.r}, {"terms", terms}, {"term_count", z.terms.size()}};
}

Json to_json(const TopRealization& t) {
    Json terms = Json::array();
    for (const auto& term : t.terms) terms.push_back(Json{{"coefficient", term.coefficient.get_str()}, {"factors", term.factors}});
    return Json{{"r", t.r}, {"terms", terms}, {"text", t.to_string()}};
}

Json to_json(const HodgeRealization& h) {
    Json terms = Json::array();
    for (const auto& term : h.terms) {
        Json factors = Json::array();
        for (const auto& f : term.factors) factors.push_back(Json{{"c", f.c}, {"a", f.a}});
        terms.push_back(Json{{"coefficient", to_json(term.coefficient)}, {"factors", factors}});
    }
    return Json{{"r", h.r}, {"terms", terms}, {"text", h.to_string()}};
}

}  // namespace innc
