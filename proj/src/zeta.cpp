#include "innc/zeta.hpp"

#include "innc/error.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace innc {

EPoly EPoly::constant(long c) {
    EPoly e;
    e.add_term(0, 0, Integer(c));
    return e;
}

EPoly EPoly::lefschetz() { return monomial(1, 1, Integer(1)); }

EPoly EPoly::monomial(long pu, long pv, const Integer& c) {
    EPoly e;
    e.add_term(pu, pv, c);
    return e;
}

Integer EPoly::coefficient(long pu, long pv) const {
    auto it = terms_.find({pu, pv});
    return it == terms_.end() ? Integer(0) : it->second;
}

void EPoly::add_term(long pu, long pv, const Integer& c) {
    if (pu < 0 || pv < 0) throw InvalidArgument("E-polynomial exponents must be nonnegative");
    Integer& slot = terms_[{pu, pv}];
    slot += c;
    if (slot == 0) terms_.erase({pu, pv});
}

Integer EPoly::at_one() const {
    Integer s = 0;
    for (const auto& [k, c] : terms_) s += c;
    return s;
}

EPoly EPoly::operator+(const EPoly& o) const {
    EPoly r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
    return r;
}

EPoly EPoly::operator-(const EPoly& o) const {
    EPoly r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, -c);
    return r;
}

EPoly EPoly::operator*(const EPoly& o) const {
    EPoly r;
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : o.terms_) r.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
    return r;
}

std::string EPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<std::pair<long, long>, Integer>> t(terms_.begin(), terms_.end());
    std::sort(t.begin(), t.end(), [](const auto& x, const auto& y) {
        long dx = x.first.first + x.first.second, dy = y.first.first + y.first.second;
        if (dx != dy) return dx > dy;
        return x.first > y.first;
    });
    std::string out;
    bool first = true;
    for (const auto& [k, c] : t) {
        std::string mono;
        auto var = [&](const char* name, long p) {
            if (p == 0) return;
            if (!mono.empty()) mono += "*";
            mono += name;
            if (p > 1) mono += "^" + std::to_string(p);
        };
        var("u", k.first);
        var("v", k.second);
        Integer mag = abs(c);
        std::string body = mono.empty() ? mag.get_str() : (mag == 1 ? mono : mag.get_str() + "*" + mono);
        if (first)
            out = (c < 0 ? "-" : "") + body;
        else
            out += (c < 0 ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

void ResolutionDatum::validate() const {
    std::set<std::string> names;
    for (const auto& comp : components) {
        if (!names.insert(comp.name).second) throw SchemaError("duplicate component name " + comp.name);
        if (comp.a.size() != r) throw DimensionMismatch("component " + comp.name + " has wrong multiplicity length");
        for (long x : comp.a)
            if (x < 0) throw InvalidArgument("negative multiplicity on " + comp.name);
        if (comp.c < 0) throw InvalidArgument("negative discrepancy on " + comp.name);
    }
    std::set<std::vector<std::size_t>> seen;
    long total = 0;
    bool all_euler = true;
    for (const auto& s : strata) {
        for (std::size_t i = 0; i < s.subset.size(); ++i) {
            if (s.subset[i] >= components.size()) throw InvalidArgument("stratum references unknown component");
            if (i && s.subset[i] <= s.subset[i - 1]) throw SchemaError("stratum subset not sorted or repeated");
        }
        if (!seen.insert(s.subset).second) throw SchemaError("duplicate stratum");
        if (s.euler)
            total += *s.euler;
        else
            all_euler = false;
        if (s.euler && s.hodge && s.hodge->at_one() != *s.euler)
            throw InvalidArgument("E-polynomial at u = v = 1 differs from the Euler number");
    }
    if (total_euler && all_euler && total != *total_euler)
        throw InvalidArgument("strata Euler numbers sum to " + std::to_string(total) + ", recorded " +
                              std::to_string(*total_euler));
}

std::size_t ResolutionDatum::component_index(const std::string& name) const {
    for (std::size_t i = 0; i < components.size(); ++i)
        if (components[i].name == name) return i;
    throw InvalidArgument("unknown component " + name);
}

const Stratum* ResolutionDatum::find_stratum(const std::vector<std::size_t>& subset) const {
    for (const auto& s : strata)
        if (s.subset == subset) return &s;
    return nullptr;
}

ResolutionDatum ResolutionDatum::concurrent_lines(std::size_t r) {
    if (r < 2) throw InvalidArgument("need at least two lines");
    ResolutionDatum rd;
    rd.r = r;
    rd.components.push_back({"E0", std::vector<long>(r, 1), 1, true});
    for (std::size_t k = 0; k < r; ++k) {
        std::vector<long> a(r, 0);
        a[k] = 1;
        rd.components.push_back({"D" + std::to_string(k + 1), a, 0, false});
    }
    const long rl = static_cast<long>(r);
    // E0 = P^1 minus r points; each line meets E0 once and is C* away from it.
    rd.strata.push_back({{0}, 2 - rl, EPoly::lefschetz() + EPoly::constant(1 - rl)});
    for (std::size_t k = 1; k <= r; ++k) rd.strata.push_back({{0, k}, 1, EPoly::constant(1)});
    for (std::size_t k = 1; k <= r; ++k) rd.strata.push_back({{k}, 0, EPoly::lefschetz() - EPoly::constant(1)});
    rd.total_euler = 2;
    return rd;
}

namespace {

std::string t_monomial(const std::vector<long>& a) {
    std::string s;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] == 0) continue;
        if (!s.empty()) s += "*";
        s += "T" + std::to_string(k + 1);
        if (a[k] != 1) s += "^" + std::to_string(a[k]);
    }
    return s.empty() ? "1" : s;
}

std::string with_prefix(const std::string& prefix, const std::vector<long>& a) {
    std::string m = t_monomial(a);
    if (prefix.empty()) return m;
    return m == "1" ? prefix : prefix + "*" + m;
}

std::string factor_string(const std::string& prefix, const std::vector<long>& a) {
    std::string num = with_prefix(prefix, a);
    return "(" + num + ")/(1 - " + num + ")";
}

bool all_zero(const std::vector<long>& a) {
    return std::all_of(a.begin(), a.end(), [](long x) { return x == 0; });
}

}  // namespace

std::string ZetaFunction::to_string(const std::vector<std::string>& names) const {
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t t = 0; t < terms.size(); ++t) {
        const auto& term = terms[t];
        std::string cls = "[";
        for (std::size_t i = 0; i < term.subset.size(); ++i) {
            if (i) cls += ",";
            std::size_t idx = term.subset[i];
            cls += idx < names.size() ? names[idx] : "E" + std::to_string(idx);
        }
        cls += term.subset.empty() ? "U]" : "]";
        if (t) out += " + ";
        out += cls;
        for (const auto& f : term.factors)
            out += " * " + factor_string("L^" + std::to_string(-f.c - 1), f.a);
    }
    return out;
}

ZetaFunction build_zeta(const ResolutionDatum& rd, const BuildOptions& opts) {
    rd.validate();
    ZetaFunction z;
    z.r = rd.r;
    for (const auto& s : rd.strata) {
        if (s.subset.empty() && !opts.include_empty_stratum) continue;
        if (!s.subset.empty() && opts.exceptional_only &&
            std::none_of(s.subset.begin(), s.subset.end(),
                         [&](std::size_t i) { return rd.components[i].exceptional; }))
            continue;
        ZetaTerm term{s.subset, s.euler, s.hodge, {}};
        for (std::size_t i : s.subset) term.factors.push_back({rd.components[i].c, rd.components[i].a});
        z.terms.push_back(std::move(term));
    }
    std::sort(z.terms.begin(), z.terms.end(),
              [](const ZetaTerm& a, const ZetaTerm& b) { return a.subset < b.subset; });
    return z;
}

Integer TopRealization::at_zero() const {
    Integer s = 0;
    for (const auto& t : terms) {
        bool vanishes = false;
        for (const auto& a : t.factors) {
            if (all_zero(a)) throw InvalidArgument("factor with zero exponent has no value at T = 0");
            vanishes = true;
        }
        if (!vanishes) s += t.coefficient;
    }
    return s;
}

Rational TopRealization::evaluate(const RationalVector& t) const {
    if (t.size() != r) throw DimensionMismatch("evaluation point has wrong length");
    Rational s = 0;
    for (const auto& term : terms) {
        Rational v = term.coefficient;
        for (const auto& a : term.factors) {
            Rational m = 1;
            for (std::size_t k = 0; k < r; ++k) {
                Rational p = 1;
                if (a[k] > 0 && t[k] == 0) p = 0;
                for (long e = 0; e < a[k]; ++e) p *= t[k];
                m *= p;
            }
            if (m == 1) throw InvalidArgument("denominator vanishes at evaluation point");
            v *= m / (1 - m);
        }
        s += v;
    }
    return s;
}

std::string TopRealization::to_string() const {
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) out += " + ";
        out += terms[i].coefficient.get_str();
        for (const auto& a : terms[i].factors) out += " * " + factor_string("", a);
    }
    return out;
}

TopRealization e_top_realization(const ZetaFunction& z) {
    TopRealization out;
    out.r = z.r;
    for (const auto& t : z.terms) {
        if (!t.euler) throw MissingData("stratum without Euler number");
        TopTerm tt{Integer(*t.euler), {}};
        for (const auto& f : t.factors) tt.factors.push_back(f.a);
        out.terms.push_back(std::move(tt));
    }
    return out;
}

TopRealization HodgeRealization::specialize_at_one() const {
    TopRealization out;
    out.r = r;
    for (const auto& t : terms) {
        TopTerm tt{t.coefficient.at_one(), {}};
        for (const auto& f : t.factors) tt.factors.push_back(f.a);
        out.terms.push_back(std::move(tt));
    }
    return out;
}

std::string HodgeRealization::to_string() const {
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i) out += " + ";
        out += "(" + terms[i].coefficient.to_string() + ")";
        for (const auto& f : terms[i].factors) out += " * " + factor_string("(uv)^" + std::to_string(-f.c - 1), f.a);
    }
    return out;
}

HodgeRealization hodge_realization(const ZetaFunction& z) {
    HodgeRealization out;
    out.r = z.r;
    for (const auto& t : z.terms) {
        if (!t.hodge) throw MissingData("stratum without Hodge data");
        out.terms.push_back({*t.hodge, t.factors});
    }
    return out;
}

namespace {

bool kills(const Character& chi, const std::vector<long>& a) {
    Rational s = 0;
    for (std::size_t k = 0; k < a.size(); ++k) s += chi[k] * a[k];
    return is_integer(s);
}

Rational chi_log(const Character& chi, const std::vector<long>& a) {
    Rational s = 0;
    for (std::size_t k = 0; k < a.size(); ++k) s += chi[k] * a[k];
    return s;
}

}  // namespace

long equivariant_stratum_euler(const ResolutionDatum& rd, const std::vector<std::size_t>& subset,
                               const Character& chi) {
    if (chi.size() != rd.r) throw DimensionMismatch("character length differs from r");
    const Stratum* s = rd.find_stratum(subset);
    if (!s) return 0;
    if (!s->euler) throw MissingData("stratum without Euler number");
    for (std::size_t i : subset)
        if (!kills(chi, rd.components.at(i).a)) return 0;
    return *s->euler;
}

long cover_stratum_euler(const ZetaTerm& term, const Character& chi) {
    if (!term.euler) throw MissingData("stratum without Euler number");
    if (term.factors.size() >= 2) return 0;
    for (const auto& f : term.factors)
        if (!kills(chi, f.a)) return 0;
    return *term.euler;
}

long limit_at_infinity(const ZetaFunction& z, const Character& chi) {
    if (chi.size() != z.r) throw DimensionMismatch("character length differs from r");
    if (chi.is_identity()) throw IdentityCharacter("limit is taken at a non-identity character");
    long s = 0;
    for (const auto& t : z.terms) {
        for (const auto& f : t.factors)
            if (all_zero(f.a)) throw InvalidArgument("factor with zero exponent has no limit");
        long e = cover_stratum_euler(t, chi);
        s += (t.factors.size() % 2 ? -e : e);
    }
    return s;
}

long curve_hodge_u1(const ResolutionDatum& rd, const Character& chi) {
    if (chi.size() != rd.r) throw DimensionMismatch("character length differs from r");
    long total = 0;
    for (std::size_t i = 0; i < rd.components.size(); ++i) {
        const auto& comp = rd.components[i];
        if (!comp.exceptional || !kills(chi, comp.a)) continue;
        const Stratum* open = rd.find_stratum({i});
        if (!open || !open->hodge) throw MissingData("exceptional curve " + comp.name + " without Hodge data");
        // E(E_i open) = uv - g u - g v + 1 - #points
        long g = -to_long(open->hodge->coefficient(1, 0));
        Rational exps = 0;
        for (const auto& s : rd.strata) {
            if (s.subset.size() != 2 || std::find(s.subset.begin(), s.subset.end(), i) == s.subset.end()) continue;
            std::size_t j = s.subset[0] == i ? s.subset[1] : s.subset[0];
            if (!s.euler) throw MissingData("intersection stratum without Euler number");
            exps += *s.euler * frac(-chi_log(chi, rd.components[j].a));
        }
        if (exps == 0)
            total += g;
        else
            total += g - 1 + to_long(floor_of(exps));
    }
    return total;
}

CurveHodgeReport curve_hodge_consistency(std::size_t r, long m) {
    CurveHodgeReport rep;
    rep.r = r;
    rep.m = m;
    ResolutionDatum rd = ResolutionDatum::concurrent_lines(r);
    auto cw = chevalley_weil_dims(BranchDatum{m, std::vector<long>(r, 1)});
    for (long k = 1; k < m; ++k) {
        CurveHodgeRow row;
        row.k = k;
        row.chi = Character(RationalVector(r, Rational(k, m)));
        row.hodge_u1 = curve_hodge_u1(rd, row.chi);
        bool gated = (static_cast<long>(r) * k) % m == 0;
        row.chevalley_weil = gated ? cw[(m - k) % m] : 0;
        row.agrees = row.hodge_u1 == row.chevalley_weil;
        rep.all_agree = rep.all_agree && row.agrees;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

}  // namespace innc
