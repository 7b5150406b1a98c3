#include "innc/global_polytope.hpp"

#include "innc/error.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace innc {

RationalVector LocalToGlobalMap::apply(const RationalVector& kappa) const {
    if (kappa.size() != a.rows) throw DimensionMismatch("character dimension differs from the a-matrix rows");
    RationalVector y;
    for (auto j : components) {
        if (j >= a.cols) throw InvalidArgument("component index out of range");
        Rational s = 0;
        for (std::size_t i = 0; i < a.rows; ++i) s += Rational(a.at(i, j)) * kappa[i];
        y.push_back(frac(s));
    }
    return y;
}

LocalRegion LocalRegion::of(const QPolytope& p) { return {p.dim(), p.constraints()}; }

LocalRegion LocalRegion::of(const QFace& f) {
    LocalRegion r = of(f.parent);
    r.constraints.push_back({f.a, f.c, Relation::EQ});
    return r;
}

bool LocalRegion::contains(const RationalVector& y) const {
    for (const auto& c : constraints)
        if (!c.satisfied(y)) return false;
    return true;
}

bool GlobalRegion::contains(const RationalVector& kappa) const {
    if (kappa.size() != r) throw DimensionMismatch("point dimension differs from region dimension");
    for (const auto& k : kappa)
        if (k < 0 || k >= 1) return false;
    for (const auto& cell : cells) {
        bool in = true;
        for (const auto& c : cell.constraints)
            if (!c.satisfied(kappa)) {
                in = false;
                break;
            }
        if (in) return true;
    }
    return false;
}

GlobalRegion global_polytope(const std::vector<LocalCondition>& conditions, std::size_t r) {
    // Linear forms w_t and admissible integer levels for each local coordinate.
    struct Form {
        RationalVector w;
        long lo, hi;  // levels lo..hi inclusive
    };
    std::vector<Form> forms;
    std::vector<std::size_t> first_form;
    for (const auto& cond : conditions) {
        const auto& m = cond.map;
        if (m.a.rows != r) throw DimensionMismatch("a-matrix must have r rows");
        if (cond.region.dim != m.components.size())
            throw DimensionMismatch("local region dimension differs from the number of components");
        for (const auto& c : cond.region.constraints)
            if (c.a.size() != cond.region.dim) throw DimensionMismatch("local constraint length");
        first_form.push_back(forms.size());
        for (auto j : m.components) {
            if (j >= m.a.cols) throw InvalidArgument("component index out of range");
            Form f;
            Integer lo = 0, hi = 0;
            for (std::size_t i = 0; i < r; ++i) {
                const Integer& x = m.a.at(i, j);
                f.w.push_back(Rational(x));
                if (x < 0) lo += x;
                else hi += x;
            }
            // sum a_i kappa_i ranges inside [lo, hi] on the cube.
            f.lo = to_long(lo);
            f.hi = hi > lo ? to_long(hi) - 1 : to_long(lo);
            forms.push_back(std::move(f));
        }
    }
    GlobalRegion g;
    g.r = r;
    std::vector<long> levels(forms.size());
    std::function<void(std::size_t)> rec = [&](std::size_t t) {
        if (t < forms.size()) {
            for (long k = forms[t].lo; k <= forms[t].hi; ++k) {
                levels[t] = k;
                rec(t + 1);
            }
            return;
        }
        GlobalCell cell;
        cell.levels = levels;
        for (std::size_t i = 0; i < r; ++i) {
            RationalVector e(r, Rational(0));
            e[i] = 1;
            cell.constraints.push_back({e, 1, Relation::LT});
        }
        for (std::size_t f = 0; f < forms.size(); ++f) {
            RationalVector neg = forms[f].w;
            for (auto& v : neg) v = -v;
            cell.constraints.push_back({neg, Rational(-levels[f]), Relation::LE});
            cell.constraints.push_back({forms[f].w, Rational(levels[f] + 1), Relation::LT});
        }
        for (std::size_t ci = 0; ci < conditions.size(); ++ci) {
            const auto& cond = conditions[ci];
            for (const auto& lc : cond.region.constraints) {
                // a . (W kappa - k) rel c  <=>  (a W) . kappa rel c + a . k
                RationalVector coef(r, Rational(0));
                Rational rhs = lc.c;
                for (std::size_t t = 0; t < lc.a.size(); ++t) {
                    if (lc.a[t] == 0) continue;
                    const Form& f = forms[first_form[ci] + t];
                    for (std::size_t i = 0; i < r; ++i) coef[i] += lc.a[t] * f.w[i];
                    rhs += lc.a[t] * levels[first_form[ci] + t];
                }
                cell.constraints.push_back({coef, rhs, lc.rel});
            }
        }
        cell.closure_vertices = enumerate_vertices(r, cell.constraints);
        if (!cell.closure_vertices.empty()) g.cells.push_back(std::move(cell));
    };
    rec(0);
    return g;
}

GlobalFaceResult global_face(const GlobalRegion& g, const RationalVector& a, const Rational& c) {
    if (a.size() != g.r) throw DimensionMismatch("hyperplane dimension differs from region dimension");
    LinearConstraint h{a, c, Relation::EQ};
    bool below = false, above = false;
    std::vector<RationalVector> on;
    for (const auto& cell : g.cells)
        for (const auto& v : cell.closure_vertices) {
            Rational e = h.excess(v);
            if (e < 0) below = true;
            else if (e > 0) above = true;
            else on.push_back(v);
        }
    GlobalFaceResult res;
    if (below && above) res.status = FaceStatus::NotSupporting;
    else if (on.empty()) res.status = FaceStatus::Empty;
    else {
        res.status = FaceStatus::Face;
        res.face = make_face_geometry(std::move(on), g.r);
    }
    return res;
}

}  // namespace innc
