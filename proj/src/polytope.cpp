#include "innc/polytope.hpp"

#include "innc/error.hpp"

#include <algorithm>
#include <set>

namespace innc {

Rational LinearConstraint::excess(const RationalVector& x) const {
    if (x.size() != a.size()) throw DimensionMismatch("constraint and point dimensions differ");
    Rational s = -c;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) s += a[i] * x[i];
    return s;
}

bool LinearConstraint::satisfied(const RationalVector& x) const {
    Rational e = excess(x);
    switch (rel) {
        case Relation::LE: return e <= 0;
        case Relation::LT: return e < 0;
        case Relation::EQ: return e == 0;
    }
    return false;
}

QPolytope::QPolytope(std::size_t dim, std::vector<Inequality> inequalities) : dim_(dim), ineqs_(std::move(inequalities)) {
    for (const auto& q : ineqs_) {
        if (q.a.size() != dim_) throw DimensionMismatch("inequality length differs from polytope dimension");
        if (q.c < 0) throw InvalidArgument("polytope right-hand sides must be nonnegative");
        for (const auto& x : q.a)
            if (x < 0) throw InvalidArgument("polytope coefficients must be nonnegative");
    }
}

std::vector<LinearConstraint> QPolytope::constraints() const {
    std::vector<LinearConstraint> out;
    for (std::size_t i = 0; i < dim_; ++i) {
        RationalVector e(dim_, Rational(0));
        e[i] = -1;
        out.push_back({e, 0, Relation::LE});
        e[i] = 1;
        out.push_back({e, 1, Relation::LE});
    }
    for (const auto& q : ineqs_) out.push_back({q.a, q.c, Relation::LE});
    return out;
}

bool polytope_membership(const QPolytope& p, const RationalVector& x) {
    if (x.size() != p.dim()) throw DimensionMismatch("point dimension differs from polytope dimension");
    for (const auto& xi : x)
        if (xi < 0 || xi > 1) return false;
    for (const auto& q : p.inequalities()) {
        Rational s = 0;
        for (std::size_t i = 0; i < x.size(); ++i) s += q.a[i] * x[i];
        if (s > q.c) return false;
    }
    return true;
}

namespace {

struct Ray {
    RationalVector x;
    std::vector<bool> zero;
};

bool subset_of(const std::vector<bool>& a, const std::vector<bool>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && !b[i]) return false;
    return true;
}

}  // namespace

std::vector<RationalVector> enumerate_vertices(std::size_t n, const std::vector<LinearConstraint>& constraints) {
    // Closed system: cube faces first, then the user constraints (EQ split into two).
    std::vector<LinearConstraint> sys;
    for (std::size_t i = 0; i < n; ++i) {
        RationalVector e(n, Rational(0));
        e[i] = -1;
        sys.push_back({e, 0, Relation::LE});
        e[i] = 1;
        sys.push_back({e, 1, Relation::LE});
    }
    for (const auto& c : constraints) {
        if (c.a.size() != n) throw DimensionMismatch("constraint dimension differs from ambient dimension");
        sys.push_back({c.a, c.c, Relation::LE});
        if (c.rel == Relation::EQ) {
            RationalVector neg = c.a;
            for (auto& v : neg) v = -v;
            sys.push_back({neg, -c.c, Relation::LE});
        }
    }
    const std::size_t total = sys.size();
    std::vector<Ray> rays;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        Ray r{RationalVector(n), std::vector<bool>(total, false)};
        for (std::size_t i = 0; i < n; ++i) {
            bool one = mask >> i & 1;
            r.x[i] = one ? 1 : 0;
            r.zero[2 * i + (one ? 1 : 0)] = true;
        }
        rays.push_back(std::move(r));
    }
    for (std::size_t k = 2 * n; k < total && !rays.empty(); ++k) {
        const auto& con = sys[k];
        std::vector<Rational> g(rays.size());
        std::vector<std::size_t> plus, minus;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            g[i] = con.excess(rays[i].x);
            if (g[i] > 0) plus.push_back(i);
            else if (g[i] < 0) minus.push_back(i);
            else rays[i].zero[k] = true;
        }
        if (plus.empty()) continue;
        std::vector<Ray> next;
        for (std::size_t i = 0; i < rays.size(); ++i)
            if (g[i] <= 0) next.push_back(rays[i]);
        for (std::size_t p : plus)
            for (std::size_t q : minus) {
                std::vector<bool> common(total);
                for (std::size_t t = 0; t < k; ++t) common[t] = rays[p].zero[t] && rays[q].zero[t];
                bool adjacent = true;
                for (std::size_t o = 0; o < rays.size() && adjacent; ++o)
                    if (o != p && o != q && subset_of(common, rays[o].zero)) adjacent = false;
                if (!adjacent) continue;
                Rational t = g[p] / (g[p] - g[q]);
                Ray r{RationalVector(n), common};
                for (std::size_t i = 0; i < n; ++i) r.x[i] = rays[p].x[i] + t * (rays[q].x[i] - rays[p].x[i]);
                r.zero[k] = true;
                next.push_back(std::move(r));
            }
        rays = std::move(next);
    }
    std::set<RationalVector> uniq;
    for (auto& r : rays) uniq.insert(std::move(r.x));
    return {uniq.begin(), uniq.end()};
}

std::vector<RationalVector> polytope_vertices(const QPolytope& p) {
    std::vector<LinearConstraint> cons;
    for (const auto& q : p.inequalities()) cons.push_back({q.a, q.c, Relation::LE});
    return enumerate_vertices(p.dim(), cons);
}

bool AffineSpan::contains(const RationalVector& x) const {
    if (dim < 0) return false;
    for (std::size_t i = 0; i < equations.rows; ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < equations.cols; ++j) s += Rational(equations.at(i, j)) * x[j];
        if (s != rhs[i]) return false;
    }
    return true;
}

AffineSpan affine_span(const std::vector<RationalVector>& points, std::size_t ambient) {
    AffineSpan s;
    if (points.empty()) {
        s.equations = IntMatrix(0, ambient);
        return s;
    }
    s.base_point = points[0];
    std::vector<RationalVector> dirs;
    for (std::size_t i = 1; i < points.size(); ++i) {
        RationalVector d(ambient);
        for (std::size_t j = 0; j < ambient; ++j) d[j] = points[i][j] - points[0][j];
        dirs.push_back(std::move(d));
    }
    IntMatrix D = clear_denominators(dirs, ambient);
    s.dim = static_cast<long>(integer_rank(D));
    s.equations = D.rows == 0 ? IntMatrix::identity(ambient) : integer_kernel(D);
    s.rhs.assign(s.equations.rows, Rational(0));
    for (std::size_t i = 0; i < s.equations.rows; ++i)
        for (std::size_t j = 0; j < ambient; ++j) s.rhs[i] += Rational(s.equations.at(i, j)) * points[0][j];
    return s;
}

FaceGeometry make_face_geometry(std::vector<RationalVector> vertices, std::size_t ambient) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    FaceGeometry f;
    f.ambient = ambient;
    f.span = affine_span(vertices, ambient);
    f.vertices = std::move(vertices);
    return f;
}

std::string to_string(FaceStatus s) {
    switch (s) {
        case FaceStatus::Face: return "face";
        case FaceStatus::Empty: return "empty";
        case FaceStatus::NotSupporting: return "not_supporting";
    }
    return "";
}

FaceResult face_from_hyperplane(const QPolytope& p, const RationalVector& a, const Rational& c) {
    if (a.size() != p.dim()) throw DimensionMismatch("hyperplane dimension differs from polytope dimension");
    std::size_t nonzero = 0, idx = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) {
            ++nonzero;
            idx = i;
        }
    if (nonzero == 0) throw InvalidArgument("hyperplane normal must be nonzero");
    if (nonzero == 1) {
        Rational level = c / a[idx];
        if (level == 0 || level == 1)
            throw InvalidArgument("x" + std::to_string(idx + 1) + " = " + innc::to_string(level) +
                                  " is a cube hyperplane");
    }
    LinearConstraint h{a, c, Relation::EQ};
    auto verts = polytope_vertices(p);
    bool below = false, above = false;
    std::vector<RationalVector> on;
    for (const auto& v : verts) {
        Rational e = h.excess(v);
        if (e < 0) below = true;
        else if (e > 0) above = true;
        else on.push_back(v);
    }
    FaceResult res;
    if (below && above) {
        res.status = FaceStatus::NotSupporting;
        return res;
    }
    if (on.empty()) {
        res.status = FaceStatus::Empty;
        return res;
    }
    res.status = FaceStatus::Face;
    res.face = QFace{p, a, c, make_face_geometry(std::move(on), p.dim())};
    return res;
}

std::vector<QFace> polytope_faces(const QPolytope& p) {
    std::vector<QFace> out;
    std::set<std::vector<RationalVector>> seen;
    for (const auto& q : p.inequalities()) {
        std::size_t nonzero = 0;
        for (const auto& x : q.a) nonzero += x != 0;
        if (nonzero == 0) continue;
        if (nonzero == 1) {
            Rational level = 0;
            for (const auto& x : q.a)
                if (x != 0) level = q.c / x;
            if (level == 0 || level >= 1) continue;
        }
        auto r = face_from_hyperplane(p, q.a, q.c);
        if (r.status != FaceStatus::Face) continue;
        if (seen.insert(r.face->geometry.vertices).second) out.push_back(std::move(*r.face));
    }
    return out;
}

CatalogEntry ordinary_point_catalog(std::size_t s) {
    if (s < 2) throw InvalidArgument("ordinary points need at least two branches");
    CatalogEntry e;
    e.name = "ordinary_" + std::to_string(s);
    e.dim = s;
    for (std::size_t l = 1; l + 2 <= s; ++l)
        e.polytopes.push_back({QPolytope(s, {{RationalVector(s, Rational(1)), Rational(static_cast<long>(l))}}),
                               std::nullopt, 1});
    return e;
}

ContributingVerdict contributing_face_test(const FaceGeometry& f, const RationalVector& d, const Rational& l,
                                           long h1_dim) {
    if (d.size() != f.ambient) throw DimensionMismatch("degree vector dimension differs from the face");
    ContributingVerdict v;
    v.depth = h1_dim;
    LinearConstraint h{d, l, Relation::EQ};
    for (const auto& x : f.vertices)
        if (!h.satisfied(x)) {
            v.witness = x;
            return v;
        }
    v.contained = !f.vertices.empty();
    if (v.contained) v.predicted = exp_face(f);
    return v;
}

TranslatedSubtorus exp_face(const FaceGeometry& f) {
    if (f.span.dim < 0) throw InvalidArgument("exp of an empty face");
    return TranslatedSubtorus(f.span.equations, f.span.rhs);
}

}  // namespace innc
