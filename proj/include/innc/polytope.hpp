#pragma once

#include "innc/integer_matrix.hpp"
#include "innc/rational.hpp"
#include "innc/subtorus.hpp"

#include <optional>
#include <string>
#include <vector>

namespace innc {

enum class Relation { LE, LT, EQ };

/// a . x (rel) c.
struct LinearConstraint {
    RationalVector a;
    Rational c;
    Relation rel = Relation::LE;

    bool satisfied(const RationalVector& x) const;
    /// Value a . x - c.
    Rational excess(const RationalVector& x) const;
};

struct Inequality {
    RationalVector a;
    Rational c;
};

/// {x in [0,1]^n : a_k . x <= c_k for all k} with a_k >= 0, c_k >= 0.
class QPolytope {
public:
    QPolytope() = default;
    QPolytope(std::size_t dim, std::vector<Inequality> inequalities);

    std::size_t dim() const { return dim_; }
    const std::vector<Inequality>& inequalities() const { return ineqs_; }
    /// Defining system including the 2n cube constraints.
    std::vector<LinearConstraint> constraints() const;

private:
    std::size_t dim_ = 0;
    std::vector<Inequality> ineqs_;
};

bool polytope_membership(const QPolytope& p, const RationalVector& x);

/// Vertices of {x in [0,1]^n : constraints}, strict constraints read as closed.
/// Exact double description starting from the cube; lexicographically sorted.
std::vector<RationalVector> enumerate_vertices(std::size_t n, const std::vector<LinearConstraint>& constraints);
std::vector<RationalVector> polytope_vertices(const QPolytope& p);

/// Affine hull of a point set: {x : E x = e} with E an integer matrix whose rows span the
/// saturated lattice orthogonal to the hull's direction space.
struct AffineSpan {
    long dim = -1;  // -1 for the empty set
    IntMatrix equations;
    RationalVector rhs;
    RationalVector base_point;

    bool contains(const RationalVector& x) const;
};

AffineSpan affine_span(const std::vector<RationalVector>& points, std::size_t ambient);

/// A face given by its vertex set and affine hull.
struct FaceGeometry {
    std::size_t ambient = 0;
    std::vector<RationalVector> vertices;
    AffineSpan span;
};

FaceGeometry make_face_geometry(std::vector<RationalVector> vertices, std::size_t ambient);

enum class FaceStatus { Face, Empty, NotSupporting };
std::string to_string(FaceStatus s);

struct QFace {
    QPolytope parent;
    RationalVector a;
    Rational c;
    FaceGeometry geometry;
};

struct FaceResult {
    FaceStatus status = FaceStatus::Empty;
    std::optional<QFace> face;
};

/// The face P cap {a . x = c}. Empty when the hyperplane misses P, NotSupporting when it
/// separates vertices of P. Raises InvalidArgument for cube hyperplanes x_i = 0, 1.
FaceResult face_from_hyperplane(const QPolytope& p, const RationalVector& a, const Rational& c);

/// Faces cut out by the polytope's own inequalities, one per distinct vertex set.
std::vector<QFace> polytope_faces(const QPolytope& p);

/// Local polytopes of quasiadjunction for one singularity type.
struct CatalogPolytope {
    QPolytope polytope;
    std::optional<long> k;
    std::optional<long> level;
};
struct CatalogEntry {
    std::string name;
    std::size_t dim = 0;
    std::vector<CatalogPolytope> polytopes;
};

/// Ordinary s-fold point (x^s - y^s): P_l = {x_1 + ... + x_s <= l}, l = 1..s-2.
CatalogEntry ordinary_point_catalog(std::size_t s);

struct ContributingVerdict {
    bool contained = false;
    std::optional<RationalVector> witness;
    std::optional<TranslatedSubtorus> predicted;
    long depth = 0;
};

/// Whether every vertex of f lies on {d . x = l}; if so the subtorus exp(f) with depth k.
ContributingVerdict contributing_face_test(const FaceGeometry& f, const RationalVector& d, const Rational& l,
                                           long h1_dim);

/// {kappa : E kappa = E x_0 mod 1} for the affine span E x = e of f; the offset is kept unreduced.
TranslatedSubtorus exp_face(const FaceGeometry& f);

}  // namespace innc
