#pragma once

#include "innc/polytope.hpp"

#include <vector>

namespace innc {

/// Xi -> Xi^{j_1..j_s} = ({sum_i a_{i,j_1} kappa_i}, ..., {sum_i a_{i,j_s} kappa_i}).
struct LocalToGlobalMap {
    std::vector<std::size_t> components;  // j_1..j_s (0-based)
    IntMatrix a;                          // r x N, a.at(i, j) = a_{i,j}

    RationalVector apply(const RationalVector& kappa) const;
};

/// A local condition in R^s: a closed region given by constraints (a polytope or a face).
struct LocalRegion {
    std::size_t dim = 0;
    std::vector<LinearConstraint> constraints;

    static LocalRegion of(const QPolytope& p);
    static LocalRegion of(const QFace& f);
    bool contains(const RationalVector& y) const;
};

struct LocalCondition {
    LocalRegion region;
    LocalToGlobalMap map;
};

/// One affine piece: on it every fractional part equals its linear form minus a fixed level.
struct GlobalCell {
    std::vector<long> levels;  // one per (condition, coordinate)
    std::vector<LinearConstraint> constraints;
    std::vector<RationalVector> closure_vertices;
};

/// {Xi in [0,1)^r : Xi^{j...} in P_S for all S}, as a union of cells in level-vector order.
struct GlobalRegion {
    std::size_t r = 0;
    std::vector<GlobalCell> cells;

    bool contains(const RationalVector& kappa) const;
};

GlobalRegion global_polytope(const std::vector<LocalCondition>& conditions, std::size_t r);

/// Face of the closure of a global region cut by {a . x = c}.
struct GlobalFaceResult {
    FaceStatus status = FaceStatus::Empty;
    std::optional<FaceGeometry> face;
};
GlobalFaceResult global_face(const GlobalRegion& g, const RationalVector& a, const Rational& c);

}  // namespace innc
