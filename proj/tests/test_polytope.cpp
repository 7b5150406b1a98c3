#include "innc/error.hpp"
#include "innc/global_polytope.hpp"
#include "innc/polytope.hpp"
#include "innc/serialize.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace innc;

namespace {

RationalVector rv(std::initializer_list<long> xs) {
    RationalVector v;
    for (long x : xs) v.push_back(Rational(x));
    return v;
}

// Cube plus polytope rows as a <= system for the brute-force vertex oracle.
std::vector<RationalVector> vertex_oracle(const QPolytope& p) {
    std::vector<RationalVector> rows;
    RationalVector rhs;
    for (const auto& c : p.constraints()) {
        rows.push_back(c.a);
        rhs.push_back(c.c);
    }
    return oracle::brute_vertices(rows, rhs, p.dim());
}

}  // namespace

TEST_CASE("polytope validation and membership") {
    CHECK_THROWS_AS(QPolytope(2, {{rv({-1, 1}), Rational(1)}}), InvalidArgument);
    CHECK_THROWS_AS(QPolytope(2, {{rv({1, 1}), Rational(-1)}}), InvalidArgument);
    CHECK_THROWS_AS(QPolytope(2, {{rv({1}), Rational(1)}}), DimensionMismatch);
    QPolytope p(2, {{rv({1, 1}), Rational(1)}});
    CHECK(polytope_membership(p, {Rational(1, 2), Rational(1, 2)}));
    CHECK_FALSE(polytope_membership(p, {Rational(2, 3), Rational(1, 2)}));
    CHECK_FALSE(polytope_membership(p, {Rational(-1, 3), Rational(0)}));
}

TEST_CASE("double description agrees with brute-force vertex enumeration") {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<long> coef(0, 3), num(1, 6);
    for (int i = 0; i < 60; ++i) {
        std::size_t n = 2 + i % 3;
        std::vector<Inequality> ineqs;
        for (int k = 0, K = 1 + static_cast<int>(rng() % 3); k < K; ++k) {
            RationalVector a(n);
            for (auto& x : a) x = coef(rng);
            Rational c(num(rng), 3);
            c.canonicalize();
            ineqs.push_back({a, c});
        }
        QPolytope p(n, ineqs);
        CHECK(polytope_vertices(p) == vertex_oracle(p));
    }
    // the ordinary polytopes: 0/1 vectors with at most l ones
    for (std::size_t r = 3; r <= 5; ++r)
        for (long l = 1; l + 2 <= static_cast<long>(r); ++l) {
            QPolytope p(r, {{RationalVector(r, Rational(1)), Rational(l)}});
            auto v = polytope_vertices(p);
            std::size_t want = 0;
            for (long k = 0; k <= l; ++k) want += oracle::binom(r, k);
            CHECK(v.size() == want);
            for (const auto& x : v) {
                Rational s = 0;
                for (const auto& xi : x) {
                    CHECK((xi == 0 || xi == 1));
                    s += xi;
                }
                CHECK(s <= l);
            }
        }
}

TEST_CASE("faces from hyperplanes") {
    QPolytope p(3, {{RationalVector(3, Rational(1)), Rational(1)}});
    auto f = face_from_hyperplane(p, RationalVector(3, Rational(1)), Rational(1));
    REQUIRE(f.status == FaceStatus::Face);
    CHECK(f.face->geometry.vertices.size() == 3);
    CHECK(f.face->geometry.span.dim == 2);
    auto cut = face_from_hyperplane(p, RationalVector(3, Rational(1)), Rational(1, 2));
    CHECK(cut.status == FaceStatus::NotSupporting);
    CHECK(to_string(cut.status) == "not_supporting");
    auto miss = face_from_hyperplane(p, RationalVector(3, Rational(1)), Rational(2));
    CHECK(miss.status == FaceStatus::Empty);
    auto vertex = face_from_hyperplane(p, RationalVector(3, Rational(1)), Rational(0));
    REQUIRE(vertex.status == FaceStatus::Face);
    CHECK(vertex.face->geometry.span.dim == 0);
    CHECK_THROWS_AS(face_from_hyperplane(p, rv({1, 0, 0}), Rational(1)), InvalidArgument);
    CHECK_THROWS_AS(face_from_hyperplane(p, rv({0, 1, 0}), Rational(0)), InvalidArgument);
}

TEST_CASE("ordinary point catalog: faces and their exponentials") {
    for (std::size_t r = 3; r <= 6; ++r) {
        auto cat = ordinary_point_catalog(r);
        CHECK(cat.polytopes.size() == r - 2);
        for (std::size_t i = 0; i < cat.polytopes.size(); ++i) {
            const long l = static_cast<long>(i) + 1;
            auto faces = polytope_faces(cat.polytopes[i].polytope);
            REQUIRE(faces.size() == 1);
            const auto& face = faces[0];
            CHECK(face.a == RationalVector(r, Rational(1)));
            CHECK(face.c == l);
            CHECK(face.geometry.span.dim == static_cast<long>(r) - 1);
            auto e = exp_face(face.geometry);
            CHECK(e.offset() == RationalVector{Rational(l)});
            CHECK(e.canonical() == TranslatedSubtorus(IntMatrix::from_rows({std::vector<long>(r, 1)}), {Rational(0)}));
            for (const auto& chi : characters_of_order_at_most(r, 3))
                CHECK(e.contains(chi) == is_integer(chi.sum() - l));
        }
    }
}

TEST_CASE("contributing face verdicts follow the vertices") {
    auto cat = ordinary_point_catalog(4);
    auto faces = polytope_faces(cat.polytopes[1].polytope);
    REQUIRE(faces.size() == 1);
    auto yes = contributing_face_test(faces[0].geometry, RationalVector(4, Rational(1)), Rational(2), 2);
    CHECK(yes.contained);
    CHECK(yes.depth == 2);
    REQUIRE(yes.predicted);
    CHECK(yes.predicted->dimension() == 3);
    auto no = contributing_face_test(faces[0].geometry, rv({1, 1, 0, 0}), Rational(1), 1);
    CHECK_FALSE(no.contained);
    REQUIRE(no.witness);
    Rational s = (*no.witness)[0] + (*no.witness)[1];
    CHECK(s != 1);
    CHECK_THROWS_AS(contributing_face_test(faces[0].geometry, rv({1, 1}), Rational(1), 1), DimensionMismatch);
}

TEST_CASE("global polytope under the identity map is the local one") {
    auto cat = ordinary_point_catalog(3);
    LocalToGlobalMap id{{0, 1, 2}, IntMatrix::identity(3)};
    auto g = global_polytope({{LocalRegion::of(cat.polytopes[0].polytope), id}}, 3);
    for (const auto& chi : characters_of_order_at_most(3, 6))
        CHECK(g.contains(chi.kappas()) == polytope_membership(cat.polytopes[0].polytope, chi.kappas()));
    auto f = global_face(g, RationalVector(3, Rational(1)), Rational(1));
    CHECK(f.status == FaceStatus::Face);
}

TEST_CASE("global polytope through a fractional-part map") {
    // one local branch read as {k1 + k2}; local condition x <= 1/2
    QPolytope half(1, {{rv({1}), Rational(1, 2)}});
    LocalToGlobalMap m{{0}, IntMatrix::from_rows({{1}, {1}})};
    auto g = global_polytope({{LocalRegion::of(half), m}}, 2);
    CHECK(g.cells.size() == 2);
    for (const auto& chi : characters_of_order_at_most(2, 8))
        CHECK(g.contains(chi.kappas()) == (frac(chi[0] + chi[1]) <= Rational(1, 2)));
    // two conditions intersect
    QPolytope third(1, {{rv({1}), Rational(1, 3)}});
    LocalToGlobalMap m2{{0}, IntMatrix::from_rows({{1}, {0}})};
    auto g2 = global_polytope({{LocalRegion::of(half), m}, {LocalRegion::of(third), m2}}, 2);
    for (const auto& chi : characters_of_order_at_most(2, 8))
        CHECK(g2.contains(chi.kappas()) == (frac(chi[0] + chi[1]) <= Rational(1, 2) && chi[0] <= Rational(1, 3)));
}

TEST_CASE("catalog serialization round trip") {
    auto cat = ordinary_point_catalog(5);
    auto back = catalog_from_json(to_json(cat));
    CHECK(back.name == cat.name);
    REQUIRE(back.polytopes.size() == cat.polytopes.size());
    for (std::size_t i = 0; i < cat.polytopes.size(); ++i) {
        CHECK(polytope_vertices(back.polytopes[i].polytope) == polytope_vertices(cat.polytopes[i].polytope));
        CHECK(back.polytopes[i].level == cat.polytopes[i].level);
    }
    CHECK_THROWS_AS(catalog_from_json(Json{{"name", "x"}}), SchemaError);
}
