#include "innc/covers.hpp"
#include "innc/error.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <numeric>
#include <set>

using namespace innc;

namespace {

std::size_t eigen_sum(const ChainComplex& c, const FiniteQuotient& q, std::size_t degree) {
    std::size_t s = 0;
    for (const auto& [chi, d] : cover_homology_eigenspaces(c, q, degree)) s += d;
    return s;
}

}  // namespace

TEST_CASE("finite quotients") {
    auto q = FiniteQuotient::from_relations(IntMatrix::from_rows({{2, 0}, {0, 3}}));
    CHECK(q.order() == 6);
    CHECK(q.moduli() == std::vector<long>{6});
    auto chars = q.characters();
    CHECK(chars.size() == 6);
    std::set<Character> distinct(chars.begin(), chars.end());
    CHECK(distinct.size() == 6);
    for (const auto& chi : chars) {
        CHECK(is_integer(2 * chi[0]));
        CHECK(is_integer(3 * chi[1]));
    }
    CHECK_THROWS_AS(FiniteQuotient::from_relations(IntMatrix::from_rows({{1, 1}})), InvalidArgument);

    auto rel = FiniteQuotient::for_relation_ring({2, 2, 2});
    CHECK(rel.order() == 4);
    CHECK(rel.source_dim() == 2);
    auto d = FiniteQuotient::diagonal({2, 3});
    CHECK(d.order() == 6);
    CHECK(d.element_index({1, 1}) == d.add(d.element_index({1, 0}), d.element_index({0, 1})));
    CHECK(d.element_index({2, 3}) == 0);
    CHECK(d.element_index({-1, 0}) == d.element_index({1, 0}));
}

TEST_CASE("relation-ring quotient characters are the ambient ones obeying the relation") {
    for (std::vector<long> m : {std::vector<long>{2, 2, 2}, {2, 3, 3}, {3, 3, 2, 2}}) {
        const std::size_t r = m.size();
        auto q = FiniteQuotient::for_relation_ring(m);
        std::size_t want = 0;
        for (const auto& chi : characters_of_order_dividing(r, std::accumulate(m.begin(), m.end(), 1L, std::lcm<long, long>))) {
            bool ok = is_integer(chi.sum());
            for (std::size_t i = 0; i < r; ++i) ok = ok && is_integer(chi[i] * m[i]);
            want += ok;
        }
        CHECK(static_cast<std::size_t>(q.order()) == want);
    }
}

TEST_CASE("lifted covers of tori are tori") {
    // the normal-crossing complement of two lines is T^2; every finite abelian cover is T^2
    std::vector<LaurentPoly> params{LaurentPoly::binomial({1, 0}), LaurentPoly::binomial({0, 1})};
    auto c = koszul_complex(2, params, 2);
    for (long a = 1; a <= 3; ++a)
        for (long b = 1; b <= 3; ++b) {
            auto q = FiniteQuotient::diagonal({a, b});
            auto lifted = lifted_cover_complex(c, q);
            CHECK(betti_numbers(lifted) == std::vector<std::size_t>{1, 2, 1});
            for (std::size_t k = 0; k <= 2; ++k) CHECK(eigen_sum(c, q, k) == betti_numbers(lifted)[k]);
        }
    // trivial group: the cover is the base
    auto g = generic_arrangement_cone_complex(4, 2);
    CHECK(betti_numbers(lifted_cover_complex(g, FiniteQuotient::diagonal({1, 1, 1}))) == betti_at_identity(g));
}

TEST_CASE("lifted differentials square to zero") {
    auto g = generic_arrangement_cone_complex(4, 3);
    auto lifted = lifted_cover_complex(g, FiniteQuotient::for_relation_ring({2, 3, 2, 3}));
    for (std::size_t k = 1; k < lifted.differentials.size(); ++k) {
        auto prod = lifted.differentials[k - 1] * lifted.differentials[k];
        for (const auto& x : prod.data) CHECK(x == 0);
    }
}

TEST_CASE("eigenspace sums equal cover Betti numbers") {
    auto g = generic_arrangement_cone_complex(3, 2);
    auto q = FiniteQuotient::for_relation_ring({2, 2, 2});
    auto betti = betti_numbers(lifted_cover_complex(g, q));
    for (std::size_t k = 0; k <= 2; ++k) CHECK(eigen_sum(g, q, k) == betti[k]);
    auto full = cone_complement_complex({1, 1, 1}, 1);
    auto q3 = FiniteQuotient::diagonal({3, 3, 3});
    auto b3 = betti_numbers(lifted_cover_complex(full, q3));
    for (std::size_t k = 0; k < b3.size(); ++k) CHECK(eigen_sum(full, q3, k) == b3[k]);
    CHECK_THROWS_AS(cover_homology_eigenspaces(g, q3, 1), DimensionMismatch);
}

TEST_CASE("Chevalley-Weil dimensions of classical curves") {
    // hyperelliptic y^2 = degree 2g+1 or 2g+2
    for (long g = 0; g <= 4; ++g) {
        for (long pts : {2 * g + 1, 2 * g + 2}) {
            BranchDatum b{2, std::vector<long>(pts, 1)};
            CHECK(riemann_hurwitz_genus(b) == g);
            auto d = chevalley_weil_dims(b);
            CHECK(d == std::vector<long>{0, g});
        }
    }
    // y^3 = (x-a)(x-b)(x-c): an elliptic curve; the holomorphic form is dx/y^2
    BranchDatum cubic{3, {1, 1, 1}};
    CHECK(cubic.a_infinity() == 0);
    CHECK_FALSE(cubic.ramified_at_infinity());
    CHECK(riemann_hurwitz_genus(cubic) == 1);
    CHECK(chevalley_weil_dims(cubic) == std::vector<long>{0, 0, 1});
    // Fermat quartic x^4 + y^4 = 1 as y^4 = 1 - x^4: genus 3
    BranchDatum fermat{4, {1, 1, 1, 1}};
    CHECK(riemann_hurwitz_genus(fermat) == 3);
    auto d = chevalley_weil_dims(fermat);
    CHECK(std::accumulate(d.begin(), d.end(), 0L) == 3);
    CHECK_THROWS_AS(chevalley_weil_dims(BranchDatum{4, {2, 2}}), InvalidArgument);
    CHECK_THROWS_AS(riemann_hurwitz_genus(BranchDatum{1, {1}}), InvalidArgument);
}

TEST_CASE("Chevalley-Weil sums match Riemann-Hurwitz") {
    for (long m = 2; m <= 7; ++m)
        for (std::size_t r = 1; r <= 5; ++r) {
            std::vector<long> a(r, 1);
            while (true) {
                BranchDatum b{m, a};
                if (b.connected()) {
                    auto d = chevalley_weil_dims(b);
                    CHECK(d[0] == 0);
                    for (long x : d) CHECK(x >= 0);
                    CHECK(std::accumulate(d.begin(), d.end(), 0L) == riemann_hurwitz_genus(b));
                }
                std::size_t pos = r;
                while (pos > 0 && a[pos - 1] == m - 1) a[--pos] = 1;
                if (pos == 0) break;
                ++a[pos - 1];
            }
        }
}

TEST_CASE("quasiadjunction consistency for diagonal characters") {
    for (std::size_t r = 3; r <= 6; ++r) {
        auto cat = ordinary_point_catalog(r);
        std::vector<QFace> faces;
        for (const auto& p : cat.polytopes)
            for (auto& f : polytope_faces(p.polytope)) faces.push_back(std::move(f));
        for (long m = 2; m <= 7; ++m) {
            auto rep = quasiadjunction_consistency(r, m, faces);
            CHECK(rep.disagreements == 0);
            CHECK(rep.rows.size() == static_cast<std::size_t>(m - 1));
            for (const auto& row : rep.rows) {
                long l = (static_cast<long>(r) * row.k) / m;
                bool on_face = row.kills_exceptional && l >= 1 && l + 2 <= static_cast<long>(r);
                CHECK(row.face_level.has_value() == on_face);
                if (on_face) CHECK(row.cw_gated == static_cast<long>(r) - 1 - l);
            }
        }
    }
    // two lines: no faces, and the ungated value is positive at some k
    auto two = quasiadjunction_consistency(2, 3, {});
    CHECK(two.disagreements == 0);
    CHECK(two.raw_disagreements > 0);
}
