#include "innc/error.hpp"
#include "innc/homology.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace innc;

namespace {

// gcd of all k x k minors (k = rank): the product of the invariant factors.
Integer determinantal_divisor(const IntMatrix& a, std::size_t k) {
    Integer g = 0;
    std::vector<std::size_t> rows, cols;
    std::function<void(std::size_t)> pick_cols;
    std::function<void(std::size_t)> pick_rows = [&](std::size_t start) {
        if (rows.size() == k) {
            pick_cols(0);
            return;
        }
        for (std::size_t i = start; i < a.rows; ++i) {
            rows.push_back(i);
            pick_rows(i + 1);
            rows.pop_back();
        }
    };
    pick_cols = [&](std::size_t start) {
        if (cols.size() == k) {
            IntMatrix sub(k, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = a.at(rows[i], cols[j]);
            g = gcd_of(g, abs(oracle::leibniz_det(sub)));
            return;
        }
        for (std::size_t j = start; j < a.cols; ++j) {
            cols.push_back(j);
            pick_cols(j + 1);
            cols.pop_back();
        }
    };
    pick_rows(0);
    return g;
}

}  // namespace

TEST_CASE("abelianization of projective divisor complements") {
    CHECK(abelianized_pi1(DivisorData::projective({1, 2})).to_string() == "Z");
    CHECK(abelianized_pi1(DivisorData::projective({2, 2})).to_string() == "Z + Z/2");
    CHECK(abelianized_pi1(DivisorData::projective({2})).to_string() == "Z/2");
    CHECK(abelianized_pi1(DivisorData::projective({1})).to_string() == "0");
    for (long a = 1; a <= 6; ++a)
        for (long b = 1; b <= 6; ++b)
            for (long c = 1; c <= 4; ++c) {
                auto g = abelianized_pi1(DivisorData::projective({a, b, c}));
                CHECK(g.free_rank == 2);
                long want = std::gcd(std::gcd(a, b), c);
                CHECK(g.torsion == (want == 1 ? IntVector{} : IntVector{Integer(want)}));
            }
    // a hyperplane among the components forces a free group
    for (std::size_t r = 1; r <= 6; ++r) {
        std::vector<long> d{1};
        for (std::size_t i = 0; i < r; ++i) d.push_back(static_cast<long>(i) + 2);
        auto g = abelianized_pi1(DivisorData::projective(d));
        CHECK(g.free_rank == r);
        CHECK(g.torsion.empty());
    }
    CHECK(abelianized_pi1(DivisorData::projective(std::vector<long>(8, 1))).to_string() == "Z^7");
}

TEST_CASE("cokernel agrees with determinantal divisors") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 120; ++i) {
        std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        auto A = oracle::random_int_matrix(rng, r, c, -6, 6);
        auto g = cokernel(A);
        std::size_t rk = oracle::rank_q(A);
        CHECK(g.free_rank == r - rk);
        Integer prod = 1;
        for (const auto& t : g.torsion) prod *= t;
        if (rk > 0) CHECK(prod == determinantal_divisor(A, rk));
        for (std::size_t k = 0; k + 1 < g.torsion.size(); ++k) CHECK(g.torsion[k + 1] % g.torsion[k] == 0);
    }
}

TEST_CASE("Smith form is invariant under unimodular change of basis") {
    std::mt19937_64 rng(1234);
    for (int i = 0; i < 150; ++i) {
        std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        auto A = oracle::random_int_matrix(rng, r, c, -5, 5);
        auto P = oracle::random_unimodular(rng, r), Q = oracle::random_unimodular(rng, c);
        CHECK(smith_normal_form(P * A * Q).diagonal == smith_normal_form(A).diagonal);
    }
}

TEST_CASE("essential characters") {
    // boundary: loop around D_j is the meridian l_j
    IntMatrix id = IntMatrix::identity(3);
    CHECK(is_essential(Character::parse("1/2,1/3,1/5"), id));
    CHECK_FALSE(is_essential(Character::parse("1/2,0,1/5"), id));
    IntMatrix b = IntMatrix::from_rows({{1, 1}, {1, 0}});
    CHECK_FALSE(is_essential(Character::parse("1/2,1/2"), b));
    CHECK(is_essential(Character::parse("1/3,1/3"), b));
    CHECK_THROWS_AS(is_essential(Character::parse("1/2"), id), DimensionMismatch);
    DivisorData d = DivisorData::projective({1, 1});
    CHECK_THROWS_AS(is_essential(Character::parse("1/2,1/2"), d), MissingData);
}
