#include "innc/complex.hpp"
#include "innc/error.hpp"
#include "innc/serialize.hpp"
#include "innc/zeta.hpp"

#include <doctest.h>

#include <random>

using namespace innc;

namespace {

bool killed(const Character& chi, const std::vector<long>& a) {
    Rational s = 0;
    for (std::size_t k = 0; k < a.size(); ++k) s += chi[k] * a[k];
    return is_integer(s);
}

}  // namespace

TEST_CASE("E-polynomials") {
    EPoly L = EPoly::lefschetz();
    CHECK(L.to_string() == "u*v");
    CHECK(L.at_one() == 1);
    EPoly p1_minus_3 = L + EPoly::constant(1) - EPoly::constant(3);
    CHECK(p1_minus_3.to_string() == "u*v - 2");
    CHECK((L * L).coefficient(2, 2) == 1);
    CHECK((L - L).is_zero());
    EPoly curve = L - EPoly::monomial(1, 0, 2) - EPoly::monomial(0, 1, 2) + EPoly::constant(1);
    CHECK(curve.at_one() == -2);
    CHECK(curve.to_string() == "u*v - 2*u - 2*v + 1");
    CHECK_THROWS_AS(EPoly::monomial(-1, 0, 1), InvalidArgument);
}

TEST_CASE("build_zeta on the concurrent-lines datum") {
    for (std::size_t r = 2; r <= 5; ++r) {
        auto rd = ResolutionDatum::concurrent_lines(r);
        rd.validate();
        auto z = build_zeta(rd);
        CHECK(z.terms.size() == r + 1);
        BuildOptions all;
        all.exceptional_only = false;
        CHECK(build_zeta(rd, all).terms.size() == 2 * r + 1);
        for (std::size_t i = 1; i < z.terms.size(); ++i) CHECK(z.terms[i - 1].subset < z.terms[i].subset);
        for (const auto& t : z.terms) CHECK(t.factors.size() == t.subset.size());
    }
}

TEST_CASE("trivial data") {
    ResolutionDatum one;
    one.r = 1;
    one.components.push_back({"D", {1}, 0, true});
    one.strata.push_back({{0}, 1, EPoly::lefschetz()});
    auto z = build_zeta(one);
    REQUIRE(z.terms.size() == 1);
    CHECK(z.to_string({"D"}) == "[D] * (L^-1*T1)/(1 - L^-1*T1)");
    CHECK(e_top_realization(z).to_string() == "1 * (T1)/(1 - T1)");
    ResolutionDatum empty;
    empty.r = 2;
    CHECK(build_zeta(empty).is_zero());
    CHECK(e_top_realization(build_zeta(empty)).to_string() == "0");
}

TEST_CASE("datum validation") {
    auto rd = ResolutionDatum::concurrent_lines(3);
    auto bad = rd;
    bad.total_euler = 5;
    CHECK_THROWS_AS(bad.validate(), InvalidArgument);
    bad = rd;
    bad.strata.push_back({{9}, 1, std::nullopt});
    CHECK_THROWS_AS(build_zeta(bad), InvalidArgument);
    bad = rd;
    bad.components[0].a.pop_back();
    CHECK_THROWS_AS(bad.validate(), DimensionMismatch);
    bad = rd;
    bad.strata[0].euler = 7;
    CHECK_THROWS_AS(bad.validate(), InvalidArgument);
    Json j = to_json(rd);
    j["strata"].push_back(Json{{"subset", {"E9"}}, {"euler", 1}});
    CHECK_THROWS_AS(resolution_from_json(j), InvalidArgument);
}

TEST_CASE("e_top of the concurrent-lines datum, r = 3") {
    auto z = build_zeta(ResolutionDatum::concurrent_lines(3));
    auto e = e_top_realization(z);
    // hand computation: e(E0 open) = -1, each intersection point contributes 1
    CHECK(e.to_string() ==
          "-1 * (T1*T2*T3)/(1 - T1*T2*T3)"
          " + 1 * (T1*T2*T3)/(1 - T1*T2*T3) * (T1)/(1 - T1)"
          " + 1 * (T1*T2*T3)/(1 - T1*T2*T3) * (T2)/(1 - T2)"
          " + 1 * (T1*T2*T3)/(1 - T1*T2*T3) * (T3)/(1 - T3)");
    CHECK(e.at_zero() == 0);
    // at T = (1/2, 1/3, 1/5): T^a = 1/30 for E0
    RationalVector t{Rational(1, 2), Rational(1, 3), Rational(1, 5)};
    Rational f0 = Rational(1, 29);
    Rational want = -f0 + f0 * (1 + Rational(1, 2) + Rational(1, 4));
    CHECK(e.evaluate(t) == want);
    CHECK(EPoly::lefschetz().at_one() == 1);
}

TEST_CASE("Hodge realization") {
    auto rd = ResolutionDatum::concurrent_lines(3);
    auto z = build_zeta(rd);
    auto h = hodge_realization(z);
    CHECK(h.terms[0].coefficient.to_string() == "u*v - 2");
    CHECK(h.specialize_at_one().to_string() == e_top_realization(z).to_string());
    // additivity: two strata sum to the union
    ResolutionDatum two;
    two.r = 1;
    two.components.push_back({"E", {2}, 1, true});
    two.components.push_back({"F", {3}, 0, true});
    two.strata.push_back({{0}, 1, EPoly::lefschetz()});
    two.strata.push_back({{1}, 0, EPoly::lefschetz() - EPoly::constant(1)});
    auto hz = hodge_realization(build_zeta(two));
    REQUIRE(hz.terms.size() == 2);
    ResolutionDatum only_e = two, only_f = two;
    only_e.strata.pop_back();
    only_f.strata.erase(only_f.strata.begin());
    CHECK(hz.terms[0].coefficient == hodge_realization(build_zeta(only_e)).terms[0].coefficient);
    CHECK(hz.terms[1].coefficient == hodge_realization(build_zeta(only_f)).terms[0].coefficient);
    CHECK(hz.to_string() == "(u*v) * ((uv)^-2*T1^2)/(1 - (uv)^-2*T1^2) + (u*v - 1) * ((uv)^-1*T1^3)/(1 - (uv)^-1*T1^3)");
    auto missing = rd;
    missing.strata[0].hodge.reset();
    CHECK_THROWS_AS(hodge_realization(build_zeta(missing)), MissingData);
    missing.strata[0].euler.reset();
    CHECK_THROWS_AS(e_top_realization(build_zeta(missing)), MissingData);
}

TEST_CASE("limit at infinity: examples and errors") {
    auto z = build_zeta(ResolutionDatum::concurrent_lines(3));
    CHECK(limit_at_infinity(z, Character::parse("1/3,1/3,1/3")) == 1);
    CHECK(limit_at_infinity(z, Character::parse("1/3,1/3,0")) == 0);
    CHECK_THROWS_AS(limit_at_infinity(z, Character::identity(3)), IdentityCharacter);
    CHECK_THROWS_AS(limit_at_infinity(z, Character::parse("1/2,1/2")), DimensionMismatch);
    ResolutionDatum flat;
    flat.r = 2;
    flat.components.push_back({"E", {0, 0}, 0, true});
    flat.strata.push_back({{0}, 1, std::nullopt});
    CHECK_THROWS_AS(limit_at_infinity(build_zeta(flat), Character::parse("1/2,0")), InvalidArgument);
}

TEST_CASE("equivariant stratum rule") {
    auto rd = ResolutionDatum::concurrent_lines(3);
    CHECK(equivariant_stratum_euler(rd, {0}, Character::parse("1/3,1/3,1/3")) == -1);
    CHECK(equivariant_stratum_euler(rd, {0}, Character::parse("1/2,0,0")) == 0);
    CHECK(equivariant_stratum_euler(rd, {0, 1}, Character::parse("0,1/2,1/2")) == 1);
    CHECK(equivariant_stratum_euler(rd, {0, 1}, Character::parse("1/2,1/2,0")) == 0);
    CHECK(equivariant_stratum_euler(rd, {1, 2}, Character::parse("1/2,1/2,0")) == 0);
    ResolutionDatum with_empty = rd;
    with_empty.strata.push_back({{}, 4, std::nullopt});
    with_empty.total_euler.reset();
    CHECK(equivariant_stratum_euler(with_empty, {}, Character::parse("1/5,0,0")) == 4);
}

TEST_CASE("limit formula on random data") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long> a(0, 3), e(-3, 3);
    for (int trial = 0; trial < 200; ++trial) {
        ResolutionDatum rd;
        rd.r = 2 + trial % 2;
        std::size_t n = 2 + trial % 3;
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<long> v(rd.r);
            do
                for (auto& x : v) x = a(rng);
            while (std::all_of(v.begin(), v.end(), [](long x) { return x == 0; }));
            rd.components.push_back({"E" + std::to_string(i), v, static_cast<long>(rng() % 3), i == 0 || rng() % 2});
        }
        for (std::size_t i = 0; i < n; ++i) rd.strata.push_back({{i}, e(rng), std::nullopt});
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (rng() % 2) rd.strata.push_back({{i, j}, e(rng), std::nullopt});
        auto z = build_zeta(rd);
        for (const auto& chi : characters_of_order_at_most(rd.r, 4)) {
            if (chi.is_identity()) continue;
            long want = 0;
            for (const auto& s : rd.strata) {
                bool over = std::any_of(s.subset.begin(), s.subset.end(), [&](std::size_t i) { return rd.components[i].exceptional; });
                if (!over || s.subset.size() > 1) continue;
                if (killed(chi, rd.components[s.subset[0]].a)) want -= *s.euler;
            }
            CHECK(limit_at_infinity(z, chi) == want);
        }
    }
}

TEST_CASE("limit equals local-system homology for concurrent lines") {
    for (std::size_t r = 3; r <= 4; ++r) {
        auto z = build_zeta(ResolutionDatum::concurrent_lines(r));
        auto c = cone_complement_complex(std::vector<long>(r, 1), 1);
        HomologyEvaluator ev(c);
        for (const auto& chi : characters_of_order_at_most(r, 4)) {
            if (chi.is_identity()) continue;
            CHECK(limit_at_infinity(z, chi) == static_cast<long>(ev.dim(chi, 1)));
        }
    }
}

TEST_CASE("curve Hodge numbers against Chevalley-Weil") {
    for (std::size_t r : {3, 4})
        for (long m : {2L, 3L}) {
            auto rep = curve_hodge_consistency(r, m);
            CHECK(rep.all_agree);
            CHECK(rep.rows.size() == static_cast<std::size_t>(m - 1));
        }
    // r = 4, m = 2: the double cover of E0 branched at four points is elliptic
    auto rep = curve_hodge_consistency(4, 2);
    CHECK(rep.rows[0].hodge_u1 == 1);
}

TEST_CASE("serialization of resolution data") {
    auto rd = ResolutionDatum::concurrent_lines(4);
    auto back = resolution_from_json(to_json(rd));
    CHECK(to_json(back) == to_json(rd));
    CHECK(e_top_realization(build_zeta(back)).to_string() == e_top_realization(build_zeta(rd)).to_string());
}
