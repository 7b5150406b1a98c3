#include "innc/character.hpp"
#include "innc/cyclotomic.hpp"
#include "innc/error.hpp"
#include "innc/exact_rank.hpp"
#include "innc/integer_matrix.hpp"
#include "innc/laurent.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace innc;

namespace {

// x^m - 1 divided by every Phi_d, d | m, d < m, by schoolbook long division.
std::vector<long> phi_by_division(long m, std::map<long, std::vector<long>>& memo) {
    if (memo.count(m)) return memo[m];
    std::vector<long> num(m + 1, 0);
    num[0] = -1;
    num[m] = 1;
    for (long d = 1; d < m; ++d) {
        if (m % d) continue;
        auto den = phi_by_division(d, memo);
        std::vector<long> q(num.size() - den.size() + 1, 0);
        for (long i = static_cast<long>(q.size()) - 1; i >= 0; --i) {
            q[i] = num[i + den.size() - 1];
            for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= q[i] * den[j];
        }
        num = q;
    }
    return memo[m] = num;
}

long mobius(long n) {
    long res = 1;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            res = -res;
        }
    return n > 1 ? -res : res;
}

LaurentPoly random_poly(std::mt19937_64& rng, std::size_t nvars, int terms) {
    std::uniform_int_distribution<long> e(-3, 3), c(-4, 4);
    LaurentPoly p(nvars);
    for (int t = 0; t < terms; ++t) {
        Exponent x(nvars);
        for (auto& v : x) v = e(rng);
        p.add_term(x, Rational(c(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("rational text round trip and errors") {
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational(" -2 ")) == "-2");
    CHECK(to_string(Rational(0)) == "0");
    CHECK(parse_rational_list("1/3,1/3,0").size() == 3);
    CHECK_THROWS_AS(parse_rational("1/0"), SchemaError);
    CHECK_THROWS_AS(parse_rational("abc"), SchemaError);
    CHECK(frac(Rational(-1, 3)) == Rational(2, 3));
    CHECK(floor_of(Rational(-1, 3)) == -1);
    CHECK(ceil_of(Rational(1, 3)) == 1);
}

TEST_CASE("Laurent polynomial arithmetic") {
    auto t1 = LaurentPoly::variable(2, 0);
    auto t2 = LaurentPoly::variable(2, 1);
    auto one = LaurentPoly::constant(2, 1);
    CHECK((t1 - one) * (t1 + one) == t1 * t1 - one);
    CHECK(t1.pow(-1) * t1 == one);
    CHECK(LaurentPoly::binomial({1, 1}) == t1 * t2 - one);
    CHECK((t1 * t2.pow(-1) - one).coefficient_sum() == 0);
    auto p = LaurentPoly::parse("t1^2*t2^-1 - 3", 2);
    CHECK(p.to_string() == "t1^2*t2^-1 - 3");
    CHECK(LaurentPoly(3).to_string() == "0");
    CHECK_THROWS_AS(t1 + LaurentPoly::variable(3, 0), DimensionMismatch);
    // t1 -> s1 s2, t2 -> s2^-1
    auto q = (t1 * t2).substitute_monomials({{1, 1}, {0, -1}}, 2);
    CHECK(q == LaurentPoly::variable(2, 0));
    // coefficients are stored reduced even when given unreduced
    auto unreduced = LaurentPoly::monomial(2, {1, 0}, Rational(6, 2));
    CHECK(unreduced.to_string() == "3*t1");
    CHECK(unreduced == t1 * LaurentPoly::constant(2, 3));
    CHECK(LaurentPoly::constant(2, Rational(0, 5)).is_zero());
}

TEST_CASE("Laurent parse inverts to_string on random input") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        auto p = random_poly(rng, 3, 5);
        CHECK(LaurentPoly::parse(p.to_string(), 3) == p);
    }
}

TEST_CASE("cyclotomic polynomials agree with long division") {
    std::map<long, std::vector<long>> memo;
    for (long m = 1; m <= 40; ++m) {
        auto want = phi_by_division(m, memo);
        const auto& got = cyclotomic_polynomial(m);
        REQUIRE(got.size() == want.size());
        for (std::size_t i = 0; i < want.size(); ++i) CHECK(got[i] == want[i]);
        CHECK(static_cast<long>(got.size()) - 1 == euler_phi(m));
    }
}

TEST_CASE("cyclotomic field arithmetic") {
    for (long m : {1L, 2L, 3L, 4L, 5L, 6L, 12L, 15L}) {
        CHECK(CyclotomicElem::zeta_power(m, m).is_one());
        CHECK(CyclotomicElem::zeta_power(m, -1) * CyclotomicElem::zeta_power(m, 1) == CyclotomicElem::one(m));
        // sum of primitive m-th roots is mu(m)
        CyclotomicElem s = CyclotomicElem::zero(m);
        for (long k = 0; k < m; ++k)
            if (std::gcd(k, m) == 1) s += CyclotomicElem::zeta_power(m, k);
        CHECK(s == CyclotomicElem::from_rational(m, mobius(m)));
    }
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> c(-5, 5);
    for (int i = 0; i < 100; ++i) {
        long m = 2 + i % 11;
        std::vector<Rational> res(m);
        for (auto& x : res) x = c(rng);
        auto x = CyclotomicElem::from_residues(m, res);
        if (x.is_zero()) continue;
        CHECK((x * x.inverse()).is_one());
        CHECK(x.embed(2 * m) * x.inverse().embed(2 * m) == CyclotomicElem::one(2 * m));
    }
    CHECK_THROWS_AS(CyclotomicElem::zero(5).inverse(), InvalidArgument);
}

TEST_CASE("characters") {
    Character chi = Character::parse("1/3,1/2,0");
    CHECK(chi.order() == 6);
    CHECK(chi.to_string() == "(1/3,1/2,0)");
    CHECK(chi.pair({3, 2, 7}) == 2);
    CHECK_THROWS(Character(RationalVector{Rational(1)}));
    CHECK(Character::from_log({Rational(-1, 3)}) == Character(RationalVector{Rational(2, 3)}));
    CHECK(characters_of_order_dividing(3, 4).size() == 64);
    // order <= 4 on Z^2, counted by brute force over denominators 12
    std::set<RationalVector> want;
    for (long a = 0; a < 12; ++a)
        for (long b = 0; b < 12; ++b) {
            Character c(RationalVector{Rational(a, 12), Rational(b, 12)});  // constructor canonicalizes
            if (c.order() <= 4) want.insert(c.kappas());
        }
    auto got = characters_of_order_at_most(2, 4);
    CHECK(got.size() == want.size());
    for (std::size_t i = 1; i < got.size(); ++i) CHECK(got[i - 1].order() <= got[i].order());
}

TEST_CASE("specialization is a ring homomorphism") {
    std::mt19937_64 rng(2024);
    auto chars = characters_of_order_at_most(3, 6);
    for (int i = 0; i < 400; ++i) {
        auto p = random_poly(rng, 3, 4), q = random_poly(rng, 3, 4);
        const auto& chi = chars[rng() % chars.size()];
        CHECK(laurent_eval(p * q, chi) == laurent_eval(p, chi) * laurent_eval(q, chi));
        CHECK(laurent_eval(p + q, chi) == laurent_eval(p, chi) + laurent_eval(q, chi));
    }
}

TEST_CASE("cyclotomic evaluation matches floating point") {
    std::mt19937_64 rng(5);
    auto chars = characters_of_order_at_most(2, 7);
    for (int i = 0; i < 100; ++i) {
        auto p = random_poly(rng, 2, 5);
        const auto& chi = chars[rng() % chars.size()];
        auto v = laurent_eval(p, chi);
        std::complex<double> z = std::polar(1.0, 2 * M_PI / v.conductor()), acc = 0, pw = 1;
        for (const auto& c : v.coeffs()) {
            acc += c.get_d() * pw;
            pw *= z;
        }
        CHECK(std::abs(acc - oracle::numeric_eval(p, chi.kappas())) < 1e-9);
    }
}

TEST_CASE("Smith form: U A V = D, unimodular, divisibility chain") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 60; ++i) {
        std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
        auto A = oracle::random_int_matrix(rng, r, c, -6, 6);
        auto sf = smith_normal_form(A);
        auto D = sf.U * A * sf.V;
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t b = 0; b < c; ++b)
                CHECK(D.at(a, b) == (a == b ? sf.diagonal[a] : Integer(0)));
        CHECK(abs(determinant(sf.U)) == 1);
        CHECK(abs(determinant(sf.V)) == 1);
        for (std::size_t k = 0; k + 1 < sf.diagonal.size(); ++k)
            if (sf.diagonal[k] != 0) CHECK(sf.diagonal[k + 1] % sf.diagonal[k] == 0);
        CHECK(sf.rank == oracle::rank_q(A));
    }
}

TEST_CASE("Hermite form, kernel, determinant") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 60; ++i) {
        std::size_t r = 1 + rng() % 4, c = 1 + rng() % 5;
        auto A = oracle::random_int_matrix(rng, r, c, -5, 5);
        IntMatrix U;
        auto H = hermite_normal_form(A, &U);
        CHECK(U * A == H);
        CHECK(abs(determinant(U)) == 1);
        auto K = integer_kernel(A);
        CHECK(K.rows == c - oracle::rank_q(A));
        auto AK = A * K.transpose();
        for (const auto& x : AK.data) CHECK(x == 0);
        CHECK(integer_rank(A) == oracle::rank_q(A));
        if (r == c) CHECK(determinant(A) == oracle::leibniz_det(A));
    }
}

TEST_CASE("rank engines agree with each other and with rational elimination") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> c(-3, 3);
    for (int i = 0; i < 80; ++i) {
        long m = 1 + i % 8;
        std::size_t rows = 1 + rng() % 5, inner = 1 + rng() % 4, cols = 1 + rng() % 5;
        FieldMatrix A(m, rows, inner), B(m, inner, cols);
        for (auto* M : {&A, &B})
            for (auto& e : M->entries) {
                std::vector<Rational> res(m);
                for (auto& x : res) x = c(rng);
                e = CyclotomicElem::from_residues(m, res);
            }
        FieldMatrix P = A * B;
        CHECK(rank_multimodular(P) == rank_by_elimination(P));
        CHECK(rank_by_elimination(P) <= inner);
    }
    for (int i = 0; i < 60; ++i) {
        auto A = oracle::random_int_matrix(rng, 1 + rng() % 6, 1 + rng() % 6, -4, 4);
        CHECK(rank_multimodular(A) == oracle::rank_q(A));
    }
}

TEST_CASE("modular primes") {
    for (long m : {1L, 6L, 30L}) {
        for (std::size_t k = 0; k < 3; ++k) {
            const auto& mp = modular_prime(m, k);
            CHECK(mp.p % m == 1 % m);
            std::uint64_t x = 1;
            for (long j = 0; j < m; ++j) x = modular::mulmod(x, mp.root, mp.p);
            CHECK(x == 1);
        }
    }
}
