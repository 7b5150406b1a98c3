#pragma once

// Naive reference computations used as test oracles.

#include "innc/integer_matrix.hpp"
#include "innc/laurent.hpp"

#include <algorithm>
#include <complex>
#include <functional>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using innc::Integer;
using innc::Rational;
using innc::RationalVector;

/// Rank over Q by plain Gaussian elimination on mpq.
inline std::size_t rank_q(std::vector<RationalVector> m) {
    std::size_t rank = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t p = rank;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[rank]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == rank || m[i][c] == 0) continue;
            Rational f = m[i][c] / m[rank][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

inline std::size_t rank_q(const innc::IntMatrix& a) {
    std::vector<RationalVector> m(a.rows, RationalVector(a.cols));
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) m[i][j] = Rational(a.at(i, j));
    return rank_q(m);
}

/// Solves a square system exactly; empty result when singular.
inline std::vector<RationalVector> solve_square(std::vector<RationalVector> a, RationalVector b) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return {};
        std::swap(a[p], a[c]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rational f = a[i][c] / a[c][c];
            for (std::size_t j = c; j <= n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    RationalVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
    return {x};
}

/// Vertices of {x : rows . x <= rhs} by trying every n-subset of tight constraints.
inline std::vector<RationalVector> brute_vertices(const std::vector<RationalVector>& rows, const RationalVector& rhs,
                                                  std::size_t n) {
    std::vector<RationalVector> out;
    std::vector<std::size_t> pick(n);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
        if (depth == n) {
            std::vector<RationalVector> a;
            RationalVector b;
            for (auto i : pick) {
                a.push_back(rows[i]);
                b.push_back(rhs[i]);
            }
            auto sol = solve_square(a, b);
            if (sol.empty()) return;
            const auto& x = sol[0];
            for (std::size_t k = 0; k < rows.size(); ++k) {
                Rational s = 0;
                for (std::size_t j = 0; j < n; ++j) s += rows[k][j] * x[j];
                if (s > rhs[k]) return;
            }
            if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
            return;
        }
        for (std::size_t i = start; i < rows.size(); ++i) {
            pick[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

inline long binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// dim ker d_n of an exact Koszul complex on p parameters: alternating sum of the ranks above n.
inline long exact_koszul_kernel(long p, long n) {
    long s = 0;
    for (long j = n + 1; j <= p; ++j) s += ((j - n - 1) % 2 ? -1 : 1) * binom(p, j);
    return s;
}

/// Leibniz determinant.
inline Integer leibniz_det(const innc::IntMatrix& a) {
    const std::size_t n = a.rows;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Integer total = 0;
    do {
        Integer term = 1;
        for (std::size_t i = 0; i < n; ++i) term *= a.at(i, perm[i]);
        std::size_t inv = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inv;
        total += inv % 2 ? -term : term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// Floating-point value of a Laurent polynomial at exp(2 pi i kappa).
inline std::complex<double> numeric_eval(const innc::LaurentPoly& p, const RationalVector& kappa) {
    std::complex<double> s = 0;
    for (const auto& [e, c] : p.terms()) {
        double ang = 0;
        for (std::size_t i = 0; i < e.size(); ++i) ang += e[i] * kappa[i].get_d();
        s += c.get_d() * std::polar(1.0, 2 * M_PI * ang);
    }
    return s;
}

inline innc::IntMatrix random_int_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    innc::IntMatrix m(r, c);
    for (auto& x : m.data) x = d(rng);
    return m;
}

/// Product of random elementary operations: a unimodular matrix.
inline innc::IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps = 12) {
    innc::IntMatrix u = innc::IntMatrix::identity(n);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<long> f(-2, 2);
    for (int s = 0; s < steps && n > 1; ++s) {
        std::size_t i = pick(rng), j = pick(rng);
        if (i == j) continue;
        long k = f(rng);
        for (std::size_t c = 0; c < n; ++c) u.at(i, c) += k * u.at(j, c);
    }
    return u;
}

}  // namespace oracle
