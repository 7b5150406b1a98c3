#include "innc/exact_rank.hpp"

#include "innc/error.hpp"

#include <map>
#include <mutex>

namespace innc {

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
    if (a.cols != b.rows || a.conductor != b.conductor) throw DimensionMismatch("field matrix product mismatch");
    FieldMatrix c(a.conductor, a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols; ++j)
                if (!b.at(k, j).is_zero()) c.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return c;
}

bool FieldMatrix::is_zero() const {
    for (const auto& e : entries)
        if (!e.is_zero()) return false;
    return true;
}

std::size_t rank_by_elimination(FieldMatrix M) {
    const long m = M.conductor;
    CyclotomicElem prev_inv = CyclotomicElem::one(m);
    std::size_t r = 0;
    for (std::size_t col = 0; col < M.cols && r < M.rows; ++col) {
        std::size_t piv = M.rows;
        for (std::size_t i = r; i < M.rows; ++i)
            if (!M.at(i, col).is_zero()) {
                piv = i;
                break;
            }
        if (piv == M.rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < M.cols; ++j) std::swap(M.at(piv, j), M.at(r, j));
        const CyclotomicElem p = M.at(r, col);
        for (std::size_t i = r + 1; i < M.rows; ++i) {
            CyclotomicElem f = M.at(i, col);
            for (std::size_t j = col + 1; j < M.cols; ++j) {
                CyclotomicElem v = p * M.at(i, j);
                if (!f.is_zero()) v -= f * M.at(r, j);
                M.at(i, j) = v * prev_inv;
            }
            M.at(i, col) = CyclotomicElem(m);
        }
        prev_inv = p.inverse();
        ++r;
    }
    return r;
}

namespace modular {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::size_t rank_mod_p(std::vector<std::uint64_t>& a, std::size_t rows, std::size_t cols, std::uint64_t p) {
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (a[i * cols + col]) {
                piv = i;
                break;
            }
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = col; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
        std::uint64_t inv = 1, base = a[r * cols + col];
        for (std::uint64_t e = p - 2; e; e >>= 1) {
            if (e & 1) inv = mulmod(inv, base, p);
            base = mulmod(base, base, p);
        }
        for (std::size_t j = col; j < cols; ++j) a[r * cols + j] = mulmod(a[r * cols + j], inv, p);
        for (std::size_t i = r + 1; i < rows; ++i) {
            std::uint64_t f = a[i * cols + col];
            if (!f) continue;
            for (std::size_t j = col; j < cols; ++j) {
                std::uint64_t s = mulmod(f, a[r * cols + j], p);
                std::uint64_t& x = a[i * cols + j];
                x = x >= s ? x - s : x + p - s;
            }
        }
        ++r;
    }
    return r;
}


std::size_t primes_needed(std::size_t hadamard_bits, long m) {
    std::size_t bits = hadamard_bits * static_cast<std::size_t>(euler_phi(m)) + 1;
    return (bits + 60) / 61;
}

}  // namespace modular

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using modular::mulmod;
using modular::rank_mod_p;


u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<long> prime_factors(long m) {
    std::vector<long> f;
    for (long q = 2; q * q <= m; ++q)
        if (m % q == 0) {
            f.push_back(q);
            while (m % q == 0) m /= q;
        }
    if (m > 1) f.push_back(m);
    return f;
}

// Entries as integer coefficient vectors in the power basis of Q(zeta_m).
struct IntegralMatrix {
    long m = 1;
    std::size_t rows = 0, cols = 0;
    std::vector<IntVector> entries;  // empty vector = zero entry
};

std::size_t rank_integral(const IntegralMatrix& M) {
    if (M.rows == 0 || M.cols == 0) return 0;
    const std::size_t full = std::min(M.rows, M.cols);
    const long phi = euler_phi(M.m);
    // Hadamard bound on |sigma(minor)| for every embedding sigma.
    std::size_t bits = 1;
    for (std::size_t i = 0; i < M.rows; ++i) {
        Integer b2 = 0;
        for (std::size_t j = 0; j < M.cols; ++j) {
            const auto& e = M.entries[i * M.cols + j];
            Integer s = 0;
            for (const auto& c : e) s += abs(c);
            b2 += s * s;
        }
        if (b2 > 1) bits += (mpz_sizeinbase(b2.get_mpz_t(), 2) + 1) / 2;
    }
    const std::size_t nprimes = modular::primes_needed(bits, M.m);
    std::size_t best = 0;
    std::vector<u64> a(M.rows * M.cols);
    for (std::size_t k = 0; k < nprimes; ++k) {
        const ModularPrime& mp = modular_prime(M.m, k);
        std::vector<u64> powers(phi);
        powers[0] = 1;
        for (long l = 1; l < phi; ++l) powers[l] = mulmod(powers[l - 1], mp.root, mp.p);
        for (std::size_t idx = 0; idx < a.size(); ++idx) {
            const auto& e = M.entries[idx];
            u64 v = 0;
            for (std::size_t l = 0; l < e.size(); ++l) {
                if (e[l] == 0) continue;
                u64 c = mpz_fdiv_ui(e[l].get_mpz_t(), mp.p);
                v = (v + mulmod(c, powers[l], mp.p)) % mp.p;
            }
            a[idx] = v;
        }
        best = std::max(best, rank_mod_p(a, M.rows, M.cols, mp.p));
        if (best == full) break;
    }
    return best;
}

}  // namespace

const ModularPrime& modular_prime(long m, std::size_t index) {
    static std::mutex mu;
    static std::map<long, std::vector<ModularPrime>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& list = cache[m];
    if (list.empty() || list.size() <= index) {
        const u64 top = (1ULL << 62) - 1;
        u64 k = list.empty() ? (top - 1) / static_cast<u64>(m) : (list.back().p - 1) / static_cast<u64>(m) - 1;
        auto factors = prime_factors(m);
        while (list.size() <= index) {
            u64 p = k * static_cast<u64>(m) + 1;
            --k;
            if (p <= (1ULL << 61)) throw Error("ran out of modular primes");
            if (!is_prime_u64(p)) continue;
            u64 root = 0;
            for (u64 g = 2; root == 0; ++g) {
                u64 w = powmod(g, (p - 1) / m, p);
                bool primitive = true;
                for (long q : factors)
                    if (powmod(w, m / q, p) == 1) primitive = false;
                if (primitive) root = w;
            }
            list.push_back({p, root});
        }
    }
    return list[index];
}

std::size_t rank_multimodular(const FieldMatrix& M) {
    IntegralMatrix I;
    I.m = M.conductor;
    I.rows = M.rows;
    I.cols = M.cols;
    I.entries.resize(M.rows * M.cols);
    for (std::size_t i = 0; i < M.rows; ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < M.cols; ++j)
            for (const auto& c : M.at(i, j).coeffs()) l = lcm_of(l, c.get_den());
        for (std::size_t j = 0; j < M.cols; ++j) {
            const auto& e = M.at(i, j);
            if (e.is_zero()) continue;
            IntVector v(e.coeffs().size());
            for (std::size_t t = 0; t < v.size(); ++t) {
                Rational s = e.coeffs()[t] * l;
                v[t] = s.get_num();
            }
            I.entries[i * M.cols + j] = std::move(v);
        }
    }
    return rank_integral(I);
}

std::size_t rank_multimodular(const IntMatrix& M) {
    IntegralMatrix I;
    I.m = 1;
    I.rows = M.rows;
    I.cols = M.cols;
    I.entries.resize(M.rows * M.cols);
    for (std::size_t idx = 0; idx < M.data.size(); ++idx)
        if (M.data[idx] != 0) I.entries[idx] = {M.data[idx]};
    return rank_integral(I);
}

}  // namespace innc
