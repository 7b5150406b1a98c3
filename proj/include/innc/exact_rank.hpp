#pragma once

#include "innc/cyclotomic.hpp"
#include "innc/integer_matrix.hpp"

#include <cstdint>
#include <vector>

namespace innc {

/// Dense matrix over Q(zeta_m), row major.
struct FieldMatrix {
    long conductor = 1;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<CyclotomicElem> entries;

    FieldMatrix() = default;
    FieldMatrix(long m, std::size_t r, std::size_t c)
        : conductor(m), rows(r), cols(c), entries(r * c, CyclotomicElem(m)) {}

    CyclotomicElem& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
    const CyclotomicElem& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }

    friend FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);
    bool is_zero() const;
};

/// Fraction-free (Bareiss) elimination over Q(zeta_m), pivot = first nonzero entry
/// in the first column that has one. Exact; slow for large conductors.
std::size_t rank_by_elimination(FieldMatrix M);

/// Exact rank by reduction modulo degree-one primes p = 1 (mod m).
/// The number of primes is chosen from a Hadamard bound on the norms of all minors,
/// so the maximum of the modular ranks is provably the rank over Q(zeta_m).
std::size_t rank_multimodular(const FieldMatrix& M);
std::size_t rank_multimodular(const IntMatrix& M);

/// Primes p = 1 (mod m) below 2^62 in decreasing order, with a primitive m-th root of unity mod p.
struct ModularPrime {
    std::uint64_t p;
    std::uint64_t root;
};
const ModularPrime& modular_prime(long m, std::size_t index);

namespace modular {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
/// Rank of a dense rows x cols matrix over F_p; the buffer is destroyed.
std::size_t rank_mod_p(std::vector<std::uint64_t>& a, std::size_t rows, std::size_t cols, std::uint64_t p);
/// Number of primes needed when |sigma(minor)| < 2^hadamard_bits for all embeddings of Q(zeta_m).
std::size_t primes_needed(std::size_t hadamard_bits, long m);

}  // namespace modular

}  // namespace innc
