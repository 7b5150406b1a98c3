#pragma once

#include "innc/complex.hpp"
#include "innc/integer_matrix.hpp"
#include "innc/polytope.hpp"

#include <utility>
#include <vector>

namespace innc {

/// G = sum Z/d_i with the quotient map Z^v -> G, e -> (P e mod d_i).
/// Characters of G pull back to characters of Z^v with kappa = P^T kappa_G.
class FiniteQuotient {
public:
    /// G = sum Z/m_i on the standard basis of Z^v.
    static FiniteQuotient diagonal(const std::vector<long>& moduli);
    /// Z^v / (row lattice of relations); must be finite.
    static FiniteQuotient from_relations(const IntMatrix& relations);
    /// For complexes over Z[t^+-1]/(t1...tr - 1) with tr eliminated: the image of
    /// sum Z/m_i (on t1..tr) in Z^{r-1} = Z^r / (1,...,1).
    static FiniteQuotient for_relation_ring(const std::vector<long>& moduli);

    std::size_t source_dim() const { return projection_.cols; }
    const std::vector<long>& moduli() const { return moduli_; }
    const IntMatrix& projection() const { return projection_; }
    long order() const;

    /// Mixed-radix index of the image of e in G.
    std::size_t element_index(const Exponent& e) const;
    /// Index of the sum of two elements given by their indices.
    std::size_t add(std::size_t g, std::size_t h) const;
    /// All characters of G read on Z^v, in mixed-radix order of kappa_G.
    std::vector<Character> characters() const;

private:
    std::vector<long> moduli_;
    IntMatrix projection_;
};

/// dim H_degree at each character of G (characters on c's own variables).
std::vector<std::pair<Character, std::size_t>> cover_homology_eigenspaces(const ChainComplex& c,
                                                                          const FiniteQuotient& q,
                                                                          std::size_t degree);

/// Integer chain complex of the finite cover U_G: cells (cell, g), built by lifting each
/// monomial of every differential entry to a translate.
struct IntegerComplex {
    std::vector<std::size_t> ranks;
    std::vector<IntMatrix> differentials;  // d_1..d_top
};
IntegerComplex lifted_cover_complex(const ChainComplex& c, const FiniteQuotient& q);
/// Rational Betti numbers of an integer complex.
std::vector<std::size_t> betti_numbers(const IntegerComplex& c);

/// Cyclic cover y^m = prod (x - b_i)^{a_i} of the line.
struct BranchDatum {
    long m = 2;
    std::vector<long> a;

    /// a_infinity = -sum a_i mod m.
    long a_infinity() const;
    bool ramified_at_infinity() const { return a_infinity() != 0; }
    /// gcd(m, a_1, ..., a_r) == 1.
    bool connected() const;
};

/// dims[k] = dimension of the eigenspace of holomorphic 1-forms on which the deck generator
/// acts by zeta_m^{-k}: 0 for k = 0, otherwise -1 + sum over branch points incl. infinity of <k a_i / m>.
std::vector<long> chevalley_weil_dims(const BranchDatum& b);

/// Genus from 2g - 2 = -2m + sum (m - gcd(m, a_i)) over branch points incl. infinity.
long riemann_hurwitz_genus(const BranchDatum& b);

/// Per k = 1..m-1, the diagonal character (k/m, ..., k/m) against the faces x_1 + ... + x_r = l.
struct QuasiadjunctionRow {
    long k = 0;
    Character chi;
    std::optional<long> face_level;  // l of the face containing log chi
    long cw_index = 0;               // (m - k) mod m
    long cw_raw = 0;                 // chevalley_weil_dims[cw_index] for the exceptional-curve cover
    bool kills_exceptional = false;  // r k / m integral
    long cw_gated = 0;               // cw_raw if kills_exceptional, else 0
    bool agrees = false;             // (cw_gated > 0) == face_level.has_value()
};
struct QuasiadjunctionReport {
    std::size_t r = 0;
    long m = 0;
    std::vector<QuasiadjunctionRow> rows;
    std::size_t agreements = 0;
    std::size_t disagreements = 0;
    std::size_t raw_disagreements = 0;
};
QuasiadjunctionReport quasiadjunction_consistency(std::size_t r, long m, const std::vector<QFace>& faces);

}  // namespace innc
