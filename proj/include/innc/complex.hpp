#pragma once

#include "innc/character.hpp"
#include "innc/exact_rank.hpp"
#include "innc/laurent.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace innc {

/// How characters of the ambient group Z^N are read on the complex's variables.
/// Variable j of the complex is the monomial t^{variable_images[j]} in t1..tN, and
/// each relation t^{relations[k]} = 1 holds in the base ring.
struct CharacterMap {
    std::size_t ambient_dim = 0;
    std::vector<Exponent> variable_images;
    std::vector<Exponent> relations;
    /// Human-readable description, e.g. "t3 = (t1*t2)^-1".
    std::string description;

    static CharacterMap identity(std::size_t n);
    bool is_identity() const;
};

/// Graded free complex C_top -> ... -> C_0 over Q[s_1^+-1, ..., s_v^+-1].
/// differentials[k-1] is d_k : C_k -> C_{k-1}, stored as a rank_{k-1} x rank_k matrix
/// acting on column vectors.
class ChainComplex {
public:
    ChainComplex() = default;
    ChainComplex(std::size_t nvars, std::vector<std::size_t> ranks, std::vector<PolyMatrix> differentials,
                 CharacterMap map);

    std::size_t nvars() const { return nvars_; }
    std::size_t top_degree() const { return ranks_.empty() ? 0 : ranks_.size() - 1; }
    const std::vector<std::size_t>& ranks() const { return ranks_; }
    const std::vector<PolyMatrix>& differentials() const { return differentials_; }
    /// d_k for 1 <= k <= top.
    const PolyMatrix& d(std::size_t k) const { return differentials_.at(k - 1); }
    const CharacterMap& character_map() const { return map_; }
    bool has_relation() const { return !map_.relations.empty(); }

    /// d_{k-1} * d_k == 0 for all k, as Laurent polynomial matrices.
    bool verify_dd_zero() const;

    /// Character expressed on the complex's own variables. Accepts either the ambient
    /// dimension (relations are checked) or nvars() free coordinates.
    Character restrict_character(const Character& chi) const;

private:
    std::size_t nvars_ = 0;
    std::vector<std::size_t> ranks_;
    std::vector<PolyMatrix> differentials_;
    CharacterMap map_;
};

/// A complex specialized at a character: matrices over Q(zeta_m).
struct SpecializedComplex {
    long conductor = 1;
    std::vector<std::size_t> ranks;
    std::vector<FieldMatrix> differentials;  // d_1..d_top
};

/// Lexicographically ordered k-subsets of {0,..,s-1}.
std::vector<std::vector<std::size_t>> lex_subsets(std::size_t s, std::size_t k);

/// Koszul complex on params, truncated at top_degree.
ChainComplex koszul_complex(std::size_t r, const std::vector<LaurentPoly>& params, std::size_t top_degree);

/// Koszul complex on params keeping only basis subsets with at most
/// `truncated_limit` elements among the indices flagged in `truncated`.
ChainComplex koszul_subcomplex(std::size_t r, const std::vector<LaurentPoly>& params,
                               const std::vector<bool>& truncated, std::size_t truncated_limit, CharacterMap map);

/// Universal abelian cover of the link complement of a cone over r generic hyperplanes in P^n:
/// Koszul complex on s_i - 1 (i < r) truncated at n, over Z[t^+-1]/(t1...tr - 1) with tr eliminated.
ChainComplex generic_arrangement_cone_complex(std::size_t r, std::size_t n);

/// Free-variable model of the same complement for a cone whose fibre class in H_1 = Z^r is
/// `degrees` (gcd 1): the circle factor carries t^degrees - 1 and the n-skeleton of the
/// complementary torus carries t^{b_i} - 1 for a unimodular completion b_1..b_{r-1}.
/// degrees = (1,...,1) is the generic arrangement cone read on all characters of Z^r.
ChainComplex cone_complement_complex(const std::vector<long>& degrees, std::size_t n);

SpecializedComplex specialize(const ChainComplex& c, const Character& chi);

enum class RankMethod { Multimodular, Elimination };

std::vector<std::size_t> homology_dims(const SpecializedComplex& s, RankMethod method = RankMethod::Multimodular);

/// dims of H_* of c at chi, i.e. homology_dims(specialize(c, chi)).
std::vector<std::size_t> homology_at(const ChainComplex& c, const Character& chi,
                                     RankMethod method = RankMethod::Multimodular);

/// Precompiled fast path for repeated homology computations on one complex:
/// entries are evaluated directly in F_p for degree-one primes p of Q(zeta_m).
/// Same certified prime count as rank_multimodular, so results are exact.
class HomologyEvaluator {
public:
    explicit HomologyEvaluator(const ChainComplex& c);
    std::vector<std::size_t> dims(const Character& chi) const;
    /// dim H_degree only (ranks of d_degree and d_degree+1).
    std::size_t dim(const Character& chi, std::size_t degree) const;
    const ChainComplex& complex() const { return *complex_; }

private:
    struct Term {
        std::size_t entry;
        Exponent exponent;
        Integer coefficient;
    };
    struct Compiled {
        std::size_t rows = 0, cols = 0;
        std::vector<Term> terms;
        std::size_t hadamard_bits = 0;
    };
    std::size_t rank_of(const Compiled& d, const Character& local) const;

    const ChainComplex* complex_;
    std::vector<Compiled> diffs_;
};

/// Ranks of the complex at t = 1 computed directly over Q.
std::vector<std::size_t> betti_at_identity(const ChainComplex& c);

/// Unimodular matrix whose first row is v (gcd(v) = 1).
std::vector<Exponent> unimodular_completion(const std::vector<long>& v);

}  // namespace innc
