#pragma once

#include "innc/complex.hpp"
#include "innc/laurent.hpp"
#include "innc/subtorus.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace innc {

/// Finitely presented module coker(Phi) with Phi an m x n matrix: row i is the i-th relation
/// among the n generators.
struct ModulePresentation {
    std::size_t nvars = 0;
    CharacterMap map;
    PolyMatrix phi;

    std::size_t relations() const { return phi.rows; }
    std::size_t generators() const { return phi.cols; }
    bool has_relation() const { return !map.relations.empty(); }

    /// coker(d) for a differential d : C_k -> C_{k-1}; Phi = d^T.
    static ModulePresentation cokernel_of(const PolyMatrix& d, CharacterMap map);
};

/// pi_n of the generic arrangement cone as an R-module: ker d_n = im d_{n+1} = Lambda^{n+1} / im d_{n+2}.
/// The zero module (n = r-1) is presented by the 1x1 matrix [1].
ModulePresentation generic_cone_pi_n_presentation(std::size_t r, std::size_t n);

/// The presentation as displayed, Lambda^{n+1} -> Lambda^n -> pi_n -> 0, i.e. coker d_{n+1}.
ModulePresentation generic_cone_displayed_presentation(std::size_t r, std::size_t n);

/// Same module over the free Laurent ring in all ambient variables: substitutes the
/// variable images and appends (rel - 1) * I for every ring relation.
ModulePresentation lift_relation(const ModulePresentation& p);

constexpr std::size_t kDefaultSizeCap = 1000000;

/// All (n-k+1)-minors of Phi. Order <= 0 gives the unit ideal {1}; order > min(m, n)
/// gives the zero ideal (empty list). Zero minors are dropped, duplicates removed.
std::vector<LaurentPoly> fitting_ideal_generators(const ModulePresentation& p, std::size_t k,
                                                  std::size_t size_cap = kDefaultSizeCap);

/// True iff every generator vanishes at chi (chi read through the presentation's map).
bool fitting_zero_set_contains(const ModulePresentation& p, const std::vector<LaurentPoly>& generators,
                               const Character& chi);

/// dim of coker(Phi) tensor C_chi.
std::size_t presentation_rank_at(const ModulePresentation& p, const Character& chi);

/// dim H_degree(c, chi) >= k. The identity character raises IdentityCharacter.
bool charvar_membership(const ChainComplex& c, const Character& chi, std::size_t k, std::size_t degree);

/// Rank comparison of the two presentations of pi_n against ker d_n at sampled characters.
struct PresentationConsistencyRow {
    Character chi;
    std::size_t kernel_dim = 0;
    std::size_t pi_n_rank = 0;
    std::size_t displayed_rank = 0;
};
struct PresentationConsistency {
    std::size_t r = 0, n = 0;
    std::vector<PresentationConsistencyRow> rows;
    std::size_t pi_n_disagreements = 0;
    std::size_t displayed_disagreements = 0;
};
PresentationConsistency presentation_consistency(std::size_t r, std::size_t n, long order_bound);

enum class CandidateStatus { VerifiedOnGrid, Refuted };

struct CandidateResult {
    TranslatedSubtorus subtorus;
    CandidateStatus status = CandidateStatus::Refuted;
    std::optional<Character> witness;
};

struct CharVarReport {
    std::size_t depth = 0;
    std::size_t degree = 0;
    long order_bound = 0;
    std::vector<Character> members;
    std::vector<Character> non_members;
    std::vector<CandidateResult> candidates;
};

constexpr std::size_t kDefaultSampleCap = 2000;

/// Grid evidence for s being contained in V_k(H_degree) with its complement outside:
/// characters of order dividing order_bound on s (identity excluded, up to sample_cap, evenly strided)
/// and an equally sized strided sample off s. Relation complexes only sample characters obeying the relation.
CharVarReport verify_subtorus(const ChainComplex& c, const TranslatedSubtorus& s, std::size_t k, std::size_t degree,
                              long order_bound, std::size_t sample_cap = kDefaultSampleCap);

std::string to_string(CandidateStatus s);

}  // namespace innc
