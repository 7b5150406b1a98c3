#pragma once

#include "innc/character.hpp"
#include "innc/covers.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace innc {

/// Polynomial in (u, v) with integer coefficients.
class EPoly {
public:
    EPoly() = default;
    static EPoly constant(long c);
    /// L = uv.
    static EPoly lefschetz();
    static EPoly monomial(long pu, long pv, const Integer& c);

    const std::map<std::pair<long, long>, Integer>& terms() const { return terms_; }
    Integer coefficient(long pu, long pv) const;
    void add_term(long pu, long pv, const Integer& c);
    bool is_zero() const { return terms_.empty(); }
    /// Value at u = v = 1.
    Integer at_one() const;

    EPoly operator+(const EPoly& o) const;
    EPoly operator-(const EPoly& o) const;
    EPoly operator*(const EPoly& o) const;
    friend bool operator==(const EPoly& a, const EPoly& b) { return a.terms_ == b.terms_; }

    /// "u*v - 2", highest total degree first.
    std::string to_string() const;

private:
    std::map<std::pair<long, long>, Integer> terms_;
};

struct ResolutionComponent {
    std::string name;
    std::vector<long> a;
    long c = 0;
    /// Contained in the preimage of X_0.
    bool exceptional = true;
};

struct Stratum {
    /// Component indices, sorted.
    std::vector<std::size_t> subset;
    std::optional<long> euler;
    std::optional<EPoly> hodge;
};

struct ResolutionDatum {
    std::size_t r = 0;
    std::vector<ResolutionComponent> components;
    std::vector<Stratum> strata;
    /// Euler characteristic of the whole divisor preimage, when recorded.
    std::optional<long> total_euler;

    /// Checks lengths, signs, subset indices, duplicate strata and the recorded total.
    void validate() const;
    std::size_t component_index(const std::string& name) const;
    const Stratum* find_stratum(const std::vector<std::size_t>& subset) const;

    /// x^r - y^r resolved by one blowup: E0 with a = (1..1), c = 1 and r lines with a = e_k, c = 0.
    static ResolutionDatum concurrent_lines(std::size_t r);
};

struct ZetaFactor {
    long c = 0;
    std::vector<long> a;
};

/// [class] * prod over factors L^{-c-1} T^a / (1 - L^{-c-1} T^a).
struct ZetaTerm {
    std::vector<std::size_t> subset;
    std::optional<long> euler;
    std::optional<EPoly> hodge;
    std::vector<ZetaFactor> factors;
};

struct ZetaFunction {
    std::size_t r = 0;
    std::vector<ZetaTerm> terms;

    bool is_zero() const { return terms.empty(); }
    std::string to_string(const std::vector<std::string>& names = {}) const;
};

struct BuildOptions {
    bool include_empty_stratum = true;
    /// Keep only strata over X_0, i.e. subsets containing an exceptional component.
    bool exceptional_only = true;
};

ZetaFunction build_zeta(const ResolutionDatum& rd, const BuildOptions& opts = {});

/// Integer coefficient times prod T^a / (1 - T^a).
struct TopTerm {
    Integer coefficient;
    std::vector<std::vector<long>> factors;
};
struct TopRealization {
    std::size_t r = 0;
    std::vector<TopTerm> terms;

    /// Value at T_1 = ... = T_r = 0.
    Integer at_zero() const;
    /// Value at a point where no denominator vanishes.
    Rational evaluate(const RationalVector& t) const;
    std::string to_string() const;
};
TopRealization e_top_realization(const ZetaFunction& z);

/// EPoly coefficient times prod (uv)^{-c-1} T^a / (1 - (uv)^{-c-1} T^a).
struct HodgeTerm {
    EPoly coefficient;
    std::vector<ZetaFactor> factors;
};
struct HodgeRealization {
    std::size_t r = 0;
    std::vector<HodgeTerm> terms;

    /// u = v = 1.
    TopRealization specialize_at_one() const;
    std::string to_string() const;
};
HodgeRealization hodge_realization(const ZetaFunction& z);

/// e(E_I) when sum_k a_{i,k} kappa_k is an integer for every i in I, else 0.
long equivariant_stratum_euler(const ResolutionDatum& rd, const std::vector<std::size_t>& subset,
                               const Character& chi);

/// chi-part of the Euler characteristic of the cover U_I: the divisibility rule for |I| <= 1,
/// and 0 for |I| >= 2 where U_I carries a free torus factor.
long cover_stratum_euler(const ZetaTerm& term, const Character& chi);

/// sum_I (-1)^{|I|} e_chi(U_I): every factor tends to -1 as T -> infinity jointly.
long limit_at_infinity(const ZetaFunction& z, const Character& chi);

/// e^1_{h,chi} of the exceptional curves: on each exceptional E_i killed by chi with Hodge data,
/// g_i - 1 + sum over incident points of <-chi(a_j)>, or g_i when every local exponent vanishes.
long curve_hodge_u1(const ResolutionDatum& rd, const Character& chi);

struct CurveHodgeRow {
    long k = 0;
    Character chi;
    long hodge_u1 = 0;
    long chevalley_weil = 0;
    bool agrees = false;
};
struct CurveHodgeReport {
    std::size_t r = 0;
    long m = 0;
    std::vector<CurveHodgeRow> rows;
    bool all_agree = true;
};
/// Diagonal characters (k/m, ..., k/m) on the concurrent-lines datum against the gated
/// Chevalley-Weil dimensions of the exceptional-curve cover.
CurveHodgeReport curve_hodge_consistency(std::size_t r, long m);

}  // namespace innc
