#pragma once

#include "innc/cyclotomic.hpp"
#include "innc/laurent.hpp"
#include "innc/rational.hpp"

#include <string>
#include <vector>

namespace innc {

/// Finite-order character of Z^r given by its logarithm (kappa_1, ..., kappa_r) in [0,1)^r.
/// The value on generator i is exp(2 pi i kappa_i).
class Character {
public:
    Character() = default;
    /// Entries must already lie in [0,1).
    explicit Character(RationalVector kappas);
    /// Reduces every entry mod 1 first.
    static Character from_log(const RationalVector& v);
    static Character identity(std::size_t r) { return Character(RationalVector(r, Rational(0))); }
    /// Parses "1/3,1/3,0".
    static Character parse(const std::string& text);

    std::size_t size() const { return kappas_.size(); }
    const RationalVector& kappas() const { return kappas_; }
    const Rational& operator[](std::size_t i) const { return kappas_[i]; }
    bool is_identity() const;

    /// lcm of denominators.
    long order() const;
    /// Sum of kappa_i e_i, not reduced.
    Rational pair(const Exponent& e) const;
    Rational sum() const;

    friend bool operator==(const Character& a, const Character& b) { return a.kappas_ == b.kappas_; }
    friend bool operator<(const Character& a, const Character& b) { return a.kappas_ < b.kappas_; }

    /// "(1/3,1/3,0)".
    std::string to_string() const;

private:
    RationalVector kappas_;
};

/// p evaluated at t_i = exp(2 pi i kappa_i) in Q(zeta_m), m = order of chi.
CyclotomicElem laurent_eval(const LaurentPoly& p, const Character& chi);
/// Same, in the field of a given conductor (a multiple of chi's order).
CyclotomicElem laurent_eval(const LaurentPoly& p, const Character& chi, long conductor);

/// Every character with kappa_i in (1/N)Z, lexicographic in kappa, i.e. order dividing N.
std::vector<Character> characters_of_order_dividing(std::size_t r, long N);
/// Every character of order at most B, ordered by order then lexicographically.
std::vector<Character> characters_of_order_at_most(std::size_t r, long B);

}  // namespace innc
