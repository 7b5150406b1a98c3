#pragma once

#include "innc/rational.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace innc {

using Exponent = std::vector<long>;

/// Multivariate Laurent polynomial with rational coefficients in t1..tr.
/// Terms with zero coefficient are never stored.
class LaurentPoly {
public:
    using TermMap = std::map<Exponent, Rational>;

    explicit LaurentPoly(std::size_t nvars = 0) : nvars_(nvars) {}

    static LaurentPoly constant(std::size_t nvars, const Rational& c);
    static LaurentPoly monomial(std::size_t nvars, Exponent e, const Rational& c = 1);
    static LaurentPoly variable(std::size_t nvars, std::size_t i);
    /// t^e - 1, the usual Koszul parameter.
    static LaurentPoly binomial(Exponent e);

    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Value at t = (1, ..., 1).
    Rational coefficient_sum() const;
    Rational coefficient(const Exponent& e) const;

    void add_term(const Exponent& e, const Rational& c);

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Rational& c);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
    LaurentPoly operator-() const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    /// Nonnegative powers of any polynomial; negative powers only of monomials.
    LaurentPoly pow(long k) const;

    /// Ring map sending t_i to the monomial t^{images[i]} in new_nvars variables.
    LaurentPoly substitute_monomials(const std::vector<Exponent>& images, std::size_t new_nvars) const;

    /// Canonical text, terms in decreasing lexicographic exponent order,
    /// e.g. "t1^2*t2^-1 - 3". Zero prints as "0".
    std::string to_string() const;

    /// Inverse of to_string; nvars must cover every variable index used.
    static LaurentPoly parse(std::string_view text, std::size_t nvars);

private:
    void check_same(const LaurentPoly& o) const;

    std::size_t nvars_;
    TermMap terms_;
};

/// Matrix of Laurent polynomials, row major.
struct PolyMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t nvars = 0;
    std::vector<LaurentPoly> entries;

    PolyMatrix() = default;
    PolyMatrix(std::size_t r, std::size_t c, std::size_t nv);

    LaurentPoly& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
    const LaurentPoly& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }

    PolyMatrix transpose() const;
    bool is_zero() const;
    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.rows == b.rows && a.cols == b.cols && a.entries == b.entries;
    }
};

}  // namespace innc
