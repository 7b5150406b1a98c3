#pragma once

#include "innc/rational.hpp"

#include <string>
#include <vector>

namespace innc {

/// Coefficients of the m-th cyclotomic polynomial, constant term first (monic).
const IntVector& cyclotomic_polynomial(long m);

/// Euler's totient.
long euler_phi(long m);

/// Element of Q(zeta_m) in the power basis 1, z, ..., z^(phi(m)-1),
/// stored as the canonical residue modulo Phi_m.
class CyclotomicElem {
public:
    CyclotomicElem() : CyclotomicElem(1) {}
    explicit CyclotomicElem(long conductor);

    static CyclotomicElem zero(long m) { return CyclotomicElem(m); }
    static CyclotomicElem one(long m);
    static CyclotomicElem from_rational(long m, const Rational& q);
    /// zeta_m^k for any integer k.
    static CyclotomicElem zeta_power(long m, long k);
    /// sum_j residues[j] * zeta_m^j with residues of any length, reduced.
    static CyclotomicElem from_residues(long m, std::vector<Rational> residues);

    long conductor() const { return m_; }
    const RationalVector& coeffs() const { return coeffs_; }
    bool is_zero() const;
    bool is_one() const;

    CyclotomicElem& operator+=(const CyclotomicElem& o);
    CyclotomicElem& operator-=(const CyclotomicElem& o);
    friend CyclotomicElem operator+(CyclotomicElem a, const CyclotomicElem& b) { return a += b; }
    friend CyclotomicElem operator-(CyclotomicElem a, const CyclotomicElem& b) { return a -= b; }
    friend CyclotomicElem operator*(const CyclotomicElem& a, const CyclotomicElem& b);
    CyclotomicElem operator-() const;
    CyclotomicElem scaled(const Rational& q) const;

    /// Multiplicative inverse; throws InvalidArgument on zero.
    CyclotomicElem inverse() const;

    /// Image under Q(zeta_m) -> Q(zeta_M), zeta_m -> zeta_M^(M/m). M must be a multiple of m.
    CyclotomicElem embed(long M) const;

    friend bool operator==(const CyclotomicElem& a, const CyclotomicElem& b) {
        return a.m_ == b.m_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const CyclotomicElem& a, const CyclotomicElem& b) { return !(a == b); }

    /// Polynomial in z (= zeta_m), e.g. "z - 1"; zero prints "0".
    std::string to_string() const;

private:
    void check_same(const CyclotomicElem& o) const;

    long m_;
    RationalVector coeffs_;
};

}  // namespace innc
