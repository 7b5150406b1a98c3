#include "innc/cyclotomic.hpp"

#include "innc/error.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace innc {

namespace {

// Exact quotient of integer polynomials when the divisor is monic.
IntVector divide_monic(IntVector num, const IntVector& den) {
    std::size_t dn = den.size() - 1;
    if (num.size() < den.size()) return {};
    IntVector q(num.size() - dn, 0);
    for (std::size_t i = num.size(); i-- > dn;) {
        Integer c = num[i];
        q[i - dn] = c;
        if (c != 0)
            for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
    }
    return q;
}

}  // namespace

const IntVector& cyclotomic_polynomial(long m) {
    if (m < 1) throw InvalidArgument("cyclotomic conductor must be positive");
    static std::recursive_mutex mu;
    static std::map<long, IntVector> cache;
    std::lock_guard<std::recursive_mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    // x^m - 1 divided by Phi_d for every proper divisor d.
    IntVector p(m + 1, 0);
    p[0] = -1;
    p[m] = 1;
    for (long d = 1; d < m; ++d) {
        if (m % d) continue;
        p = divide_monic(p, cyclotomic_polynomial(d));
    }
    return cache.emplace(m, std::move(p)).first->second;
}

long euler_phi(long m) {
    long result = m;
    long n = m;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

CyclotomicElem::CyclotomicElem(long conductor) : m_(conductor) {
    if (conductor < 1) throw InvalidArgument("cyclotomic conductor must be positive");
    coeffs_.assign(euler_phi(conductor), Rational(0));
}

CyclotomicElem CyclotomicElem::one(long m) { return from_rational(m, 1); }

CyclotomicElem CyclotomicElem::from_rational(long m, const Rational& q) {
    CyclotomicElem e(m);
    e.coeffs_[0] = q;
    return e;
}

CyclotomicElem CyclotomicElem::zeta_power(long m, long k) {
    std::vector<Rational> r(m, Rational(0));
    long j = ((k % m) + m) % m;
    r[j] = 1;
    return from_residues(m, std::move(r));
}

CyclotomicElem CyclotomicElem::from_residues(long m, std::vector<Rational> residues) {
    // Fold exponents >= m via z^m = 1, then reduce modulo the monic Phi_m.
    if (static_cast<long>(residues.size()) > m) {
        for (std::size_t i = m; i < residues.size(); ++i) residues[i % m] += residues[i];
        residues.resize(m);
    }
    const IntVector& phi = cyclotomic_polynomial(m);
    std::size_t deg = phi.size() - 1;
    for (std::size_t i = residues.size(); i-- > deg;) {
        if (residues[i] == 0) continue;
        Rational c = residues[i];
        for (std::size_t j = 0; j < deg; ++j)
            if (phi[j] != 0) residues[i - deg + j] -= c * phi[j];
        residues[i] = 0;
    }
    residues.resize(deg, Rational(0));
    CyclotomicElem e(m);
    e.coeffs_ = std::move(residues);
    return e;
}

bool CyclotomicElem::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CyclotomicElem::is_one() const {
    if (coeffs_[0] != 1) return false;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

void CyclotomicElem::check_same(const CyclotomicElem& o) const {
    if (m_ != o.m_) throw DimensionMismatch("cyclotomic elements of different conductors");
}

CyclotomicElem& CyclotomicElem::operator+=(const CyclotomicElem& o) {
    check_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

CyclotomicElem& CyclotomicElem::operator-=(const CyclotomicElem& o) {
    check_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

CyclotomicElem operator*(const CyclotomicElem& a, const CyclotomicElem& b) {
    a.check_same(b);
    std::size_t n = a.coeffs_.size();
    std::vector<Rational> prod(2 * n - 1, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j)
            if (b.coeffs_[j] != 0) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return CyclotomicElem::from_residues(a.m_, std::move(prod));
}

CyclotomicElem CyclotomicElem::operator-() const {
    CyclotomicElem e = *this;
    for (auto& c : e.coeffs_) c = -c;
    return e;
}

CyclotomicElem CyclotomicElem::scaled(const Rational& q) const {
    CyclotomicElem e = *this;
    for (auto& c : e.coeffs_) c *= q;
    return e;
}

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// a = q*b + r over Q[x].
void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
    r = a;
    trim(r);
    q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, Rational(0));
    Rational lead = b.back();
    while (r.size() >= b.size() && !r.empty()) {
        std::size_t shift = r.size() - b.size();
        Rational c = r.back() / lead;
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
        trim(r);
    }
}

QPoly mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly p(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) p[i + j] += a[i] * b[j];
    trim(p);
    return p;
}

QPoly sub(const QPoly& a, const QPoly& b) {
    QPoly p(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) p[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) p[i] -= b[i];
    trim(p);
    return p;
}

}  // namespace

CyclotomicElem CyclotomicElem::inverse() const {
    if (is_zero()) throw InvalidArgument("inverse of zero in cyclotomic field");
    // Extended Euclid: s*a + t*Phi = g with g a nonzero constant since Phi is irreducible.
    const IntVector& phi_int = cyclotomic_polynomial(m_);
    QPoly phi(phi_int.begin(), phi_int.end());
    QPoly r0 = phi, r1 = coeffs_;
    trim(r1);
    QPoly s0{}, s1{Rational(1)};
    while (r1.size() > 1) {
        QPoly q, r;
        divmod(r0, r1, q, r);
        QPoly s = sub(s0, mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    Rational g = r1.at(0);
    for (auto& c : s1) c /= g;
    return from_residues(m_, std::move(s1));
}

CyclotomicElem CyclotomicElem::embed(long M) const {
    if (M % m_ != 0) throw InvalidArgument("embedding target conductor must be a multiple");
    long step = M / m_;
    std::vector<Rational> r(M, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r[(i * step) % M] += coeffs_[i];
    return from_residues(M, std::move(r));
}

std::string CyclotomicElem::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (i == 0) {
            os << innc::to_string(mag);
        } else {
            if (mag != 1) os << innc::to_string(mag) << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return first ? "0" : os.str();
}

}  // namespace innc
