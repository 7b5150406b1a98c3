#include "innc/laurent.hpp"

#include "innc/error.hpp"

#include <cctype>
#include <sstream>

namespace innc {

LaurentPoly LaurentPoly::constant(std::size_t nvars, const Rational& c) {
    LaurentPoly p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(std::size_t nvars, Exponent e, const Rational& c) {
    if (e.size() != nvars) throw DimensionMismatch("monomial exponent length differs from variable count");
    LaurentPoly p(nvars);
    p.add_term(e, c);
    return p;
}

LaurentPoly LaurentPoly::variable(std::size_t nvars, std::size_t i) {
    if (i >= nvars) throw InvalidArgument("variable index out of range");
    Exponent e(nvars, 0);
    e[i] = 1;
    return monomial(nvars, std::move(e));
}

LaurentPoly LaurentPoly::binomial(Exponent e) {
    std::size_t n = e.size();
    LaurentPoly p = monomial(n, std::move(e));
    p.add_term(Exponent(n, 0), -1);
    return p;
}

Rational LaurentPoly::coefficient_sum() const {
    Rational s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

Rational LaurentPoly::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(const Exponent& e, const Rational& coeff) {
    if (e.size() != nvars_) throw DimensionMismatch("term exponent length differs from variable count");
    Rational c = coeff;
    c.canonicalize();
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void LaurentPoly::check_same(const LaurentPoly& o) const {
    if (nvars_ != o.nvars_) throw DimensionMismatch("Laurent polynomials over different variable counts");
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    a.check_same(b);
    LaurentPoly out(a.nvars_);
    Exponent e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p = *this;
    for (auto& [e, c] : p.terms_) c = -c;
    return p;
}

LaurentPoly LaurentPoly::pow(long k) const {
    if (k < 0) {
        if (terms_.size() != 1) throw InvalidArgument("negative power of a non-monomial");
        const auto& [e, c] = *terms_.begin();
        Exponent ne(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) ne[i] = e[i] * k;
        Rational cc = 1;
        for (long j = 0; j < -k; ++j) cc /= c;
        return monomial(nvars_, ne, cc);
    }
    LaurentPoly result = constant(nvars_, 1);
    LaurentPoly base = *this;
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

LaurentPoly LaurentPoly::substitute_monomials(const std::vector<Exponent>& images,
                                              std::size_t new_nvars) const {
    if (images.size() != nvars_) throw DimensionMismatch("substitution needs one image per variable");
    for (const auto& im : images)
        if (im.size() != new_nvars) throw DimensionMismatch("substitution image has wrong length");
    LaurentPoly out(new_nvars);
    Exponent ne(new_nvars);
    for (const auto& [e, c] : terms_) {
        std::fill(ne.begin(), ne.end(), 0);
        for (std::size_t i = 0; i < nvars_; ++i)
            if (e[i] != 0)
                for (std::size_t j = 0; j < new_nvars; ++j) ne[j] += e[i] * images[i][j];
        out.add_term(ne, c);
    }
    return out;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "t" + std::to_string(i + 1);
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        Rational mag = abs(c);
        bool negative = c < 0;
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        if (mono.empty()) {
            os << innc::to_string(mag);
        } else {
            if (mag != 1) os << innc::to_string(mag) << "*";
            os << mono;
        }
        first = false;
    }
    return os.str();
}

namespace {

struct Parser {
    std::string_view s;
    std::size_t pos = 0;
    std::size_t nvars;

    [[noreturn]] void fail(const std::string& why) const {
        throw SchemaError("cannot parse polynomial '" + std::string(s) + "': " + why);
    }
    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool peek(char c) {
        skip();
        return pos < s.size() && s[pos] == c;
    }
    std::string digits() {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected digits at offset " + std::to_string(start));
        return std::string(s.substr(start, pos - start));
    }
    void factor(Exponent& e, Rational& c) {
        skip();
        if (pos < s.size() && s[pos] == 't') {
            ++pos;
            long idx = std::stol(digits());
            if (idx < 1 || static_cast<std::size_t>(idx) > nvars) fail("variable t" + std::to_string(idx) + " out of range");
            long power = 1;
            skip();
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                skip();
                bool neg = false;
                if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) neg = s[pos++] == '-';
                power = std::stol(digits());
                if (neg) power = -power;
            }
            e[idx - 1] += power;
        } else {
            Integer num(digits(), 10);
            Integer den = 1;
            if (pos < s.size() && s[pos] == '/') {
                ++pos;
                den = Integer(digits(), 10);
                if (den == 0) fail("zero denominator");
            }
            c *= Rational(num, den);
            c.canonicalize();
        }
    }
    LaurentPoly run() {
        LaurentPoly p(nvars);
        skip();
        if (pos == s.size()) fail("empty input");
        bool first = true;
        while (true) {
            skip();
            if (pos == s.size()) break;
            Rational c = 1;
            if (s[pos] == '+' || s[pos] == '-') {
                if (s[pos] == '-') c = -1;
                ++pos;
            } else if (!first) {
                fail("expected '+' or '-' at offset " + std::to_string(pos));
            }
            Exponent e(nvars, 0);
            factor(e, c);
            while (peek('*')) {
                ++pos;
                factor(e, c);
            }
            p.add_term(e, c);
            first = false;
        }
        return p;
    }
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text, std::size_t nvars) {
    Parser ps{text, 0, nvars};
    return ps.run();
}

PolyMatrix::PolyMatrix(std::size_t r, std::size_t c, std::size_t nv)
    : rows(r), cols(c), nvars(nv), entries(r * c, LaurentPoly(nv)) {}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix t(cols, rows, nvars);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool PolyMatrix::is_zero() const {
    for (const auto& e : entries)
        if (!e.is_zero()) return false;
    return true;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols != b.rows) throw DimensionMismatch("matrix product shape mismatch");
    PolyMatrix out(a.rows, b.cols, a.nvars);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            const auto& x = a.at(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols; ++j) {
                const auto& y = b.at(k, j);
                if (!y.is_zero()) out.at(i, j) += x * y;
            }
        }
    return out;
}

}  // namespace innc
