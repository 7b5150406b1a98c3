#include "innc/rational.hpp"

#include "innc/error.hpp"

#include <cctype>

namespace innc {

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
    s = trim(s);
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) throw SchemaError("malformed rational '" + std::string(whole) + "'");
    for (std::size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j])))
            throw SchemaError("malformed rational '" + std::string(whole) + "'");
    std::string str(s[0] == '+' ? s.substr(1) : s);
    return Integer(str, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto s = trim(text);
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(s, text));
    Integer num = parse_integer(s.substr(0, slash), text);
    Integer den = parse_integer(s.substr(slash + 1), text);
    if (den == 0) throw SchemaError("zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

RationalVector parse_rational_list(std::string_view text) {
    RationalVector out;
    auto s = trim(text);
    if (s.empty()) return out;
    std::size_t start = 0;
    while (true) {
        auto comma = s.find(',', start);
        out.push_back(parse_rational(s.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

Integer floor_of(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Integer ceil_of(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Rational frac(const Rational& q) { return q - Rational(floor_of(q)); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

RationalVector fractional_part_vector(const RationalVector& v) {
    RationalVector out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(frac(x));
    return out;
}

Integer lcm_of(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer gcd_of(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

long to_long(const Integer& z) {
    if (!z.fits_slong_p()) throw InvalidArgument("integer " + z.get_str() + " out of machine range");
    return z.get_si();
}

}  // namespace innc
