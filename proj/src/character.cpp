#include "innc/character.hpp"

#include "innc/error.hpp"

#include <numeric>

namespace innc {

Character::Character(RationalVector kappas) : kappas_(std::move(kappas)) {
    for (auto& k : kappas_) k.canonicalize();
    for (const auto& k : kappas_)
        if (k < 0 || k >= 1) throw InvalidArgument("character log entries must lie in [0,1), got " + innc::to_string(k));
}

Character Character::from_log(const RationalVector& v) { return Character(fractional_part_vector(v)); }

Character Character::parse(const std::string& text) {
    auto v = parse_rational_list(text);
    for (const auto& k : v)
        if (k < 0 || k >= 1) throw SchemaError("character entry " + innc::to_string(k) + " outside [0,1)");
    return Character(std::move(v));
}

bool Character::is_identity() const {
    for (const auto& k : kappas_)
        if (k != 0) return false;
    return true;
}

long Character::order() const {
    Integer l = 1;
    for (const auto& k : kappas_) l = lcm_of(l, k.get_den());
    return to_long(l);
}

Rational Character::pair(const Exponent& e) const {
    if (e.size() != kappas_.size()) throw DimensionMismatch("exponent and character lengths differ");
    Rational s = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0) s += kappas_[i] * e[i];
    return s;
}

Rational Character::sum() const {
    Rational s = 0;
    for (const auto& k : kappas_) s += k;
    return s;
}

std::string Character::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < kappas_.size(); ++i) {
        if (i) s += ",";
        s += innc::to_string(kappas_[i]);
    }
    return s + ")";
}

CyclotomicElem laurent_eval(const LaurentPoly& p, const Character& chi) {
    return laurent_eval(p, chi, chi.order());
}

CyclotomicElem laurent_eval(const LaurentPoly& p, const Character& chi, long conductor) {
    if (p.nvars() != chi.size())
        throw DimensionMismatch("polynomial has " + std::to_string(p.nvars()) + " variables, character has " +
                                std::to_string(chi.size()) + " entries");
    if (conductor % chi.order() != 0) throw InvalidArgument("conductor is not a multiple of the character order");
    if (p.is_zero()) return CyclotomicElem(conductor);
    // kappa_i * conductor is an integer residue.
    std::vector<long> steps(chi.size());
    for (std::size_t i = 0; i < chi.size(); ++i) {
        Rational s = chi[i] * conductor;
        steps[i] = s.get_num().get_si();
    }
    std::vector<Rational> residues(conductor, Rational(0));
    for (const auto& [e, c] : p.terms()) {
        long j = 0;
        for (std::size_t i = 0; i < e.size(); ++i) j = (j + (e[i] % conductor) * steps[i]) % conductor;
        if (j < 0) j += conductor;
        residues[j] += c;
    }
    return CyclotomicElem::from_residues(conductor, std::move(residues));
}

std::vector<Character> characters_of_order_dividing(std::size_t r, long N) {
    if (N < 1) throw InvalidArgument("order bound must be positive");
    std::vector<Character> out;
    std::vector<long> idx(r, 0);
    while (true) {
        RationalVector k(r);
        for (std::size_t i = 0; i < r; ++i) {
            k[i] = Rational(idx[i], N);
            k[i].canonicalize();
        }
        out.emplace_back(std::move(k));
        std::size_t pos = r;
        while (pos > 0) {
            --pos;
            if (++idx[pos] < N) break;
            idx[pos] = 0;
            if (pos == 0) return out;
        }
        if (r == 0) return out;
    }
}

std::vector<Character> characters_of_order_at_most(std::size_t r, long B) {
    std::vector<Character> out;
    for (long d = 1; d <= B; ++d)
        for (auto& c : characters_of_order_dividing(r, d))
            if (c.order() == d) out.push_back(std::move(c));
    return out;
}

}  // namespace innc
