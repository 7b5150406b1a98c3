#include "innc/covers.hpp"

#include "innc/error.hpp"

#include <numeric>

namespace innc {

FiniteQuotient FiniteQuotient::diagonal(const std::vector<long>& moduli) {
    FiniteQuotient q;
    for (long m : moduli)
        if (m < 1) throw InvalidArgument("moduli must be positive");
    q.moduli_ = moduli;
    q.projection_ = IntMatrix::identity(moduli.size());
    return q;
}

FiniteQuotient FiniteQuotient::from_relations(const IntMatrix& relations) {
    // U R V = D; x -> x V sends the relation lattice onto sum d_i Z e_i.
    SmithForm sf = smith_normal_form(relations);
    const std::size_t v = relations.cols;
    if (sf.rank < v) throw InvalidArgument("relation lattice has infinite index");
    FiniteQuotient q;
    IntMatrix Vt = sf.V.transpose();
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < v; ++i)
        if (sf.diagonal[i] != 1) keep.push_back(i);
    q.projection_ = IntMatrix(keep.size(), v);
    for (std::size_t t = 0; t < keep.size(); ++t) {
        q.moduli_.push_back(to_long(sf.diagonal[keep[t]]));
        for (std::size_t j = 0; j < v; ++j) q.projection_.at(t, j) = Vt.at(keep[t], j);
    }
    return q;
}

FiniteQuotient FiniteQuotient::for_relation_ring(const std::vector<long>& moduli) {
    const std::size_t r = moduli.size();
    if (r < 2) throw InvalidArgument("relation ring needs r >= 2");
    IntMatrix rel(r, r - 1);
    for (std::size_t i = 0; i + 1 < r; ++i) rel.at(i, i) = moduli[i];
    // t_r = (t_1 ... t_{r-1})^-1, so t_r^{m_r} = 1 reads m_r (1, ..., 1) = 0.
    for (std::size_t j = 0; j + 1 < r; ++j) rel.at(r - 1, j) = moduli[r - 1];
    return from_relations(rel);
}

long FiniteQuotient::order() const {
    long o = 1;
    for (long m : moduli_) o *= m;
    return o;
}

std::size_t FiniteQuotient::element_index(const Exponent& e) const {
    if (e.size() != projection_.cols) throw DimensionMismatch("exponent length differs from quotient source");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
        long s = 0;
        for (std::size_t j = 0; j < e.size(); ++j) s += projection_.at(i, j).get_si() * e[j];
        long m = moduli_[i];
        s = ((s % m) + m) % m;
        idx = idx * m + s;
    }
    return idx;
}

std::size_t FiniteQuotient::add(std::size_t g, std::size_t h) const {
    std::size_t out = 0, mul = 1;
    for (std::size_t i = moduli_.size(); i-- > 0;) {
        std::size_t m = moduli_[i];
        std::size_t a = g % m, b = h % m;
        g /= m;
        h /= m;
        out += ((a + b) % m) * mul;
        mul *= m;
    }
    return out;
}

std::vector<Character> FiniteQuotient::characters() const {
    std::vector<Character> out;
    const std::size_t v = projection_.cols;
    std::vector<long> idx(moduli_.size(), 0);
    const long total = order();
    for (long n = 0; n < total; ++n) {
        long rem = n;
        for (std::size_t i = moduli_.size(); i-- > 0;) {
            idx[i] = rem % moduli_[i];
            rem /= moduli_[i];
        }
        RationalVector k(v, Rational(0));
        for (std::size_t j = 0; j < v; ++j)
            for (std::size_t i = 0; i < moduli_.size(); ++i)
                if (idx[i]) {
                    Rational term(projection_.at(i, j) * idx[i], moduli_[i]);
                    term.canonicalize();
                    k[j] += term;
                }
        out.push_back(Character::from_log(k));
    }
    return out;
}

std::vector<std::pair<Character, std::size_t>> cover_homology_eigenspaces(const ChainComplex& c,
                                                                          const FiniteQuotient& q,
                                                                          std::size_t degree) {
    if (q.source_dim() != c.nvars())
        throw DimensionMismatch("quotient of Z^" + std::to_string(q.source_dim()) + " but complex has " +
                                std::to_string(c.nvars()) + " variables");
    HomologyEvaluator ev(c);
    std::vector<std::pair<Character, std::size_t>> out;
    for (auto& chi : q.characters()) {
        std::size_t d = ev.dim(chi, degree);
        out.emplace_back(std::move(chi), d);
    }
    return out;
}

IntegerComplex lifted_cover_complex(const ChainComplex& c, const FiniteQuotient& q) {
    if (q.source_dim() != c.nvars()) throw DimensionMismatch("quotient source differs from complex variables");
    const std::size_t G = static_cast<std::size_t>(q.order());
    IntegerComplex out;
    for (auto r : c.ranks()) out.ranks.push_back(r * G);
    for (const auto& d : c.differentials()) {
        std::vector<RationalVector> rows(d.rows * G, RationalVector(d.cols * G, Rational(0)));
        for (std::size_t i = 0; i < d.rows; ++i)
            for (std::size_t j = 0; j < d.cols; ++j)
                for (const auto& [e, coef] : d.at(i, j).terms()) {
                    std::size_t shift = q.element_index(e);
                    // boundary of g.e_j contains coef * (g + shift).e_i
                    for (std::size_t g = 0; g < G; ++g) rows[i * G + q.add(g, shift)][j * G + g] += coef;
                }
        out.differentials.push_back(clear_denominators(rows, d.cols * G));
    }
    return out;
}

std::vector<std::size_t> betti_numbers(const IntegerComplex& c) {
    const std::size_t top = c.ranks.size() - 1;
    std::vector<std::size_t> rk(top + 2, 0);
    for (std::size_t k = 1; k <= top; ++k) rk[k] = rank_multimodular(c.differentials[k - 1]);
    std::vector<std::size_t> b(top + 1);
    for (std::size_t k = 0; k <= top; ++k) b[k] = c.ranks[k] - rk[k] - rk[k + 1];
    return b;
}

long BranchDatum::a_infinity() const {
    long s = 0;
    for (long x : a) s += x;
    return ((-s % m) + m) % m;
}

bool BranchDatum::connected() const {
    long g = m;
    for (long x : a) g = std::gcd(g, ((x % m) + m) % m);
    return g == 1;
}

namespace {

void check_branch(const BranchDatum& b) {
    if (b.m < 2) throw InvalidArgument("deck order must be at least 2");
    if (!b.connected()) throw InvalidArgument("disconnected cover: gcd(m, a_1, ..., a_r) > 1");
}

std::vector<long> branch_exponents(const BranchDatum& b) {
    std::vector<long> pts;
    for (long x : b.a) pts.push_back(((x % b.m) + b.m) % b.m);
    pts.push_back(b.a_infinity());
    return pts;
}

}  // namespace

std::vector<long> chevalley_weil_dims(const BranchDatum& b) {
    check_branch(b);
    const auto pts = branch_exponents(b);
    std::vector<long> dims(b.m, 0);
    for (long k = 1; k < b.m; ++k) {
        // sum over points of <k a_i / m>, an integer since the exponents sum to 0 mod m.
        long numer = 0;
        for (long x : pts) numer += (k * x) % b.m;
        dims[k] = -1 + numer / b.m;
    }
    return dims;
}

long riemann_hurwitz_genus(const BranchDatum& b) {
    check_branch(b);
    long two_g_minus_2 = -2 * b.m;
    for (long x : branch_exponents(b))
        if (x != 0) two_g_minus_2 += b.m - std::gcd(b.m, x);
    if (two_g_minus_2 % 2) throw Error("odd ramification total");
    return two_g_minus_2 / 2 + 1;
}

QuasiadjunctionReport quasiadjunction_consistency(std::size_t r, long m, const std::vector<QFace>& faces) {
    if (m < 2) throw InvalidArgument("m must be at least 2");
    QuasiadjunctionReport rep;
    rep.r = r;
    rep.m = m;
    BranchDatum b{m, std::vector<long>(r, 1)};
    auto cw = chevalley_weil_dims(b);
    for (long k = 1; k < m; ++k) {
        QuasiadjunctionRow row;
        row.k = k;
        row.chi = Character(RationalVector(r, Rational(k, m)));
        for (const auto& f : faces)
            if (polytope_membership(f.parent, row.chi.kappas()) && f.geometry.span.contains(row.chi.kappas())) {
                row.face_level = to_long(floor_of(f.c));
                break;
            }
        row.cw_index = (m - k) % m;
        row.cw_raw = cw[row.cw_index];
        row.kills_exceptional = (static_cast<long>(r) * k) % m == 0;
        row.cw_gated = row.kills_exceptional ? row.cw_raw : 0;
        row.agrees = (row.cw_gated > 0) == row.face_level.has_value();
        bool raw_agrees = (row.cw_raw > 0) == row.face_level.has_value();
        (row.agrees ? rep.agreements : rep.disagreements)++;
        if (!raw_agrees) ++rep.raw_disagreements;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

}  // namespace innc
