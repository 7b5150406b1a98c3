#include "innc/complex.hpp"

#include "innc/error.hpp"
#include "innc/integer_matrix.hpp"

#include <map>
#include <numeric>

namespace innc {

CharacterMap CharacterMap::identity(std::size_t n) {
    CharacterMap m;
    m.ambient_dim = n;
    for (std::size_t j = 0; j < n; ++j) {
        Exponent e(n, 0);
        e[j] = 1;
        m.variable_images.push_back(std::move(e));
    }
    return m;
}

bool CharacterMap::is_identity() const {
    if (!relations.empty() || variable_images.size() != ambient_dim) return false;
    for (std::size_t j = 0; j < variable_images.size(); ++j)
        for (std::size_t i = 0; i < ambient_dim; ++i)
            if (variable_images[j][i] != (i == j ? 1 : 0)) return false;
    return true;
}

ChainComplex::ChainComplex(std::size_t nvars, std::vector<std::size_t> ranks, std::vector<PolyMatrix> differentials,
                           CharacterMap map)
    : nvars_(nvars), ranks_(std::move(ranks)), differentials_(std::move(differentials)), map_(std::move(map)) {
    if (ranks_.empty()) throw InvalidArgument("complex needs at least one degree");
    if (differentials_.size() + 1 != ranks_.size()) throw DimensionMismatch("one differential per positive degree");
    for (std::size_t k = 1; k < ranks_.size(); ++k) {
        const auto& d = differentials_[k - 1];
        if (d.rows != ranks_[k - 1] || d.cols != ranks_[k] || d.nvars != nvars_)
            throw DimensionMismatch("differential d_" + std::to_string(k) + " has the wrong shape");
    }
    if (map_.variable_images.size() != nvars_) throw DimensionMismatch("character map needs one image per variable");
    for (const auto& e : map_.variable_images)
        if (e.size() != map_.ambient_dim) throw DimensionMismatch("character map image length");
    for (const auto& e : map_.relations)
        if (e.size() != map_.ambient_dim) throw DimensionMismatch("relation length");
}

bool ChainComplex::verify_dd_zero() const {
    for (std::size_t k = 2; k < ranks_.size(); ++k)
        if (!(d(k - 1) * d(k)).is_zero()) return false;
    return true;
}

Character ChainComplex::restrict_character(const Character& chi) const {
    if (chi.size() == map_.ambient_dim) {
        for (const auto& rel : map_.relations)
            if (!is_integer(chi.pair(rel)))
                throw RelationViolation("character " + chi.to_string() + " violates the ring relation (" +
                                        map_.description + ")");
        if (map_.is_identity()) return chi;
        RationalVector k(nvars_);
        for (std::size_t j = 0; j < nvars_; ++j) k[j] = frac(chi.pair(map_.variable_images[j]));
        return Character(std::move(k));
    }
    if (chi.size() == nvars_) return chi;
    throw DimensionMismatch("character has " + std::to_string(chi.size()) + " entries; complex expects " +
                            std::to_string(map_.ambient_dim) + " or " + std::to_string(nvars_));
}

std::vector<std::vector<std::size_t>> lex_subsets(std::size_t s, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > s) return out;
    std::vector<std::size_t> cur(k);
    std::iota(cur.begin(), cur.end(), 0);
    while (true) {
        out.push_back(cur);
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == s - k + i - 1) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

ChainComplex koszul_subcomplex(std::size_t r, const std::vector<LaurentPoly>& params,
                               const std::vector<bool>& truncated, std::size_t truncated_limit, CharacterMap map) {
    const std::size_t s = params.size();
    if (s == 0) throw InvalidArgument("Koszul complex needs at least one parameter");
    if (truncated.size() != s) throw DimensionMismatch("truncation flags must match parameters");
    for (const auto& p : params)
        if (p.nvars() != r) throw DimensionMismatch("Koszul parameter over the wrong variable count");

    std::vector<std::vector<std::vector<std::size_t>>> cells;
    for (std::size_t k = 0; k <= s; ++k) {
        std::vector<std::vector<std::size_t>> keep;
        for (auto& S : lex_subsets(s, k)) {
            std::size_t t = 0;
            for (auto i : S) t += truncated[i] ? 1 : 0;
            if (t <= truncated_limit) keep.push_back(std::move(S));
        }
        if (keep.empty()) break;
        cells.push_back(std::move(keep));
    }
    std::vector<std::size_t> ranks;
    for (const auto& c : cells) ranks.push_back(c.size());
    std::vector<PolyMatrix> diffs;
    for (std::size_t k = 1; k < cells.size(); ++k) {
        std::map<std::vector<std::size_t>, std::size_t> index;
        for (std::size_t i = 0; i < cells[k - 1].size(); ++i) index[cells[k - 1][i]] = i;
        PolyMatrix d(cells[k - 1].size(), cells[k].size(), r);
        for (std::size_t j = 0; j < cells[k].size(); ++j) {
            const auto& S = cells[k][j];
            for (std::size_t p = 0; p < S.size(); ++p) {
                std::vector<std::size_t> face;
                for (std::size_t q = 0; q < S.size(); ++q)
                    if (q != p) face.push_back(S[q]);
                LaurentPoly term = params[S[p]];
                if (p % 2) term = -term;
                d.at(index.at(face), j) += term;
            }
        }
        diffs.push_back(std::move(d));
    }
    return ChainComplex(r, std::move(ranks), std::move(diffs), std::move(map));
}

ChainComplex koszul_complex(std::size_t r, const std::vector<LaurentPoly>& params, std::size_t top_degree) {
    if (params.empty()) throw InvalidArgument("Koszul complex needs at least one parameter");
    if (top_degree > params.size())
        throw InvalidArgument("top degree " + std::to_string(top_degree) + " exceeds the parameter count");
    return koszul_subcomplex(r, params, std::vector<bool>(params.size(), true), top_degree, CharacterMap::identity(r));
}

ChainComplex generic_arrangement_cone_complex(std::size_t r, std::size_t n) {
    if (r < 2) throw InvalidArgument("generic arrangement cone needs r >= 2");
    if (n < 1 || n > r - 1) throw InvalidArgument("n must satisfy 1 <= n <= r-1");
    const std::size_t v = r - 1;
    std::vector<LaurentPoly> params;
    for (std::size_t i = 0; i < v; ++i) params.push_back(LaurentPoly::variable(v, i) - LaurentPoly::constant(v, 1));
    CharacterMap map;
    map.ambient_dim = r;
    for (std::size_t j = 0; j < v; ++j) {
        Exponent e(r, 0);
        e[j] = 1;
        map.variable_images.push_back(std::move(e));
    }
    map.relations.push_back(Exponent(r, 1));
    map.description = "t" + std::to_string(r) + " = (";
    for (std::size_t j = 0; j < v; ++j) map.description += (j ? "*t" : "t") + std::to_string(j + 1);
    map.description += ")^-1";
    return koszul_subcomplex(v, params, std::vector<bool>(v, true), n, std::move(map));
}

std::vector<Exponent> unimodular_completion(const std::vector<long>& v) {
    const std::size_t r = v.size();
    if (r == 0) throw InvalidArgument("empty vector");
    for (std::size_t j = 0; j < r; ++j)
        if (v[j] == 1 || v[j] == -1) {
            std::vector<Exponent> rows{Exponent(v.begin(), v.end())};
            for (std::size_t i = 0; i < r; ++i)
                if (i != j) {
                    Exponent e(r, 0);
                    e[i] = 1;
                    rows.push_back(std::move(e));
                }
            return rows;
        }
    IntMatrix col(r, 1);
    for (std::size_t i = 0; i < r; ++i) col.at(i, 0) = v[i];
    IntMatrix U;
    IntMatrix H = hermite_normal_form(col, &U);
    if (H.at(0, 0) != 1) throw InvalidArgument("vector is not primitive (gcd != 1)");
    // U v = e_1, so the first column of U^-1 is v; HNF of a unimodular U is I.
    IntMatrix Uinv;
    hermite_normal_form(U, &Uinv);
    IntMatrix B = Uinv.transpose();
    std::vector<Exponent> rows(r, Exponent(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) rows[i][j] = to_long(B.at(i, j));
    return rows;
}

ChainComplex cone_complement_complex(const std::vector<long>& degrees, std::size_t n) {
    const std::size_t r = degrees.size();
    if (r < 2) throw InvalidArgument("cone complement needs at least two components");
    if (n < 1 || n > r - 1) throw InvalidArgument("n must satisfy 1 <= n <= r-1");
    auto basis = unimodular_completion(degrees);
    std::vector<LaurentPoly> params;
    std::vector<bool> truncated;
    for (std::size_t i = 0; i < r; ++i) {
        params.push_back(LaurentPoly::binomial(basis[i]));
        truncated.push_back(i != 0);
    }
    return koszul_subcomplex(r, params, truncated, n, CharacterMap::identity(r));
}

SpecializedComplex specialize(const ChainComplex& c, const Character& chi) {
    Character local = c.restrict_character(chi);
    SpecializedComplex s;
    s.conductor = local.order();
    s.ranks = c.ranks();
    for (const auto& d : c.differentials()) {
        FieldMatrix f(s.conductor, d.rows, d.cols);
        for (std::size_t idx = 0; idx < d.entries.size(); ++idx)
            if (!d.entries[idx].is_zero()) f.entries[idx] = laurent_eval(d.entries[idx], local, s.conductor);
        s.differentials.push_back(std::move(f));
    }
    return s;
}

std::vector<std::size_t> homology_dims(const SpecializedComplex& s, RankMethod method) {
    const std::size_t top = s.ranks.size() - 1;
    std::vector<std::size_t> rk(top + 2, 0);
    for (std::size_t k = 1; k <= top; ++k)
        rk[k] = method == RankMethod::Elimination ? rank_by_elimination(s.differentials[k - 1])
                                                   : rank_multimodular(s.differentials[k - 1]);
    std::vector<std::size_t> dims(top + 1);
    for (std::size_t k = 0; k <= top; ++k) dims[k] = s.ranks[k] - rk[k] - rk[k + 1];
    return dims;
}

std::vector<std::size_t> homology_at(const ChainComplex& c, const Character& chi, RankMethod method) {
    return homology_dims(specialize(c, chi), method);
}

HomologyEvaluator::HomologyEvaluator(const ChainComplex& c) : complex_(&c) {
    for (const auto& d : c.differentials()) {
        Compiled k;
        k.rows = d.rows;
        k.cols = d.cols;
        std::size_t bits = 1;
        for (std::size_t i = 0; i < d.rows; ++i) {
            Integer l = 1;
            for (std::size_t j = 0; j < d.cols; ++j)
                for (const auto& [e, q] : d.at(i, j).terms()) l = lcm_of(l, q.get_den());
            Integer b2 = 0;
            for (std::size_t j = 0; j < d.cols; ++j) {
                Integer s = 0;
                for (const auto& [e, q] : d.at(i, j).terms()) {
                    Rational v = q * l;
                    k.terms.push_back({i * d.cols + j, e, v.get_num()});
                    s += abs(v.get_num());
                }
                b2 += s * s;
            }
            if (b2 > 1) bits += (mpz_sizeinbase(b2.get_mpz_t(), 2) + 1) / 2;
        }
        k.hadamard_bits = bits;
        diffs_.push_back(std::move(k));
    }
}

std::size_t HomologyEvaluator::rank_of(const Compiled& d, const Character& local) const {
    if (d.rows == 0 || d.cols == 0 || d.terms.empty()) return 0;
    const long m = local.order();
    const std::size_t full = std::min(d.rows, d.cols);
    std::vector<long> steps(local.size());
    for (std::size_t i = 0; i < local.size(); ++i) {
        Rational s = local[i] * m;
        steps[i] = s.get_num().get_si();
    }
    std::vector<long> power(d.terms.size());
    for (std::size_t t = 0; t < d.terms.size(); ++t) {
        long j = 0;
        const auto& e = d.terms[t].exponent;
        for (std::size_t i = 0; i < e.size(); ++i) j = (j + (e[i] % m) * steps[i]) % m;
        power[t] = j < 0 ? j + m : j;
    }
    const std::size_t nprimes = modular::primes_needed(d.hadamard_bits, m);
    std::size_t best = 0;
    std::vector<std::uint64_t> a(d.rows * d.cols);
    std::vector<std::uint64_t> roots(m);
    for (std::size_t k = 0; k < nprimes && best < full; ++k) {
        const ModularPrime& mp = modular_prime(m, k);
        roots[0] = 1;
        for (long j = 1; j < m; ++j) roots[j] = modular::mulmod(roots[j - 1], mp.root, mp.p);
        std::fill(a.begin(), a.end(), 0);
        for (std::size_t t = 0; t < d.terms.size(); ++t) {
            std::uint64_t c = mpz_fdiv_ui(d.terms[t].coefficient.get_mpz_t(), mp.p);
            std::uint64_t& x = a[d.terms[t].entry];
            x = (x + modular::mulmod(c, roots[power[t]], mp.p)) % mp.p;
        }
        best = std::max(best, modular::rank_mod_p(a, d.rows, d.cols, mp.p));
    }
    return best;
}

std::vector<std::size_t> HomologyEvaluator::dims(const Character& chi) const {
    Character local = complex_->restrict_character(chi);
    const auto& ranks = complex_->ranks();
    const std::size_t top = ranks.size() - 1;
    std::vector<std::size_t> rk(top + 2, 0);
    for (std::size_t k = 1; k <= top; ++k) rk[k] = rank_of(diffs_[k - 1], local);
    std::vector<std::size_t> out(top + 1);
    for (std::size_t k = 0; k <= top; ++k) out[k] = ranks[k] - rk[k] - rk[k + 1];
    return out;
}

std::size_t HomologyEvaluator::dim(const Character& chi, std::size_t degree) const {
    Character local = complex_->restrict_character(chi);
    const auto& ranks = complex_->ranks();
    if (degree >= ranks.size()) return 0;
    std::size_t a = degree >= 1 ? rank_of(diffs_[degree - 1], local) : 0;
    std::size_t b = degree + 1 < ranks.size() ? rank_of(diffs_[degree], local) : 0;
    return ranks[degree] - a - b;
}

std::vector<std::size_t> betti_at_identity(const ChainComplex& c) {
    const std::size_t top = c.top_degree();
    std::vector<std::size_t> rk(top + 2, 0);
    for (std::size_t k = 1; k <= top; ++k) {
        const auto& d = c.d(k);
        std::vector<RationalVector> rows(d.rows, RationalVector(d.cols));
        for (std::size_t i = 0; i < d.rows; ++i)
            for (std::size_t j = 0; j < d.cols; ++j) rows[i][j] = d.at(i, j).coefficient_sum();
        rk[k] = integer_rank(clear_denominators(rows, d.cols));
    }
    std::vector<std::size_t> dims(top + 1);
    for (std::size_t k = 0; k <= top; ++k) dims[k] = c.ranks()[k] - rk[k] - rk[k + 1];
    return dims;
}

}  // namespace innc
