#include "innc/modpres.hpp"

#include "innc/error.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <unordered_map>

namespace innc {

ModulePresentation ModulePresentation::cokernel_of(const PolyMatrix& d, CharacterMap map) {
    ModulePresentation p;
    p.nvars = d.nvars;
    p.map = std::move(map);
    p.phi = d.transpose();
    return p;
}

namespace {

ModulePresentation unit_presentation(std::size_t nvars, CharacterMap map) {
    ModulePresentation p;
    p.nvars = nvars;
    p.map = std::move(map);
    p.phi = PolyMatrix(1, 1, nvars);
    p.phi.at(0, 0) = LaurentPoly::constant(nvars, 1);
    return p;
}

// Full (untruncated) Koszul complex of the generic cone, same ring data.
ChainComplex full_koszul(std::size_t r) {
    return generic_arrangement_cone_complex(r, r - 1);
}

__int128 binom(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    __int128 b = 1;
    for (std::size_t i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

}  // namespace

ModulePresentation generic_cone_pi_n_presentation(std::size_t r, std::size_t n) {
    auto c = full_koszul(r);
    if (n < 1 || n > r - 1) throw InvalidArgument("n must satisfy 1 <= n <= r-1");
    const std::size_t v = r - 1;
    if (n + 1 > v) return unit_presentation(v, c.character_map());
    if (n + 2 > v) {
        ModulePresentation p;
        p.nvars = v;
        p.map = c.character_map();
        p.phi = PolyMatrix(0, c.ranks()[n + 1], v);
        return p;
    }
    return ModulePresentation::cokernel_of(c.d(n + 2), c.character_map());
}

ModulePresentation generic_cone_displayed_presentation(std::size_t r, std::size_t n) {
    auto c = full_koszul(r);
    if (n < 1 || n > r - 1) throw InvalidArgument("n must satisfy 1 <= n <= r-1");
    const std::size_t v = r - 1;
    if (n + 1 > v) {
        ModulePresentation p;
        p.nvars = v;
        p.map = c.character_map();
        p.phi = PolyMatrix(0, c.ranks()[n], v);
        return p;
    }
    return ModulePresentation::cokernel_of(c.d(n + 1), c.character_map());
}

ModulePresentation lift_relation(const ModulePresentation& p) {
    const std::size_t N = p.map.ambient_dim;
    ModulePresentation out;
    out.nvars = N;
    out.map = CharacterMap::identity(N);
    const std::size_t n = p.generators();
    const std::size_t extra = p.map.relations.size() * n;
    out.phi = PolyMatrix(p.relations() + extra, n, N);
    for (std::size_t i = 0; i < p.relations(); ++i)
        for (std::size_t j = 0; j < n; ++j)
            out.phi.at(i, j) = p.phi.at(i, j).substitute_monomials(p.map.variable_images, N);
    std::size_t row = p.relations();
    for (const auto& rel : p.map.relations)
        for (std::size_t j = 0; j < n; ++j) out.phi.at(row++, j) = LaurentPoly::binomial(rel);
    return out;
}

std::vector<LaurentPoly> fitting_ideal_generators(const ModulePresentation& p, std::size_t k, std::size_t size_cap) {
    const std::size_t m = p.relations(), n = p.generators();
    if (k > n) return {LaurentPoly::constant(p.nvars, 1)};
    const std::size_t s = n - k + 1;
    if (s > std::min(m, n)) return {};
    if (n > 63) throw SizeCapExceeded("too many generators for minor expansion");
    __int128 count = binom(m, s) * binom(n, s);
    if (count > static_cast<__int128>(size_cap))
        throw SizeCapExceeded("Fitting ideal needs C(" + std::to_string(m) + "," + std::to_string(s) + ")*C(" +
                              std::to_string(n) + "," + std::to_string(s) + ") minors, above the cap " +
                              std::to_string(size_cap));
    std::set<std::string> seen;
    std::vector<LaurentPoly> out;
    for (const auto& rows : lex_subsets(m, s)) {
        // Laplace expansion along successive rows, memoized on column subsets.
        std::unordered_map<std::uint64_t, LaurentPoly> level{{0, LaurentPoly::constant(p.nvars, 1)}};
        for (std::size_t j = 0; j < s; ++j) {
            std::unordered_map<std::uint64_t, LaurentPoly> next;
            for (const auto& [mask, det] : level) {
                if (det.is_zero()) continue;
                for (std::size_t c = 0; c < n; ++c) {
                    if (mask >> c & 1) continue;
                    const LaurentPoly& a = p.phi.at(rows[j], c);
                    if (a.is_zero()) continue;
                    std::uint64_t nm = mask | (std::uint64_t{1} << c);
                    // Position of c among the sorted columns of nm.
                    std::size_t q = std::popcount(mask & ((std::uint64_t{1} << c) - 1));
                    LaurentPoly term = a * det;
                    if ((j + q) % 2) term = -term;
                    auto it = next.find(nm);
                    if (it == next.end()) next.emplace(nm, std::move(term));
                    else it->second += term;
                }
            }
            level = std::move(next);
        }
        for (auto& [mask, det] : level) {
            if (det.is_zero()) continue;
            if (seen.insert(det.to_string()).second) out.push_back(std::move(det));
        }
    }
    std::sort(out.begin(), out.end(), [](const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms() < b.terms();
    });
    return out;
}

namespace {

Character read_character(const CharacterMap& map, std::size_t nvars, const Character& chi) {
    if (chi.size() == map.ambient_dim) {
        for (const auto& rel : map.relations)
            if (!is_integer(chi.pair(rel)))
                throw RelationViolation("character " + chi.to_string() + " violates the ring relation");
        RationalVector k(nvars);
        for (std::size_t j = 0; j < nvars; ++j) k[j] = frac(chi.pair(map.variable_images[j]));
        return Character(std::move(k));
    }
    if (chi.size() == nvars) return chi;
    throw DimensionMismatch("character dimension does not match the presentation");
}

}  // namespace

bool fitting_zero_set_contains(const ModulePresentation& p, const std::vector<LaurentPoly>& generators,
                               const Character& chi) {
    Character local = read_character(p.map, p.nvars, chi);
    for (const auto& g : generators)
        if (!laurent_eval(g, local).is_zero()) return false;
    return true;
}

std::size_t presentation_rank_at(const ModulePresentation& p, const Character& chi) {
    Character local = read_character(p.map, p.nvars, chi);
    const long m = local.order();
    FieldMatrix f(m, p.phi.rows, p.phi.cols);
    for (std::size_t idx = 0; idx < p.phi.entries.size(); ++idx)
        if (!p.phi.entries[idx].is_zero()) f.entries[idx] = laurent_eval(p.phi.entries[idx], local, m);
    return p.generators() - rank_multimodular(f);
}

bool charvar_membership(const ChainComplex& c, const Character& chi, std::size_t k, std::size_t degree) {
    if (chi.is_identity())
        throw IdentityCharacter("the identity character is excluded from characteristic-variety membership");
    Character local = c.restrict_character(chi);
    if (k == 0) return true;
    if (degree > c.top_degree()) return false;
    return homology_at(c, local)[degree] >= k;
}

PresentationConsistency presentation_consistency(std::size_t r, std::size_t n, long order_bound) {
    PresentationConsistency rep;
    rep.r = r;
    rep.n = n;
    auto c = generic_arrangement_cone_complex(r, n);
    auto pi = generic_cone_pi_n_presentation(r, n);
    auto shown = generic_cone_displayed_presentation(r, n);
    HomologyEvaluator ev(c);
    for (const auto& chi : characters_of_order_at_most(r, order_bound)) {
        if (chi.is_identity() || !is_integer(chi.sum())) continue;
        PresentationConsistencyRow row{chi, ev.dim(chi, n), presentation_rank_at(pi, chi),
                                       presentation_rank_at(shown, chi)};
        if (row.pi_n_rank != row.kernel_dim) ++rep.pi_n_disagreements;
        if (row.displayed_rank != row.kernel_dim) ++rep.displayed_disagreements;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

std::string to_string(CandidateStatus s) {
    return s == CandidateStatus::VerifiedOnGrid ? "verified-on-grid" : "refuted";
}

namespace {

std::vector<Character> strided(const std::vector<Character>& v, std::size_t count) {
    if (count >= v.size()) return v;
    std::vector<Character> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(v[i * v.size() / count]);
    return out;
}

}  // namespace

CharVarReport verify_subtorus(const ChainComplex& c, const TranslatedSubtorus& s, std::size_t k, std::size_t degree,
                              long order_bound, std::size_t sample_cap) {
    if (order_bound < 2) throw InvalidArgument("order bound must be at least 2");
    const auto& map = c.character_map();
    if (s.ambient_dim() != map.ambient_dim)
        throw DimensionMismatch("subtorus lives in dimension " + std::to_string(s.ambient_dim()) +
                                ", complex characters in " + std::to_string(map.ambient_dim));
    std::vector<Character> on, off;
    for (auto& chi : characters_of_order_dividing(map.ambient_dim, order_bound)) {
        if (chi.is_identity()) continue;
        bool valid = true;
        for (const auto& rel : map.relations)
            if (!is_integer(chi.pair(rel))) valid = false;
        if (!valid) continue;
        (s.contains(chi) ? on : off).push_back(std::move(chi));
    }
    if (on.empty())
        throw InvalidArgument("no character of order dividing " + std::to_string(order_bound) +
                              " lies on the candidate subtorus");
    auto on_sample = strided(on, sample_cap);
    auto off_sample = strided(off, on_sample.size());

    CharVarReport rep;
    rep.depth = k;
    rep.degree = degree;
    rep.order_bound = order_bound;
    HomologyEvaluator ev(c);
    CandidateResult cand{s.canonical(), CandidateStatus::VerifiedOnGrid, std::nullopt};
    auto member = [&](const Character& chi) { return k == 0 || (degree <= c.top_degree() && ev.dim(chi, degree) >= k); };
    for (const auto& chi : on_sample) {
        bool m = member(chi);
        (m ? rep.members : rep.non_members).push_back(chi);
        if (!m && !cand.witness) {
            cand.status = CandidateStatus::Refuted;
            cand.witness = chi;
        }
    }
    for (const auto& chi : off_sample) {
        bool m = member(chi);
        (m ? rep.members : rep.non_members).push_back(chi);
        if (m && !cand.witness) {
            cand.status = CandidateStatus::Refuted;
            cand.witness = chi;
        }
    }
    rep.candidates.push_back(std::move(cand));
    return rep;
}

}  // namespace innc
