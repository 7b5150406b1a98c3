#include "innc/homology.hpp"

#include "innc/error.hpp"

namespace innc {

DivisorData DivisorData::projective(const std::vector<long>& degrees) {
    DivisorData d;
    d.pairing = IntMatrix(1, degrees.size());
    for (std::size_t j = 0; j < degrees.size(); ++j) {
        d.components.push_back({"D" + std::to_string(j + 1), degrees[j]});
        d.pairing.at(0, j) = degrees[j];
    }
    d.hypotheses.simply_connected = true;
    return d;
}

std::string AbelianGroup::to_string() const {
    std::string s;
    if (free_rank > 0) s = free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
    for (const auto& t : torsion) {
        if (!s.empty()) s += " + ";
        s += "Z/" + t.get_str();
    }
    return s.empty() ? "0" : s;
}

AbelianGroup cokernel(const IntMatrix& M) {
    // M : Z^cols -> Z^rows; its cokernel is Z^rows / image.
    SmithForm sf = smith_normal_form(M);
    AbelianGroup g;
    g.free_rank = M.rows - sf.rank;
    for (std::size_t i = 0; i < sf.rank; ++i)
        if (sf.diagonal[i] != 1) g.torsion.push_back(sf.diagonal[i]);
    return g;
}

AbelianGroup abelianized_pi1(const DivisorData& d) {
    if (d.pairing.cols != d.component_count())
        throw DimensionMismatch("pairing matrix needs one column per component");
    // h : H_2 -> Z^N sends basis element a (a row) to its row of pairings.
    return cokernel(d.pairing.transpose());
}

bool is_essential(const Character& chi, const IntMatrix& boundary) {
    if (chi.size() != boundary.rows)
        throw DimensionMismatch("character has " + std::to_string(chi.size()) + " entries, boundary matrix " +
                                std::to_string(boundary.rows) + " rows");
    for (std::size_t j = 0; j < boundary.cols; ++j) {
        Rational s = 0;
        for (std::size_t i = 0; i < boundary.rows; ++i) s += chi[i] * Rational(boundary.at(i, j));
        if (is_integer(s)) return false;
    }
    return true;
}

bool is_essential(const Character& chi, const DivisorData& d) {
    if (!d.boundary) throw MissingData("divisor data has no boundary matrix");
    return is_essential(chi, *d.boundary);
}

}  // namespace innc
