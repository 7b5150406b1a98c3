#pragma once

#include "innc/character.hpp"
#include "innc/integer_matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace innc {

struct DivisorComponent {
    std::string name;
    long degree = 0;
};

struct DivisorHypotheses {
    bool simply_connected = false;
    bool ample = false;
    bool normal_crossings_outside_isolated = false;
};

/// Intersection data of a divisor D = D_1 + ... + D_N in X.
struct DivisorData {
    std::vector<DivisorComponent> components;
    /// Rows: basis of H_2(X); columns: components; entry (a, D_i).
    IntMatrix pairing;
    /// boundary.at(i, j) = a_{i,j}: the loop around D_j is sum_i a_{i,j} l_i.
    std::optional<IntMatrix> boundary;
    DivisorHypotheses hypotheses;

    std::size_t component_count() const { return components.size(); }
    /// Pairing [d_1, ..., d_N] of a divisor in projective space.
    static DivisorData projective(const std::vector<long>& degrees);
};

/// Z^free_rank + sum Z/torsion_i, torsion_i > 1 with torsion_i | torsion_{i+1}.
struct AbelianGroup {
    std::size_t free_rank = 0;
    IntVector torsion;

    std::string to_string() const;
    friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
        return a.free_rank == b.free_rank && a.torsion == b.torsion;
    }
};

/// coker of an integer matrix viewed as a map Z^cols -> Z^rows.
AbelianGroup cokernel(const IntMatrix& M);

/// H_1(X - D) = coker(h : H_2(X) -> Z^N), h(a) = sum (a, D_i) D_i.
AbelianGroup abelianized_pi1(const DivisorData& d);

/// For every component j, sum_i a_{i,j} kappa_i is not an integer.
bool is_essential(const Character& chi, const DivisorData& d);
bool is_essential(const Character& chi, const IntMatrix& boundary);

}  // namespace innc
