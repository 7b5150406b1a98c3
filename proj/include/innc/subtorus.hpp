#pragma once

#include "innc/character.hpp"
#include "innc/integer_matrix.hpp"

#include <optional>
#include <string>

namespace innc {

/// {kappa in (R/Z)^r : A kappa = b (mod Z)}, a coset of a closed subgroup of the character torus.
class TranslatedSubtorus {
public:
    TranslatedSubtorus() = default;
    TranslatedSubtorus(IntMatrix equations, RationalVector offset);

    /// The whole torus (no equations).
    static TranslatedSubtorus full(std::size_t r);
    /// The single point kappa0.
    static TranslatedSubtorus point(const RationalVector& kappa0);

    std::size_t ambient_dim() const { return A_.cols; }
    const IntMatrix& equations() const { return A_; }
    const RationalVector& offset() const { return b_; }

    /// Hermite-reduced equations without zero rows and offset reduced into [0,1).
    /// An inconsistent system canonicalizes to the empty marker.
    TranslatedSubtorus canonical() const;
    bool is_empty() const;
    /// r - rank(A); -1 for the empty set.
    long dimension() const;
    bool contains(const Character& chi) const;
    bool contains(const RationalVector& kappa) const;
    /// Some point of the set (reduced mod 1), if nonempty.
    std::optional<RationalVector> some_point() const;

    friend bool operator==(const TranslatedSubtorus& a, const TranslatedSubtorus& b);
    friend bool operator!=(const TranslatedSubtorus& a, const TranslatedSubtorus& b) { return !(a == b); }

    /// e.g. "{k1 + k2 + k3 = 0 mod 1}".
    std::string to_string() const;

private:
    IntMatrix A_;
    RationalVector b_;
    bool empty_ = false;
};

/// Some kappa with A kappa = b (mod Z), reduced into [0,1)^cols, or nothing if inconsistent.
std::optional<RationalVector> solve_congruence(const IntMatrix& A, const RationalVector& b);

/// {kappa : A L kappa = b}: preimage of s under kappa -> L kappa, the literal composition A' = A L, b' = b.
TranslatedSubtorus preimage_subtorus(const IntMatrix& L, const TranslatedSubtorus& s);

/// Image of s (in Char Z^target) under the character pullback chi -> chi o L for the homology
/// map L : Z^source -> Z^target (a target x source matrix). In logarithms kappa -> L^T kappa.
TranslatedSubtorus pullback_subtorus(const IntMatrix& L, const TranslatedSubtorus& s);

}  // namespace innc
