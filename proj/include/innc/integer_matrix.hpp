#pragma once

#include "innc/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace innc {

/// Dense integer matrix, row major.
struct IntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Integer> data;

    IntMatrix() = default;
    IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, Integer(0)) {}
    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols_if_empty = 0);

    Integer& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const Integer& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
    IntVector row(std::size_t i) const;

    IntMatrix transpose() const;
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows == b.rows && a.cols == b.cols && a.data == b.data;
    }
    std::string to_string() const;
};

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ..., d_i >= 0.
struct SmithForm {
    IntMatrix U;
    IntMatrix V;
    IntVector diagonal;  // length min(rows, cols)
    std::size_t rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& A);

/// Row-style Hermite normal form: U * A = H, H in echelon form with positive pivots,
/// entries above each pivot reduced into [0, pivot), zero rows last.
IntMatrix hermite_normal_form(const IntMatrix& A, IntMatrix* transform = nullptr);

std::size_t integer_rank(const IntMatrix& A);

/// Rows form a Z-basis of {x in Z^cols : A x = 0} (a saturated lattice).
IntMatrix integer_kernel(const IntMatrix& A);

/// Scales every row of a rational matrix by the lcm of its denominators.
IntMatrix clear_denominators(const std::vector<RationalVector>& rows, std::size_t cols);

/// Determinant of a square integer matrix (Bareiss).
Integer determinant(const IntMatrix& A);

}  // namespace innc
