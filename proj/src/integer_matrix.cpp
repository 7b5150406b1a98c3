#include "innc/integer_matrix.hpp"

#include "innc/error.hpp"

#include <sstream>

namespace innc {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols_if_empty) {
    std::size_t c = rows.empty() ? cols_if_empty : rows[0].size();
    IntMatrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c) throw DimensionMismatch("ragged integer matrix");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntVector IntMatrix::row(std::size_t i) const {
    return IntVector(data.begin() + i * cols, data.begin() + (i + 1) * cols);
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols != b.rows) throw DimensionMismatch("integer matrix product shape mismatch");
    IntMatrix c(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            const Integer& x = a.at(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j) c.at(i, j) += x * b.at(k, j);
        }
    return c;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols; ++j) os << (j ? ", " : "") << at(i, j).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows; ++i) std::swap(m.at(i, a), m.at(i, b));
}

// row[dst] += q * row[src]
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < m.cols; ++j) m.at(dst, j) += q * m.at(src, j);
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < m.rows; ++i) m.at(i, dst) += q * m.at(i, src);
}

void negate_row(IntMatrix& m, std::size_t i) {
    for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = -m.at(i, j);
}

// Rows a, b replaced by unimodular combinations so that entry (a, col) becomes gcd and (b, col) zero.
void gcd_rows(IntMatrix& m, IntMatrix* u, std::size_t a, std::size_t b, std::size_t col) {
    Integer x = m.at(a, col), y = m.at(b, col);
    if (y == 0) return;
    Integer g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    Integer xa = x / g, yb = y / g;
    auto combine = [&](IntMatrix& mat) {
        for (std::size_t j = 0; j < mat.cols; ++j) {
            Integer ra = mat.at(a, j), rb = mat.at(b, j);
            mat.at(a, j) = s * ra + t * rb;
            mat.at(b, j) = -yb * ra + xa * rb;
        }
    };
    combine(m);
    if (u) combine(*u);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& A) {
    IntMatrix D = A;
    IntMatrix U = IntMatrix::identity(A.rows);
    IntMatrix V = IntMatrix::identity(A.cols);
    std::size_t n = std::min(A.rows, A.cols);
    std::size_t t = 0;
    for (; t < n; ++t) {
        while (true) {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            bool found = false;
            std::size_t pi = t, pj = t;
            for (std::size_t i = t; i < D.rows; ++i)
                for (std::size_t j = t; j < D.cols; ++j) {
                    if (D.at(i, j) == 0) continue;
                    if (!found || abs(D.at(i, j)) < abs(D.at(pi, pj))) {
                        found = true;
                        pi = i;
                        pj = j;
                    }
                }
            if (!found) goto done;
            swap_rows(D, t, pi);
            swap_rows(U, t, pi);
            swap_cols(D, t, pj);
            swap_cols(V, t, pj);
            bool clean = true;
            for (std::size_t i = t + 1; i < D.rows; ++i) {
                if (D.at(i, t) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), D.at(i, t).get_mpz_t(), D.at(t, t).get_mpz_t());
                add_row(D, i, t, -q);
                add_row(U, i, t, -q);
                if (D.at(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < D.cols; ++j) {
                if (D.at(t, j) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), D.at(t, j).get_mpz_t(), D.at(t, t).get_mpz_t());
                add_col(D, j, t, -q);
                add_col(V, j, t, -q);
                if (D.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            // Divisibility: fold an offending row into row t and retry.
            bool divides = true;
            for (std::size_t i = t + 1; i < D.rows && divides; ++i)
                for (std::size_t j = t + 1; j < D.cols; ++j) {
                    if (D.at(i, j) % D.at(t, t) != 0) {
                        add_row(D, t, i, 1);
                        add_row(U, t, i, 1);
                        divides = false;
                        break;
                    }
                }
            if (divides) break;
        }
        if (D.at(t, t) < 0) {
            negate_row(D, t);
            negate_row(U, t);
        }
    }
done:
    SmithForm sf;
    sf.diagonal.assign(n, Integer(0));
    for (std::size_t i = 0; i < n; ++i) sf.diagonal[i] = D.at(i, i);
    sf.rank = t;
    sf.U = std::move(U);
    sf.V = std::move(V);
    return sf;
}

IntMatrix hermite_normal_form(const IntMatrix& A, IntMatrix* transform) {
    IntMatrix H = A;
    IntMatrix U = IntMatrix::identity(A.rows);
    std::size_t pr = 0;
    for (std::size_t j = 0; j < H.cols && pr < H.rows; ++j) {
        std::size_t nz = H.rows;
        for (std::size_t i = pr; i < H.rows; ++i)
            if (H.at(i, j) != 0) {
                nz = i;
                break;
            }
        if (nz == H.rows) continue;
        swap_rows(H, pr, nz);
        swap_rows(U, pr, nz);
        for (std::size_t i = pr + 1; i < H.rows; ++i) gcd_rows(H, &U, pr, i, j);
        if (H.at(pr, j) < 0) {
            negate_row(H, pr);
            negate_row(U, pr);
        }
        for (std::size_t i = 0; i < pr; ++i) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), H.at(i, j).get_mpz_t(), H.at(pr, j).get_mpz_t());
            add_row(H, i, pr, -q);
            add_row(U, i, pr, -q);
        }
        ++pr;
    }
    if (transform) *transform = std::move(U);
    return H;
}

std::size_t integer_rank(const IntMatrix& A) {
    IntMatrix H = hermite_normal_form(A);
    std::size_t r = 0;
    for (std::size_t i = 0; i < H.rows; ++i) {
        bool nz = false;
        for (std::size_t j = 0; j < H.cols; ++j)
            if (H.at(i, j) != 0) {
                nz = true;
                break;
            }
        if (nz) ++r;
    }
    return r;
}

IntMatrix integer_kernel(const IntMatrix& A) {
    // U * A^T = H; rows of U facing zero rows of H span the kernel of A.
    IntMatrix U;
    IntMatrix H = hermite_normal_form(A.transpose(), &U);
    std::size_t r = 0;
    for (std::size_t i = 0; i < H.rows; ++i) {
        bool nz = false;
        for (std::size_t j = 0; j < H.cols; ++j)
            if (H.at(i, j) != 0) nz = true;
        if (nz) r = i + 1;
    }
    IntMatrix K(A.cols - r, A.cols);
    for (std::size_t i = r; i < A.cols; ++i)
        for (std::size_t j = 0; j < A.cols; ++j) K.at(i - r, j) = U.at(i, j);
    return hermite_normal_form(K);
}

IntMatrix clear_denominators(const std::vector<RationalVector>& rows, std::size_t cols) {
    IntMatrix M(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw DimensionMismatch("ragged rational matrix");
        Integer l = 1;
        for (const auto& q : rows[i]) l = lcm_of(l, q.get_den());
        for (std::size_t j = 0; j < cols; ++j) {
            Rational s = rows[i][j] * l;
            M.at(i, j) = s.get_num();
        }
    }
    return M;
}

Integer determinant(const IntMatrix& A) {
    if (A.rows != A.cols) throw DimensionMismatch("determinant of non-square matrix");
    std::size_t n = A.rows;
    if (n == 0) return 1;
    IntMatrix M = A;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M.at(k, k) == 0) {
            std::size_t s = k + 1;
            while (s < n && M.at(s, k) == 0) ++s;
            if (s == n) return 0;
            swap_rows(M, k, s);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = M.at(k, k) * M.at(i, j) - M.at(i, k) * M.at(k, j);
                mpz_divexact(M.at(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
        prev = M.at(k, k);
    }
    return sign * M.at(n - 1, n - 1);
}

}  // namespace innc
