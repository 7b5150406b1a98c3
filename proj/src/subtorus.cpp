#include "innc/subtorus.hpp"

#include "innc/error.hpp"

#include <sstream>

namespace innc {

TranslatedSubtorus::TranslatedSubtorus(IntMatrix equations, RationalVector offset)
    : A_(std::move(equations)), b_(std::move(offset)) {
    if (A_.rows != b_.size()) throw DimensionMismatch("one offset entry per equation");
}

TranslatedSubtorus TranslatedSubtorus::full(std::size_t r) { return TranslatedSubtorus(IntMatrix(0, r), {}); }

TranslatedSubtorus TranslatedSubtorus::point(const RationalVector& kappa0) {
    return TranslatedSubtorus(IntMatrix::identity(kappa0.size()), kappa0);
}

namespace {

RationalVector mat_vec(const IntMatrix& M, const RationalVector& v) {
    RationalVector out(M.rows, Rational(0));
    for (std::size_t i = 0; i < M.rows; ++i)
        for (std::size_t j = 0; j < M.cols; ++j)
            if (M.at(i, j) != 0) out[i] += Rational(M.at(i, j)) * v[j];
    return out;
}

bool zero_row(const IntMatrix& M, std::size_t i) {
    for (std::size_t j = 0; j < M.cols; ++j)
        if (M.at(i, j) != 0) return false;
    return true;
}

}  // namespace

TranslatedSubtorus TranslatedSubtorus::canonical() const {
    if (empty_) return *this;
    IntMatrix U;
    IntMatrix H = hermite_normal_form(A_, &U);
    RationalVector ub = fractional_part_vector(mat_vec(U, b_));
    std::size_t keep = 0;
    for (std::size_t i = 0; i < H.rows; ++i)
        if (!zero_row(H, i)) keep = i + 1;
    for (std::size_t i = keep; i < H.rows; ++i)
        if (ub[i] != 0) {
            TranslatedSubtorus e(IntMatrix(0, A_.cols), {});
            e.empty_ = true;
            return e;
        }
    IntMatrix K(keep, A_.cols);
    for (std::size_t i = 0; i < keep; ++i)
        for (std::size_t j = 0; j < A_.cols; ++j) K.at(i, j) = H.at(i, j);
    ub.resize(keep);
    return TranslatedSubtorus(std::move(K), std::move(ub));
}

bool TranslatedSubtorus::is_empty() const { return canonical().empty_; }

long TranslatedSubtorus::dimension() const {
    auto c = canonical();
    if (c.empty_) return -1;
    return static_cast<long>(A_.cols) - static_cast<long>(c.A_.rows);
}

bool TranslatedSubtorus::contains(const RationalVector& kappa) const {
    if (kappa.size() != A_.cols) throw DimensionMismatch("point and subtorus dimensions differ");
    if (empty_) return false;
    auto v = mat_vec(A_, kappa);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!is_integer(v[i] - b_[i])) return false;
    return true;
}

bool TranslatedSubtorus::contains(const Character& chi) const { return contains(chi.kappas()); }

std::optional<RationalVector> TranslatedSubtorus::some_point() const {
    if (empty_) return std::nullopt;
    return solve_congruence(A_, b_);
}

bool operator==(const TranslatedSubtorus& a, const TranslatedSubtorus& b) {
    if (a.ambient_dim() != b.ambient_dim()) return false;
    auto ca = a.canonical(), cb = b.canonical();
    if (ca.empty_ || cb.empty_) return ca.empty_ == cb.empty_;
    return ca.A_ == cb.A_ && ca.b_ == cb.b_;
}

std::string TranslatedSubtorus::to_string() const {
    if (empty_) return "{}";
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < A_.rows; ++i) {
        if (i) os << ", ";
        bool first = true;
        for (std::size_t j = 0; j < A_.cols; ++j) {
            const Integer& c = A_.at(i, j);
            if (c == 0) continue;
            if (!first) os << (c < 0 ? " - " : " + ");
            else if (c < 0) os << "-";
            Integer mag = abs(c);
            if (mag != 1) os << mag.get_str() << "*";
            os << "k" << j + 1;
            first = false;
        }
        if (first) os << "0";
        os << " = " << innc::to_string(b_[i]) << " mod 1";
    }
    if (A_.rows == 0) os << "all";
    os << "}";
    return os.str();
}

std::optional<RationalVector> solve_congruence(const IntMatrix& A, const RationalVector& b) {
    if (A.rows != b.size()) throw DimensionMismatch("one offset entry per equation");
    // U A V = D: D y = U b with kappa = V y.
    SmithForm sf = smith_normal_form(A);
    RationalVector ub = mat_vec(sf.U, b);
    RationalVector y(A.cols, Rational(0));
    for (std::size_t i = 0; i < A.rows; ++i) {
        if (i < sf.rank) {
            y[i] = ub[i] / Rational(sf.diagonal[i]);
        } else if (!is_integer(ub[i])) {
            return std::nullopt;
        }
    }
    return fractional_part_vector(mat_vec(sf.V, y));
}

TranslatedSubtorus preimage_subtorus(const IntMatrix& L, const TranslatedSubtorus& s) {
    if (L.rows != s.ambient_dim())
        throw DimensionMismatch("map has " + std::to_string(L.rows) + " target coordinates, subtorus lives in " +
                                std::to_string(s.ambient_dim()));
    if (s.is_empty()) return TranslatedSubtorus(IntMatrix(1, L.cols), {Rational(1, 2)}).canonical();
    return TranslatedSubtorus(s.equations() * L, s.offset());
}

TranslatedSubtorus pullback_subtorus(const IntMatrix& L, const TranslatedSubtorus& s) {
    if (L.rows != s.ambient_dim())
        throw DimensionMismatch("map has " + std::to_string(L.rows) + " target coordinates, subtorus lives in " +
                                std::to_string(s.ambient_dim()));
    const std::size_t src = L.cols, tgt = L.rows;
    auto kappa0 = s.some_point();
    if (!kappa0) return TranslatedSubtorus(IntMatrix(1, src), {Rational(1, 2)}).canonical();
    const IntMatrix& A = s.equations();
    const std::size_t k = A.rows;
    // Annihilator of the image subgroup: {x in Z^src : L x in rowspace(A)} = x-part of ker [L | -A^T].
    IntMatrix M(tgt, src + k);
    for (std::size_t i = 0; i < tgt; ++i) {
        for (std::size_t j = 0; j < src; ++j) M.at(i, j) = L.at(i, j);
        for (std::size_t j = 0; j < k; ++j) M.at(i, src + j) = -A.at(j, i);
    }
    IntMatrix K = integer_kernel(M);
    IntMatrix X(K.rows, src);
    for (std::size_t i = 0; i < K.rows; ++i)
        for (std::size_t j = 0; j < src; ++j) X.at(i, j) = K.at(i, j);
    IntMatrix B = hermite_normal_form(X);
    std::size_t keep = 0;
    for (std::size_t i = 0; i < B.rows; ++i)
        if (!zero_row(B, i)) keep = i + 1;
    IntMatrix Bk(keep, src);
    for (std::size_t i = 0; i < keep; ++i)
        for (std::size_t j = 0; j < src; ++j) Bk.at(i, j) = B.at(i, j);
    // Offset: B (L^T kappa0).
    RationalVector image = mat_vec(L.transpose(), *kappa0);
    RationalVector off = fractional_part_vector(mat_vec(Bk, image));
    return TranslatedSubtorus(std::move(Bk), std::move(off)).canonical();
}

}  // namespace innc
