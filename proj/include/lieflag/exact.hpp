// Exact linear algebra over the rationals, the integers and prime fields.
//
// Dense matrices are Eigen matrices whose scalar is a GMP number.  The
// elimination routines are templated on the scalar so that the same code
// serves rationals, cyclotomic numbers and residues modulo a prime.
#ifndef LIEFLAG_EXACT_HPP
#define LIEFLAG_EXACT_HPP

#include <gmpxx.h>
#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
    typedef mpq_class Real;
    typedef mpq_class NonInteger;
    typedef mpq_class Nested;
    typedef mpq_class Literal;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 150,
        MulCost = 100
    };
    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
};

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
    typedef mpz_class Real;
    typedef mpq_class NonInteger;
    typedef mpz_class Nested;
    typedef mpz_class Literal;
    enum {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 100,
        MulCost = 100
    };
    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace lieflag {

using Rational = mpq_class;
using Integer = mpz_class;
using Index = Eigen::Index;

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

using QMatrix = Matrix<Rational>;
using QVector = Vector<Rational>;
using ZMatrix = Matrix<Integer>;

/// Reduced row echelon form together with the pivot columns.
template <class S>
struct Echelon {
    Matrix<S> reduced;
    std::vector<Index> pivots;
};

/// Gauss-Jordan elimination over an exact field.
template <class S>
Echelon<S> rref(Matrix<S> a) {
    Echelon<S> out;
    const Index rows = a.rows();
    const Index cols = a.cols();
    Index r = 0;
    for (Index c = 0; c < cols && r < rows; ++c) {
        Index piv = -1;
        for (Index i = r; i < rows; ++i) {
            if (!(a(i, c) == S(0))) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != r) a.row(piv).swap(a.row(r));
        const S inv = S(1) / a(r, c);
        for (Index j = c; j < cols; ++j) a(r, j) = a(r, j) * inv;
        for (Index i = 0; i < rows; ++i) {
            if (i == r || a(i, c) == S(0)) continue;
            const S f = a(i, c);
            for (Index j = c; j < cols; ++j) a(i, j) = a(i, j) - f * a(r, j);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.reduced = std::move(a);
    return out;
}

/// Rank over an exact field.
template <class S>
Index field_rank(const Matrix<S>& a) {
    return static_cast<Index>(rref<S>(a).pivots.size());
}

/// Basis of the right kernel {x : a x = 0}, returned as matrix columns.
template <class S>
Matrix<S> nullspace(const Matrix<S>& a) {
    const Echelon<S> e = rref<S>(a);
    const Index cols = a.cols();
    std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
    for (Index p : e.pivots) is_pivot[static_cast<size_t>(p)] = true;
    std::vector<Index> free_cols;
    for (Index c = 0; c < cols; ++c)
        if (!is_pivot[static_cast<size_t>(c)]) free_cols.push_back(c);
    Matrix<S> basis = Matrix<S>::Zero(cols, static_cast<Index>(free_cols.size()));
    for (size_t k = 0; k < free_cols.size(); ++k) {
        const Index f = free_cols[k];
        basis(f, static_cast<Index>(k)) = S(1);
        for (size_t i = 0; i < e.pivots.size(); ++i)
            basis(e.pivots[i], static_cast<Index>(k)) = -e.reduced(static_cast<Index>(i), f);
    }
    return basis;
}

/// Inverse of a square matrix, or nothing when it is singular.
template <class S>
std::optional<Matrix<S>> inverse(const Matrix<S>& a) {
    const Index n = a.rows();
    if (a.cols() != n) return std::nullopt;
    Matrix<S> aug(n, 2 * n);
    aug.leftCols(n) = a;
    aug.rightCols(n) = Matrix<S>::Identity(n, n);
    Echelon<S> e = rref<S>(aug);
    if (static_cast<Index>(e.pivots.size()) < n || e.pivots[static_cast<size_t>(n - 1)] != n - 1)
        return std::nullopt;
    return Matrix<S>(e.reduced.rightCols(n));
}

/// Columns spanning the column space of `a` (a maximal independent subset).
template <class S>
Matrix<S> column_basis(const Matrix<S>& a) {
    const Echelon<S> e = rref<S>(a);
    Matrix<S> out(a.rows(), static_cast<Index>(e.pivots.size()));
    for (size_t k = 0; k < e.pivots.size(); ++k) out.col(static_cast<Index>(k)) = a.col(e.pivots[k]);
    return out;
}

/// Fraction-free (Bareiss) rank of an integer matrix.
Index bareiss_rank(ZMatrix a);

/// Determinant of a square integer matrix by Bareiss elimination.
Integer bareiss_det(ZMatrix a);

/// Rank of an integer matrix reduced modulo the prime p (p < 2^62).
Index rank_mod_p(const ZMatrix& a, std::uint64_t p);

/// The Mersenne prime 2^61 - 1 used for modular rank certificates.
constexpr std::uint64_t kCertificatePrime = (std::uint64_t{1} << 61) - 1;

/// Scales every column by the lcm of its denominators; the rank is unchanged.
ZMatrix clear_column_denominators(const QMatrix& a);

/// Exact rank of a rational matrix.  A modular rank equal to min(rows, cols)
/// is accepted as a certificate; otherwise Bareiss elimination decides.
Index exact_rank(const QMatrix& a);

/// Exact rank of an integer matrix (same strategy as exact_rank).
Index exact_rank(const ZMatrix& a);

/// Flattens a square matrix row-major into a column vector.
QVector vec(const QMatrix& m);

/// Inverse of vec for an n x n matrix.
QMatrix unvec(const QVector& v, Index n);

/// Matrix commutator xy - yx.
QMatrix bracket(const QMatrix& x, const QMatrix& y);

/// Parses "p/q", "p" or a decimal-free signed integer into a rational.
Rational parse_rational(const std::string& text);

/// Canonical text form "p/q" (or "p" when integral).
std::string to_string(const Rational& q);

/// num / den in canonical form (GMP leaves a two-argument construction unreduced).
Rational ratio(long num, long den);

/// Fractional part in [0, 1).
Rational frac(const Rational& q);

/// True when q is an integer.
bool is_integer(const Rational& q);

}  // namespace lieflag

#endif  // LIEFLAG_EXACT_HPP
