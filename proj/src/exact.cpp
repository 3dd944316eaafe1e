#include "lieflag/exact.hpp"
#include "lieflag/errors.hpp"

#include <algorithm>

namespace lieflag {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::MismatchedSize: return "MismatchedSize";
        case ErrorKind::RankTooLarge: return "RankTooLarge";
        case ErrorKind::BadParameter: return "BadParameter";
        case ErrorKind::BadSampleCount: return "BadSampleCount";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::NoMatrixModel: return "NoMatrixModel";
        case ErrorKind::UnrecognizedShape: return "UnrecognizedShape";
        case ErrorKind::UnsupportedShape: return "UnsupportedShape";
        case ErrorKind::NotSemiDecreasing: return "NotSemiDecreasing";
        case ErrorKind::TupleTooShort: return "TupleTooShort";
        case ErrorKind::NotShaleWeil: return "NotShaleWeil";
        case ErrorKind::NotPositiveShaleWeil: return "NotPositiveShaleWeil";
        case ErrorKind::ShapeMismatch: return "ShapeMismatch";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::RelationViolation: return "RelationViolation";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Error";
}

Index bareiss_rank(ZMatrix a) {
    const Index rows = a.rows();
    const Index cols = a.cols();
    Integer prev = 1;
    Index r = 0;
    Integer t;
    for (Index c = 0; c < cols && r < rows; ++c) {
        Index piv = -1;
        for (Index i = r; i < rows; ++i) {
            if (sgn(a(i, c)) != 0) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != r) a.row(piv).swap(a.row(r));
        for (Index i = r + 1; i < rows; ++i) {
            for (Index j = c + 1; j < cols; ++j) {
                // a(i,j) = (a(r,c) a(i,j) - a(i,c) a(r,j)) / prev, exact division.
                t = a(r, c) * a(i, j);
                t -= a(i, c) * a(r, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, c) = 0;
        }
        prev = a(r, c);
        ++r;
    }
    return r;
}

Integer bareiss_det(ZMatrix a) {
    const Index n = a.rows();
    if (a.cols() != n) throw Error(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
    if (n == 0) return 1;
    Integer prev = 1;
    int sign = 1;
    Integer t;
    for (Index k = 0; k < n; ++k) {
        Index piv = -1;
        for (Index i = k; i < n; ++i) {
            if (sgn(a(i, k)) != 0) {
                piv = i;
                break;
            }
        }
        if (piv < 0) return 0;
        if (piv != k) {
            a.row(piv).swap(a.row(k));
            sign = -sign;
        }
        for (Index i = k + 1; i < n; ++i) {
            for (Index j = k + 1; j < n; ++j) {
                t = a(k, k) * a(i, j);
                t -= a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<u128>(a) * b) % p); }

u64 pow_mod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    while (e) {
        if (e & 1) r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 reduce(const Integer& z, u64 p) {
    // mpz_fdiv_ui returns the non-negative residue.
    return static_cast<u64>(mpz_fdiv_ui(z.get_mpz_t(), static_cast<unsigned long>(p)));
}

}  // namespace

Index rank_mod_p(const ZMatrix& a, std::uint64_t p) {
    const Index rows = a.rows();
    const Index cols = a.cols();
    std::vector<u64> m(static_cast<size_t>(rows * cols));
    auto at = [&](Index i, Index j) -> u64& { return m[static_cast<size_t>(i * cols + j)]; };
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j) at(i, j) = reduce(a(i, j), p);
    Index r = 0;
    for (Index c = 0; c < cols && r < rows; ++c) {
        Index piv = -1;
        for (Index i = r; i < rows; ++i) {
            if (at(i, c) != 0) {
                piv = i;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != r)
            for (Index j = 0; j < cols; ++j) std::swap(at(piv, j), at(r, j));
        const u64 inv = pow_mod(at(r, c), p - 2, p);
        for (Index j = c; j < cols; ++j) at(r, j) = mul_mod(at(r, j), inv, p);
        for (Index i = r + 1; i < rows; ++i) {
            const u64 f = at(i, c);
            if (f == 0) continue;
            for (Index j = c; j < cols; ++j) {
                const u64 sub = mul_mod(f, at(r, j), p);
                u64& x = at(i, j);
                x = x >= sub ? x - sub : x + p - sub;
            }
        }
        ++r;
    }
    return r;
}

ZMatrix clear_column_denominators(const QMatrix& a) {
    ZMatrix out(a.rows(), a.cols());
    for (Index j = 0; j < a.cols(); ++j) {
        Integer l = 1;
        for (Index i = 0; i < a.rows(); ++i) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
        }
        for (Index i = 0; i < a.rows(); ++i) {
            Rational scaled = a(i, j) * Rational(l);
            out(i, j) = scaled.get_num();
        }
    }
    return out;
}

Index exact_rank(const ZMatrix& a) {
    const Index full = std::min(a.rows(), a.cols());
    if (full == 0) return 0;
    if (rank_mod_p(a, kCertificatePrime) == full) return full;
    return bareiss_rank(a);
}

Index exact_rank(const QMatrix& a) { return exact_rank(clear_column_denominators(a)); }

QVector vec(const QMatrix& m) {
    QVector v(m.rows() * m.cols());
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) v(i * m.cols() + j) = m(i, j);
    return v;
}

QMatrix unvec(const QVector& v, Index n) {
    QMatrix m(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) m(i, j) = v(i * n + j);
    return m;
}

QMatrix bracket(const QMatrix& x, const QMatrix& y) {
    QMatrix xy = x * y;
    QMatrix yx = y * x;
    return xy - yx;
}

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (ch != ' ' && ch != '\t') s.push_back(ch);
    if (s.empty()) throw Error(ErrorKind::ParseError, "empty rational");
    auto valid_int = [](const std::string& t) {
        size_t i = (t.size() > 0 && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    const size_t slash = s.find('/');
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!num.empty() && num[0] == '+') num = num.substr(1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        throw Error(ErrorKind::ParseError, "not a rational: '" + text + "'");
    Integer n(num), d(den);
    if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + text + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational ratio(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational frac(const Rational& q) {
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    Rational r = q - Rational(fl);
    return r;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace lieflag
