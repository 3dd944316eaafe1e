// Exact numbers in cyclotomic fields Q(zeta_N) = Q[x]/Phi_N(x).
//
// Elements of different fields are combined in Q(zeta_lcm), so roots of
// unity of any order can be mixed freely.  The type is usable as an Eigen
// scalar, which lets the templated elimination routines run over it.
#ifndef LIEFLAG_CYCLOTOMIC_HPP
#define LIEFLAG_CYCLOTOMIC_HPP

#include "lieflag/exact.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace lieflag {

/// Integer coefficients of the N-th cyclotomic polynomial, constant term first.
const std::vector<Integer>& cyclotomic_polynomial(int n);
/// Euler's totient, the degree of Phi_N.
int euler_phi(int n);

class Cyclotomic {
public:
    Cyclotomic() : Cyclotomic(0) {}
    Cyclotomic(int v) : Cyclotomic(Rational(v)) {}
    Cyclotomic(long v) : Cyclotomic(Rational(v)) {}
    Cyclotomic(const Rational& q);

    /// e^{2 pi i r}.
    static Cyclotomic root_of_unity(const Rational& r);

    /// N with the element stored in Q(zeta_N); 1 for rationals.
    int order() const { return order_; }
    /// Coefficients in the power basis 1, zeta_N, ..., zeta_N^{phi(N)-1}.
    const std::vector<Rational>& coefficients() const { return c_; }
    bool is_zero() const;
    bool is_rational() const;
    /// The same number written in Q(zeta_m); m must be a multiple of order().
    Cyclotomic lifted(int m) const;

    /// r in [0, 1) with this == e^{2 pi i r}, if this is a root of unity.
    std::optional<Rational> root_residue() const;
    Cyclotomic pow(long e) const;
    Cyclotomic inverse() const;

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator/=(const Cyclotomic& o);
    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    std::string str() const;

private:
    Cyclotomic(int order, std::vector<Rational> c) : order_(order), c_(std::move(c)) {}
    void reduce_order();

    int order_ = 1;
    std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& z);

using CMatrix = Matrix<Cyclotomic>;
using CVector = Vector<Cyclotomic>;

}  // namespace lieflag

namespace Eigen {

template <>
struct NumTraits<lieflag::Cyclotomic> : GenericNumTraits<lieflag::Cyclotomic> {
    typedef lieflag::Cyclotomic Real;
    typedef lieflag::Cyclotomic NonInteger;
    typedef lieflag::Cyclotomic Nested;
    typedef lieflag::Cyclotomic Literal;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 10,
        AddCost = 200,
        MulCost = 1000
    };
    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // LIEFLAG_CYCLOTOMIC_HPP
