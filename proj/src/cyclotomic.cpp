#include "lieflag/cyclotomic.hpp"
#include "lieflag/errors.hpp"

#include <map>
#include <numeric>

namespace lieflag {

const std::vector<Integer>& cyclotomic_polynomial(int n) {
    static std::map<int, std::vector<Integer>> cache;
    if (n < 1) throw Error(ErrorKind::BadParameter, "cyclotomic order must be positive");
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    // x^n - 1 divided by Phi_d for every proper divisor d.
    std::vector<Integer> p(static_cast<size_t>(n) + 1, Integer(0));
    p[0] = -1;
    p[static_cast<size_t>(n)] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        const std::vector<Integer>& q = cyclotomic_polynomial(d);
        const size_t dq = q.size() - 1;
        std::vector<Integer> quot(p.size() - dq, Integer(0));
        for (size_t k = p.size(); k-- > dq;) {
            const Integer c = p[k];  // q is monic
            quot[k - dq] = c;
            for (size_t j = 0; j <= dq; ++j) p[k - dq + j] -= c * q[j];
        }
        p = quot;
    }
    return cache.emplace(n, p).first->second;
}

int euler_phi(int n) { return static_cast<int>(cyclotomic_polynomial(n).size()) - 1; }

namespace {

// Reduces a polynomial modulo the monic Phi_m.
std::vector<Rational> reduce_mod(std::vector<Rational> p, int m) {
    const std::vector<Integer>& phi = cyclotomic_polynomial(m);
    const size_t d = phi.size() - 1;
    for (size_t k = p.size(); k-- > d;) {
        if (p[k] == 0) continue;
        const Rational c = p[k];
        for (size_t j = 0; j <= d; ++j) p[k - d + j] -= c * phi[j];
    }
    p.resize(d, Rational(0));
    return p;
}

}  // namespace

Cyclotomic::Cyclotomic(const Rational& q) : order_(1), c_{q} {}

Cyclotomic Cyclotomic::root_of_unity(const Rational& r) {
    const Rational f = frac(r);
    const int n = static_cast<int>(f.get_den().get_si());
    const long k = f.get_num().get_si();
    std::vector<Rational> p(static_cast<size_t>(k) + 1, Rational(0));
    p[static_cast<size_t>(k)] = 1;
    Cyclotomic z(n, reduce_mod(p, n));
    z.reduce_order();
    return z;
}

bool Cyclotomic::is_zero() const {
    for (const Rational& x : c_)
        if (x != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

void Cyclotomic::reduce_order() {
    if (order_ != 1 && is_rational()) {
        order_ = 1;
        c_.resize(1);
    }
}

Cyclotomic Cyclotomic::lifted(int m) const {
    if (m % order_ != 0) throw Error(ErrorKind::BadParameter, "field order is not a multiple");
    if (m == order_) return *this;
    const size_t step = static_cast<size_t>(m / order_);
    std::vector<Rational> p((c_.size() - 1) * step + 1, Rational(0));
    for (size_t j = 0; j < c_.size(); ++j) p[j * step] = c_[j];
    return Cyclotomic(m, reduce_mod(p, m));
}

std::optional<Rational> Cyclotomic::root_residue() const {
    const int m = std::lcm(2, order_);
    for (int j = 0; j < m; ++j) {
        const Rational r = ratio(j, m);
        if (*this == root_of_unity(r)) return frac(r);
    }
    return std::nullopt;
}

Cyclotomic Cyclotomic::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclotomic result(1), base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw Error(ErrorKind::BadParameter, "division by zero");
    if (is_rational()) return Cyclotomic(Rational(1) / c_[0]);
    // Solve (multiplication by this) y = 1 in the power basis.
    const Index d = static_cast<Index>(c_.size());
    QMatrix a(d, d);
    for (Index j = 0; j < d; ++j) {
        std::vector<Rational> p(static_cast<size_t>(j) + c_.size(), Rational(0));
        for (size_t i = 0; i < c_.size(); ++i) p[i + static_cast<size_t>(j)] = c_[i];
        const std::vector<Rational> col = reduce_mod(p, order_);
        for (Index i = 0; i < d; ++i) a(i, j) = col[static_cast<size_t>(i)];
    }
    const std::optional<QMatrix> inv = lieflag::inverse<Rational>(a);
    std::vector<Rational> y(static_cast<size_t>(d));
    for (Index i = 0; i < d; ++i) y[static_cast<size_t>(i)] = (*inv)(i, 0);
    Cyclotomic z(order_, y);
    z.reduce_order();
    return z;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic z = *this;
    for (Rational& x : z.c_) x = -x;
    return z;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    const int m = std::lcm(order_, o.order_);
    *this = lifted(m);
    const Cyclotomic b = o.lifted(m);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
    reduce_order();
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
    if (o.order_ == 1) {
        for (Rational& x : c_) x *= o.c_[0];
        return *this;
    }
    if (order_ == 1) {
        const Rational s = c_[0];
        *this = o;
        for (Rational& x : c_) x *= s;
        return *this;
    }
    const int m = std::lcm(order_, o.order_);
    const Cyclotomic a = lifted(m), b = o.lifted(m);
    std::vector<Rational> p(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) p[i + j] += a.c_[i] * b.c_[j];
    }
    *this = Cyclotomic(m, reduce_mod(p, m));
    reduce_order();
    return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ == b.order_) return a.c_ == b.c_;
    const int m = std::lcm(a.order_, b.order_);
    return a.lifted(m).c_ == b.lifted(m).c_;
}

std::string Cyclotomic::str() const {
    if (is_rational()) return to_string(c_[0]);
    std::string s;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        std::string coef = to_string(c_[k]);
        std::string term;
        if (k == 0) {
            term = coef;
        } else {
            const std::string z = "z" + std::to_string(order_) + (k > 1 ? "^" + std::to_string(k) : "");
            term = coef == "1" ? z : coef == "-1" ? "-" + z : coef + "*" + z;
        }
        if (!s.empty() && term[0] != '-') s += "+";
        s += term;
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& z) { return os << z.str(); }

}  // namespace lieflag
