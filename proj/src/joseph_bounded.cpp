#include "lieflag/joseph_bounded.hpp"
#include "lieflag/errors.hpp"

namespace lieflag {

std::string to_string(const JosephSl& j) {
    switch (j.which) {
        case JosephSl::Case::A: return "CaseA";
        case JosephSl::Case::B: return "CaseB";
        case JosephSl::Case::C: return "CaseC(" + std::to_string(j.k) + ")";
        case JosephSl::Case::NotJoseph: return "NotJoseph";
    }
    return "";
}

JosephSl is_joseph_sl(const RationalTuple& t) {
    if (t.size() < 3) throw Error(ErrorKind::TupleTooShort, "sl labels need at least 3 coordinates");
    const TupleClass c = classify_tuple(t);
    JosephSl j;
    const bool semi_decreasing = c.kind == DecreasingKind::SemiDecreasing;
    if (semi_decreasing && c.semi_integral) {
        j.which = JosephSl::Case::A;
    } else if (semi_decreasing && c.singular_integral()) {
        j.which = JosephSl::Case::B;
    } else if (c.regular_integral()) {
        const RationalTuple sorted = ord(t);
        for (int k = 1; k < static_cast<int>(t.size()); ++k)
            if (apply_s(sorted, k) == t) {
                j.which = JosephSl::Case::C;
                j.k = k;
            }
    }
    return j;
}

bool is_joseph_sp(const RationalTuple& t) { return is_shale_weil(t); }

int w_dimension(WKind kind, int n_v) { return kind == WKind::Sym2 ? n_v * (n_v + 1) / 2 : n_v * (n_v - 1) / 2; }

QuiverSpec quiver_for(WKind kind, int n_v) {
    if (n_v < 1) throw Error(ErrorKind::BadParameter, "dim V must be positive");
    if (kind == WKind::Sym2) return {QuiverKind::B, n_v};
    if (n_v % 2 != 0) throw Error(ErrorKind::BadParameter, "wedge^2 V needs even dim V");
    return {QuiverKind::A, n_v / 2};
}

long bounded_count_sl(const RationalTuple& t, WKind kind, int n_v) {
    const QuiverSpec spec = quiver_for(kind, n_v);
    if (static_cast<int>(t.size()) != w_dimension(kind, n_v))
        throw Error(ErrorKind::DimensionMismatch, "tuple length " + std::to_string(t.size()) + " is not dim W = " +
                                                      std::to_string(w_dimension(kind, n_v)));
    return count_P(spec, monodromy(t));
}

RationalTuple rho_d(int n) {
    RationalTuple r;
    for (int i = n - 1; i >= 0; --i) r.push_back(Rational(i));
    return r;
}

Rational weyl_dimension_d(const RationalTuple& lambda) {
    const int n = static_cast<int>(lambda.size());
    const RationalTuple rho = rho_d(n);
    Rational num = 1, den = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const Rational a = lambda[static_cast<size_t>(i)] + rho[static_cast<size_t>(i)];
            const Rational b = lambda[static_cast<size_t>(j)] + rho[static_cast<size_t>(j)];
            num *= (a - b) * (a + b);
            den *= (rho[static_cast<size_t>(i)] - rho[static_cast<size_t>(j)]) *
                   (rho[static_cast<size_t>(i)] + rho[static_cast<size_t>(j)]);
        }
    return num / den;
}

namespace {

bool dominant_half_integral(const RationalTuple& l) {
    for (const Rational& x : l)
        if (is_integer(x) || !is_integer(2 * x)) return false;
    for (size_t i = 0; i + 2 < l.size(); ++i)
        if (l[i] < l[i + 1]) return false;
    if (l.size() >= 2 && l[l.size() - 2] < abs(l.back())) return false;
    return true;
}

}  // namespace

OddPair odd_pair(const RationalTuple& mu) {
    if (!is_positive_sw(mu)) throw Error(ErrorKind::NotPositiveShaleWeil, to_string(mu) + " is not a positive Shale-Weil tuple");
    const int n = static_cast<int>(mu.size());
    const RationalTuple rho = rho_d(n);
    OddPair o;
    o.mu = mu;
    const RationalTuple smu = sigma(mu);
    for (int i = 0; i < n; ++i) {
        o.lambda.push_back(mu[static_cast<size_t>(i)] - rho[static_cast<size_t>(i)]);
        o.sigma_lambda.push_back(smu[static_cast<size_t>(i)] - rho[static_cast<size_t>(i)]);
    }
    if (!dominant_half_integral(o.lambda) || !dominant_half_integral(o.sigma_lambda))
        throw Error(ErrorKind::BadParameter, "highest weight " + to_string(o.lambda) + " is not dominant half-integral");
    const Rational d1 = weyl_dimension_d(o.lambda), d2 = weyl_dimension_d(o.sigma_lambda);
    if (!is_integer(d1) || !is_integer(d2)) throw Error(ErrorKind::BadParameter, "non-integral Weyl dimension");
    o.dim = d1.get_num();
    o.sigma_dim = d2.get_num();
    return o;
}

std::pair<RationalTuple, std::string> sw_pair_index(const RationalTuple& mu, const std::string& module_id) {
    if (!is_shale_weil(mu)) throw Error(ErrorKind::NotShaleWeil, to_string(mu) + " is not a Shale-Weil tuple");
    return {mu.back() < 0 ? sigma(mu) : mu, module_id};
}

}  // namespace lieflag
