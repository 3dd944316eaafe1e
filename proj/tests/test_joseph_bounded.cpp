#include "lieflag/errors.hpp"
#include "lieflag/joseph_bounded.hpp"

#include <doctest.h>

#include <random>

using namespace lieflag;

namespace {

RationalTuple T(std::initializer_list<Rational> v) { return RationalTuple(v); }

// Product over the positive roots e_i -+ e_j of D_n, written out directly.
Rational dimension_d(const RationalTuple& lambda) {
    const size_t n = lambda.size();
    Rational num = 1, den = 1;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            const Rational ri = static_cast<long>(n - 1 - i), rj = static_cast<long>(n - 1 - j);
            num *= (lambda[i] + ri - lambda[j] - rj) * (lambda[i] + ri + lambda[j] + rj);
            den *= (ri - rj) * (ri + rj);
        }
    return num / den;
}

}  // namespace

TEST_CASE("Joseph ideals of sl") {
    for (int n = 4; n <= 7; ++n) {
        RationalTuple t{ratio(1, 2)};
        for (int i = n - 1; i >= 1; --i) t.push_back(i);
        CHECK(is_joseph_sl(t).which == JosephSl::Case::A);
        CHECK(is_joseph_sl(rho_tuple(n)).which == JosephSl::Case::NotJoseph);
        const JosephSl c = is_joseph_sl(apply_s(rho_tuple(n), 1));
        CHECK(c.which == JosephSl::Case::C);
        CHECK(c.k == 1);
        CHECK(to_string(c) == "CaseC(1)");
    }
    CHECK(is_joseph_sl(T({3, 2, 2, 1})).which == JosephSl::Case::NotJoseph);  // decreasing
    CHECK(is_joseph_sl(T({3, 2, 1, 2})).which == JosephSl::Case::B);          // singular, semi-decreasing
    CHECK_THROWS_AS(is_joseph_sl(T({1, 2})), Error);
}

TEST_CASE("Joseph ideals of sp") {
    for (int n = 1; n <= 5; ++n) {
        CHECK(is_joseph_sp(mu0_tuple(n)));
        CHECK(is_joseph_sp(sigma(mu0_tuple(n))));
    }
    CHECK_FALSE(is_joseph_sp(T({2, 1})));
}

TEST_CASE("quivers attached to W") {
    CHECK(w_dimension(WKind::Wedge2, 4) == 6);
    CHECK(w_dimension(WKind::Sym2, 3) == 6);
    CHECK(quiver_for(WKind::Wedge2, 4).kind == QuiverKind::A);
    CHECK(quiver_for(WKind::Wedge2, 4).n == 2);
    CHECK(quiver_for(WKind::Sym2, 3).n == 3);
    CHECK_THROWS_AS(quiver_for(WKind::Wedge2, 5), Error);
}

TEST_CASE("bounded module counts") {
    // Integral semi-decreasing tuple of length 6 = dim wedge^2 C^4.
    const RationalTuple integral = T({6, 5, 4, 3, 1, 2});
    CHECK(bounded_count_sl(integral, WKind::Wedge2, 4) == count_P({QuiverKind::A, 2}, MonodromyClass::of_residue(0)));
    CHECK(bounded_count_sl(integral, WKind::Wedge2, 4) == brute_force_count({QuiverKind::A, 2}, MonodromyClass::of_residue(0)));
    // Residue 1/3: remove 1/3 + 6 = 19/3 against lambda_1 = 6.
    const RationalTuple third = T({6, 5, ratio(19, 3), 4, 3, 2});
    REQUIRE(monodromy(third).residue == ratio(1, 3));
    CHECK(bounded_count_sl(third, WKind::Wedge2, 4) == 2);
    CHECK_THROWS_AS(bounded_count_sl(T({3, 2, ratio(1, 2), 1}), WKind::Wedge2, 4), Error);
}

TEST_CASE("counts depend only on the monodromy") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const Rational r = ratio(static_cast<long>(rng() % 6), 6);
        RationalTuple a{9, 8, 7, 6, 5}, b{9, 8, 7, 6, 5};
        a.insert(a.begin() + 1 + static_cast<long>(rng() % 4), r + 1);
        b.insert(b.begin() + 1 + static_cast<long>(rng() % 4), r - 11);
        REQUIRE(monodromy(a) == monodromy(b));
        CHECK(bounded_count_sl(a, WKind::Sym2, 3) == bounded_count_sl(b, WKind::Sym2, 3));
    }
}

TEST_CASE("odd pairs") {
    const OddPair p = odd_pair(mu0_tuple(3));
    CHECK(p.lambda == T({ratio(1, 2), ratio(1, 2), ratio(1, 2)}));
    CHECK(p.dim == 4);
    CHECK(p.sigma_dim == 4);
    for (int n = 2; n <= 6; ++n) {
        const OddPair q = odd_pair(mu0_tuple(n));
        CHECK(q.dim == Integer(1) << (n - 1));
        CHECK(q.dim == q.sigma_dim);
        CHECK(Rational(q.dim) == dimension_d(q.lambda));
        CHECK(weyl_dimension_d(q.lambda) == dimension_d(q.lambda));
    }
    const OddPair r = odd_pair(T({ratio(9, 2), ratio(5, 2), ratio(1, 2)}));
    CHECK(r.dim == r.sigma_dim);
    CHECK(Rational(r.dim) == dimension_d(r.lambda));
    CHECK_THROWS_AS(odd_pair(sigma(mu0_tuple(3))), Error);
}

TEST_CASE("Shale-Weil pair index") {
    const auto a = sw_pair_index(sigma(mu0_tuple(3)), "M");
    CHECK(a.first == mu0_tuple(3));
    CHECK(a.second == "M");
    CHECK(sw_pair_index(mu0_tuple(3), "M").first == mu0_tuple(3));
    CHECK_THROWS_AS(sw_pair_index(T({2, 1}), "M"), Error);
}
