#include "lieflag/cyclotomic.hpp"
#include "lieflag/errors.hpp"
#include "lieflag/exact.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace lieflag;

namespace {

// Leibniz expansion, independent of any elimination.
Integer leibniz_det(const ZMatrix& a) {
    const Index n = a.rows();
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    Integer total = 0;
    do {
        int inversions = 0;
        for (Index i = 0; i < n; ++i)
            for (Index j = i + 1; j < n; ++j)
                if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) ++inversions;
        Integer term = inversions % 2 ? -1 : 1;
        for (Index i = 0; i < n; ++i) term *= a(i, perm[static_cast<size_t>(i)]);
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

ZMatrix random_int_matrix(std::mt19937_64& rng, Index r, Index c, int bound) {
    ZMatrix m(r, c);
    for (Index i = 0; i < r; ++i)
        for (Index j = 0; j < c; ++j) m(i, j) = static_cast<long>(rng() % static_cast<unsigned>(2 * bound + 1)) - bound;
    return m;
}

}  // namespace

TEST_CASE("ratio canonicalizes signs and common factors") {
    CHECK(ratio(2, -4) == Rational(-1) / 2);
    CHECK(ratio(-3, -9).get_den() == 3);
    CHECK(ratio(0, -5) == 0);
    CHECK(to_string(ratio(6, 4)) == "3/2");
}

TEST_CASE("parse_rational and frac") {
    CHECK(parse_rational("7/2") == ratio(7, 2));
    CHECK(parse_rational("-3") == -3);
    CHECK(parse_rational(" 4/6 ") == ratio(2, 3));
    CHECK(frac(ratio(-1, 3)) == ratio(2, 3));
    CHECK(frac(ratio(7, 2)) == ratio(1, 2));
    CHECK(is_integer(ratio(4, 2)));
}

TEST_CASE("rref, nullspace and inverse over the rationals") {
    QMatrix a(3, 3);
    a << 1, 2, 3, 4, 5, 6, 7, 8, 9;
    CHECK(field_rank<Rational>(a) == 2);
    const QMatrix k = nullspace<Rational>(a);
    REQUIRE(k.cols() == 1);
    CHECK((a * k).isZero());
    CHECK(!inverse<Rational>(a).has_value());
    QMatrix b(2, 2);
    b << 2, 1, 1, 1;
    const auto inv = inverse<Rational>(b);
    REQUIRE(inv.has_value());
    CHECK(b * *inv == QMatrix::Identity(2, 2));
}

TEST_CASE("Bareiss determinant equals the Leibniz expansion") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const Index n = 1 + trial % 5;
        const ZMatrix m = random_int_matrix(rng, n, n, 9);
        CHECK(bareiss_det(m) == leibniz_det(m));
    }
}

TEST_CASE("exact_rank agrees with rational Gauss-Jordan rank") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const Index r = 2 + trial % 4, c = 3 + trial % 3;
        // A product of thin factors has a known rank deficit.
        const Index inner = 1 + trial % 3;
        const ZMatrix z = random_int_matrix(rng, r, inner, 5) * random_int_matrix(rng, inner, c, 5);
        QMatrix q = z.cast<Rational>();
        CHECK(exact_rank(q) == field_rank<Rational>(q));
        CHECK(exact_rank(z) == bareiss_rank(z));
        CHECK(rank_mod_p(z, kCertificatePrime) <= exact_rank(z));
    }
}

TEST_CASE("vec and unvec are inverse") {
    QMatrix m(2, 2);
    m << 1, 2, 3, 4;
    CHECK(unvec(vec(m), 2) == m);
    CHECK(bracket(m, m).isZero());
}

TEST_CASE("cyclotomic polynomials and Euler phi") {
    CHECK(cyclotomic_polynomial(1) == std::vector<Integer>{-1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<Integer>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<Integer>{1, -1, 1});
    for (int n = 1; n <= 30; ++n) {
        int phi = 0;
        for (int k = 1; k <= n; ++k)
            if (std::gcd(k, n) == 1) ++phi;
        CHECK(euler_phi(n) == phi);
    }
}

TEST_CASE("roots of unity behave multiplicatively") {
    const Cyclotomic z3 = Cyclotomic::root_of_unity(ratio(1, 3));
    CHECK(z3.pow(3) == Cyclotomic(1));
    CHECK(Cyclotomic(1) + z3 + z3 * z3 == Cyclotomic(0));
    const Cyclotomic i = Cyclotomic::root_of_unity(ratio(1, 4));
    CHECK(i * i == Cyclotomic(-1));
    // Mixed orders: zeta_3 * zeta_4 = zeta_12^7.
    CHECK(z3 * i == Cyclotomic::root_of_unity(ratio(7, 12)));
    CHECK((z3 * i).root_residue() == ratio(7, 12));
    CHECK(Cyclotomic(2).root_residue() == std::nullopt);
    const Cyclotomic w = Cyclotomic(2) + z3;
    CHECK(w * w.inverse() == Cyclotomic(1));
    CHECK(Cyclotomic::root_of_unity(ratio(1, 2)) == Cyclotomic(-1));
}
