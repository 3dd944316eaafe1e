#include "lieflag/errors.hpp"
#include "lieflag/tuples_weights.hpp"

#include <doctest.h>

#include <random>

using namespace lieflag;

namespace {

RationalTuple T(std::initializer_list<Rational> v) { return RationalTuple(v); }

// Independent reimplementation: descending with integer gaps, checked pairwise.
bool brute_decreasing(const RationalTuple& t) {
    for (size_t i = 0; i < t.size(); ++i)
        for (size_t j = i + 1; j < t.size(); ++j) {
            const Rational d = t[i] - t[j];
            if (d < 0 || d.get_den() != 1) return false;
        }
    return true;
}

std::vector<int> brute_removable(const RationalTuple& t) {
    std::vector<int> out;
    for (size_t k = 0; k < t.size(); ++k) {
        RationalTuple rest;
        for (size_t i = 0; i < t.size(); ++i)
            if (i != k) rest.push_back(t[i]);
        if (brute_decreasing(rest)) out.push_back(static_cast<int>(k));
    }
    return out;
}

}  // namespace

TEST_CASE("classify_tuple examples") {
    const TupleClass rho = classify_tuple(rho_tuple(4));
    CHECK(rho.kind == DecreasingKind::Decreasing);
    CHECK(rho.integral);
    CHECK(rho.regular);
    const TupleClass semi = classify_tuple(T({4, 3, 1, 2}));
    CHECK(semi.kind == DecreasingKind::SemiDecreasing);
    CHECK(semi.removable == std::vector<int>{2, 3});
    CHECK(classify_tuple(T({1, 2, 3})).kind == DecreasingKind::Neither);
}

TEST_CASE("classify_tuple matches removal brute force") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 500; ++trial) {
        const size_t n = 3 + rng() % 4;
        RationalTuple t;
        for (size_t i = 0; i < n; ++i) t.push_back(ratio(static_cast<long>(rng() % 13) - 6, 1 + static_cast<long>(rng() % 2)));
        const TupleClass c = classify_tuple(t);
        const bool dec = brute_decreasing(t);
        const std::vector<int> rem = brute_removable(t);
        if (dec) {
            CHECK(c.kind == DecreasingKind::Decreasing);
        } else if (!rem.empty()) {
            CHECK(c.kind == DecreasingKind::SemiDecreasing);
            CHECK(c.removable == rem);
        } else {
            CHECK(c.kind == DecreasingKind::Neither);
        }
    }
}

TEST_CASE("monodromy examples") {
    CHECK(monodromy(T({3, 2, ratio(1, 2), 1})).residue == ratio(1, 2));
    CHECK(monodromy(T({5, 3, 4, 2})).is_trivial());
    CHECK(monodromy(T({4, 3, 1, 2})).is_trivial());
    CHECK_THROWS_AS(monodromy(T({1, 2, 3})), Error);
    CHECK_THROWS_AS(monodromy(T({2, 3})), Error);
    try {
        monodromy(T({2, 3}));
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::TupleTooShort);
    }
}

TEST_CASE("monodromy is trivial exactly for integral tuples") {
    std::mt19937_64 rng(5);
    int tested = 0;
    while (tested < 200) {
        const size_t n = 3 + rng() % 4;
        RationalTuple t;
        Rational x = 10;
        for (size_t i = 0; i + 1 < n; ++i) {
            t.push_back(x);
            x -= static_cast<long>(rng() % 3);
        }
        const Rational extra = ratio(static_cast<long>(rng() % 24) - 12, 1 + static_cast<long>(rng() % 4));
        t.insert(t.begin() + static_cast<long>(rng() % n), extra);
        const TupleClass c = classify_tuple(t);
        if (c.kind != DecreasingKind::SemiDecreasing) continue;
        ++tested;
        CHECK(monodromy(t).is_trivial() == c.integral);
        // Exactly one of regular integral, singular integral, semi-integral.
        const int buckets = int(c.regular_integral()) + int(c.singular_integral()) + int(c.semi_integral);
        CHECK(buckets == 1);
    }
}

TEST_CASE("Shale-Weil tuples and sigma") {
    for (int n = 1; n <= 6; ++n) {
        const RationalTuple mu0 = mu0_tuple(n);
        CHECK(is_shale_weil(mu0));
        CHECK(is_positive_sw(mu0));
        if (n >= 2) {
            CHECK(is_shale_weil(sigma(mu0)));
            CHECK_FALSE(is_positive_sw(sigma(mu0)));
        }
        CHECK(sigma(sigma(mu0)) == mu0);
    }
    CHECK_FALSE(is_shale_weil(T({ratio(5, 2), ratio(1, 2), ratio(3, 2)})));
    CHECK_FALSE(is_shale_weil(T({2, 1})));
}

TEST_CASE("weight order in type A") {
    const WeightOrderContext ctx{RootType::A, 3};
    const RationalTuple rho = rho_tuple(3);
    const RationalTuple s1rho = apply_s(rho, 1);
    CHECK(weight_leq(rho, rho, ctx));
    CHECK(weight_leq(s1rho, rho, ctx));
    CHECK_FALSE(weight_leq(rho, s1rho, ctx));
    CHECK(is_dominant(rho, ctx));
    CHECK(weyl_stabilizer(rho, ctx).order == 1);
    const StabilizerDescriptor st = weyl_stabilizer(T({1, 1, 0}), ctx);
    CHECK(st.order == 2);
    REQUIRE(st.generators.size() == 1);
    CHECK(st.generators[0] == Root{Root::Kind::Difference, 0, 1});
    RationalTuple shifted = rho;
    for (Rational& x : shifted) x += 2;
    CHECK(weights_equivalent(rho, shifted, ctx));
    CHECK_FALSE(weights_equivalent(rho, T({1, 1, 0}), ctx));
    CHECK_THROWS_AS(weight_leq(rho_tuple(9), rho_tuple(9), WeightOrderContext{RootType::A, 9}), Error);
}

TEST_CASE("dominance is maximality in the orbit") {
    for (RootType type : {RootType::A, RootType::C}) {
        for (int n = 2; n <= 4; ++n) {
            const WeightOrderContext ctx{type, n};
            RationalTuple psi;
            for (int i = 0; i < n; ++i) psi.push_back(ratio(2 * (n - i) - 1, 2) - (i == 1 ? 1 : 0));
            std::vector<Root> gens = ctx.positive_roots();
            const std::vector<RationalTuple> orbit = reflection_orbit(psi, gens);
            for (const RationalTuple& a : orbit) {
                bool maximal = true;
                for (const RationalTuple& b : orbit)
                    if (b != a && weight_leq(a, b, ctx)) maximal = false;
                CHECK(is_dominant(a, ctx) == maximal);
            }
        }
    }
}
