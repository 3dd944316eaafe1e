#include "lieflag/errors.hpp"
#include "lieflag/parse.hpp"
#include "lieflag/sphericity_oracle.hpp"

#include <doctest.h>

using namespace lieflag;

namespace {

CatalogAlgebra on_natural_sum(const std::string& factors) { return representation(parse_module(factors)); }

}  // namespace

TEST_CASE("Borel orbit dimensions at chosen points") {
    const CatalogAlgebra gl4 = make_algebra(FactorType::gl, 4);
    const FlagType full = FlagType::make({1, 2, 3}, 4);
    CHECK(borel_orbit_dim_at(gl4.borel_basis, {full, QMatrix::Identity(4, 4)}) == 0);
    const CatalogAlgebra sl2 = make_algebra(FactorType::sl, 2);
    QMatrix g(2, 2);
    g << 1, 0, 1, 1;
    CHECK(borel_orbit_dim_at(sl2.borel_basis, {FlagType::make({1}, 2), g}) == 1);
    const OracleVerdict v = is_spherical_flag(make_algebra(FactorType::sp, 4), full);
    CHECK(v.spherical);
    CHECK(v.max_rank == 6);
    CHECK_THROWS_AS(borel_orbit_dim_at(sl2.borel_basis, {full, QMatrix::Identity(4, 4)}), Error);
}

TEST_CASE("flag sphericity examples") {
    CHECK(is_spherical_flag(on_natural_sum("sl(2)+sl(2) on nat(1)xnat(2)"), FlagType::make({2}, 4)).spherical);
    CHECK_FALSE(is_spherical_flag(on_natural_sum("sl(2)+sl(3) on nat(1)xnat(2)"), FlagType::make({2}, 6)).spherical);
    CHECK_FALSE(is_spherical_flag(make_algebra(FactorType::so, 5), FlagType::make({1, 2}, 5)).spherical);
    CHECK(complexity_flag(make_algebra(FactorType::so, 5), FlagType::make({1, 2}, 5)) >= 1);
    CHECK_THROWS_AS(is_spherical_flag(make_algebra(FactorType::sl, 3), FlagType::make({1}, 3), OracleConfig{0}), Error);
}

TEST_CASE("module sphericity examples") {
    CHECK(is_spherical_module(make_algebra(FactorType::sl, 4), true).spherical);
    CHECK(is_spherical_module(make_algebra(FactorType::sl, 4), false).spherical);  // SL_n is transitive on C^n minus 0
    CHECK(is_spherical_module(representation(parse_module("gl(3) on sym2")), false).spherical);
    CHECK_FALSE(is_spherical_module(representation(parse_module("so(5) on nat+nat")), true).spherical);
    CHECK_THROWS_AS(is_spherical_module(parse_module("so(7) on spin"), {}, true), Error);
}

TEST_CASE("products of flag varieties") {
    const FlagType p1 = FlagType::make({1}, 2);
    CHECK(product_flag_complexity(2, p1, p1) == 0);
    for (int n = 1; n <= 3; ++n) {
        const FlagType f = FlagType::from_steps({1, 1, n});
        CHECK(product_flag_complexity(n + 2, f, f) >= 1);
    }
    CHECK(product_flag_complexity(4, FlagType::from_steps({2, 2}), FlagType::from_steps({1, 1, 2})) == 0);
}

TEST_CASE("the sampler replays identically") {
    PointSampler a(42, 100), b(42, 100);
    for (int i = 0; i < 20; ++i) CHECK(a.coordinate() == b.coordinate());
    const OracleConfig cfg{3, 99, 50};
    const OracleVerdict v1 = is_spherical_flag(make_algebra(FactorType::so, 5), FlagType::make({1, 2}, 5), cfg);
    const OracleVerdict v2 = is_spherical_flag(make_algebra(FactorType::so, 5), FlagType::make({1, 2}, 5), cfg);
    CHECK(v1.sample_ranks == v2.sample_ranks);
    CHECK(v1.certificate == v2.certificate);
}

TEST_CASE("certificates replay to the recorded rank") {
    const CatalogAlgebra k = make_algebra(FactorType::sp, 6);
    const FlagType f = FlagType::make({1, 3}, 6);
    const OracleVerdict v = is_spherical_flag(k, f);
    REQUIRE(!v.certificate.empty());
    CHECK(replay_flag(k, f, v.certificate.front()) == v.max_rank);
    CHECK(v.max_rank <= v.variety_dim);
}

TEST_CASE("more samples never lower the maximal rank") {
    const CatalogAlgebra k = make_algebra(FactorType::so, 6);
    const FlagType f = FlagType::make({1, 3}, 6);
    int previous = 0;
    for (int s = 1; s <= 4; ++s) {
        const int r = is_spherical_flag(k, f, OracleConfig{s}).max_rank;
        CHECK(r >= previous);
        previous = r;
    }
}
