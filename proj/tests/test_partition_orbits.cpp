#include "lieflag/errors.hpp"
#include "lieflag/exact.hpp"
#include "lieflag/partition_orbits.hpp"

#include <doctest.h>

using namespace lieflag;

namespace {

Partition P(std::vector<int> v) { return Partition::from_parts(std::move(v)); }

// dim of the GL_n-orbit of the nilpotent matrix with Jordan blocks p: n^2
// minus the dimension of its centralizer, computed as an exact nullspace.
long orbit_dim_by_centralizer(const Partition& p) {
    const int n = p.size();
    QMatrix x = QMatrix::Zero(n, n);
    int start = 0;
    for (int b : p.parts) {
        for (int i = 0; i + 1 < b; ++i) x(start + i, start + i + 1) = 1;
        start += b;
    }
    QMatrix ad(n * n, n * n);
    for (int k = 0; k < n * n; ++k) {
        QMatrix e = QMatrix::Zero(n, n);
        e(k / n, k % n) = 1;
        ad.col(k) = vec(bracket(x, e));
    }
    return static_cast<long>(exact_rank(ad));
}

}  // namespace

TEST_CASE("step partitions") {
    CHECK(step_partition(FlagType::make({1}, 4)) == P({3, 1}));
    CHECK(step_partition(FlagType::make({1, 2, 3}, 4)) == P({1, 1, 1, 1}));
    CHECK(step_partition(FlagType::make({2, 4}, 6)) == P({2, 2, 2}));
}

TEST_CASE("Richardson partitions") {
    for (int n = 3; n <= 7; ++n) {
        std::vector<int> expect(static_cast<size_t>(n - 1), 1);
        expect[0] = 2;
        CHECK(richardson_partition(FlagType::make({1}, n)) == P(expect));
    }
    CHECK(richardson_partition(FlagType::make({1, 2, 3}, 4)) == P({4}));
    CHECK(richardson_partition(FlagType::make({2}, 4)) == P({2, 2}));
}

TEST_CASE("dominance order") {
    CHECK(dominance_leq(P({2, 1, 1}), P({2, 2})));
    CHECK(dominance_leq(P({3, 2}), P({3, 2})));
    CHECK_FALSE(dominance_leq(P({3, 1}), P({2, 2})));
    CHECK_THROWS_AS(dominance_leq(P({3, 1}), P({2, 2, 1})), Error);
}

TEST_CASE("cotangent equivalence") {
    CHECK(cotangent_equivalent(FlagType::make({1}, 5), FlagType::make({4}, 5)));
    CHECK(cotangent_equivalent(FlagType::make({1, 2}, 5), FlagType::make({3, 4}, 5)));
    CHECK_FALSE(cotangent_equivalent(FlagType::make({1}, 5), FlagType::make({2}, 5)));
}

TEST_CASE("flag order") {
    CHECK(flag_order(FlagType::make({2}, 6), FlagType::make({1}, 6)) == FlagOrderRelation::Higher);
    CHECK(flag_order(FlagType::make({1}, 6), FlagType::make({2}, 6)) == FlagOrderRelation::Lower);
    for (const FlagType& f : all_flag_types(6)) {
        CHECK(flag_order(f, f) == FlagOrderRelation::CotangentEquivalent);
        const FlagOrderRelation r = flag_order(f, FlagType::make({1}, 6));
        CHECK((r == FlagOrderRelation::Higher || r == FlagOrderRelation::CotangentEquivalent));
    }
    CHECK_THROWS_AS(flag_order(FlagType::make({1}, 5), FlagType::make({1}, 6)), Error);
}

TEST_CASE("orbit dimensions match centralizer dimensions") {
    for (int n = 2; n <= 7; ++n) {
        std::vector<int> minimal(static_cast<size_t>(n - 1), 1);
        minimal[0] = 2;
        CHECK(orbit_dim(P(minimal)) == 2 * (n - 1));
        CHECK(orbit_dim(P(std::vector<int>(static_cast<size_t>(n), 1))) == 0);
        for (const Partition& p : all_partitions(n)) CHECK(orbit_dim(p) == orbit_dim_by_centralizer(p));
    }
    CHECK(orbit_dim(P({2, 2})) == 8);
}

TEST_CASE("flag validation") {
    CHECK_THROWS_AS(FlagType::make({2, 2}, 5), Error);
    CHECK_THROWS_AS(FlagType::make({0}, 5), Error);
    CHECK_THROWS_AS(FlagType::make({5}, 5), Error);
    CHECK(FlagType::from_steps({1, 2, 3}) == FlagType::make({1, 3}, 6));
    CHECK(FlagType::make({2, 4}, 6).dimension() == 12);
    CHECK(canonical_flag(FlagType::make({3, 4}, 5)) == FlagType::make({1, 2}, 5));
}
