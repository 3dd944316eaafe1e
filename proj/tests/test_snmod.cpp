#include "lieflag/errors.hpp"
#include "lieflag/snmod.hpp"

#include <doctest.h>

#include <random>

using namespace lieflag;

namespace {

Partition P(std::vector<int> v) { return Partition::from_parts(std::move(v)); }

std::vector<int> cycle_type(const Permutation& w) {
    std::vector<bool> seen(w.size(), false);
    std::vector<int> t;
    for (size_t i = 0; i < w.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (size_t j = i; !seen[j]; j = static_cast<size_t>(w[j])) {
            seen[j] = true;
            ++len;
        }
        t.push_back(len);
    }
    return t;
}

// Multiplicity of an irreducible by averaging traces of the actual matrices
// over the whole group: independent of Murnaghan-Nakayama.
Rational multiplicity_by_traces(const SnRep& r, const SnRep& irr) {
    Rational total = 0;
    const std::vector<Permutation> group = all_permutations(r.n());
    for (const Permutation& w : group) total += r.act(w).trace() * irr.act(w).trace();
    return total / static_cast<long>(group.size());
}

}  // namespace

TEST_CASE("generator relations are enforced") {
    QMatrix s = QMatrix::Identity(2, 2);
    s(0, 1) = 1;
    CHECK_THROWS_AS(SnRep::make(2, {s}), Error);
    CHECK_THROWS_AS(SnRep::make(3, {QMatrix::Identity(2, 2), QMatrix::Identity(3, 3)}), Error);
    for (int n = 2; n <= 5; ++n)
        for (const Partition& l : all_partitions(n)) CHECK(SnRep::specht(l).dim() == irreducible_dim(l).get_si());
}

TEST_CASE("decomposition examples") {
    CHECK(decompose(SnRep::permutation(3)) == Decomposition{{{3}, 1}, {{2, 1}, 1}});
    for (int n = 2; n <= 5; ++n) CHECK(decompose(SnRep::trivial(n)) == Decomposition{{{n}, 1}});
    CHECK(decompose(SnRep::regular(3)) == Decomposition{{{3}, 1}, {{2, 1}, 2}, {{1, 1, 1}, 1}});
    CHECK_THROWS_AS(decompose(SnRep::trivial(9)), Error);
}

TEST_CASE("characters agree with traces of the seminormal matrices") {
    for (int n = 2; n <= 5; ++n) {
        for (const Partition& l : all_partitions(n)) {
            const SnRep irr = SnRep::specht(l);
            for (const Permutation& w : all_permutations(n))
                CHECK(irr.act(w).trace() == Rational(character_value(l, P(cycle_type(w)))));
        }
    }
    for (int n = 2; n <= 4; ++n) {
        const SnRep reg = SnRep::regular(n);
        for (const auto& [parts, mult] : decompose(reg))
            CHECK(multiplicity_by_traces(reg, SnRep::specht(P(parts))) == mult);
    }
}

TEST_CASE("decompose is additive and reproduces dimensions") {
    const SnRep a = SnRep::direct_sum(SnRep::specht(P({2, 2})), SnRep::permutation(4));
    const Decomposition d = decompose(a);
    long dim = 0;
    for (const auto& [parts, mult] : d) dim += mult * irreducible_dim(P(parts)).get_si();
    CHECK(dim == a.dim());
    CHECK(d == Decomposition{{{4}, 1}, {{3, 1}, 1}, {{2, 2}, 1}});
}

TEST_CASE("fixed-space test examples") {
    const LsnResult std4 = lsn_check(SnRep::specht(P({3, 1})));
    CHECK(std4.hypothesis);
    CHECK(std4.conclusion_holds);
    CHECK(std4.decomposition == Decomposition{{{3, 1}, 1}});
    CHECK_FALSE(lsn_check(SnRep::sign(3)).hypothesis);
    const LsnResult mixed = lsn_check(SnRep::direct_sum(SnRep::trivial(3), SnRep::specht(P({2, 1}))));
    CHECK(mixed.hypothesis);
    CHECK(mixed.decomposition == Decomposition{{{3}, 1}, {{2, 1}, 1}});
    CHECK_FALSE(lsn_check(SnRep::specht(P({2, 2}))).hypothesis);
}

TEST_CASE("group ring") {
    const GroupAlgebraElement g = GroupAlgebraElement::generator(3, 1);
    CHECK(pf_ring_multiply(g, g) == g + g);
    const GroupAlgebraElement e = GroupAlgebraElement::identity(3);
    CHECK(pf_ring_multiply(e, g) == g);
    CHECK(pf_ring_multiply(g, e) == g);
    CHECK(compose(transposition(3, 1), transposition(3, 1)) == Permutation{0, 1, 2});
    CHECK(pf_generators_span(4));
    CHECK_THROWS_AS(pf_generators_span(7), Error);
    CHECK_THROWS_AS(pf_ring_multiply(e, GroupAlgebraElement::identity(4)), Error);
}
