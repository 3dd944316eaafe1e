#include "lieflag/errors.hpp"
#include "lieflag/quiver_ps.hpp"

#include <doctest.h>

using namespace lieflag;

namespace {

CMatrix scalar(const Cyclotomic& c) {
    CMatrix m(1, 1);
    m(0, 0) = c;
    return m;
}

// Kind A, all-ones dimension vector, p_i = 1 and q_i = lambda - 1.
QuiverRep all_ones_a(int n, const Cyclotomic& lambda) {
    QuiverRep r = QuiverRep::zero({QuiverKind::A, n}, std::vector<int>(static_cast<size_t>(n) + 1, 1));
    for (int i = 0; i < n; ++i) {
        r.p[static_cast<size_t>(i)] = scalar(Cyclotomic(1));
        r.q[static_cast<size_t>(i)] = scalar(lambda - Cyclotomic(1));
    }
    return r;
}

std::vector<std::string> names(const std::vector<SimpleDescriptor>& v) {
    std::vector<std::string> out;
    for (const SimpleDescriptor& d : v) out.push_back(d.name());
    return out;
}

}  // namespace

TEST_CASE("relations") {
    for (QuiverKind kind : {QuiverKind::A, QuiverKind::B}) {
        std::vector<int> dims(4, 0);
        dims.back() = 1;
        CHECK(check_relations(QuiverRep::zero({kind, 3}, dims)));
    }
    CHECK(check_relations(all_ones_a(3, Cyclotomic::root_of_unity(ratio(1, 5)))));
    CHECK(check_relations(all_ones_a(2, Cyclotomic(3))));
    // lambda = 0 makes xi and nu singular.
    CHECK_FALSE(check_relations(all_ones_a(2, Cyclotomic(0))));
    QuiverRep bad = QuiverRep::zero({QuiverKind::A, 1}, {1, 1});
    bad.p[0] = CMatrix::Zero(2, 1);
    CHECK_THROWS_AS(check_relations(bad), Error);
}

TEST_CASE("simplicity") {
    std::vector<int> dims{0, 1, 0};
    CHECK(is_simple(QuiverRep::zero({QuiverKind::A, 2}, dims)));
    CHECK(is_simple(all_ones_a(3, Cyclotomic(-1))));
    CHECK_FALSE(is_simple(QuiverRep::zero({QuiverKind::A, 2}, {1, 1, 0})));
    CHECK_FALSE(is_simple(QuiverRep::zero({QuiverKind::A, 2}, {0, 2, 0})));
    CHECK_THROWS_AS(is_simple(QuiverRep::zero({QuiverKind::A, 1}, {7, 7})), Error);
}

TEST_CASE("monodromy operators of an all-ones representation") {
    const Cyclotomic lambda = Cyclotomic::root_of_unity(ratio(1, 6));
    const auto c = evaluate_monodromy(all_ones_a(2, lambda));
    REQUIRE(c.has_value());
    CHECK(*c == lambda * lambda);
    CHECK(classify_scalar(*c) == MonodromyClass::of_residue(ratio(1, 3)));
    CHECK(classify_scalar(Cyclotomic(2)).generic);
}

TEST_CASE("enumeration examples") {
    const std::vector<SimpleDescriptor> a2 = enumerate_simples({QuiverKind::A, 2});
    CHECK(names(a2) == std::vector<std::string>{"vertex(0)", "vertex(1)", "vertex(2)", "full-family"});
    const std::vector<SimpleDescriptor> b3 = enumerate_simples({QuiverKind::B, 3}, std::nullopt, SpectrumFilter{1, 1});
    CHECK(names(b3) == std::vector<std::string>{"vertex(1)", "vertex(2)"});
    const std::vector<SimpleDescriptor> gen =
        enumerate_simples({QuiverKind::A, 3}, MonodromyClass::generic_class("c"));
    CHECK(gen.size() == 3);
    for (const SimpleDescriptor& d : gen) CHECK(d.monodromy.generic);
    CHECK_THROWS_AS(enumerate_simples({QuiverKind::A, 2}, std::nullopt, SpectrumFilter{1, -1}), Error);
}

TEST_CASE("count examples") {
    CHECK(count_P({QuiverKind::A, 2}, MonodromyClass::of_residue(ratio(1, 3))) == 2);
    CHECK(count_P({QuiverKind::A, 2}, MonodromyClass::of_residue(0)) == 2);
    CHECK(enumerate_simples({QuiverKind::B, 1}, MonodromyClass::of_residue(0), SpectrumFilter{1, 1}).empty());
    CHECK(count_P({QuiverKind::A, 3}, MonodromyClass::generic_class("c")) == 3);
    CHECK_THROWS_AS(brute_force_count({QuiverKind::A, 2}, MonodromyClass::generic_class("c")), Error);
}

TEST_CASE("witnesses are simple and counts match the brute force") {
    for (QuiverKind kind : {QuiverKind::A, QuiverKind::B}) {
        for (int n = 1; n <= 3; ++n) {
            const QuiverSpec spec{kind, n};
            for (int den = 1; den <= 4; ++den) {
                for (int num = 0; num < den; ++num) {
                    const MonodromyClass c = MonodromyClass::of_residue(ratio(num, den));
                    for (const SimpleDescriptor& d : enumerate_simples(spec, c)) {
                        const QuiverRep w = witness(d);
                        INFO(to_string(kind) << n << " " << d.name());
                        CHECK(check_relations(w));
                        CHECK(is_simple(w));
                        const auto m = evaluate_monodromy(w);
                        REQUIRE(m.has_value());
                        CHECK(classify_scalar(*m) == c);
                    }
                    CHECK(count_P(spec, c) == brute_force_count(spec, c));
                }
            }
        }
    }
}

TEST_CASE("vertex simples have monodromy +1 or -1") {
    for (QuiverKind kind : {QuiverKind::A, QuiverKind::B})
        for (int n = 1; n <= 4; ++n)
            for (const SimpleDescriptor& d : enumerate_simples({kind, n})) {
                if (d.variant != SimpleDescriptor::Variant::Vertex) continue;
                CHECK(!d.monodromy.generic);
                CHECK((d.monodromy.residue == 0 || d.monodromy.residue == ratio(1, 2)));
            }
}
