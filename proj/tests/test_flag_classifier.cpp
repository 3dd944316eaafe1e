#include "lieflag/errors.hpp"
#include "lieflag/flag_classifier.hpp"
#include "lieflag/parse.hpp"

#include <doctest.h>

using namespace lieflag;

namespace {

ClassificationDatum datum(std::vector<int> dims, const std::string& factors) {
    ClassificationDatum d;
    d.dims = std::move(dims);
    d.summands = parse_factors(factors);
    return d;
}

bool oracle_says(const ClassificationDatum& d) { return is_spherical_flag(datum_algebra(d), d.flag()).spherical; }

}  // namespace

TEST_CASE("classification examples") {
    const ClassificationVerdict a = classify_flag_datum(datum({2}, "sp(4)+sl(3)"));
    CHECK(a.spherical);
    CHECK(a.case_id == "I-2-1-1");
    CHECK(oracle_says(datum({2}, "sp(4)+sl(3)")));

    const ClassificationVerdict b = classify_flag_datum(datum({2, 4}, "sp(6)"));
    CHECK_FALSE(b.spherical);
    CHECK_FALSE(oracle_says(datum({2, 4}, "sp(6)")));

    for (int n = 3; n <= 5; ++n) {
        std::vector<int> dims;
        for (int i = 1; i < n; ++i) dims.push_back(i);
        const ClassificationVerdict c = classify_flag_datum(datum(dims, "sl(" + std::to_string(n) + ")"));
        CHECK(c.spherical);
        CHECK(c.case_id == "II-1-1");
    }
}

TEST_CASE("Grassmannian list") {
    const ClassificationVerdict a = classify_grassmannian(3, parse_factors("sl(2)+sp(4)"));
    CHECK(a.spherical);
    CHECK(a.case_id == "2-2");
    const ClassificationVerdict b = classify_grassmannian(2, parse_factors("sl(1)+sl(2)+sl(1)"));
    CHECK(b.spherical);
    CHECK(b.case_id == "3-1-1");
    const ClassificationVerdict c = classify_grassmannian(4, parse_factors("sp(6)+sl(2)"));
    CHECK_FALSE(c.spherical);
    CHECK_FALSE(oracle_says(datum({4}, "sp(6)+sl(2)")));
    CHECK_THROWS_AS(classify_grassmannian(5, parse_factors("sp(6)+sl(2)")), Error);
}

TEST_CASE("products of two flag varieties") {
    CHECK(product_flags_spherical({2, 3}, {1, 2, 2}));
    CHECK_FALSE(product_flags_spherical({1, 1, 3}, {1, 1, 3}));
    CHECK_FALSE(product_flags_spherical({3, 3}, {2, 2, 2}));
    CHECK_THROWS_AS(product_flags_spherical({2, 3}, {1, 1}), Error);
}

TEST_CASE("bounded subalgebras of sl(W)") {
    CHECK(bounded_subalgebra_sl(representation(parse_module("sl(3) on sym2"))));
    CHECK_FALSE(bounded_subalgebra_sl(representation(parse_module("so(5) on nat+nat"))));
    CHECK(bounded_subalgebra_sl(make_algebra(FactorType::gl, 4)));
    CHECK_THROWS_AS(bounded_subalgebra_sl(parse_module("so(7) on spin"), {}), Error);
}

TEST_CASE("verdicts are invariant under cotangent equivalence") {
    for (const std::string& k : {"sp(6)", "sl(2)+sp(4)", "so(6)", "sl(3)+sl(3)"}) {
        for (const FlagType& f : all_flag_types(6)) {
            ClassificationDatum d = datum(f.dims, k);
            d.summands = parse_factors(k);
            const bool v = classify_flag_datum(d).spherical;
            ClassificationDatum e = d;
            e.dims = canonical_flag(f).dims;
            CHECK(classify_flag_datum(e).spherical == v);
        }
    }
}

TEST_CASE("SO and SP specializations") {
    for (int n = 3; n <= 7; ++n) {
        for (const FlagType& f : all_flag_types(n)) {
            const ClassificationDatum d = datum(f.dims, "so(" + std::to_string(n) + ")");
            CHECK(classify_flag_datum(d).spherical == (f.dims.size() == 1));
        }
    }
    for (int n : {4, 6}) {
        for (const FlagType& f : all_flag_types(n)) {
            const ClassificationDatum d = datum(f.dims, "sp(" + std::to_string(n) + ")");
            const FlagType c = canonical_flag(f);
            std::vector<int> steps = c.steps();
            std::sort(steps.begin(), steps.end());
            const bool listed = steps.size() == 2 || (steps.size() == 3 && steps.front() == 1) ||
                                (steps.size() == 4 && steps == std::vector<int>{1, 1, 1, n - 3});
            INFO(to_string(f) << " sp(" << n << ")");
            CHECK(classify_flag_datum(d).spherical == listed);
            CHECK(oracle_says(d) == listed);
        }
    }
}

TEST_CASE("invalid data") {
    CHECK_THROWS_AS(classify_flag_datum(datum({2}, "e6(27)")), Error);
    CHECK_THROWS_AS(classify_flag_datum(datum({3, 2}, "sl(4)")), Error);
}
