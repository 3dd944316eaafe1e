#include "lieflag/errors.hpp"
#include "lieflag/lie_catalog.hpp"
#include "lieflag/parse.hpp"
#include "lieflag/spherical_table.hpp"
#include "lieflag/sphericity_oracle.hpp"

#include <doctest.h>

using namespace lieflag;

namespace {

// Upper-triangular matrices in the span, counted independently of the
// Borel list: rank of the span intersected with the triangular subspace.
Index triangular_part_dim(const std::vector<QMatrix>& basis) {
    const Index n = basis.front().rows();
    // Solve sum c_k B_k with all strictly-lower entries zero.
    std::vector<std::pair<Index, Index>> lower;
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < i; ++j) lower.emplace_back(i, j);
    QMatrix a(static_cast<Index>(lower.size()), static_cast<Index>(basis.size()));
    for (size_t r = 0; r < lower.size(); ++r)
        for (size_t k = 0; k < basis.size(); ++k) a(static_cast<Index>(r), static_cast<Index>(k)) = basis[k](lower[r].first, lower[r].second);
    return static_cast<Index>(basis.size()) - exact_rank(a);
}

std::vector<Rational> V(std::initializer_list<long> v) {
    std::vector<Rational> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

}  // namespace

TEST_CASE("classical algebras have the classical dimensions") {
    for (int n = 2; n <= 6; ++n) {
        const CatalogAlgebra sl = make_algebra(FactorType::sl, n);
        CHECK(sl.dim() == n * n - 1);
        CHECK(sl.borel_dim() == (sl.dim() + (n - 1)) / 2);
        CHECK(sl.borel_dim() == triangular_part_dim(sl.basis));
        CHECK(is_bracket_closed(sl.basis));
        if (n >= 3) {
            const CatalogAlgebra so = make_algebra(FactorType::so, n);
            CHECK(so.dim() == n * (n - 1) / 2);
            CHECK(so.borel_dim() == (so.dim() + so.rank) / 2);
            CHECK(so.borel_dim() == triangular_part_dim(so.basis));
            CHECK(is_bracket_closed(so.basis));
        }
        if (n % 2 == 0) {
            const CatalogAlgebra sp = make_algebra(FactorType::sp, n);
            CHECK(sp.dim() == n * (n + 1) / 2);
            CHECK(sp.borel_dim() == (sp.dim() + n / 2) / 2);
            CHECK(sp.borel_dim() == triangular_part_dim(sp.basis));
            CHECK(is_bracket_closed(sp.basis));
        }
    }
    CHECK(make_algebra(FactorType::sl, 3).borel_dim() == 5);
    const CatalogAlgebra sp4 = make_algebra(FactorType::sp, 4);
    CHECK(sp4.dim() == 10);
    CHECK(sp4.borel_dim() == 6);
    CHECK_THROWS_AS(make_algebra(FactorType::sp, 3), Error);
}

TEST_CASE("representation dimensions") {
    CHECK(representation(parse_module("gl(3) on sym2")).module_dim == 6);
    CHECK(representation(parse_module("sl(4) on wedge2")).module_dim == 6);
    CHECK(representation(parse_module("sl(2)+sl(3) on nat(1)xnat(2)")).module_dim == 6);
    CHECK(representation(parse_module("sl(3) on nat+dual")).module_dim == 6);
    const CatalogAlgebra r = representation(parse_module("sl(3) on sym2"));
    CHECK(r.dim() == 8);
    CHECK(is_bracket_closed(r.basis));
    CHECK_THROWS_AS(representation(parse_module("so(7) on spin")), Error);
}

TEST_CASE("normalizers in gl") {
    for (int n = 2; n <= 4; ++n) {
        CHECK(normalizer_in_gl(make_algebra(FactorType::sl, n), {}).dim() == n * n);
        if (n >= 3) CHECK(normalizer_in_gl(make_algebra(FactorType::so, n), {}).dim() == n * (n - 1) / 2 + 1);
        CatalogAlgebra zero;
        zero.basis = {};
        zero.module_dim = n;
        CHECK(normalizer_in_gl(zero, {QMatrix::Zero(n, n)}).dim() == n * n);
    }
    const CatalogAlgebra sp4 = make_algebra(FactorType::sp, 4);
    const CatalogAlgebra nsp = normalizer_in_gl(sp4, {});
    CHECK(is_bracket_closed(nsp.basis));
    CHECK(span_dim(nsp.basis) == nsp.dim());
}

TEST_CASE("table examples") {
    CHECK(is_spherical_module_by_table(parse_module("sl(4) on nat+dual"), {V({1, -1})}) == false);
    CHECK(is_spherical_module_by_table(parse_module("sl(4) on nat+dual"), {V({1, 0})}));
    CHECK(is_spherical_module_by_table(parse_module("sp(4) on nat"), {V({1})}));
    CHECK_FALSE(is_spherical_module_by_table(parse_module("so(5) on nat+nat"), {V({1, 0}), V({0, 1})}));
    CHECK_FALSE(is_spherical_module(parse_module("so(5) on nat+nat"), {V({1, 0}), V({0, 1})}, false).spherical);
    const TableVerdict v = table_module_verdict(parse_module("sl(3) on nat+dual"), {V({1, 0}), V({0, 1})});
    CHECK(v.spherical);
    REQUIRE(v.matches.size() == 1);
    CHECK(v.matches[0].entry_id == "iii-3");
    CHECK(find_table_entry("iii-3") != nullptr);
    CHECK(find_table_entry("x-1") == nullptr);
}

TEST_CASE("structural normalizer condition equals the matrix computation") {
    const std::vector<std::string> modules = {"sl(3) on nat+dual", "sp(4) on nat", "sl(2)+sl(3) on nat(1)+nat(1)xnat(2)",
                                              "sl(4) on nat+wedge2", "so(5) on nat"};
    for (const std::string& text : modules) {
        const ModuleSpec m = parse_module(text);
        const size_t k = m.summands.size();
        std::vector<CenterVectors> options = {{}, {identity_center(m)}};
        CenterVectors axes;
        for (size_t i = 0; i < k; ++i) {
            std::vector<Rational> e(k, Rational(0));
            e[i] = 1;
            axes.push_back(e);
        }
        options.push_back(axes);
        for (const CenterVectors& c : options)
            CHECK(normalizer_condition_structural(m, c) == normalizer_condition_by_matrices(m, c));
    }
}

TEST_CASE("table and oracle agree on small table entries") {
    int checked = 0;
    for (const SphericalTableEntry& e : spherical_table()) {
        if (!e.matrix_model) continue;
        std::vector<int> p(static_cast<size_t>(e.params), 1);
        while (true) {
            for (const TableBlock& b : e.instantiate(p)) {
                const ModuleSpec m{b.factors, b.summands};
                if (m.dimension() > 16) continue;
                const size_t k = m.summands.size();
                CenterVectors full;
                for (size_t i = 0; i < k; ++i) {
                    std::vector<Rational> v(k, Rational(0));
                    v[i] = 1;
                    full.push_back(v);
                }
                for (const CenterVectors& c : {full, b.centers, CenterVectors{}}) {
                    INFO(e.id << " " << to_string(m) << " centers=" << c.size());
                    CHECK(is_spherical_module_by_table(m, c) == is_spherical_module(m, c, false).spherical);
                    ++checked;
                }
            }
            size_t i = 0;
            while (i < p.size() && ++p[i] > 4) p[i++] = 1;
            if (i == p.size()) break;
        }
    }
    CHECK(checked > 200);
}

TEST_CASE("module grammar") {
    const ModuleSpec m = parse_module("sl(3)+sp(4) on C3+C4");
    CHECK(m.dimension() == 7);
    CHECK(m.summands.size() == 2);
    CHECK(parse_module("sl(2)+sl(3)") == natural_sum({Factor{FactorType::sl, 2}, Factor{FactorType::sl, 3}}));
    CHECK_THROWS_AS(parse_module("sl(2)+sl(3) on nat"), Error);
    CHECK_THROWS_AS(parse_module("foo(3)"), Error);
    CHECK_THROWS_AS(parse_center("1,x"), Error);
}
