#include "lieflag/tuples_weights.hpp"
#include "lieflag/errors.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>

namespace lieflag {

MonodromyClass MonodromyClass::of_residue(const Rational& r) {
    MonodromyClass m;
    m.residue = frac(r);
    return m;
}

MonodromyClass MonodromyClass::generic_class(const std::string& tag) {
    MonodromyClass m;
    m.generic = true;
    m.tag = tag;
    return m;
}

bool MonodromyClass::operator==(const MonodromyClass& o) const {
    if (generic != o.generic) return false;
    return generic ? tag == o.tag : residue == o.residue;
}

std::string to_string(const MonodromyClass& m) { return m.generic ? "generic:" + m.tag : to_string(m.residue); }

std::string to_string(const RationalTuple& t) {
    std::string s = "(";
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += to_string(t[i]);
    }
    return s + ")";
}

bool is_decreasing(const RationalTuple& t) {
    for (size_t i = 0; i + 1 < t.size(); ++i) {
        const Rational gap = t[i] - t[i + 1];
        if (!is_integer(gap) || gap < 0) return false;
    }
    return true;
}

namespace {

RationalTuple without(const RationalTuple& t, size_t k) {
    RationalTuple out;
    for (size_t i = 0; i < t.size(); ++i)
        if (i != k) out.push_back(t[i]);
    return out;
}

bool all_integral_differences(const RationalTuple& t) {
    for (size_t i = 1; i < t.size(); ++i)
        if (!is_integer(t[i] - t[0])) return false;
    return true;
}

}  // namespace

TupleClass classify_tuple(const RationalTuple& t) {
    TupleClass c;
    if (is_decreasing(t)) {
        c.kind = DecreasingKind::Decreasing;
    } else {
        for (size_t k = 0; k < t.size(); ++k)
            if (is_decreasing(without(t, k))) c.removable.push_back(static_cast<int>(k));
        c.kind = c.removable.empty() ? DecreasingKind::Neither : DecreasingKind::SemiDecreasing;
    }
    c.integral = all_integral_differences(t);
    if (!c.integral) {
        for (size_t k = 0; k < t.size() && !c.semi_integral; ++k)
            if (all_integral_differences(without(t, k))) c.semi_integral = true;
    }
    std::set<Rational> distinct(t.begin(), t.end());
    c.regular = distinct.size() == t.size();
    return c;
}

MonodromyClass monodromy_at(const RationalTuple& t, int removed_index) {
    if (t.size() < 3) throw Error(ErrorKind::TupleTooShort, "monodromy needs at least 3 coordinates");
    if (removed_index < 0 || static_cast<size_t>(removed_index) >= t.size())
        throw Error(ErrorKind::BadParameter, "removed index out of range");
    const RationalTuple rest = without(t, static_cast<size_t>(removed_index));
    if (is_decreasing(t) || !is_decreasing(rest))
        throw Error(ErrorKind::NotSemiDecreasing, "index " + std::to_string(removed_index) + " is not removable");
    return MonodromyClass::of_residue(t[static_cast<size_t>(removed_index)] - rest.front());
}

MonodromyClass monodromy(const RationalTuple& t) {
    if (t.size() < 3) throw Error(ErrorKind::TupleTooShort, "monodromy needs at least 3 coordinates");
    const TupleClass c = classify_tuple(t);
    if (c.kind != DecreasingKind::SemiDecreasing)
        throw Error(ErrorKind::NotSemiDecreasing, "tuple " + to_string(t) + " is not semi-decreasing");
    return monodromy_at(t, c.removable.front());
}

bool is_shale_weil(const RationalTuple& t) {
    if (t.empty()) return false;
    const Rational half(1, 2);
    for (const Rational& x : t)
        if (!is_integer(x - half)) return false;
    const size_t n = t.size();
    for (size_t i = 0; i + 2 < n; ++i)
        if (!(t[i] > t[i + 1])) return false;
    if (n >= 2 && !(t[n - 2] > abs(t[n - 1]))) return false;
    return true;
}

bool is_positive_sw(const RationalTuple& t) { return is_shale_weil(t) && t.back() > 0; }

RationalTuple sigma(const RationalTuple& t) {
    RationalTuple out = t;
    if (!out.empty()) out.back() = -out.back();
    return out;
}

RationalTuple rho_tuple(int n) {
    RationalTuple out;
    for (int i = n; i >= 1; --i) out.push_back(Rational(i));
    return out;
}

RationalTuple mu0_tuple(int n) {
    RationalTuple out;
    for (int i = n; i >= 1; --i) out.push_back(Rational(2 * i - 1, 2));
    return out;
}

RationalTuple ord(const RationalTuple& t) {
    RationalTuple out = t;
    std::sort(out.begin(), out.end(), std::greater<Rational>());
    return out;
}

RationalTuple apply_s(const RationalTuple& t, int k) {
    if (k < 1 || static_cast<size_t>(k) >= t.size()) throw Error(ErrorKind::BadParameter, "s_k index out of range");
    RationalTuple out = t;
    std::swap(out[static_cast<size_t>(k - 1)], out[static_cast<size_t>(k)]);
    return out;
}

Rational Root::pairing(const RationalTuple& psi) const {
    switch (kind) {
        case Kind::Difference: return psi[static_cast<size_t>(i)] - psi[static_cast<size_t>(j)];
        case Kind::Sum: return psi[static_cast<size_t>(i)] + psi[static_cast<size_t>(j)];
        case Kind::Long: return psi[static_cast<size_t>(i)];
    }
    return 0;
}

RationalTuple Root::reflect(const RationalTuple& psi) const {
    RationalTuple out = psi;
    const auto a = static_cast<size_t>(i);
    const auto b = static_cast<size_t>(j);
    switch (kind) {
        case Kind::Difference: std::swap(out[a], out[b]); break;
        case Kind::Sum:
            out[a] = -psi[b];
            out[b] = -psi[a];
            break;
        case Kind::Long: out[a] = -psi[a]; break;
    }
    return out;
}

std::string Root::name() const {
    const std::string a = "e" + std::to_string(i + 1);
    const std::string b = "e" + std::to_string(j + 1);
    switch (kind) {
        case Kind::Difference: return a + "-" + b;
        case Kind::Sum: return a + "+" + b;
        case Kind::Long: return "2" + a;
    }
    return "?";
}

std::vector<Root> WeightOrderContext::positive_roots() const {
    std::vector<Root> roots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) roots.push_back({Root::Kind::Difference, i, j});
    if (type == RootType::C) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) roots.push_back({Root::Kind::Sum, i, j});
        for (int i = 0; i < n; ++i) roots.push_back({Root::Kind::Long, i, i});
    }
    return roots;
}

namespace {

void check_context(const RationalTuple& psi, const WeightOrderContext& ctx) {
    if (ctx.n > ctx.rank_bound)
        throw Error(ErrorKind::RankTooLarge, "rank " + std::to_string(ctx.n) + " exceeds bound " + std::to_string(ctx.rank_bound));
    if (static_cast<int>(psi.size()) != ctx.n) throw Error(ErrorKind::MismatchedSize, "weight length differs from the rank");
}

}  // namespace

bool weight_leq(const RationalTuple& phi, const RationalTuple& psi, const WeightOrderContext& ctx) {
    check_context(phi, ctx);
    check_context(psi, ctx);
    if (phi == psi) return true;
    const std::vector<Root> roots = ctx.positive_roots();
    // Descend from psi: each move s_gamma x with pairing in Z_{>0} is strictly smaller.
    std::set<RationalTuple> seen{psi};
    std::deque<RationalTuple> queue{psi};
    while (!queue.empty()) {
        const RationalTuple x = queue.front();
        queue.pop_front();
        for (const Root& r : roots) {
            const Rational p = r.pairing(x);
            if (!is_integer(p) || p <= 0) continue;
            RationalTuple y = r.reflect(x);
            if (y == phi) return true;
            if (seen.insert(y).second) queue.push_back(std::move(y));
        }
    }
    return false;
}

bool is_dominant(const RationalTuple& psi, const WeightOrderContext& ctx) {
    check_context(psi, ctx);
    for (const Root& r : ctx.positive_roots()) {
        const Rational p = r.pairing(psi);
        if (is_integer(p) && p < 0) return false;
    }
    return true;
}

StabilizerDescriptor weyl_stabilizer(const RationalTuple& psi, const WeightOrderContext& ctx) {
    check_context(psi, ctx);
    StabilizerDescriptor d;
    for (const Root& r : ctx.positive_roots())
        if (r.pairing(psi) == 0) d.generators.push_back(r);
    auto factorial = [](long k) {
        long f = 1;
        for (long i = 2; i <= k; ++i) f *= i;
        return f;
    };
    // Signed permutations fixing psi permute coordinates with equal absolute
    // value; in type A only equal coordinates may be exchanged.
    std::map<Rational, long> counts;
    for (const Rational& x : psi) ++counts[ctx.type == RootType::A ? x : abs(x)];
    d.order = 1;
    for (const auto& [value, count] : counts) {
        d.order *= factorial(count);
        if (ctx.type == RootType::C && value == 0) d.order *= 1L << count;
    }
    return d;
}

bool is_integral_weight(const RationalTuple& psi, const WeightOrderContext& ctx) {
    check_context(psi, ctx);
    for (const Root& r : ctx.positive_roots())
        if (!is_integer(r.pairing(psi))) return false;
    return true;
}

bool weights_equivalent(const RationalTuple& phi1, const RationalTuple& phi2, const WeightOrderContext& ctx) {
    check_context(phi1, ctx);
    check_context(phi2, ctx);
    RationalTuple diff(phi1.size());
    for (size_t i = 0; i < diff.size(); ++i) diff[i] = phi1[i] - phi2[i];
    if (!is_integral_weight(diff, ctx)) return false;
    // Stabilizers are reflection subgroups, so they coincide iff they contain
    // the same reflections.
    return weyl_stabilizer(phi1, ctx).generators == weyl_stabilizer(phi2, ctx).generators;
}

std::vector<RationalTuple> reflection_orbit(const RationalTuple& psi, const std::vector<Root>& gens) {
    std::set<RationalTuple> seen{psi};
    std::deque<RationalTuple> queue{psi};
    while (!queue.empty()) {
        const RationalTuple x = queue.front();
        queue.pop_front();
        for (const Root& r : gens) {
            RationalTuple y = r.reflect(x);
            if (seen.insert(y).second) queue.push_back(std::move(y));
        }
    }
    return {seen.begin(), seen.end()};
}

bool correctly_ordered(const RationalTuple& phi, const RationalTuple& psi, const WeightOrderContext& ctx) {
    if (!is_dominant(phi, ctx)) return false;
    RationalTuple diff(phi.size());
    for (size_t i = 0; i < diff.size(); ++i) diff[i] = phi[i] - psi[i];
    if (!is_integral_weight(diff, ctx)) return false;
    for (const RationalTuple& w_psi : reflection_orbit(psi, weyl_stabilizer(phi, ctx).generators))
        if (!weight_leq(psi, w_psi, ctx)) return false;
    return true;
}

}  // namespace lieflag
