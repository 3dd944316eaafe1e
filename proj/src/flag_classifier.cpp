#include "lieflag/flag_classifier.hpp"
#include "lieflag/errors.hpp"

#include <algorithm>
#include <numeric>

namespace lieflag {

int ClassificationDatum::ambient() const {
    int n = 0;
    for (const Factor& f : summands) n += f.n;
    return n;
}

FlagType ClassificationDatum::flag() const { return FlagType::make(dims, ambient()); }

ModuleSpec ClassificationDatum::module() const { return natural_sum(summands); }

void ClassificationDatum::validate() const {
    if (summands.empty()) throw Error(ErrorKind::BadParameter, "datum has no summands");
    for (const Factor& f : summands) {
        if (f.type != FactorType::sl && f.type != FactorType::so && f.type != FactorType::sp)
            throw Error(ErrorKind::UnsupportedShape, factor_name(f) + " is not an sl, so or sp factor");
    }
    module().validate();
    (void)flag();
    if (center) {
        for (const std::vector<Rational>& c : *center)
            if (c.size() != summands.size())
                throw Error(ErrorKind::DimensionMismatch, "center vector length differs from the number of summands");
    }
}

const char* to_string(NotSphericalReason r) {
    return r == NotSphericalReason::FailedReduction ? "failed-reduction" : "absent-from-list";
}

std::string to_string(const ClassificationDatum& d) {
    std::string s = "(";
    for (size_t i = 0; i < d.dims.size(); ++i) s += (i ? "," : "") + std::to_string(d.dims[i]);
    s += "; ";
    for (size_t i = 0; i < d.summands.size(); ++i) s += (i ? "+" : "") + factor_name(d.summands[i]);
    return s + ")";
}

ClassificationDatum normalize_datum(const ClassificationDatum& d) {
    d.validate();
    ClassificationDatum out;
    std::vector<Factor> f = d.summands;
    for (Factor& x : f)
        if (x.type == FactorType::sp && x.n == 2) x.type = FactorType::sl;
    std::vector<size_t> order(f.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return f[a] < f[b]; });
    for (size_t i : order) out.summands.push_back(f[i]);
    if (d.center) {
        CenterVectors c;
        for (const std::vector<Rational>& v : *d.center) {
            std::vector<Rational> w;
            for (size_t i : order) w.push_back(v[i]);
            c.push_back(w);
        }
        out.center = c;
    }
    out.dims = canonical_flag(d.flag()).dims;
    return out;
}

namespace {

enum class Slot { Any, Sl, Sl2, Sp, Sp4, Trivial };

bool slot_accepts(Slot s, const Factor& f) {
    switch (s) {
        case Slot::Any: return true;
        case Slot::Sl: return f.type == FactorType::sl;
        case Slot::Sl2: return f.type == FactorType::sl && f.n == 2;
        case Slot::Sp: return f.type == FactorType::sp || (f.type == FactorType::sl && f.n == 2);
        case Slot::Sp4: return f.type == FactorType::sp && f.n == 4;
        case Slot::Trivial: return f.type == FactorType::sl && f.n == 1;
    }
    return false;
}

// Admissible step multisets of the listed flag, given the ambient dimension.
enum class Steps { AnyR, R2, R3, Any, Three, ThreeWithOne, OneOne, OneOneOne };

bool steps_accept(Steps p, const std::vector<int>& sorted_steps, int n) {
    const size_t k = sorted_steps.size();
    auto is = [&](std::vector<int> v) {
        std::sort(v.begin(), v.end());
        return v == sorted_steps;
    };
    switch (p) {
        case Steps::AnyR: return k == 2;
        case Steps::R2: return is({2, n - 2});
        case Steps::R3: return is({3, n - 3});
        case Steps::Any: return k >= 2;
        case Steps::Three: return k == 3;
        case Steps::ThreeWithOne: return k == 3 && sorted_steps.front() == 1;
        case Steps::OneOne: return is({1, 1, n - 2});
        case Steps::OneOneOne: return is({1, 1, 1, n - 3});
    }
    return false;
}

struct ListEntry {
    const char* id;
    std::vector<Slot> slots;
    Steps steps;
};

// Grassmannian items (s = 1) and flag items (s >= 2).
const std::vector<ListEntry>& grassmannian_list() {
    static const std::vector<ListEntry> list{
        {"1", {Slot::Any}, Steps::AnyR},
        {"2-1-1", {Slot::Sp, Slot::Sl}, Steps::R2},
        {"2-1-2", {Slot::Sp, Slot::Sp}, Steps::R2},
        {"2-2", {Slot::Sl, Slot::Sp}, Steps::R3},
        {"2-3", {Slot::Sp, Slot::Trivial}, Steps::AnyR},
        {"2-4", {Slot::Sl, Slot::Sp4}, Steps::AnyR},
        {"2-5", {Slot::Sl, Slot::Sl}, Steps::AnyR},
        {"3-1-1", {Slot::Sl, Slot::Sl, Slot::Sl}, Steps::R2},
        {"3-1-2", {Slot::Sl, Slot::Sl, Slot::Sp}, Steps::R2},
        {"3-1-3", {Slot::Sl, Slot::Sp, Slot::Sp}, Steps::R2},
        {"3-1-4", {Slot::Sp, Slot::Sp, Slot::Sp}, Steps::R2},
        {"3-2", {Slot::Sl, Slot::Sl, Slot::Trivial}, Steps::AnyR},
    };
    return list;
}

const std::vector<ListEntry>& flag_list() {
    static const std::vector<ListEntry> list{
        {"II-1-1", {Slot::Sl}, Steps::Any},
        {"II-1-2", {Slot::Sp}, Steps::OneOneOne},
        {"II-1-3", {Slot::Sp}, Steps::ThreeWithOne},
        {"II-2-1", {Slot::Sl, Slot::Trivial}, Steps::Any},
        {"II-2-2", {Slot::Sl, Slot::Sl}, Steps::ThreeWithOne},
        {"II-2-3", {Slot::Sl2, Slot::Sl}, Steps::Three},
        {"II-2-4", {Slot::Sl, Slot::Sp}, Steps::OneOne},
        {"II-2-5", {Slot::Sp, Slot::Sp}, Steps::OneOne},
    };
    return list;
}

bool slots_match(const std::vector<Slot>& slots, const std::vector<Factor>& summands) {
    if (slots.size() != summands.size()) return false;
    std::vector<size_t> perm(summands.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (size_t i = 0; i < slots.size() && ok; ++i) ok = slot_accepts(slots[i], summands[perm[i]]);
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

CenterVectors largest_center(size_t k) {
    CenterVectors c;
    for (size_t i = 0; i < k; ++i) {
        std::vector<Rational> e(k, Rational(0));
        e[i] = 1;
        c.push_back(e);
    }
    return c;
}

ClassificationVerdict projective_space_case(const ClassificationDatum& nd) {
    ClassificationVerdict v;
    v.normalized = nd;
    v.case_id = "P(V)";
    const ModuleSpec m = nd.module();
    CenterVectors c = nd.center ? *nd.center : largest_center(nd.summands.size());
    c.push_back(identity_center(m));
    const TableVerdict t = table_module_verdict(m, c);
    v.spherical = t.spherical;
    std::string ids;
    for (const BlockMatch& b : t.matches) ids += (ids.empty() ? "" : ",") + b.entry_id;
    v.detail = "module table blocks [" + ids + "]: " + t.reason;
    if (!v.spherical) v.reason = NotSphericalReason::FailedReduction;
    return v;
}

}  // namespace

ClassificationVerdict classify_flag_datum(const ClassificationDatum& d) {
    const ClassificationDatum nd = normalize_datum(d);
    const FlagType f = nd.flag();
    const int n = f.ambient;
    std::vector<int> steps = f.steps();
    std::sort(steps.begin(), steps.end());
    if (steps == std::vector<int>{1, n - 1}) return projective_space_case(nd);
    ClassificationVerdict v;
    v.normalized = nd;
    if (steps.size() == 2) {
        for (const ListEntry& e : grassmannian_list())
            if (steps_accept(e.steps, steps, n) && slots_match(e.slots, nd.summands)) {
                v.spherical = true;
                v.case_id = std::string("I-") + e.id;
                break;
            }
    } else {
        for (const ListEntry& e : flag_list())
            if (steps_accept(e.steps, steps, n) && slots_match(e.slots, nd.summands)) {
                v.spherical = true;
                v.case_id = e.id;
                break;
            }
    }
    v.detail = v.spherical ? "listed datum up to cotangent-equivalence" : "no listed datum matches";
    return v;
}

ClassificationVerdict classify_grassmannian(int r, const std::vector<Factor>& summands) {
    ClassificationDatum d;
    d.summands = summands;
    const int n = d.ambient();
    if (r < 1 || 2 * r > n) throw Error(ErrorKind::BadParameter, "need 1 <= r <= n/2");
    d.dims = {r};
    if (r == 1) return classify_flag_datum(d);
    ClassificationDatum nd = normalize_datum(d);
    nd.dims = {r};
    ClassificationVerdict v;
    v.normalized = nd;
    const std::vector<int> steps{r, n - r};
    for (const ListEntry& e : grassmannian_list()) {
        bool step_ok = e.steps == Steps::AnyR || (e.steps == Steps::R2 && r == 2) || (e.steps == Steps::R3 && r == 3);
        if (step_ok && slots_match(e.slots, nd.summands)) {
            v.spherical = true;
            v.case_id = e.id;
            break;
        }
    }
    v.detail = v.spherical ? "listed datum" : "no listed datum matches";
    return v;
}

bool product_flags_spherical(std::vector<int> a, std::vector<int> b) {
    for (const std::vector<int>* s : {&a, &b}) {
        if (s->size() < 2) throw Error(ErrorKind::BadParameter, "a flag has at least two steps");
        for (int x : *s)
            if (x < 1) throw Error(ErrorKind::BadParameter, "steps must be positive");
    }
    if (std::accumulate(a.begin(), a.end(), 0) != std::accumulate(b.begin(), b.end(), 0))
        throw Error(ErrorKind::MismatchedSize, "step multisets have different sums");
    auto contains = [](const std::vector<int>& s, int x) { return std::find(s.begin(), s.end(), x) != s.end(); };
    auto ordered = [&](const std::vector<int>& p, const std::vector<int>& q) {
        if (p.size() != 2) return false;
        if (q.size() == 2) return true;
        if (q.size() == 3 && contains(q, 1)) return true;
        if (q.size() == 3 && contains(p, 2)) return true;
        return contains(p, 1);
    };
    return ordered(a, b) || ordered(b, a);
}

CatalogAlgebra datum_algebra(const ClassificationDatum& d) {
    d.validate();
    const ModuleSpec m = d.module();
    const CenterVectors c = d.center ? *d.center : largest_center(d.summands.size());
    return with_center(representation(m), m, c);
}

bool bounded_subalgebra_sl(const CatalogAlgebra& k, const OracleConfig& cfg) {
    return is_spherical_module(k, true, cfg).spherical;
}

bool bounded_subalgebra_sl(const ModuleSpec& w, const CenterVectors& center, const OracleConfig& cfg) {
    return is_spherical_module(w, center, true, cfg).spherical;
}

}  // namespace lieflag
