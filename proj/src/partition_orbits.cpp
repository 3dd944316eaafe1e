#include "lieflag/partition_orbits.hpp"
#include "lieflag/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace lieflag {

Partition Partition::from_parts(std::vector<int> parts) {
    for (int p : parts)
        if (p <= 0) throw Error(ErrorKind::BadParameter, "partition parts must be positive");
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition{std::move(parts)};
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

FlagType FlagType::make(std::vector<int> dims, int ambient) {
    if (ambient < 2) throw Error(ErrorKind::BadParameter, "flag ambient dimension must be at least 2");
    if (dims.empty()) throw Error(ErrorKind::BadParameter, "flag needs at least one subspace");
    int prev = 0;
    for (int d : dims) {
        if (d <= prev) throw Error(ErrorKind::BadParameter, "flag dimensions must increase strictly from 1");
        prev = d;
    }
    if (prev >= ambient) throw Error(ErrorKind::BadParameter, "flag dimensions must stay below the ambient dimension");
    return FlagType{std::move(dims), ambient};
}

FlagType FlagType::from_steps(const std::vector<int>& steps) {
    if (steps.size() < 2) throw Error(ErrorKind::BadParameter, "a flag needs at least two steps");
    std::vector<int> dims;
    int acc = 0;
    for (size_t i = 0; i + 1 < steps.size(); ++i) {
        if (steps[i] <= 0) throw Error(ErrorKind::BadParameter, "flag steps must be positive");
        acc += steps[i];
        dims.push_back(acc);
    }
    if (steps.back() <= 0) throw Error(ErrorKind::BadParameter, "flag steps must be positive");
    return make(std::move(dims), acc + steps.back());
}

std::vector<int> FlagType::steps() const {
    std::vector<int> out;
    int prev = 0;
    for (int d : dims) {
        out.push_back(d - prev);
        prev = d;
    }
    out.push_back(ambient - prev);
    return out;
}

int FlagType::dimension() const {
    const std::vector<int> s = steps();
    int total = 0;
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j) total += s[i] * s[j];
    return total;
}

Partition step_partition(const FlagType& f) { return Partition::from_parts(f.steps()); }

Partition conjugate(const Partition& p) {
    std::vector<int> out;
    if (p.parts.empty()) return Partition{};
    const int largest = p.parts.front();
    for (int k = 1; k <= largest; ++k) {
        int c = 0;
        for (int part : p.parts)
            if (part >= k) ++c;
        out.push_back(c);
    }
    return Partition{out};
}

Partition richardson_partition(const FlagType& f) { return conjugate(step_partition(f)); }

bool dominance_leq(const Partition& p, const Partition& q) {
    if (p.size() != q.size()) throw Error(ErrorKind::MismatchedSize, "partitions of different integers");
    const size_t len = std::max(p.parts.size(), q.parts.size());
    int sp = 0, sq = 0;
    for (size_t i = 0; i < len; ++i) {
        sp += i < p.parts.size() ? p.parts[i] : 0;
        sq += i < q.parts.size() ? q.parts[i] : 0;
        if (sp > sq) return false;
    }
    return true;
}

bool cotangent_equivalent(const FlagType& f1, const FlagType& f2) {
    if (f1.ambient != f2.ambient) throw Error(ErrorKind::MismatchedSize, "flags in different ambient spaces");
    return step_partition(f1) == step_partition(f2);
}

FlagOrderRelation flag_order(const FlagType& f1, const FlagType& f2) {
    if (f1.ambient != f2.ambient) throw Error(ErrorKind::MismatchedSize, "flags in different ambient spaces");
    const Partition r1 = richardson_partition(f1);
    const Partition r2 = richardson_partition(f2);
    if (r1 == r2) return FlagOrderRelation::CotangentEquivalent;
    if (dominance_leq(r2, r1)) return FlagOrderRelation::Higher;
    if (dominance_leq(r1, r2)) return FlagOrderRelation::Lower;
    return FlagOrderRelation::Incomparable;
}

long orbit_dim(const Partition& p) {
    const long n = p.size();
    long sq = 0;
    for (int c : conjugate(p).parts) sq += static_cast<long>(c) * c;
    return n * n - sq;
}

FlagType canonical_flag(const FlagType& f) {
    std::vector<int> s = f.steps();
    std::sort(s.begin(), s.end());
    return FlagType::from_steps(s);
}

std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int maxpart) {
        if (left == 0) {
            out.push_back(Partition{cur});
            return;
        }
        for (int p = std::min(left, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    if (n >= 1) rec(n, n);
    return out;
}

std::vector<FlagType> all_flag_types(int n) {
    std::vector<FlagType> out;
    if (n < 2) return out;
    // Subsets of {1, ..., n-1} that are non-empty, encoded as bit masks.
    for (unsigned mask = 1; mask < (1u << (n - 1)); ++mask) {
        std::vector<int> dims;
        for (int d = 1; d < n; ++d)
            if (mask & (1u << (d - 1))) dims.push_back(d);
        out.push_back(FlagType::make(dims, n));
    }
    return out;
}

std::string to_string(const Partition& p) {
    std::string s = "(";
    for (size_t i = 0; i < p.parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p.parts[i]);
    }
    return s + ")";
}

std::string to_string(const FlagType& f) {
    std::string s = "Fl(";
    for (size_t i = 0; i < f.dims.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(f.dims[i]);
    }
    return s + ";C^" + std::to_string(f.ambient) + ")";
}

const char* to_string(FlagOrderRelation r) {
    switch (r) {
        case FlagOrderRelation::Higher: return "Higher";
        case FlagOrderRelation::Lower: return "Lower";
        case FlagOrderRelation::CotangentEquivalent: return "CotangentEquivalent";
        case FlagOrderRelation::Incomparable: return "Incomparable";
    }
    return "?";
}

}  // namespace lieflag
