// Partitions, partial flag types and the order on flag varieties induced by
// closures of Richardson nilpotent orbits in type A.
#ifndef LIEFLAG_PARTITION_ORBITS_HPP
#define LIEFLAG_PARTITION_ORBITS_HPP

#include <string>
#include <vector>

namespace lieflag {

/// Weakly decreasing sequence of positive integers.
struct Partition {
    std::vector<int> parts;

    /// Sorts and validates; throws BadParameter on non-positive parts.
    static Partition from_parts(std::vector<int> parts);
    int size() const;
    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;
};

/// Dimension vector 0 < n_1 < ... < n_s < n of a partial flag variety.
struct FlagType {
    std::vector<int> dims;
    int ambient = 0;

    /// Validates strict increase and the bounds; throws BadParameter.
    static FlagType make(std::vector<int> dims, int ambient);
    /// Builds the flag whose consecutive steps are `steps` (all positive).
    static FlagType from_steps(const std::vector<int>& steps);
    static FlagType grassmannian(int r, int ambient) { return make({r}, ambient); }

    /// Steps (n_1, n_2 - n_1, ..., n - n_s) in flag order.
    std::vector<int> steps() const;
    /// Dimension of the variety: sum over i < j of d_i d_j for the steps d.
    int dimension() const;
    bool operator==(const FlagType&) const = default;
};

enum class FlagOrderRelation { Higher, Lower, CotangentEquivalent, Incomparable };

/// Multiset of steps sorted descending.
Partition step_partition(const FlagType& f);
/// Conjugate (transposed) partition.
Partition conjugate(const Partition& p);
/// Partition of the Richardson orbit: the conjugate of the step partition.
Partition richardson_partition(const FlagType& f);
/// Dominance order: every prefix sum of p is at most the one of q.
bool dominance_leq(const Partition& p, const Partition& q);
/// Equal step multisets.
bool cotangent_equivalent(const FlagType& f1, const FlagType& f2);
/// Compares orbit closures: Higher when the orbit of f1 is strictly larger.
FlagOrderRelation flag_order(const FlagType& f1, const FlagType& f2);
/// Dimension n^2 - sum of squared conjugate parts of the nilpotent orbit.
long orbit_dim(const Partition& p);

/// Canonical member of a cotangent-equivalence class: steps sorted ascending.
FlagType canonical_flag(const FlagType& f);

/// All partitions of n, in decreasing lexicographic order.
std::vector<Partition> all_partitions(int n);
/// All flag types in C^n (every composition of n with at least two parts).
std::vector<FlagType> all_flag_types(int n);

std::string to_string(const Partition& p);
std::string to_string(const FlagType& f);
const char* to_string(FlagOrderRelation r);

}  // namespace lieflag

#endif  // LIEFLAG_PARTITION_ORBITS_HPP
