// Rational tuples (weights in epsilon coordinates): decreasing and
// semi-decreasing tuples, integrality, monodromy, Shale-Weil tuples, and the
// reflection order on weights for the root systems A_{n-1} and C_n.
#ifndef LIEFLAG_TUPLES_WEIGHTS_HPP
#define LIEFLAG_TUPLES_WEIGHTS_HPP

#include "lieflag/exact.hpp"

#include <string>
#include <vector>

namespace lieflag {

using RationalTuple = std::vector<Rational>;

enum class DecreasingKind { Decreasing, SemiDecreasing, Neither };

struct TupleClass {
    DecreasingKind kind = DecreasingKind::Neither;
    /// Indices whose removal leaves a decreasing tuple (SemiDecreasing only).
    std::vector<int> removable;
    bool integral = false;
    bool semi_integral = false;
    bool regular = false;

    bool singular_integral() const { return integral && !regular; }
    bool regular_integral() const { return integral && regular; }
};

/// Class of e^{2 pi i r}: a residue r in [0, 1), or a generic symbol.
struct MonodromyClass {
    bool generic = false;
    Rational residue = 0;
    std::string tag;

    static MonodromyClass of_residue(const Rational& r);
    static MonodromyClass generic_class(const std::string& tag);
    bool is_trivial() const { return !generic && residue == 0; }
    bool operator==(const MonodromyClass& o) const;
};

std::string to_string(const MonodromyClass& m);
std::string to_string(const RationalTuple& t);

/// Descending with non-negative integer gaps: t_i - t_j in Z_{>=0} for i < j.
bool is_decreasing(const RationalTuple& t);
/// Decreasing/semi-decreasing classification plus integrality flags.
TupleClass classify_tuple(const RationalTuple& t);
/// Residue of t - lambda_1 mod 1 for a removable coordinate t and the first
/// remaining coordinate lambda_1.  Throws TupleTooShort for n < 3 and
/// NotSemiDecreasing otherwise when the tuple is not semi-decreasing.
MonodromyClass monodromy(const RationalTuple& t);
/// Same quantity computed with a chosen removable index.
MonodromyClass monodromy_at(const RationalTuple& t, int removed_index);

/// Strictly descending half-integers with mu_{n-1} > |mu_n|.
bool is_shale_weil(const RationalTuple& t);
/// Shale-Weil with a positive last entry.
bool is_positive_sw(const RationalTuple& t);
/// Negates the last entry.
RationalTuple sigma(const RationalTuple& t);

/// rho = (n, n-1, ..., 1).
RationalTuple rho_tuple(int n);
/// mu_0 = (n - 1/2, ..., 3/2, 1/2).
RationalTuple mu0_tuple(int n);
/// Descending sort.
RationalTuple ord(const RationalTuple& t);
/// Swaps the entries k and k+1 (1-based k).
RationalTuple apply_s(const RationalTuple& t, int k);

enum class RootType { A, C };

/// A positive root in epsilon coordinates: e_i - e_j, e_i + e_j (i < j) or 2 e_i.
struct Root {
    enum class Kind { Difference, Sum, Long };
    Kind kind;
    int i;
    int j;

    /// Pairing of the coroot with a weight.
    Rational pairing(const RationalTuple& psi) const;
    /// Reflection of a weight in this root.
    RationalTuple reflect(const RationalTuple& psi) const;
    std::string name() const;
    bool operator==(const Root&) const = default;
};

struct WeightOrderContext {
    RootType type = RootType::A;
    int n = 0;
    int rank_bound = 8;

    std::vector<Root> positive_roots() const;
};

struct StabilizerDescriptor {
    std::vector<Root> generators;  ///< reflections fixing the weight
    long order = 1;
};

/// phi <= psi in the order generated by phi = s_gamma psi, pairing in Z_{>0}.
bool weight_leq(const RationalTuple& phi, const RationalTuple& psi, const WeightOrderContext& ctx);
/// No positive root pairs to a negative integer.
bool is_dominant(const RationalTuple& psi, const WeightOrderContext& ctx);
StabilizerDescriptor weyl_stabilizer(const RationalTuple& psi, const WeightOrderContext& ctx);
/// Every coroot pairs integrally with the weight.
bool is_integral_weight(const RationalTuple& psi, const WeightOrderContext& ctx);
bool weights_equivalent(const RationalTuple& phi1, const RationalTuple& phi2, const WeightOrderContext& ctx);
bool correctly_ordered(const RationalTuple& phi, const RationalTuple& psi, const WeightOrderContext& ctx);
/// Orbit of psi under the subgroup generated by the given reflections.
std::vector<RationalTuple> reflection_orbit(const RationalTuple& psi, const std::vector<Root>& gens);

}  // namespace lieflag

#endif  // LIEFLAG_TUPLES_WEIGHTS_HPP
