// Symmetric group modules: representations given by matrices of the simple
// transpositions, characters by the Murnaghan-Nakayama rule, the fixed-space
// criterion for modules built from the trivial and standard modules, and the
// group ring Z[S_n] with its generators s_i + 1.
#ifndef LIEFLAG_SNMOD_HPP
#define LIEFLAG_SNMOD_HPP

#include "lieflag/exact.hpp"
#include "lieflag/partition_orbits.hpp"

#include <map>
#include <vector>

namespace lieflag {

/// One-line notation of a permutation of {0, ..., n-1}.
using Permutation = std::vector<int>;

/// Matrices of s_1, ..., s_{n-1} acting on Q^d.
class SnRep {
public:
    /// Throws RelationViolation unless s_i^2 = 1, (s_i s_{i+1})^3 = 1 and
    /// distant generators commute; DimensionMismatch for ragged shapes.  The
    /// dimension is read off the generators unless n = 1.
    static SnRep make(int n, std::vector<QMatrix> generators, Index dim = -1);

    static SnRep trivial(int n);
    static SnRep sign(int n);
    /// Permutation module on C^n.
    static SnRep permutation(int n);
    /// Regular module on C[S_n].
    static SnRep regular(int n);
    /// The irreducible module of shape lambda in Young's seminormal form.
    static SnRep specht(const Partition& lambda);
    static SnRep direct_sum(const SnRep& a, const SnRep& b);

    int n() const { return n_; }
    Index dim() const { return dim_; }
    /// s_i for 1 <= i <= n-1.
    const QMatrix& s(int i) const { return gens_[static_cast<size_t>(i) - 1]; }
    /// The matrix of an arbitrary permutation.
    QMatrix act(const Permutation& w) const;
    /// Trace of an element of the given cycle type.
    Rational character(const Partition& cycle_type) const;

private:
    int n_ = 1;
    Index dim_ = 0;
    std::vector<QMatrix> gens_;
};

/// chi_lambda at the class of cycle type mu.
Integer character_value(const Partition& lambda, const Partition& mu);
/// |S_n| / |class of mu|.
Integer centralizer_order(const Partition& mu);
/// Number of standard Young tableaux of shape lambda.
Integer irreducible_dim(const Partition& lambda);

using Decomposition = std::map<std::vector<int>, long>;  ///< parts -> multiplicity

/// Multiplicities by character inner products.  Throws RankTooLarge for n > 8.
Decomposition decompose(const SnRep& r);
std::string to_string(const Decomposition& d);

struct LsnResult {
    bool hypothesis = false;         ///< R is the sum of its subspaces R_i
    Decomposition decomposition;     ///< filled when the hypothesis holds
    bool conclusion_holds = false;   ///< only shapes (n) and (n-1,1) occur
};

/// R_i = {v : s_j v = v for all j != i}.  Throws RankTooLarge for n > 8.
LsnResult lsn_check(const SnRep& r);
/// Basis of R_i as matrix columns.
QMatrix fixed_space_except(const SnRep& r, int i);

/// Finite integer combination of permutations of S_n.
struct GroupAlgebraElement {
    int n = 1;
    std::map<Permutation, Integer> coeffs;

    static GroupAlgebraElement identity(int n);
    static GroupAlgebraElement of(const Permutation& w, const Integer& c = 1);
    /// s_i + e.
    static GroupAlgebraElement generator(int n, int i);

    GroupAlgebraElement operator+(const GroupAlgebraElement& o) const;
    GroupAlgebraElement operator-(const GroupAlgebraElement& o) const;
    bool operator==(const GroupAlgebraElement& o) const;
};

/// (a b)(x) = a(b(x)) for permutations.
Permutation compose(const Permutation& a, const Permutation& b);
/// The simple transposition s_i (1-based) of S_n.
Permutation transposition(int n, int i);
std::vector<Permutation> all_permutations(int n);

/// Convolution product.  Throws RankTooLarge for n > 6 and MismatchedSize.
GroupAlgebraElement pf_ring_multiply(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
/// The unital ring generated by the s_i + 1 spans Q[S_n], and every
/// permutation is an integral polynomial in them.  Throws RankTooLarge for n > 6.
bool pf_generators_span(int n);

}  // namespace lieflag

#endif  // LIEFLAG_SNMOD_HPP
