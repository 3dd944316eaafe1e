// Joseph-ideal predicates on tuple labels of primitive ideals of sl(W) and
// sp(W + W*), the count of simple bounded (sl(W), sl(V))-modules through the
// quivers, and the odd pairs of Spin_{2n} modules attached to positive
// Shale-Weil tuples.
#ifndef LIEFLAG_JOSEPH_BOUNDED_HPP
#define LIEFLAG_JOSEPH_BOUNDED_HPP

#include "lieflag/quiver_ps.hpp"
#include "lieflag/tuples_weights.hpp"

#include <string>
#include <utility>

namespace lieflag {

struct JosephSl {
    enum class Case { A, B, C, NotJoseph };
    Case which = Case::NotJoseph;
    int k = 0;  ///< the transposition s_k of case C (1-based)
};

std::string to_string(const JosephSl& j);

/// Case A: semi-integral semi-decreasing.  Case B: singular integral
/// semi-decreasing.  Case C(k): regular integral with t = s_k ord(t).
/// Throws TupleTooShort below length 3.
JosephSl is_joseph_sl(const RationalTuple& t);
/// Shale-Weil tuples label exactly the Joseph ideals of sp.
bool is_joseph_sp(const RationalTuple& t);

enum class WKind { Sym2, Wedge2 };

/// dim W for W = S^2 V or wedge^2 V with dim V = n_v.
int w_dimension(WKind kind, int n_v);
/// The quiver governing perverse sheaves on W: A with n_v/2 arrow pairs for
/// wedge^2, B with n_v for S^2.  Throws BadParameter for odd n_v with wedge^2.
QuiverSpec quiver_for(WKind kind, int n_v);
/// P_{m(t)}(W) for a semi-decreasing t of length dim W.  Throws
/// DimensionMismatch when the length is not dim W, and whatever monodromy
/// and the quiver count throw.
long bounded_count_sl(const RationalTuple& t, WKind kind, int n_v);

struct OddPair {
    RationalTuple mu;
    RationalTuple lambda;        ///< mu - rho_D
    RationalTuple sigma_lambda;  ///< sigma(mu) - rho_D
    Integer dim;
    Integer sigma_dim;
};

/// rho_D = (n-1, ..., 1, 0).
RationalTuple rho_d(int n);
/// Weyl dimension formula for D_n at the highest weight lambda.
Rational weyl_dimension_d(const RationalTuple& lambda);
/// Throws NotPositiveShaleWeil; BadParameter if the weight is not dominant
/// half-integral (never observed for positive Shale-Weil tuples).
OddPair odd_pair(const RationalTuple& mu);

/// Canonical positive representative of {mu, sigma mu}.  Throws NotShaleWeil.
std::pair<RationalTuple, std::string> sw_pair_index(const RationalTuple& mu, const std::string& module_id);

}  // namespace lieflag

#endif  // LIEFLAG_JOSEPH_BOUNDED_HPP
