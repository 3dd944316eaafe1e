// Decision tables for spherical partial flag varieties Fl(n_1, ..., n_s; V)
// of a reductive K whose semisimple part acts on V = V_1 + ... + V_l, each
// summand the natural module of an sl, so or sp factor (sl(1) is the
// trivial C); spherical products of two flag varieties of GL(W); and the
// bounded-subalgebra test for sl(W).
#ifndef LIEFLAG_FLAG_CLASSIFIER_HPP
#define LIEFLAG_FLAG_CLASSIFIER_HPP

#include "lieflag/partition_orbits.hpp"
#include "lieflag/spherical_table.hpp"
#include "lieflag/sphericity_oracle.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lieflag {

struct ClassificationDatum {
    std::vector<int> dims;           ///< flag dimensions n_1 < ... < n_s
    std::vector<Factor> summands;    ///< each factor on its own natural module
    /// Per-summand scalar operators of K; when absent the largest center
    /// (one scalar per summand) is used.
    std::optional<CenterVectors> center;

    int ambient() const;
    FlagType flag() const;
    /// The pair as a module over its factors.
    ModuleSpec module() const;
    /// Throws UnsupportedShape for factors outside sl/so/sp and BadParameter
    /// for invalid ones or an invalid flag.
    void validate() const;
};

enum class NotSphericalReason { FailedReduction, AbsentFromList };

struct ClassificationVerdict {
    bool spherical = false;
    std::string case_id;  ///< list item, or "P(V)" for flags equivalent to P(V)
    ClassificationDatum normalized;
    NotSphericalReason reason = NotSphericalReason::AbsentFromList;
    std::string detail;
};

const char* to_string(NotSphericalReason r);
std::string to_string(const ClassificationDatum& d);

/// sp(2) -> sl(2), summands sorted, flag replaced by its canonical member.
ClassificationDatum normalize_datum(const ClassificationDatum& d);

/// Flags cotangent-equivalent to P(V) go through the module table with the
/// given (or largest) center plus the scalars; all others through the lists.
ClassificationVerdict classify_flag_datum(const ClassificationDatum& d);
/// Grassmannians Gr(r; V) with 2 <= r <= n/2; r = 1 goes through the table.
ClassificationVerdict classify_grassmannian(int r, const std::vector<Factor>& summands);

/// Step multisets of two flags of C^n: membership in the list of spherical
/// products for GL_n.  Throws MismatchedSize and BadParameter.
bool product_flags_spherical(std::vector<int> steps1, std::vector<int> steps2);

/// The algebra [k,k] plus the center acting on the natural sum.
CatalogAlgebra datum_algebra(const ClassificationDatum& d);

/// Existence of a bounded (sl(W), k)-module: K x C* spherical on W.
bool bounded_subalgebra_sl(const CatalogAlgebra& k, const OracleConfig& cfg = {});
bool bounded_subalgebra_sl(const ModuleSpec& w, const CenterVectors& center, const OracleConfig& cfg = {});

}  // namespace lieflag

#endif  // LIEFLAG_FLAG_CLASSIFIER_HPP
