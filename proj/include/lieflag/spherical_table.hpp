// The list of weakly irreducible spherical pairs (k_i, W_i) with their attached
// abelian algebras c_i, and the table-driven sphericity test for modules: every
// weakly irreducible block must match an entry and k + sum c_i must equal its
// normalizer in gl(W).
#ifndef LIEFLAG_SPHERICAL_TABLE_HPP
#define LIEFLAG_SPHERICAL_TABLE_HPP

#include "lieflag/lie_catalog.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace lieflag {

/// Per-summand scalar operators, one coefficient per summand.
using CenterVectors = std::vector<std::vector<Rational>>;

/// One concrete pair: factors, summands and the attached c_i as per-summand vectors.
struct TableBlock {
    std::vector<Factor> factors;
    std::vector<Summand> summands;
    CenterVectors centers;
};

struct SphericalTableEntry {
    std::string id;           ///< "0", "i-1", ..., "iii-18"
    std::string pair;         ///< the pair as text
    std::string center;       ///< the attached algebra as text, "0" when trivial
    std::string constraints;  ///< parameter range as text
    int params = 0;           ///< number of integer parameters
    bool matrix_model = true; ///< false for spin and exceptional entries
    /// All variants of the pair for the given parameters (empty when out of range).
    std::function<std::vector<TableBlock>(const std::vector<int>&)> instantiate;
};

/// The encoded table.
const std::vector<SphericalTableEntry>& spherical_table();
/// Entry by id, or nullptr.
const SphericalTableEntry* find_table_entry(const std::string& id);

/// Coefficient c in the attached algebra C h_{1,-c} (first sum) and C h_{1,c}
/// (second sum) of the entries for sl_{2n+1} on C^{2n+1} + wedge^2 and on its
/// dual + wedge^2; the printed symbol is undefined, see the README.
Rational odd_wedge_center_weight(int n);

/// A module after the canonical rewriting used for table matching: gl factors
/// are split into sl plus a center vector, low-rank isomorphisms are applied.
struct CanonicalModule {
    ModuleSpec module;
    CenterVectors gl_centers;
};
CanonicalModule canonicalize_module(const ModuleSpec& m);

/// Connected components of summands that share a non-zero factor.
std::vector<std::vector<size_t>> weakly_irreducible_blocks(const ModuleSpec& m);

struct BlockMatch {
    std::string entry_id;
    std::vector<int> params;
    std::vector<size_t> summands;  ///< module summand indices of the block
    CenterVectors centers;         ///< attached c_i in module summand coordinates
};

struct TableVerdict {
    bool spherical = false;
    std::vector<BlockMatch> matches;
    std::vector<std::vector<size_t>> unmatched_blocks;
    bool normalizer_ok = false;
    std::string reason;
};

/// Table test for the reductive algebra [k,k] + center acting on `module`; the
/// center is given as per-summand coefficient vectors.  Throws
/// UnrecognizedShape when a summand is not irreducible.
TableVerdict table_module_verdict(const ModuleSpec& module, const CenterVectors& center);
bool is_spherical_module_by_table(const ModuleSpec& module, const CenterVectors& center);

/// Matches one block given as its own module; nullopt when absent from the table.
std::optional<BlockMatch> match_block(const ModuleSpec& block);

/// k + A is self-normalizing, for A spanned by per-summand scalars:
/// equivalent to A having full rank (the structural form).
bool normalizer_condition_structural(const ModuleSpec& module, const CenterVectors& vectors);
/// The same condition computed with matrices through normalizer_in_gl.
bool normalizer_condition_by_matrices(const ModuleSpec& module, const CenterVectors& vectors);

/// The identity as a center vector.
std::vector<Rational> identity_center(const ModuleSpec& module);

}  // namespace lieflag

#endif  // LIEFLAG_SPHERICAL_TABLE_HPP
