// Matrix models of the classical Lie algebras gl, sl, so, sp with chosen
// Borel subalgebras, their representations on tensor products of natural,
// dual, symmetric-square and exterior-square modules, and normalizers in gl.
#ifndef LIEFLAG_LIE_CATALOG_HPP
#define LIEFLAG_LIE_CATALOG_HPP

#include "lieflag/exact.hpp"

#include <string>
#include <vector>

namespace lieflag {

enum class FactorType { sl, so, sp, gl, e6, g2 };

/// A simple (or gl) factor; `n` is the dimension of its natural module.
struct Factor {
    FactorType type = FactorType::sl;
    int n = 1;

    bool operator==(const Factor&) const = default;
    auto operator<=>(const Factor&) const = default;
};

/// Irreducible building blocks of a factor representation.  Spin is the spin
/// module of so_odd or the half-spin omega_{n/2} of so_even; SpinMinus is the
/// other half-spin.  For e6 and g2 Natural is the minimal module.
enum class RepTag { Natural, Sym2, Wedge2, Spin, SpinMinus };

struct RepPart {
    int factor = 0;
    RepTag tag = RepTag::Natural;
    bool dual = false;

    bool operator==(const RepPart&) const = default;
    auto operator<=>(const RepPart&) const = default;
};

/// Tensor product of parts over distinct factors; no parts is the trivial C.
struct Summand {
    std::vector<RepPart> parts;

    bool operator==(const Summand&) const = default;
    auto operator<=>(const Summand&) const = default;
};

/// A module over a direct sum of factors, given as a direct sum of summands.
struct ModuleSpec {
    std::vector<Factor> factors;
    std::vector<Summand> summands;

    /// Dimension of one summand.
    int summand_dim(size_t i) const;
    int dimension() const;
    /// Throws BadParameter on invalid factors, parts or factor indices.
    void validate() const;
    bool operator==(const ModuleSpec&) const = default;
};

/// Each factor acting on its own natural module (sl(1) gives a trivial C).
ModuleSpec natural_sum(const std::vector<Factor>& factors);

/// Dimension of a factor representation part.
int part_dim(const Factor& f, RepTag tag);
/// Dimension, rank and the Borel-dimension of a factor.
int factor_algebra_dim(const Factor& f);
int factor_rank(const Factor& f);
/// True when a matrix model exists for the part.
bool has_matrix_model(const Factor& f, RepTag tag);

std::string factor_name(const Factor& f);
std::string to_string(const ModuleSpec& m);

/// A matrix Lie algebra: linearly independent basis matrices, a sublist
/// spanning a Borel subalgebra, and metadata.
struct CatalogAlgebra {
    std::vector<QMatrix> basis;
    std::vector<QMatrix> borel_basis;
    std::string tag;
    int rank = 0;
    int module_dim = 0;
    std::vector<std::string> factors;

    Index dim() const { return static_cast<Index>(basis.size()); }
    Index borel_dim() const { return static_cast<Index>(borel_basis.size()); }
};

/// sl, so, sp (antidiagonal forms) or gl acting on C^n; Borel = upper
/// triangular part.  sp requires even n >= 2, so requires n >= 3.
CatalogAlgebra make_algebra(FactorType type, int n);
CatalogAlgebra make_algebra(const std::string& tag, int n);
/// Block-diagonal sum acting on the direct sum of the modules.
CatalogAlgebra direct_sum(const CatalogAlgebra& a, const CatalogAlgebra& b);
/// The factors of `module` acting on it.  Throws NoMatrixModel for spin and
/// exceptional parts.
CatalogAlgebra representation(const ModuleSpec& module);
/// A factor algebra pushed through one part representation (matrices of size part_dim).
std::vector<QMatrix> represent_part(const std::vector<QMatrix>& natural, const Factor& f, RepTag tag, bool dual);

/// Diagonal operator acting on summand i by coeffs[i].
QMatrix summand_scalar(const ModuleSpec& module, const std::vector<Rational>& coeffs);
/// Adds per-summand scalar operators to the algebra and its Borel.
CatalogAlgebra with_center(CatalogAlgebra a, const ModuleSpec& module, const std::vector<std::vector<Rational>>& center);

/// Solutions x in gl_n of [x, s] in span(S) for all s in S, S = basis(k) + extra.
CatalogAlgebra normalizer_in_gl(const CatalogAlgebra& k, const std::vector<QMatrix>& extra_center);

/// Dimension of the span of a list of square matrices.
Index span_dim(const std::vector<QMatrix>& mats);
/// True when all pairwise commutators lie in the span.
bool is_bracket_closed(const std::vector<QMatrix>& mats);
/// Kronecker product.
QMatrix kron(const QMatrix& a, const QMatrix& b);

}  // namespace lieflag

#endif  // LIEFLAG_LIE_CATALOG_HPP
