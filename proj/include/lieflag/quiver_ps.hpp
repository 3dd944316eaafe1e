// The linear quivers A and B with relations whose representations model
// perverse sheaves on wedge^2 V and S^2 V:
//
//     0 <=> 1 <=> ... <=> n,   p_i : i+1 -> i,   q_i : i -> i+1,
//     xi_i = 1 + q_{i-1} p_{i-1},   nu_i = 1 + p_i q_i.
//
// Kind A: all xi_i, nu_i invertible and xi_i = nu_i at inner vertices.
// Kind B: invertible, xi_i^2 = nu_i^2 at inner vertices, and p, q
// anticommute with xi, nu wherever both sides are defined.
//
// Simple representations are enumerated from the classification, realized
// by explicit witnesses over a cyclotomic field, and their monodromy is read
// off the witness.  An independent brute-force count over 1-dimensional
// vertex spaces with root-of-unity edge products cross-checks the counts.
#ifndef LIEFLAG_QUIVER_PS_HPP
#define LIEFLAG_QUIVER_PS_HPP

#include "lieflag/cyclotomic.hpp"
#include "lieflag/tuples_weights.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lieflag {

enum class QuiverKind { A, B };

struct QuiverSpec {
    QuiverKind kind = QuiverKind::A;
    int n = 1;  ///< vertices 0..n

    /// Throws BadParameter for n < 1.
    void validate() const;
};

const char* to_string(QuiverKind k);

struct QuiverRep {
    QuiverSpec spec;
    std::vector<int> dims;  ///< n + 1 entries
    std::vector<CMatrix> p;  ///< p[i] : V_{i+1} -> V_i, dims[i] x dims[i+1]
    std::vector<CMatrix> q;  ///< q[i] : V_i -> V_{i+1}, dims[i+1] x dims[i]

    /// All maps zero.
    static QuiverRep zero(const QuiverSpec& spec, const std::vector<int>& dims);
    int total_dim() const;
    /// Throws ShapeMismatch when the maps do not fit the dimension vector.
    void check_shapes() const;
    /// xi_i for 1 <= i <= n.
    CMatrix xi(int i) const;
    /// nu_i for 0 <= i <= n-1.
    CMatrix nu(int i) const;
};

/// Invertibility and the defining relations of the kind.  Throws ShapeMismatch.
bool check_relations(const QuiverRep& r);

/// Largest total dimension accepted by is_simple.
constexpr int kSimplicityBound = 12;

/// No proper nonzero subrepresentation.  Decided by Burnside's theorem: the
/// algebra generated by the vertex idempotents and the arrows is the full
/// matrix algebra of the total space.  Throws TooLarge above the bound.
bool is_simple(const QuiverRep& r);

/// The scalar c with every monodromy operator equal to c times the
/// identity, or nothing when they disagree or are not scalar.  Kind A uses
/// nu_0^n, nu_i^{n-i} xi_i^i, xi_n^n; kind B the same words in the
/// sign-aligned operators (-1)^i nu_i and (-1)^{i+1} xi_i.
std::optional<Cyclotomic> evaluate_monodromy(const QuiverRep& r);

/// e^{2 pi i r} for a residue, or the generic class of a non-root scalar.
MonodromyClass classify_scalar(const Cyclotomic& c);

/// Eigenvalue of the sign-normalized operators (-1)^i xi_i and (-1)^i nu_i.
struct Spectrum {
    std::optional<MonodromyClass> xi_bar;
    std::optional<MonodromyClass> nu_bar;
};

struct SimpleDescriptor {
    enum class Variant { Vertex, Edge, FullSupport, FullSupportFamily };
    QuiverKind kind = QuiverKind::A;
    int n = 1;
    Variant variant = Variant::Vertex;
    int index = 0;               ///< vertex i, or first vertex a of the edge [a, a+1]
    MonodromyClass eigenvalue;   ///< lambda of a full-support simple
    Spectrum spectrum;
    MonodromyClass monodromy;    ///< evaluated on the witness
    std::vector<int> support;

    std::string name() const;
};

/// Explicit representation realizing a descriptor.
QuiverRep witness(const SimpleDescriptor& d);

/// Filter on kind-B spectra: a pair (x, y) of signs.  Pairs with x = y
/// select the simples with xi_bar = nu_bar = +-1 (the vertex simples at
/// inner vertices); pairs with x = -y are matched literally.
struct SpectrumFilter {
    int xi_sign = 1;
    int nu_sign = 1;
};

/// Simple representations per the classification, each with an evaluated
/// witness.  Without a monodromy filter the full-support simples appear as
/// one family descriptor; with a residue filter as the finitely many
/// eigenvalues lambda with lambda^n = c; with a generic filter as the n roots
/// of a fixed non-root scalar.
std::vector<SimpleDescriptor> enumerate_simples(const QuiverSpec& spec,
                                                const std::optional<MonodromyClass>& monodromy_filter = std::nullopt,
                                                const std::optional<SpectrumFilter>& spectrum_filter = std::nullopt);

/// Simples with monodromy c, excluding those supported exactly at vertex 0
/// or exactly at vertex n.
long count_P(const QuiverSpec& spec, const MonodromyClass& c);

/// Independent count for a root-of-unity monodromy: all representations
/// with 1-dimensional spaces on an interval of vertices and nonzero arrows
/// inside it, edge products zeta - 1 for zeta in mu_M, M = lcm(2, n den c),
/// checked against the relations in exponent arithmetic.  Throws
/// BadParameter for a generic c.
long brute_force_count(const QuiverSpec& spec, const MonodromyClass& c);

}  // namespace lieflag

#endif  // LIEFLAG_QUIVER_PS_HPP
