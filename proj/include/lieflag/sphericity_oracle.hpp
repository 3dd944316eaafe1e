// Ground truth for sphericity: the dimension of a Borel orbit at a random
// rational point, computed exactly.  A flag variety or module is spherical
// when some sampled point has an orbit of full dimension.
#ifndef LIEFLAG_SPHERICITY_ORACLE_HPP
#define LIEFLAG_SPHERICITY_ORACLE_HPP

#include "lieflag/lie_catalog.hpp"
#include "lieflag/partition_orbits.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace lieflag {

/// Sampling parameters.  Coordinates are drawn uniformly from [-box, box].
struct OracleConfig {
    int samples = 5;
    std::uint64_t seed = 20240611;
    long box = 10000;
};

/// A point of Fl(n_1, ..., n_s; C^n): the first n_i columns of g span V_i.
struct FlagPoint {
    FlagType flag;
    QMatrix g;
};

struct OracleVerdict {
    bool spherical = false;      ///< Yes when max_rank == variety_dim
    int max_rank = 0;            ///< largest orbit dimension observed
    int variety_dim = 0;
    int samples_used = 0;        ///< Yes stops at the first full-rank sample
    OracleConfig config;
    std::vector<int> sample_ranks;
    /// Points attaining max_rank: one matrix per flag factor, or the module
    /// vector as a column.
    std::vector<QMatrix> certificate;

    int complexity() const { return variety_dim - max_rank; }
};

/// Deterministic sampler: coordinates are raw 64-bit Mersenne Twister
/// outputs reduced into the box, so a seed replays identically everywhere.
class PointSampler {
public:
    PointSampler(std::uint64_t seed, long box) : rng_(seed), box_(box) {}
    Rational coordinate();
    /// Random invertible n x n integer matrix.
    QMatrix invertible(Index n);
    QVector vector(Index n);

private:
    std::mt19937_64 rng_;
    long box_;
};

/// dim b - dim{y in b : y V_i in V_i for all i}.  Throws DimensionMismatch.
int borel_orbit_dim_at(const std::vector<QMatrix>& borel, const FlagPoint& x);
/// Orbit dimension of b (plus the identity when with_scalar) at w.
int module_orbit_dim_at(const std::vector<QMatrix>& borel, const QVector& w, bool with_scalar);

/// Open Borel orbit on a flag variety of C^n.  Throws BadSampleCount.
OracleVerdict is_spherical_flag(const CatalogAlgebra& k, const FlagType& f, const OracleConfig& cfg = {});
int complexity_flag(const CatalogAlgebra& k, const FlagType& f, const OracleConfig& cfg = {});

/// Open Borel orbit on the module k acts on.
OracleVerdict is_spherical_module(const CatalogAlgebra& k, bool with_scalar, const OracleConfig& cfg = {});
/// Builds the representation (with per-summand scalar operators); throws
/// NoMatrixModel for spin and exceptional parts.
OracleVerdict is_spherical_module(const ModuleSpec& w, const std::vector<std::vector<Rational>>& center,
                                  bool with_scalar, const OracleConfig& cfg = {});

/// The diagonal Borel of gl_n on Fl_1 x Fl_2.
OracleVerdict product_flag_verdict(int n, const FlagType& f1, const FlagType& f2, const OracleConfig& cfg = {});
int product_flag_complexity(int n, const FlagType& f1, const FlagType& f2, const OracleConfig& cfg = {});
/// The Levi subalgebra of the parabolic fixing the standard flag of type f1,
/// acting on Fl_2.
CatalogAlgebra levi_algebra(const FlagType& f1);
int levi_flag_complexity(const FlagType& f1, const FlagType& f2, const OracleConfig& cfg = {});

/// Replays a recorded flag certificate.
int replay_flag(const CatalogAlgebra& k, const FlagType& f, const QMatrix& g);

}  // namespace lieflag

#endif  // LIEFLAG_SPHERICITY_ORACLE_HPP
