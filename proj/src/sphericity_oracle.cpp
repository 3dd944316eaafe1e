#include "lieflag/sphericity_oracle.hpp"
#include "lieflag/errors.hpp"

#include <algorithm>

namespace lieflag {

Rational PointSampler::coordinate() {
    const auto width = static_cast<std::uint64_t>(2 * box_ + 1);
    return Rational(static_cast<long>(rng_() % width) - box_);
}

QMatrix PointSampler::invertible(Index n) {
    while (true) {
        QMatrix g(n, n);
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j) g(i, j) = coordinate();
        if (exact_rank(g) == n) return g;
    }
}

QVector PointSampler::vector(Index n) {
    QVector w(n);
    for (Index i = 0; i < n; ++i) w(i) = coordinate();
    return w;
}

namespace {

void check_config(const OracleConfig& cfg) {
    if (cfg.samples < 1) throw Error(ErrorKind::BadSampleCount, "at least one sample is required");
    if (cfg.box < 1) throw Error(ErrorKind::BadParameter, "the coefficient box must be positive");
}

// Block index of each coordinate for the standard flag of type f.
std::vector<int> block_of(const FlagType& f) {
    std::vector<int> out;
    int b = 0;
    for (int step : f.steps()) {
        for (int i = 0; i < step; ++i) out.push_back(b);
        ++b;
    }
    return out;
}

// Rows: entries of g^{-1} y g below the block diagonal, one column per y.
void append_flag_conditions(const std::vector<QMatrix>& borel, const FlagPoint& x, QMatrix& rows, Index& row) {
    const std::vector<int> blocks = block_of(x.flag);
    const auto ginv = inverse<Rational>(x.g);
    if (!ginv) throw Error(ErrorKind::BadParameter, "flag point matrix is singular");
    const Index n = x.g.rows();
    for (size_t k = 0; k < borel.size(); ++k) {
        const QMatrix m = (*ginv) * borel[k] * x.g;
        Index r = row;
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j)
                if (blocks[static_cast<size_t>(i)] > blocks[static_cast<size_t>(j)]) rows(r++, static_cast<Index>(k)) = m(i, j);
    }
    row += x.flag.dimension();
}

void check_flag_point(const std::vector<QMatrix>& borel, const FlagPoint& x) {
    const Index n = x.flag.ambient;
    if (x.g.rows() != n || x.g.cols() != n)
        throw Error(ErrorKind::DimensionMismatch, "flag point does not match the ambient dimension");
    for (const QMatrix& b : borel)
        if (b.rows() != n || b.cols() != n)
            throw Error(ErrorKind::DimensionMismatch, "algebra acts on a space of another dimension");
}

}  // namespace

int borel_orbit_dim_at(const std::vector<QMatrix>& borel, const FlagPoint& x) {
    check_flag_point(borel, x);
    QMatrix rows = QMatrix::Zero(x.flag.dimension(), static_cast<Index>(borel.size()));
    Index row = 0;
    append_flag_conditions(borel, x, rows, row);
    return static_cast<int>(exact_rank(rows));
}

int module_orbit_dim_at(const std::vector<QMatrix>& borel, const QVector& w, bool with_scalar) {
    const Index n = w.size();
    const Index cols = static_cast<Index>(borel.size()) + (with_scalar ? 1 : 0);
    QMatrix images(n, cols);
    for (size_t k = 0; k < borel.size(); ++k) {
        if (borel[k].cols() != n) throw Error(ErrorKind::DimensionMismatch, "module vector has the wrong length");
        images.col(static_cast<Index>(k)) = borel[k] * w;
    }
    if (with_scalar) images.col(cols - 1) = w;
    return static_cast<int>(exact_rank(images));
}

int replay_flag(const CatalogAlgebra& k, const FlagType& f, const QMatrix& g) {
    return borel_orbit_dim_at(k.borel_basis, FlagPoint{f, g});
}

OracleVerdict is_spherical_flag(const CatalogAlgebra& k, const FlagType& f, const OracleConfig& cfg) {
    check_config(cfg);
    if (k.module_dim != f.ambient) throw Error(ErrorKind::DimensionMismatch, "algebra and flag live in different spaces");
    OracleVerdict v;
    v.config = cfg;
    v.variety_dim = f.dimension();
    PointSampler sampler(cfg.seed, cfg.box);
    for (int s = 0; s < cfg.samples; ++s) {
        FlagPoint x{f, sampler.invertible(f.ambient)};
        const int r = borel_orbit_dim_at(k.borel_basis, x);
        v.sample_ranks.push_back(r);
        ++v.samples_used;
        if (v.certificate.empty() || r > v.max_rank) {
            v.max_rank = r;
            v.certificate = {x.g};
        }
        if (r == v.variety_dim) break;
    }
    v.spherical = v.max_rank == v.variety_dim;
    return v;
}

int complexity_flag(const CatalogAlgebra& k, const FlagType& f, const OracleConfig& cfg) {
    return is_spherical_flag(k, f, cfg).complexity();
}

OracleVerdict is_spherical_module(const CatalogAlgebra& k, bool with_scalar, const OracleConfig& cfg) {
    check_config(cfg);
    OracleVerdict v;
    v.config = cfg;
    v.variety_dim = k.module_dim;
    PointSampler sampler(cfg.seed, cfg.box);
    for (int s = 0; s < cfg.samples; ++s) {
        const QVector w = sampler.vector(k.module_dim);
        const int r = module_orbit_dim_at(k.borel_basis, w, with_scalar);
        v.sample_ranks.push_back(r);
        ++v.samples_used;
        if (v.certificate.empty() || r > v.max_rank) {
            v.max_rank = r;
            v.certificate = {QMatrix(w)};
        }
        if (r == v.variety_dim) break;
    }
    v.spherical = v.max_rank == v.variety_dim;
    return v;
}

OracleVerdict is_spherical_module(const ModuleSpec& w, const std::vector<std::vector<Rational>>& center,
                                  bool with_scalar, const OracleConfig& cfg) {
    return is_spherical_module(with_center(representation(w), w, center), with_scalar, cfg);
}

namespace {

std::vector<QMatrix> gl_borel(int n) {
    std::vector<QMatrix> out;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            QMatrix e = QMatrix::Zero(n, n);
            e(i, j) = 1;
            out.push_back(e);
        }
    return out;
}

}  // namespace

OracleVerdict product_flag_verdict(int n, const FlagType& f1, const FlagType& f2, const OracleConfig& cfg) {
    check_config(cfg);
    if (f1.ambient != n || f2.ambient != n) throw Error(ErrorKind::MismatchedSize, "flags live in different spaces");
    const std::vector<QMatrix> borel = gl_borel(n);
    OracleVerdict v;
    v.config = cfg;
    v.variety_dim = f1.dimension() + f2.dimension();
    PointSampler sampler(cfg.seed, cfg.box);
    for (int s = 0; s < cfg.samples; ++s) {
        const FlagPoint x1{f1, sampler.invertible(n)};
        const FlagPoint x2{f2, sampler.invertible(n)};
        QMatrix rows = QMatrix::Zero(v.variety_dim, static_cast<Index>(borel.size()));
        Index row = 0;
        append_flag_conditions(borel, x1, rows, row);
        append_flag_conditions(borel, x2, rows, row);
        const int r = static_cast<int>(exact_rank(rows));
        v.sample_ranks.push_back(r);
        ++v.samples_used;
        if (v.certificate.empty() || r > v.max_rank) {
            v.max_rank = r;
            v.certificate = {x1.g, x2.g};
        }
        if (r == v.variety_dim) break;
    }
    v.spherical = v.max_rank == v.variety_dim;
    return v;
}

int product_flag_complexity(int n, const FlagType& f1, const FlagType& f2, const OracleConfig& cfg) {
    return product_flag_verdict(n, f1, f2, cfg).complexity();
}

CatalogAlgebra levi_algebra(const FlagType& f1) {
    const int n = f1.ambient;
    const std::vector<int> blocks = block_of(f1);
    CatalogAlgebra a;
    a.tag = "levi";
    a.module_dim = n;
    a.rank = n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (blocks[static_cast<size_t>(i)] != blocks[static_cast<size_t>(j)]) continue;
            QMatrix e = QMatrix::Zero(n, n);
            e(i, j) = 1;
            a.basis.push_back(e);
            if (i <= j) a.borel_basis.push_back(e);
        }
    for (int step : f1.steps()) a.factors.push_back("gl(" + std::to_string(step) + ")");
    return a;
}

int levi_flag_complexity(const FlagType& f1, const FlagType& f2, const OracleConfig& cfg) {
    return complexity_flag(levi_algebra(f1), f2, cfg);
}

}  // namespace lieflag
