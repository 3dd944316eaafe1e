#include "lieflag/lie_catalog.hpp"
#include "lieflag/errors.hpp"

#include <map>
#include <mutex>
#include <set>

namespace lieflag {

namespace {

int pow2(int e) { return 1 << e; }

QMatrix unit(int n, int i, int j) {
    QMatrix m = QMatrix::Zero(n, n);
    m(i, j) = 1;
    return m;
}

const char* type_name(FactorType t) {
    switch (t) {
        case FactorType::sl: return "sl";
        case FactorType::so: return "so";
        case FactorType::sp: return "sp";
        case FactorType::gl: return "gl";
        case FactorType::e6: return "e6";
        case FactorType::g2: return "g2";
    }
    return "?";
}

void validate_factor(const Factor& f) {
    switch (f.type) {
        case FactorType::sl:
        case FactorType::gl:
            if (f.n < 1) throw Error(ErrorKind::BadParameter, std::string(type_name(f.type)) + " needs n >= 1");
            break;
        case FactorType::so:
            if (f.n < 3) throw Error(ErrorKind::BadParameter, "so(n) needs n >= 3");
            break;
        case FactorType::sp:
            if (f.n < 2 || f.n % 2 != 0) throw Error(ErrorKind::BadParameter, "sp(n) needs an even n >= 2");
            break;
        case FactorType::e6:
            if (f.n != 27) throw Error(ErrorKind::BadParameter, "e6 acts on C^27");
            break;
        case FactorType::g2:
            if (f.n != 7) throw Error(ErrorKind::BadParameter, "g2 acts on C^7");
            break;
    }
}

// Index of the monomial e_i e_j (i <= j) or e_i ^ e_j (i < j).
struct PairIndex {
    int n;
    bool strict;
    std::map<std::pair<int, int>, int> index;
    std::vector<std::pair<int, int>> pairs;

    PairIndex(int n_, bool strict_) : n(n_), strict(strict_) {
        for (int i = 0; i < n; ++i)
            for (int j = strict ? i + 1 : i; j < n; ++j) {
                index[{i, j}] = static_cast<int>(pairs.size());
                pairs.push_back({i, j});
            }
    }
};

QMatrix sym2_of(const QMatrix& x) {
    const int n = static_cast<int>(x.rows());
    PairIndex idx(n, false);
    const int d = static_cast<int>(idx.pairs.size());
    QMatrix out = QMatrix::Zero(d, d);
    for (int c = 0; c < d; ++c) {
        const auto [i, j] = idx.pairs[static_cast<size_t>(c)];
        for (int k = 0; k < n; ++k) {
            if (x(k, i) != 0) out(idx.index[{std::min(k, j), std::max(k, j)}], c) += x(k, i);
            if (x(k, j) != 0) out(idx.index[{std::min(i, k), std::max(i, k)}], c) += x(k, j);
        }
    }
    return out;
}

QMatrix wedge2_of(const QMatrix& x) {
    const int n = static_cast<int>(x.rows());
    PairIndex idx(n, true);
    const int d = static_cast<int>(idx.pairs.size());
    QMatrix out = QMatrix::Zero(d, d);
    // x(e_i ^ e_j) = (x e_i) ^ e_j + e_i ^ (x e_j).
    auto add = [&](int a, int b, const Rational& coef, int col) {
        if (a == b || coef == 0) return;
        if (a < b)
            out(idx.index[{a, b}], col) += coef;
        else
            out(idx.index[{b, a}], col) -= coef;
    };
    for (int c = 0; c < d; ++c) {
        const auto [i, j] = idx.pairs[static_cast<size_t>(c)];
        for (int k = 0; k < n; ++k) {
            add(k, j, x(k, i), c);
            add(i, k, x(k, j), c);
        }
    }
    return out;
}

// Invariant form used for so and sp: antidiagonal, symmetric or symplectic.
QMatrix form_matrix(FactorType type, int n) {
    QMatrix j = QMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) j(i, n - 1 - i) = (type == FactorType::sp && i >= n / 2) ? -1 : 1;
    return j;
}

// Matrices X with X^T J + J X = 0 and with prescribed vanishing entries.
std::vector<QMatrix> form_algebra_part(FactorType type, int n, bool upper) {
    const QMatrix form = form_matrix(type, n);
    const int unknowns = n * n;
    std::vector<QVector> rows;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            QVector r = QVector::Zero(unknowns);
            // (X^T J)_{ij} = sum_k X_{ki} J_{kj};  (J X)_{ij} = sum_k J_{ik} X_{kj}.
            for (int k = 0; k < n; ++k) {
                r(k * n + i) += form(k, j);
                r(k * n + j) += form(i, k);
            }
            rows.push_back(r);
            const bool vanish = upper ? (i > j) : (i <= j);
            if (vanish) {
                QVector z = QVector::Zero(unknowns);
                z(i * n + j) = 1;
                rows.push_back(z);
            }
        }
    QMatrix sys(static_cast<Index>(rows.size()), unknowns);
    for (size_t r = 0; r < rows.size(); ++r) sys.row(static_cast<Index>(r)) = rows[r].transpose();
    const QMatrix ker = nullspace<Rational>(sys);
    std::vector<QMatrix> out;
    for (Index c = 0; c < ker.cols(); ++c) out.push_back(unvec(ker.col(c), n));
    return out;
}

CatalogAlgebra build_algebra(FactorType type, int n) {
    validate_factor({type, n});
    CatalogAlgebra a;
    a.tag = type_name(type);
    a.module_dim = n;
    a.factors = {factor_name({type, n})};
    a.rank = factor_rank({type, n});
    switch (type) {
        case FactorType::sl:
        case FactorType::gl:
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) a.borel_basis.push_back(unit(n, i, j));
            if (type == FactorType::gl) {
                for (int i = 0; i < n; ++i) a.borel_basis.push_back(unit(n, i, i));
            } else {
                for (int i = 0; i + 1 < n; ++i) a.borel_basis.push_back(unit(n, i, i) - unit(n, i + 1, i + 1));
            }
            a.basis = a.borel_basis;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < i; ++j) a.basis.push_back(unit(n, i, j));
            break;
        case FactorType::so:
        case FactorType::sp: {
            a.borel_basis = form_algebra_part(type, n, true);
            a.basis = a.borel_basis;
            for (QMatrix& m : form_algebra_part(type, n, false)) a.basis.push_back(std::move(m));
            break;
        }
        case FactorType::e6:
        case FactorType::g2:
            throw Error(ErrorKind::NoMatrixModel, std::string("no matrix model for ") + type_name(type));
    }
    return a;
}

// Appends the matrices that are independent of those already in `span`.
void extend_independent(std::vector<QMatrix>& kept, std::vector<QVector>& reduced_rows, std::vector<Index>& pivots,
                        const QMatrix& m) {
    QVector v = vec(m);
    for (size_t r = 0; r < reduced_rows.size(); ++r) {
        const Rational f = v(pivots[r]);
        if (f != 0) v -= f * reduced_rows[r];
    }
    Index piv = -1;
    for (Index i = 0; i < v.size(); ++i)
        if (v(i) != 0) {
            piv = i;
            break;
        }
    if (piv < 0) return;
    v /= Rational(v(piv));
    for (size_t r = 0; r < reduced_rows.size(); ++r) {
        const Rational f = reduced_rows[r](piv);
        if (f != 0) reduced_rows[r] -= f * v;
    }
    reduced_rows.push_back(v);
    pivots.push_back(piv);
    kept.push_back(m);
}

}  // namespace

int part_dim(const Factor& f, RepTag tag) {
    switch (tag) {
        case RepTag::Natural: return f.n;
        case RepTag::Sym2: return f.n * (f.n + 1) / 2;
        case RepTag::Wedge2: return f.n * (f.n - 1) / 2;
        case RepTag::Spin:
            if (f.type != FactorType::so) throw Error(ErrorKind::BadParameter, "spin modules exist only for so(n)");
            return f.n % 2 ? pow2((f.n - 1) / 2) : pow2(f.n / 2 - 1);
        case RepTag::SpinMinus:
            if (f.type != FactorType::so || f.n % 2)
                throw Error(ErrorKind::BadParameter, "the second half-spin module exists only for so(2k)");
            return pow2(f.n / 2 - 1);
    }
    return 0;
}

int factor_algebra_dim(const Factor& f) {
    switch (f.type) {
        case FactorType::sl: return f.n * f.n - 1;
        case FactorType::gl: return f.n * f.n;
        case FactorType::so: return f.n * (f.n - 1) / 2;
        case FactorType::sp: return f.n * (f.n + 1) / 2;
        case FactorType::e6: return 78;
        case FactorType::g2: return 14;
    }
    return 0;
}

int factor_rank(const Factor& f) {
    switch (f.type) {
        case FactorType::sl: return f.n - 1;
        case FactorType::gl: return f.n;
        case FactorType::so: return f.n / 2;
        case FactorType::sp: return f.n / 2;
        case FactorType::e6: return 6;
        case FactorType::g2: return 2;
    }
    return 0;
}

bool has_matrix_model(const Factor& f, RepTag tag) {
    if (f.type == FactorType::e6 || f.type == FactorType::g2) return false;
    return tag != RepTag::Spin && tag != RepTag::SpinMinus;
}

std::string factor_name(const Factor& f) {
    if (f.type == FactorType::e6 || f.type == FactorType::g2) return type_name(f.type);
    return std::string(type_name(f.type)) + "(" + std::to_string(f.n) + ")";
}

int ModuleSpec::summand_dim(size_t i) const {
    int d = 1;
    for (const RepPart& p : summands.at(i).parts) d *= part_dim(factors.at(static_cast<size_t>(p.factor)), p.tag);
    return d;
}

int ModuleSpec::dimension() const {
    int d = 0;
    for (size_t i = 0; i < summands.size(); ++i) d += summand_dim(i);
    return d;
}

void ModuleSpec::validate() const {
    for (const Factor& f : factors) validate_factor(f);
    if (summands.empty()) throw Error(ErrorKind::BadParameter, "module has no summands");
    for (const Summand& s : summands) {
        std::set<int> used;
        for (const RepPart& p : s.parts) {
            if (p.factor < 0 || static_cast<size_t>(p.factor) >= factors.size())
                throw Error(ErrorKind::BadParameter, "summand refers to a missing factor");
            if (!used.insert(p.factor).second)
                throw Error(ErrorKind::BadParameter, "a factor may appear only once in a tensor product");
            const Factor& f = factors[static_cast<size_t>(p.factor)];
            if ((f.type == FactorType::e6 || f.type == FactorType::g2) && p.tag != RepTag::Natural)
                throw Error(ErrorKind::BadParameter, "only the minimal module of " + factor_name(f) + " is supported");
            if (part_dim(f, p.tag) < 1) throw Error(ErrorKind::BadParameter, "zero-dimensional part");
        }
    }
}

ModuleSpec natural_sum(const std::vector<Factor>& factors) {
    ModuleSpec m;
    m.factors = factors;
    for (size_t i = 0; i < factors.size(); ++i) m.summands.push_back(Summand{{RepPart{static_cast<int>(i), RepTag::Natural, false}}});
    return m;
}

std::string to_string(const ModuleSpec& m) {
    std::string s;
    for (size_t i = 0; i < m.factors.size(); ++i) {
        if (i) s += "+";
        s += factor_name(m.factors[i]);
    }
    s += " on ";
    for (size_t i = 0; i < m.summands.size(); ++i) {
        if (i) s += "+";
        const Summand& sm = m.summands[i];
        if (sm.parts.empty()) {
            s += "C";
            continue;
        }
        for (size_t k = 0; k < sm.parts.size(); ++k) {
            if (k) s += "x";
            const RepPart& p = sm.parts[k];
            const char* name = "nat";
            switch (p.tag) {
                case RepTag::Natural: name = p.dual ? "dual" : "nat"; break;
                case RepTag::Sym2: name = p.dual ? "sym2*" : "sym2"; break;
                case RepTag::Wedge2: name = p.dual ? "wedge2*" : "wedge2"; break;
                case RepTag::Spin: name = p.dual ? "spin*" : "spin"; break;
                case RepTag::SpinMinus: name = p.dual ? "spin-*" : "spin-"; break;
            }
            s += std::string(name) + "(" + std::to_string(p.factor + 1) + ")";
        }
    }
    return s;
}

CatalogAlgebra make_algebra(FactorType type, int n) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, CatalogAlgebra> cache;
    const std::pair<int, int> key{static_cast<int>(type), n};
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    CatalogAlgebra a = build_algebra(type, n);
    std::lock_guard<std::mutex> lock(mutex);
    cache.emplace(key, a);
    return a;
}

CatalogAlgebra make_algebra(const std::string& tag, int n) {
    static const std::map<std::string, FactorType> names{{"sl", FactorType::sl}, {"so", FactorType::so},
                                                         {"sp", FactorType::sp}, {"gl", FactorType::gl},
                                                         {"e6", FactorType::e6}, {"g2", FactorType::g2}};
    auto it = names.find(tag);
    if (it == names.end()) throw Error(ErrorKind::BadParameter, "unknown algebra type '" + tag + "'");
    return make_algebra(it->second, n);
}

CatalogAlgebra direct_sum(const CatalogAlgebra& a, const CatalogAlgebra& b) {
    const Index na = a.module_dim, nb = b.module_dim;
    auto embed = [&](const QMatrix& m, bool first) {
        QMatrix out = QMatrix::Zero(na + nb, na + nb);
        if (first)
            out.topLeftCorner(na, na) = m;
        else
            out.bottomRightCorner(nb, nb) = m;
        return out;
    };
    CatalogAlgebra s;
    s.tag = "sum";
    s.rank = a.rank + b.rank;
    s.module_dim = static_cast<int>(na + nb);
    s.factors = a.factors;
    s.factors.insert(s.factors.end(), b.factors.begin(), b.factors.end());
    for (const QMatrix& m : a.borel_basis) s.borel_basis.push_back(embed(m, true));
    for (const QMatrix& m : b.borel_basis) s.borel_basis.push_back(embed(m, false));
    s.basis = s.borel_basis;
    auto rest = [&](const CatalogAlgebra& x, bool first) {
        for (size_t i = x.borel_basis.size(); i < x.basis.size(); ++i) s.basis.push_back(embed(x.basis[i], first));
    };
    rest(a, true);
    rest(b, false);
    return s;
}

QMatrix kron(const QMatrix& a, const QMatrix& b) {
    QMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

std::vector<QMatrix> represent_part(const std::vector<QMatrix>& natural, const Factor& f, RepTag tag, bool dual) {
    if (!has_matrix_model(f, tag)) throw Error(ErrorKind::NoMatrixModel, "no matrix model for this part of " + factor_name(f));
    std::vector<QMatrix> out;
    for (const QMatrix& x0 : natural) {
        const QMatrix x = dual ? QMatrix(-x0.transpose()) : x0;
        switch (tag) {
            case RepTag::Natural: out.push_back(x); break;
            case RepTag::Sym2: out.push_back(sym2_of(x)); break;
            case RepTag::Wedge2: out.push_back(wedge2_of(x)); break;
            default: break;
        }
    }
    return out;
}

CatalogAlgebra representation(const ModuleSpec& module) {
    module.validate();
    const int total = module.dimension();
    std::vector<int> offsets;
    int acc = 0;
    for (size_t i = 0; i < module.summands.size(); ++i) {
        offsets.push_back(acc);
        acc += module.summand_dim(i);
    }
    CatalogAlgebra out;
    out.tag = "rep";
    out.module_dim = total;
    std::vector<QMatrix> borel_images, other_images;
    for (size_t fi = 0; fi < module.factors.size(); ++fi) {
        const Factor& f = module.factors[fi];
        out.factors.push_back(factor_name(f));
        bool used = false;
        for (const Summand& s : module.summands)
            for (const RepPart& p : s.parts)
                if (p.factor == static_cast<int>(fi)) used = true;
        if (!used) continue;
        for (const Summand& s : module.summands)
            for (const RepPart& p : s.parts)
                if (!has_matrix_model(f, p.tag))
                    throw Error(ErrorKind::NoMatrixModel, "no matrix model for a part of " + factor_name(f));
        out.rank += factor_rank(f);
        if (f.type == FactorType::sl && f.n == 1) continue;
        const CatalogAlgebra a = make_algebra(f.type, f.n);
        auto image = [&](size_t bi) {
            QMatrix big = QMatrix::Zero(total, total);
            for (size_t si = 0; si < module.summands.size(); ++si) {
                const Summand& s = module.summands[si];
                QMatrix block = QMatrix::Identity(1, 1);
                bool touches = false;
                for (const RepPart& p : s.parts) {
                    const Factor& pf = module.factors[static_cast<size_t>(p.factor)];
                    if (p.factor == static_cast<int>(fi)) {
                        block = kron(block, represent_part({a.basis[bi]}, pf, p.tag, p.dual).front());
                        touches = true;
                    } else {
                        const int d = part_dim(pf, p.tag);
                        block = kron(block, QMatrix::Identity(d, d));
                    }
                }
                if (touches) {
                    const int d = module.summand_dim(si);
                    big.block(offsets[si], offsets[si], d, d) = block;
                }
            }
            return big;
        };
        for (size_t bi = 0; bi < a.basis.size(); ++bi) {
            if (bi < a.borel_basis.size())
                borel_images.push_back(image(bi));
            else
                other_images.push_back(image(bi));
        }
    }
    std::vector<QVector> rows;
    std::vector<Index> pivots;
    for (const QMatrix& m : borel_images) extend_independent(out.borel_basis, rows, pivots, m);
    out.basis = out.borel_basis;
    for (const QMatrix& m : other_images) extend_independent(out.basis, rows, pivots, m);
    return out;
}

QMatrix summand_scalar(const ModuleSpec& module, const std::vector<Rational>& coeffs) {
    if (coeffs.size() != module.summands.size())
        throw Error(ErrorKind::DimensionMismatch, "center vector length differs from the number of summands");
    const int total = module.dimension();
    QMatrix out = QMatrix::Zero(total, total);
    int acc = 0;
    for (size_t i = 0; i < module.summands.size(); ++i) {
        const int d = module.summand_dim(i);
        for (int k = 0; k < d; ++k) out(acc + k, acc + k) = coeffs[i];
        acc += d;
    }
    return out;
}

CatalogAlgebra with_center(CatalogAlgebra a, const ModuleSpec& module, const std::vector<std::vector<Rational>>& center) {
    std::vector<QVector> rows;
    std::vector<Index> pivots;
    std::vector<QMatrix> borel, rest;
    for (const QMatrix& m : a.borel_basis) extend_independent(borel, rows, pivots, m);
    for (const std::vector<Rational>& c : center) extend_independent(borel, rows, pivots, summand_scalar(module, c));
    rest = borel;
    for (size_t i = a.borel_basis.size(); i < a.basis.size(); ++i) extend_independent(rest, rows, pivots, a.basis[i]);
    a.borel_basis = borel;
    a.basis = rest;
    return a;
}

Index span_dim(const std::vector<QMatrix>& mats) {
    if (mats.empty()) return 0;
    const Index n = mats.front().rows();
    QMatrix m(n * mats.front().cols(), static_cast<Index>(mats.size()));
    for (size_t i = 0; i < mats.size(); ++i) m.col(static_cast<Index>(i)) = vec(mats[i]);
    return exact_rank(m);
}

bool is_bracket_closed(const std::vector<QMatrix>& mats) {
    std::vector<QMatrix> all = mats;
    for (size_t i = 0; i < mats.size(); ++i)
        for (size_t j = i + 1; j < mats.size(); ++j) all.push_back(bracket(mats[i], mats[j]));
    return span_dim(all) == span_dim(mats);
}

CatalogAlgebra normalizer_in_gl(const CatalogAlgebra& k, const std::vector<QMatrix>& extra_center) {
    const Index n = k.module_dim > 0 ? k.module_dim
                                     : (extra_center.empty() ? 0 : extra_center.front().rows());
    for (const QMatrix& m : extra_center)
        if (m.rows() != n || m.cols() != n) throw Error(ErrorKind::DimensionMismatch, "extra center has the wrong size");
    std::vector<QMatrix> s;
    std::vector<QVector> rows;
    std::vector<Index> pivots;
    for (const QMatrix& m : k.basis) extend_independent(s, rows, pivots, m);
    for (const QMatrix& m : extra_center) extend_independent(s, rows, pivots, m);
    const Index nn = n * n;
    CatalogAlgebra out;
    out.tag = "normalizer";
    out.module_dim = static_cast<int>(n);
    if (s.empty()) {
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j) out.basis.push_back(unit(static_cast<int>(n), static_cast<int>(i), static_cast<int>(j)));
        return out;
    }
    // Rows of q span the annihilator of span(S): q vec(m) = 0 iff m in span(S).
    QMatrix span(nn, static_cast<Index>(s.size()));
    for (size_t i = 0; i < s.size(); ++i) span.col(static_cast<Index>(i)) = vec(s[i]);
    const QMatrix annihilator = nullspace<Rational>(QMatrix(span.transpose()));
    const QMatrix q = annihilator.transpose();
    if (q.rows() == 0) {
        for (Index i = 0; i < n; ++i)
            for (Index j = 0; j < n; ++j) out.basis.push_back(unit(static_cast<int>(n), static_cast<int>(i), static_cast<int>(j)));
        return out;
    }
    QMatrix system(q.rows() * static_cast<Index>(s.size()), nn);
    for (size_t si = 0; si < s.size(); ++si) {
        const QMatrix& sm = s[si];
        // Column (a, b) of ad: vec([E_ab, s]).
        QMatrix ad = QMatrix::Zero(nn, nn);
        for (Index a = 0; a < n; ++a)
            for (Index b = 0; b < n; ++b) {
                const Index col = a * n + b;
                for (Index j = 0; j < n; ++j) ad(a * n + j, col) += sm(b, j);
                for (Index i = 0; i < n; ++i) ad(i * n + b, col) -= sm(i, a);
            }
        system.block(static_cast<Index>(si) * q.rows(), 0, q.rows(), nn) = q * ad;
    }
    const QMatrix ker = nullspace<Rational>(system);
    for (Index c = 0; c < ker.cols(); ++c) out.basis.push_back(unvec(ker.col(c), n));
    return out;
}

}  // namespace lieflag
