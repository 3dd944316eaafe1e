#include "lieflag/quiver_ps.hpp"
#include "lieflag/errors.hpp"

#include <algorithm>
#include <numeric>

namespace lieflag {

void QuiverSpec::validate() const {
    if (n < 1) throw Error(ErrorKind::BadParameter, "a quiver has at least two vertices");
}

const char* to_string(QuiverKind k) { return k == QuiverKind::A ? "A" : "B"; }

QuiverRep QuiverRep::zero(const QuiverSpec& spec, const std::vector<int>& dims) {
    spec.validate();
    if (dims.size() != static_cast<size_t>(spec.n) + 1)
        throw Error(ErrorKind::ShapeMismatch, "dimension vector needs n+1 entries");
    QuiverRep r;
    r.spec = spec;
    r.dims = dims;
    for (int i = 0; i < spec.n; ++i) {
        const Index a = dims[static_cast<size_t>(i)], b = dims[static_cast<size_t>(i) + 1];
        r.p.push_back(CMatrix::Zero(a, b));
        r.q.push_back(CMatrix::Zero(b, a));
    }
    return r;
}

int QuiverRep::total_dim() const { return std::accumulate(dims.begin(), dims.end(), 0); }

void QuiverRep::check_shapes() const {
    spec.validate();
    const size_t n = static_cast<size_t>(spec.n);
    if (dims.size() != n + 1 || p.size() != n || q.size() != n)
        throw Error(ErrorKind::ShapeMismatch, "representation does not have n+1 vertices and n arrow pairs");
    for (size_t i = 0; i <= n; ++i)
        if (dims[i] < 0) throw Error(ErrorKind::ShapeMismatch, "negative dimension");
    for (size_t i = 0; i < n; ++i) {
        if (p[i].rows() != dims[i] || p[i].cols() != dims[i + 1])
            throw Error(ErrorKind::ShapeMismatch, "p_" + std::to_string(i) + " has the wrong shape");
        if (q[i].rows() != dims[i + 1] || q[i].cols() != dims[i])
            throw Error(ErrorKind::ShapeMismatch, "q_" + std::to_string(i) + " has the wrong shape");
    }
}

CMatrix QuiverRep::xi(int i) const {
    const Index d = dims[static_cast<size_t>(i)];
    return CMatrix::Identity(d, d) + q[static_cast<size_t>(i) - 1] * p[static_cast<size_t>(i) - 1];
}

CMatrix QuiverRep::nu(int i) const {
    const Index d = dims[static_cast<size_t>(i)];
    return CMatrix::Identity(d, d) + p[static_cast<size_t>(i)] * q[static_cast<size_t>(i)];
}

namespace {

bool invertible(const CMatrix& m) { return field_rank<Cyclotomic>(m) == m.rows(); }

}  // namespace

bool check_relations(const QuiverRep& r) {
    r.check_shapes();
    const int n = r.spec.n;
    std::vector<CMatrix> xi(static_cast<size_t>(n) + 1), nu(static_cast<size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) {
        xi[static_cast<size_t>(i)] = r.xi(i);
        if (!invertible(xi[static_cast<size_t>(i)])) return false;
    }
    for (int i = 0; i < n; ++i) {
        nu[static_cast<size_t>(i)] = r.nu(i);
        if (!invertible(nu[static_cast<size_t>(i)])) return false;
    }
    auto at = [](const std::vector<CMatrix>& v, int i) -> const CMatrix& { return v[static_cast<size_t>(i)]; };
    if (r.spec.kind == QuiverKind::A) {
        for (int i = 1; i < n; ++i)
            if (at(xi, i) != at(nu, i)) return false;
        return true;
    }
    for (int i = 1; i < n; ++i)
        if (CMatrix(at(xi, i) * at(xi, i)) != CMatrix(at(nu, i) * at(nu, i))) return false;
    // Anticommutation wherever both sides are defined.
    for (int j = 0; j < n; ++j) {
        const CMatrix& p = r.p[static_cast<size_t>(j)];
        const CMatrix& q = r.q[static_cast<size_t>(j)];
        if (j + 1 <= n - 1) {
            if (CMatrix(p * at(nu, j + 1)) != CMatrix(-(at(nu, j) * p))) return false;
            if (CMatrix(q * at(nu, j)) != CMatrix(-(at(nu, j + 1) * q))) return false;
        }
        if (j >= 1) {
            if (CMatrix(p * at(xi, j + 1)) != CMatrix(-(at(xi, j) * p))) return false;
            if (CMatrix(q * at(xi, j)) != CMatrix(-(at(xi, j + 1) * q))) return false;
        }
    }
    return true;
}

namespace {

// Places a block map into the total space End(V_0 + ... + V_n).
CMatrix embed(const CMatrix& m, Index row_offset, Index col_offset, Index total) {
    CMatrix out = CMatrix::Zero(total, total);
    out.block(row_offset, col_offset, m.rows(), m.cols()) = m;
    return out;
}

CVector flatten(const CMatrix& m) {
    CVector v(m.size());
    for (Index j = 0; j < m.cols(); ++j)
        for (Index i = 0; i < m.rows(); ++i) v(j * m.rows() + i) = m(i, j);
    return v;
}

}  // namespace

bool is_simple(const QuiverRep& r) {
    r.check_shapes();
    const Index total = r.total_dim();
    if (total > kSimplicityBound)
        throw Error(ErrorKind::TooLarge, "simplicity test is bounded at total dimension " + std::to_string(kSimplicityBound));
    if (total == 0) return false;
    std::vector<Index> offset(r.dims.size() + 1, 0);
    for (size_t i = 0; i < r.dims.size(); ++i) offset[i + 1] = offset[i] + r.dims[i];

    std::vector<CMatrix> generators;
    for (size_t i = 0; i + 1 < r.dims.size(); ++i) {
        generators.push_back(embed(r.p[i], offset[i], offset[i + 1], total));
        generators.push_back(embed(r.q[i], offset[i + 1], offset[i], total));
    }
    // Span of all words, closed under left multiplication by the arrows,
    // starting from the vertex idempotents.
    std::vector<CMatrix> basis;
    CMatrix span(total * total, 0);
    auto try_add = [&](const CMatrix& m) {
        CMatrix extended(span.rows(), span.cols() + 1);
        extended << span, flatten(m);
        if (field_rank<Cyclotomic>(extended) == extended.cols()) {
            span = extended;
            basis.push_back(m);
            return true;
        }
        return false;
    };
    for (size_t i = 0; i < r.dims.size(); ++i) {
        if (r.dims[i] == 0) continue;
        CMatrix e = CMatrix::Zero(total, total);
        for (Index k = offset[i]; k < offset[i + 1]; ++k) e(k, k) = 1;
        try_add(e);
    }
    for (size_t k = 0; k < basis.size() && span.cols() < total * total; ++k)
        for (const CMatrix& g : generators) try_add(CMatrix(g * basis[k]));
    return span.cols() == total * total;
}

namespace {

CMatrix power(const CMatrix& m, int e) {
    CMatrix out = CMatrix::Identity(m.rows(), m.cols());
    for (int k = 0; k < e; ++k) out = out * m;
    return out;
}

std::optional<Cyclotomic> scalar_of(const CMatrix& m) {
    const Cyclotomic c = m(0, 0);
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j)
            if (m(i, j) != (i == j ? c : Cyclotomic(0))) return std::nullopt;
    return c;
}

Cyclotomic sign(int e) { return Cyclotomic(e % 2 == 0 ? 1 : -1); }

}  // namespace

std::optional<Cyclotomic> evaluate_monodromy(const QuiverRep& r) {
    r.check_shapes();
    const int n = r.spec.n;
    const bool b = r.spec.kind == QuiverKind::B;
    std::optional<Cyclotomic> c;
    for (int i = 0; i <= n; ++i) {
        const Index d = r.dims[static_cast<size_t>(i)];
        if (d == 0) continue;
        CMatrix op = CMatrix::Identity(d, d);
        if (i < n) op = op * power(b ? CMatrix(sign(i) * r.nu(i)) : r.nu(i), n - i);
        if (i > 0) op = op * power(b ? CMatrix(sign(i + 1) * r.xi(i)) : r.xi(i), i);
        const std::optional<Cyclotomic> s = scalar_of(op);
        if (!s || (c && *c != *s)) return std::nullopt;
        c = s;
    }
    return c;
}

MonodromyClass classify_scalar(const Cyclotomic& c) {
    if (const std::optional<Rational> r = c.root_residue()) return MonodromyClass::of_residue(*r);
    return MonodromyClass::generic_class(c.str());
}

std::string SimpleDescriptor::name() const {
    switch (variant) {
        case Variant::Vertex: return "vertex(" + std::to_string(index) + ")";
        case Variant::Edge: return "edge(" + std::to_string(index) + "," + std::to_string(index + 1) + ")";
        case Variant::FullSupport: return "full(" + to_string(eigenvalue) + ")";
        case Variant::FullSupportFamily: return "full-family";
    }
    return "";
}

namespace {

QuiverRep full_support_witness(const QuiverSpec& spec, const Cyclotomic& lambda) {
    QuiverRep r = QuiverRep::zero(spec, std::vector<int>(static_cast<size_t>(spec.n) + 1, 1));
    for (int j = 0; j < spec.n; ++j) {
        // Kind A: nu_j = lambda.  Kind B: nu_j = (-1)^{j+1} lambda, so the
        // sign-normalized xi is lambda and the sign-normalized nu is -lambda.
        const Cyclotomic nu = spec.kind == QuiverKind::A ? lambda : sign(j + 1) * lambda;
        r.p[static_cast<size_t>(j)](0, 0) = 1;
        r.q[static_cast<size_t>(j)](0, 0) = nu - Cyclotomic(1);
    }
    return r;
}

MonodromyClass sign_class(int e) { return MonodromyClass::of_residue(ratio(e % 2 == 0 ? 0 : 1, 2)); }

std::vector<int> range(int a, int b) {
    std::vector<int> v(static_cast<size_t>(b - a + 1));
    std::iota(v.begin(), v.end(), a);
    return v;
}

}  // namespace

QuiverRep witness(const SimpleDescriptor& d) {
    const QuiverSpec spec{d.kind, d.n};
    std::vector<int> dims(static_cast<size_t>(d.n) + 1, 0);
    switch (d.variant) {
        case SimpleDescriptor::Variant::Vertex:
            dims[static_cast<size_t>(d.index)] = 1;
            return QuiverRep::zero(spec, dims);
        case SimpleDescriptor::Variant::Edge: {
            dims[static_cast<size_t>(d.index)] = dims[static_cast<size_t>(d.index) + 1] = 1;
            QuiverRep r = QuiverRep::zero(spec, dims);
            r.p[static_cast<size_t>(d.index)](0, 0) = 1;
            r.q[static_cast<size_t>(d.index)](0, 0) = -2;
            return r;
        }
        case SimpleDescriptor::Variant::FullSupport:
        case SimpleDescriptor::Variant::FullSupportFamily:
            break;
    }
    // The eigenvalue is recorded as a root of unity, or generically as
    // 2 e^{2 pi i angle} with the angle in the residue field.
    const Cyclotomic lambda = d.eigenvalue.generic
                                  ? Cyclotomic(2) * Cyclotomic::root_of_unity(d.eigenvalue.residue)
                                  : Cyclotomic::root_of_unity(d.eigenvalue.residue);
    return full_support_witness(spec, lambda);
}

namespace {

SimpleDescriptor vertex_descriptor(const QuiverSpec& spec, int i) {
    SimpleDescriptor d;
    d.kind = spec.kind;
    d.n = spec.n;
    d.variant = SimpleDescriptor::Variant::Vertex;
    d.index = i;
    d.eigenvalue = MonodromyClass::of_residue(0);
    if (spec.kind == QuiverKind::B) {
        if (i >= 1) d.spectrum.xi_bar = sign_class(i);
        if (i <= spec.n - 1) d.spectrum.nu_bar = sign_class(i);
    }
    d.support = {i};
    return d;
}

SimpleDescriptor edge_descriptor(const QuiverSpec& spec, int a) {
    SimpleDescriptor d;
    d.kind = spec.kind;
    d.n = spec.n;
    d.variant = SimpleDescriptor::Variant::Edge;
    d.index = a;
    d.eigenvalue = MonodromyClass::of_residue(Rational(1, 2));
    d.spectrum.xi_bar = sign_class(a);
    d.spectrum.nu_bar = sign_class(a + 1);
    d.support = {a, a + 1};
    return d;
}

// angle: residue of lambda; generic: lambda = 2 e^{2 pi i angle}.
SimpleDescriptor full_descriptor(const QuiverSpec& spec, const Rational& angle, bool generic, bool family) {
    SimpleDescriptor d;
    d.kind = spec.kind;
    d.n = spec.n;
    d.variant = family ? SimpleDescriptor::Variant::FullSupportFamily : SimpleDescriptor::Variant::FullSupport;
    d.eigenvalue = MonodromyClass::of_residue(angle);
    if (generic) {
        d.eigenvalue.generic = true;
        d.eigenvalue.tag = family ? "lambda" : "2*e(" + to_string(frac(angle)) + ")";
    }
    if (spec.kind == QuiverKind::B) {
        d.spectrum.xi_bar = d.eigenvalue;
        MonodromyClass neg = d.eigenvalue;
        neg.residue = frac(neg.residue + Rational(1, 2));
        if (generic) neg.tag = "-" + d.eigenvalue.tag;
        d.spectrum.nu_bar = neg;
    }
    d.support = range(0, spec.n);
    return d;
}

bool spectrum_matches(const Spectrum& s, const SpectrumFilter& f) {
    if (!s.xi_bar || !s.nu_bar || s.xi_bar->generic || s.nu_bar->generic) return false;
    if (f.xi_sign == f.nu_sign) return s.xi_bar->residue == s.nu_bar->residue &&
                                      (s.xi_bar->residue == 0 || s.xi_bar->residue == Rational(1, 2));
    return *s.xi_bar == sign_class(f.xi_sign == 1 ? 0 : 1) && *s.nu_bar == sign_class(f.nu_sign == 1 ? 0 : 1);
}

}  // namespace

std::vector<SimpleDescriptor> enumerate_simples(const QuiverSpec& spec,
                                                const std::optional<MonodromyClass>& monodromy_filter,
                                                const std::optional<SpectrumFilter>& spectrum_filter) {
    spec.validate();
    if (spectrum_filter && spec.kind != QuiverKind::B)
        throw Error(ErrorKind::BadParameter, "spectra are defined for quiver B only");
    const int n = spec.n;
    const bool b = spec.kind == QuiverKind::B;
    std::vector<SimpleDescriptor> candidates;
    for (int i = 0; i <= n; ++i) candidates.push_back(vertex_descriptor(spec, i));
    if (b)
        for (int a = 0; a < n; ++a) candidates.push_back(edge_descriptor(spec, a));
    auto excluded = [&](const Rational& angle) {
        return angle == 0 || (b && angle == Rational(1, 2));
    };
    if (!monodromy_filter) {
        candidates.push_back(full_descriptor(spec, 0, true, true));
    } else if (monodromy_filter->generic) {
        for (int k = 0; k < n; ++k) candidates.push_back(full_descriptor(spec, ratio(k, n), true, false));
    } else {
        // lambda^n = c for kind A; (-lambda)^n = c for kind B.
        for (int k = 0; k < n; ++k) {
            Rational angle = frac((monodromy_filter->residue + k) / n + (b ? Rational(1, 2) : Rational(0)));
            if (!excluded(angle)) candidates.push_back(full_descriptor(spec, angle, false, false));
        }
    }
    std::vector<SimpleDescriptor> out;
    for (SimpleDescriptor& d : candidates) {
        const std::optional<Cyclotomic> c = evaluate_monodromy(witness(d));
        if (!c) throw Error(ErrorKind::RelationViolation, "monodromy operators disagree on witness " + d.name());
        d.monodromy = classify_scalar(*c);
        if (d.variant == SimpleDescriptor::Variant::FullSupportFamily) {
            d.monodromy = MonodromyClass::generic_class(b ? "(-lambda)^" + std::to_string(n) : "lambda^" + std::to_string(n));
        } else if (d.monodromy.generic && monodromy_filter && monodromy_filter->generic) {
            d.monodromy.tag = monodromy_filter->tag;
        }
        if (monodromy_filter && !(d.monodromy == *monodromy_filter)) continue;
        if (spectrum_filter && !spectrum_matches(d.spectrum, *spectrum_filter)) continue;
        out.push_back(d);
    }
    return out;
}

long count_P(const QuiverSpec& spec, const MonodromyClass& c) {
    long count = 0;
    for (const SimpleDescriptor& d : enumerate_simples(spec, c)) {
        if (d.support == std::vector<int>{0} || d.support == std::vector<int>{spec.n}) continue;
        ++count;
    }
    return count;
}

long brute_force_count(const QuiverSpec& spec, const MonodromyClass& c) {
    spec.validate();
    if (c.generic) throw Error(ErrorKind::BadParameter, "brute force covers root-of-unity monodromy only");
    const int n = spec.n;
    const bool b = spec.kind == QuiverKind::B;
    // Roots of unity as exponents modulo m.
    const long m = std::lcm(2L, static_cast<long>(n) * c.residue.get_den().get_si());
    const long half = m / 2;
    auto mod = [m](long x) { return ((x % m) + m) % m; };
    const long target = mod(c.residue.get_num().get_si() * (m / c.residue.get_den().get_si()));
    long count = 0;
    for (int lo = 0; lo <= n; ++lo)
        for (int hi = lo; hi <= n; ++hi) {
            if ((lo == 0 && hi == 0) || (lo == n && hi == n)) continue;
            const int edges = hi - lo;
            // e[j] is the exponent of 1 + p q on the edge lo + j; 0 is excluded
            // since the arrows inside a simple interval are nonzero.
            std::vector<long> e(static_cast<size_t>(edges), 1);
            while (true) {
                auto nu = [&](int i) { return i < hi ? e[static_cast<size_t>(i - lo)] : 0L; };
                auto xi = [&](int i) { return i > lo ? e[static_cast<size_t>(i - 1 - lo)] : 0L; };
                bool ok = true;
                if (!b) {
                    for (int i = std::max(lo, 1); i <= std::min(hi, n - 1) && ok; ++i) ok = nu(i) == xi(i);
                } else {
                    for (int i = std::max(lo, 1); i <= std::min(hi, n - 1) && ok; ++i) ok = mod(2 * nu(i)) == mod(2 * xi(i));
                    for (int j = lo; j < hi && ok; ++j) {
                        if (j + 1 <= n - 1) ok = mod(nu(j + 1)) == mod(nu(j) + half);
                        if (ok && j >= 1) ok = mod(xi(j + 1)) == mod(xi(j) + half);
                    }
                }
                if (ok) {
                    // Monodromy operators at each supported vertex.
                    std::optional<long> value;
                    for (int i = lo; i <= hi && ok; ++i) {
                        long v = 0;
                        if (i < n) v += (n - i) * (nu(i) + (b && i % 2 ? half : 0));
                        if (i > 0) v += i * (xi(i) + (b && (i + 1) % 2 ? half : 0));
                        v = mod(v);
                        if (value && *value != v) ok = false;
                        value = v;
                    }
                    if (ok && *value == target) ++count;
                }
                int k = 0;
                while (k < edges && ++e[static_cast<size_t>(k)] == m) e[static_cast<size_t>(k++)] = 1;
                if (k == edges) break;
            }
        }
    return count;
}

}  // namespace lieflag
