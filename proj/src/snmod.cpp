#include "lieflag/snmod.hpp"
#include "lieflag/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace lieflag {

namespace {

QMatrix identity(Index d) { return QMatrix::Identity(d, d); }

// Reduced word of w: w = s_{word[0]} s_{word[1]} ... (1-based indices).
std::vector<int> reduced_word(Permutation w) {
    std::vector<int> right;  // id = w s_{right[0]} s_{right[1]} ...
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < w.size(); ++i)
            if (w[i] > w[i + 1]) {
                std::swap(w[i], w[i + 1]);
                right.push_back(static_cast<int>(i) + 1);
                changed = true;
            }
    }
    std::reverse(right.begin(), right.end());
    return right;
}

Permutation cycle_representative(const Partition& mu) {
    Permutation w;
    int start = 0;
    for (int len : mu.parts) {
        for (int k = 0; k < len; ++k) w.push_back(start + (k + 1) % len);
        start += len;
    }
    return w;
}

}  // namespace

SnRep SnRep::make(int n, std::vector<QMatrix> generators, Index dim) {
    if (n < 1) throw Error(ErrorKind::BadParameter, "S_n needs n >= 1");
    if (generators.size() != static_cast<size_t>(n) - 1)
        throw Error(ErrorKind::DimensionMismatch, "need n-1 generator matrices");
    if (!generators.empty()) dim = generators.front().rows();
    if (dim < 0) throw Error(ErrorKind::DimensionMismatch, "dimension of an S_1 module must be given");
    for (const QMatrix& g : generators)
        if (g.rows() != dim || g.cols() != dim) throw Error(ErrorKind::DimensionMismatch, "generators differ in shape");
    const QMatrix one = identity(dim);
    for (size_t i = 0; i < generators.size(); ++i) {
        const QMatrix& a = generators[i];
        if (a * a != one) throw Error(ErrorKind::RelationViolation, "s_" + std::to_string(i + 1) + "^2 != 1");
        for (size_t j = i + 1; j < generators.size(); ++j) {
            const QMatrix& b = generators[j];
            if (j == i + 1) {
                const QMatrix ab = a * b;
                if (ab * ab * ab != one)
                    throw Error(ErrorKind::RelationViolation, "braid relation fails at s_" + std::to_string(i + 1));
            } else if (a * b != b * a) {
                throw Error(ErrorKind::RelationViolation,
                            "s_" + std::to_string(i + 1) + " and s_" + std::to_string(j + 1) + " do not commute");
            }
        }
    }
    SnRep r;
    r.n_ = n;
    r.dim_ = dim;
    r.gens_ = std::move(generators);
    return r;
}

SnRep SnRep::trivial(int n) { return make(n, std::vector<QMatrix>(static_cast<size_t>(n - 1), identity(1)), 1); }

SnRep SnRep::sign(int n) { return make(n, std::vector<QMatrix>(static_cast<size_t>(n - 1), -identity(1)), 1); }

SnRep SnRep::permutation(int n) {
    std::vector<QMatrix> g;
    for (int i = 1; i < n; ++i) {
        QMatrix m = identity(n);
        m.row(i - 1).swap(m.row(i));
        g.push_back(m);
    }
    return make(n, g, n);
}

SnRep SnRep::regular(int n) {
    const std::vector<Permutation> perms = all_permutations(n);
    std::map<Permutation, Index> index;
    for (size_t k = 0; k < perms.size(); ++k) index[perms[k]] = static_cast<Index>(k);
    const Index d = static_cast<Index>(perms.size());
    std::vector<QMatrix> g;
    for (int i = 1; i < n; ++i) {
        QMatrix m = QMatrix::Zero(d, d);
        const Permutation s = transposition(n, i);
        for (size_t k = 0; k < perms.size(); ++k) m(index[compose(s, perms[k])], static_cast<Index>(k)) = 1;
        g.push_back(m);
    }
    return make(n, g, d);
}

namespace {

// Standard Young tableaux as (row, column) of each entry 0..n-1.
using Tableau = std::vector<std::pair<int, int>>;

void fill_tableaux(const std::vector<int>& shape, std::vector<int>& filled, Tableau& t, int next, int n,
                   std::vector<Tableau>& out) {
    if (next == n) {
        out.push_back(t);
        return;
    }
    for (size_t r = 0; r < shape.size(); ++r) {
        if (filled[r] >= shape[r]) continue;
        if (r > 0 && filled[r - 1] <= filled[r]) continue;
        t[static_cast<size_t>(next)] = {static_cast<int>(r), filled[r]};
        ++filled[r];
        fill_tableaux(shape, filled, t, next + 1, n, out);
        --filled[r];
    }
}

std::vector<Tableau> standard_tableaux(const Partition& lambda) {
    const int n = lambda.size();
    std::vector<Tableau> out;
    std::vector<int> filled(lambda.parts.size(), 0);
    Tableau t(static_cast<size_t>(n));
    fill_tableaux(lambda.parts, filled, t, 0, n, out);
    return out;
}

}  // namespace

SnRep SnRep::specht(const Partition& lambda) {
    const int n = lambda.size();
    const std::vector<Tableau> tabs = standard_tableaux(lambda);
    std::map<Tableau, Index> index;
    for (size_t k = 0; k < tabs.size(); ++k) index[tabs[k]] = static_cast<Index>(k);
    const Index d = static_cast<Index>(tabs.size());
    std::vector<QMatrix> g;
    for (int i = 1; i < n; ++i) {
        const size_t a = static_cast<size_t>(i) - 1, b = static_cast<size_t>(i);
        QMatrix m = QMatrix::Zero(d, d);
        for (size_t k = 0; k < tabs.size(); ++k) {
            const Tableau& t = tabs[k];
            const Index col = static_cast<Index>(k);
            const int rho = (t[b].second - t[b].first) - (t[a].second - t[a].first);
            if (t[a].first == t[b].first) {
                m(col, col) = 1;
            } else if (t[a].second == t[b].second) {
                m(col, col) = -1;
            } else {
                Tableau swapped = t;
                std::swap(swapped[a], swapped[b]);
                m(col, col) = ratio(1, rho);
                // Off-diagonal weights multiply to 1 - 1/rho^2 across the pair.
                m(index.at(swapped), col) =
                    t[a].first < t[b].first ? Rational(1) : Rational(1) - ratio(1, rho * rho);
            }
        }
        g.push_back(m);
    }
    return make(n, g, d);
}

SnRep SnRep::direct_sum(const SnRep& a, const SnRep& b) {
    if (a.n_ != b.n_) throw Error(ErrorKind::MismatchedSize, "modules of different symmetric groups");
    std::vector<QMatrix> g;
    const Index d = a.dim_ + b.dim_;
    for (size_t i = 0; i < a.gens_.size(); ++i) {
        QMatrix m = QMatrix::Zero(d, d);
        m.topLeftCorner(a.dim_, a.dim_) = a.gens_[i];
        m.bottomRightCorner(b.dim_, b.dim_) = b.gens_[i];
        g.push_back(m);
    }
    return make(a.n_, g, d);
}

QMatrix SnRep::act(const Permutation& w) const {
    if (static_cast<int>(w.size()) != n_) throw Error(ErrorKind::MismatchedSize, "permutation of another S_n");
    QMatrix m = identity(dim_);
    for (int i : reduced_word(w)) m = m * s(i);
    return m;
}

Rational SnRep::character(const Partition& cycle_type) const { return act(cycle_representative(cycle_type)).trace(); }

Integer character_value(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) throw Error(ErrorKind::MismatchedSize, "partitions of different n");
    // Murnaghan-Nakayama on beta-sets: removing a rim hook of length r moves
    // a bead from b to b - r, with sign (-1)^(beads jumped over).
    static std::map<std::pair<std::vector<int>, std::vector<int>>, Integer> memo;
    const auto key = std::make_pair(lambda.parts, mu.parts);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    if (mu.parts.empty()) return lambda.parts.empty() ? 1 : 0;
    const int k = static_cast<int>(lambda.parts.size());
    std::set<int> beads;
    for (int i = 0; i < k; ++i) beads.insert(lambda.parts[static_cast<size_t>(i)] + (k - 1 - i));
    const int r = mu.parts.front();
    const Partition rest_mu{std::vector<int>(mu.parts.begin() + 1, mu.parts.end())};
    Integer total = 0;
    for (int b : beads) {
        if (b - r < 0 || beads.count(b - r)) continue;
        int jumped = 0;
        for (int c : beads)
            if (c > b - r && c < b) ++jumped;
        std::set<int> moved = beads;
        moved.erase(b);
        moved.insert(b - r);
        std::vector<int> parts;
        int i = 0;
        for (auto it = moved.rbegin(); it != moved.rend(); ++it, ++i)
            if (*it - (k - 1 - i) > 0) parts.push_back(*it - (k - 1 - i));
        const Integer v = character_value(Partition{parts}, rest_mu);
        total += jumped % 2 == 0 ? v : Integer(-v);
    }
    memo[key] = total;
    return total;
}

Integer centralizer_order(const Partition& mu) {
    std::map<int, int> mult;
    for (int p : mu.parts) ++mult[p];
    Integer z = 1;
    for (const auto& [part, m] : mult)
        for (int j = 1; j <= m; ++j) z *= Integer(part) * j;
    return z;
}

Integer irreducible_dim(const Partition& lambda) {
    const Partition conj = conjugate(lambda);
    Integer num = 1, den = 1;
    for (int k = 2; k <= lambda.size(); ++k) num *= k;
    for (size_t r = 0; r < lambda.parts.size(); ++r)
        for (int c = 0; c < lambda.parts[r]; ++c)
            den *= (lambda.parts[r] - c - 1) + (conj.parts[static_cast<size_t>(c)] - static_cast<int>(r) - 1) + 1;
    return num / den;
}

Decomposition decompose(const SnRep& r) {
    const int n = r.n();
    if (n > 8) throw Error(ErrorKind::RankTooLarge, "decomposition is limited to n <= 8");
    const std::vector<Partition> classes = all_partitions(n);
    std::vector<Rational> chi;
    for (const Partition& mu : classes) chi.push_back(r.character(mu));
    Decomposition out;
    for (const Partition& lambda : all_partitions(n)) {
        Rational m = 0;
        for (size_t k = 0; k < classes.size(); ++k)
            m += chi[k] * Rational(character_value(lambda, classes[k])) / Rational(centralizer_order(classes[k]));
        if (!is_integer(m) || m < 0) throw Error(ErrorKind::RelationViolation, "non-integral multiplicity");
        if (m != 0) out[lambda.parts] = m.get_num().get_si();
    }
    return out;
}

std::string to_string(const Decomposition& d) {
    std::string s = "{";
    bool first = true;
    for (auto it = d.rbegin(); it != d.rend(); ++it) {
        if (!first) s += ", ";
        first = false;
        s += to_string(Partition{it->first}) + ":" + std::to_string(it->second);
    }
    return s + "}";
}

QMatrix fixed_space_except(const SnRep& r, int i) {
    const Index d = r.dim();
    QMatrix stacked(static_cast<Index>(std::max(r.n() - 2, 0)) * d, d);
    Index row = 0;
    for (int j = 1; j < r.n(); ++j) {
        if (j == i) continue;
        stacked.middleRows(row, d) = r.s(j) - identity(d);
        row += d;
    }
    if (row == 0) return identity(d);
    return nullspace<Rational>(stacked.topRows(row));
}

LsnResult lsn_check(const SnRep& r) {
    if (r.n() > 8) throw Error(ErrorKind::RankTooLarge, "limited to n <= 8");
    LsnResult out;
    const Index d = r.dim();
    std::vector<QMatrix> parts;
    Index cols = 0;
    for (int i = 1; i < std::max(r.n(), 2); ++i) {
        parts.push_back(fixed_space_except(r, i));
        cols += parts.back().cols();
    }
    QMatrix all(d, cols);
    Index c = 0;
    for (const QMatrix& p : parts) {
        all.middleCols(c, p.cols()) = p;
        c += p.cols();
    }
    out.hypothesis = exact_rank(all) == d;
    if (!out.hypothesis) return out;
    out.decomposition = decompose(r);
    out.conclusion_holds = true;
    const int n = r.n();
    for (const auto& [shape, m] : out.decomposition) {
        const bool allowed = shape == std::vector<int>{n} || (n >= 2 && shape == std::vector<int>{n - 1, 1});
        if (!allowed) out.conclusion_holds = false;
    }
    return out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw Error(ErrorKind::MismatchedSize, "permutations of different degree");
    Permutation c(a.size());
    for (size_t x = 0; x < a.size(); ++x) c[x] = a[static_cast<size_t>(b[x])];
    return c;
}

Permutation transposition(int n, int i) {
    if (i < 1 || i >= n) throw Error(ErrorKind::BadParameter, "s_i needs 1 <= i < n");
    Permutation s(static_cast<size_t>(n));
    std::iota(s.begin(), s.end(), 0);
    std::swap(s[static_cast<size_t>(i) - 1], s[static_cast<size_t>(i)]);
    return s;
}

std::vector<Permutation> all_permutations(int n) {
    Permutation w(static_cast<size_t>(n));
    std::iota(w.begin(), w.end(), 0);
    std::vector<Permutation> out;
    do out.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}

GroupAlgebraElement GroupAlgebraElement::identity(int n) {
    Permutation e(static_cast<size_t>(n));
    std::iota(e.begin(), e.end(), 0);
    return of(e);
}

GroupAlgebraElement GroupAlgebraElement::of(const Permutation& w, const Integer& c) {
    GroupAlgebraElement x;
    x.n = static_cast<int>(w.size());
    if (c != 0) x.coeffs[w] = c;
    return x;
}

GroupAlgebraElement GroupAlgebraElement::generator(int n, int i) { return of(transposition(n, i)) + identity(n); }

GroupAlgebraElement GroupAlgebraElement::operator+(const GroupAlgebraElement& o) const {
    if (n != o.n) throw Error(ErrorKind::MismatchedSize, "elements of different group rings");
    GroupAlgebraElement x = *this;
    for (const auto& [w, c] : o.coeffs) {
        Integer& v = x.coeffs[w];
        v += c;
        if (v == 0) x.coeffs.erase(w);
    }
    return x;
}

GroupAlgebraElement GroupAlgebraElement::operator-(const GroupAlgebraElement& o) const {
    GroupAlgebraElement neg = o;
    for (auto& [w, c] : neg.coeffs) c = -c;
    return *this + neg;
}

bool GroupAlgebraElement::operator==(const GroupAlgebraElement& o) const { return n == o.n && coeffs == o.coeffs; }

GroupAlgebraElement pf_ring_multiply(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    if (a.n > 6 || b.n > 6) throw Error(ErrorKind::RankTooLarge, "group ring operations are limited to n <= 6");
    if (a.n != b.n) throw Error(ErrorKind::MismatchedSize, "elements of different group rings");
    GroupAlgebraElement out;
    out.n = a.n;
    for (const auto& [u, c] : a.coeffs)
        for (const auto& [v, e] : b.coeffs) out = out + GroupAlgebraElement::of(compose(u, v), c * e);
    return out;
}

namespace {

// Incremental row echelon form over Z/p.
class ModEchelon {
public:
    explicit ModEchelon(std::uint64_t p) : p_(p) {}
    /// Adds the vector if independent of the rows so far.
    bool add(std::vector<std::uint64_t> v) {
        for (size_t k = 0; k < rows_.size(); ++k) {
            const std::uint64_t c = v[pivots_[k]];
            if (c == 0) continue;
            for (size_t j = 0; j < v.size(); ++j)
                v[j] = (v[j] + p_ - mul(c, rows_[k][j])) % p_;
        }
        size_t piv = 0;
        while (piv < v.size() && v[piv] == 0) ++piv;
        if (piv == v.size()) return false;
        const std::uint64_t inv = power(v[piv], p_ - 2);
        for (std::uint64_t& x : v) x = mul(x, inv);
        rows_.push_back(std::move(v));
        pivots_.push_back(piv);
        return true;
    }
    size_t rank() const { return rows_.size(); }

private:
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p_);
    }
    std::uint64_t power(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    std::uint64_t p_;
    std::vector<std::vector<std::uint64_t>> rows_;
    std::vector<size_t> pivots_;
};

}  // namespace

bool pf_generators_span(int n) {
    if (n < 1) throw Error(ErrorKind::BadParameter, "S_n needs n >= 1");
    if (n > 6) throw Error(ErrorKind::RankTooLarge, "group ring operations are limited to n <= 6");
    const std::vector<Permutation> perms = all_permutations(n);
    std::map<Permutation, size_t> index;
    for (size_t k = 0; k < perms.size(); ++k) index[perms[k]] = k;
    std::vector<GroupAlgebraElement> gens;
    for (int i = 1; i < n; ++i) gens.push_back(GroupAlgebraElement::generator(n, i));

    // Span of all words in the generators, closed under right multiplication.
    // Integer vectors of full rank modulo a prime have full rank over Q.
    const std::uint64_t p = kCertificatePrime;
    auto reduce = [&](const GroupAlgebraElement& x) {
        std::vector<std::uint64_t> v(perms.size(), 0);
        for (const auto& [w, c] : x.coeffs) {
            Integer r = c % Integer(static_cast<unsigned long>(p));
            if (r < 0) r += static_cast<unsigned long>(p);
            v[index.at(w)] = r.get_ui();
        }
        return v;
    };
    ModEchelon ech(p);
    std::vector<GroupAlgebraElement> basis{GroupAlgebraElement::identity(n)};
    ech.add(reduce(basis.front()));
    std::vector<GroupAlgebraElement> words = basis;
    for (size_t k = 0; k < basis.size() && ech.rank() < perms.size(); ++k)
        for (const GroupAlgebraElement& g : gens) {
            GroupAlgebraElement y = pf_ring_multiply(basis[k], g);
            if (ech.add(reduce(y))) basis.push_back(y);
            words.push_back(y);
        }
    bool spans = ech.rank() == perms.size();
    if (!spans) {
        // Decide over Q from everything generated so far.
        ZMatrix m = ZMatrix::Zero(static_cast<Index>(perms.size()), static_cast<Index>(words.size()));
        for (size_t j = 0; j < words.size(); ++j)
            for (const auto& [w, c] : words[j].coeffs) m(static_cast<Index>(index.at(w)), static_cast<Index>(j)) = c;
        spans = exact_rank(m) == static_cast<Index>(perms.size());
    }
    if (!spans) return false;
    // Integrality: every permutation is a product of the s_i = (s_i + 1) - 1.
    const GroupAlgebraElement e = GroupAlgebraElement::identity(n);
    for (const Permutation& w : perms) {
        GroupAlgebraElement x = e;
        for (int i : reduced_word(w)) x = pf_ring_multiply(x, gens[static_cast<size_t>(i) - 1] - e);
        if (!(x == GroupAlgebraElement::of(w))) return false;
    }
    return true;
}

}  // namespace lieflag
