#include "clusterhodge/exchange.hpp"

#include <algorithm>
#include <sstream>

#include "clusterhodge/error.hpp"

namespace clusterhodge {

ExtendedExchangeMatrix ExtendedExchangeMatrix::validate(const std::vector<std::vector<std::int64_t>>& rows,
                                                        int n, int m) {
    if (n < 0 || m < 0) throw Error(ErrorKind::ShapeMismatch, "negative n or m");
    if (n > kMaxVertices || n + m > kMaxVertices)
        throw Error(ErrorKind::TooLarge, "at most 64 rows are supported");
    if (static_cast<int>(rows.size()) != n + m)
        throw Error(ErrorKind::ShapeMismatch,
                    "expected " + std::to_string(n + m) + " rows, got " + std::to_string(rows.size()));
    ExtendedExchangeMatrix b;
    b.n_ = n;
    b.m_ = m;
    b.entries_.reserve(static_cast<std::size_t>((n + m) * n));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            throw Error(ErrorKind::ShapeMismatch, "row " + std::to_string(i + 1) + " has " +
                                                      std::to_string(rows[i].size()) + " entries, expected " +
                                                      std::to_string(n));
        b.entries_.insert(b.entries_.end(), rows[i].begin(), rows[i].end());
    }
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            if (b(i, j) != -b(j, i))
                throw Error(ErrorKind::NotSkewSymmetric,
                            "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    return b;
}

ExtendedExchangeMatrix ExtendedExchangeMatrix::principal(const std::vector<std::vector<std::int64_t>>& top) {
    const int n = static_cast<int>(top.size());
    std::vector<std::vector<std::int64_t>> rows = top;
    for (int i = 0; i < n; ++i) {
        std::vector<std::int64_t> r(static_cast<std::size_t>(n), 0);
        r[static_cast<std::size_t>(i)] = 1;
        rows.push_back(std::move(r));
    }
    return validate(rows, n, n);
}

std::vector<std::vector<std::int64_t>> ExtendedExchangeMatrix::rows() const {
    std::vector<std::vector<std::int64_t>> out;
    for (int i = 0; i < row_count(); ++i) {
        auto first = entries_.begin() + static_cast<std::ptrdiff_t>(i) * n_;
        out.emplace_back(first, first + n_);
    }
    return out;
}

std::vector<std::vector<std::int64_t>> ExtendedExchangeMatrix::top_block() const {
    auto r = rows();
    r.resize(static_cast<std::size_t>(n_));
    return r;
}

IntMatrix ExtendedExchangeMatrix::to_integer_matrix() const { return columns(low_bits(n_)); }

IntMatrix ExtendedExchangeMatrix::columns(Mask cols) const {
    const std::vector<int> js = elements(cols & low_bits(n_));
    IntMatrix out(static_cast<std::size_t>(row_count()));
    for (int i = 0; i < row_count(); ++i)
        for (int j : js) out[static_cast<std::size_t>(i)].emplace_back(static_cast<long>((*this)(i, j)));
    return out;
}

bool ExtendedExchangeMatrix::is_principal() const {
    if (m_ != n_) return false;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if ((*this)(n_ + i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

ExtendedExchangeMatrix ExtendedExchangeMatrix::with_frozen_row(const std::vector<std::int64_t>& row) const {
    auto r = rows();
    r.push_back(row);
    return validate(r, n_, m_ + 1);
}

std::string ExtendedExchangeMatrix::to_string() const {
    std::ostringstream os;
    os << n_ << ' ' << m_ << '\n';
    for (int i = 0; i < row_count(); ++i) {
        for (int j = 0; j < n_; ++j) os << (j ? " " : "") << (*this)(i, j);
        os << '\n';
    }
    return os.str();
}

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::TooLarge, "entry overflow in mutation");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::TooLarge, "entry overflow in mutation");
    return r;
}

std::int64_t pos(std::int64_t x) { return x > 0 ? x : 0; }
std::int64_t neg(std::int64_t x) { return x < 0 ? -x : 0; }

}  // namespace

ExtendedExchangeMatrix mutate(const ExtendedExchangeMatrix& b, int k) {
    if (k < 0 || k >= b.n()) throw Error(ErrorKind::IndexOutOfRange, "mutation direction " + std::to_string(k + 1));
    auto rows = b.rows();
    for (int i = 0; i < b.row_count(); ++i)
        for (int j = 0; j < b.n(); ++j) {
            auto& e = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (i == k || j == k) {
                e = checked_mul(-1, b(i, j));
            } else {
                std::int64_t plus = checked_mul(pos(b(i, k)), pos(b(k, j)));
                std::int64_t minus = checked_mul(neg(b(i, k)), neg(b(k, j)));
                e = checked_add(b(i, j), checked_add(plus, -minus));
            }
        }
    return ExtendedExchangeMatrix::validate(rows, b.n(), b.m());
}

Quiver quiver(const ExtendedExchangeMatrix& b) {
    Quiver q;
    q.vertex_count = b.n();
    for (int i = 0; i < b.n(); ++i)
        for (int j = 0; j < b.n(); ++j)
            if (b(i, j) > 0) q.arcs.emplace_back(i, j);
    return q;
}

Graph underlying_graph(const ExtendedExchangeMatrix& b) {
    Graph g(b.n());
    for (int i = 0; i < b.n(); ++i)
        for (int j = i + 1; j < b.n(); ++j)
            if (b(i, j) != 0) g.add_edge(i, j);
    return g;
}

bool is_acyclic(const ExtendedExchangeMatrix& b) {
    // Kahn: repeatedly strip vertices without incoming arcs.
    Mask left = low_bits(b.n());
    bool progress = true;
    while (left != 0 && progress) {
        progress = false;
        for (int v : elements(left)) {
            bool source = true;
            for (int u : elements(left))
                if (b(u, v) > 0) source = false;
            if (source) {
                left &= ~bit(v);
                progress = true;
            }
        }
    }
    return left == 0;
}

const char* to_string(RankClass r) {
    switch (r) {
        case RankClass::NotFullRank: return "NotFullRank";
        case RankClass::FullRank: return "FullRank";
        case RankClass::ReallyFullRank: return "ReallyFullRank";
    }
    return "Unknown";
}

RankClass rank_class(const ExtendedExchangeMatrix& b) {
    const auto n = static_cast<std::size_t>(b.n());
    SmithForm f = smith_normal_form(b.to_integer_matrix(), static_cast<std::size_t>(b.row_count()), n);
    if (static_cast<std::size_t>(f.rank) != n) return RankClass::NotFullRank;
    for (const auto& d : f.diagonal)
        if (d != 1) return RankClass::FullRank;
    return RankClass::ReallyFullRank;
}

Integer FiniteAbelianGroup::order() const {
    Integer o = 1;
    for (const auto& d : invariant_factors) o *= d;
    return o;
}

Integer FiniteAbelianGroup::exponent() const {
    return invariant_factors.empty() ? Integer(1) : invariant_factors.back();
}

std::string FiniteAbelianGroup::to_string() const {
    if (invariant_factors.empty()) return "trivial";
    std::string s;
    for (const auto& d : invariant_factors) s += (s.empty() ? "" : " x ") + std::string("Z/") + d.get_str();
    return s;
}

FiniteAbelianGroup torsion_of_cokernel(const IntMatrix& a, std::size_t rows, std::size_t cols) {
    SmithForm f = smith_normal_form(a, rows, cols);
    FiniteAbelianGroup g;
    for (int i = 0; i < f.rank; ++i)
        if (f.diagonal[static_cast<std::size_t>(i)] > 1) g.invariant_factors.push_back(f.diagonal[static_cast<std::size_t>(i)]);
    return g;
}

FiniteAbelianGroup cokernel_group(const ExtendedExchangeMatrix& b) {
    SmithForm f = smith_normal_form(b.to_integer_matrix(), static_cast<std::size_t>(b.row_count()),
                                    static_cast<std::size_t>(b.n()));
    if (f.rank != b.n()) throw Error(ErrorKind::NotFullRank, "rank " + std::to_string(f.rank) + " < n");
    FiniteAbelianGroup g;
    for (const auto& d : f.diagonal)
        if (d > 1) g.invariant_factors.push_back(d);
    return g;
}

CharacterGroup::CharacterGroup(const ExtendedExchangeMatrix& b) : b_(b), graph_(underlying_graph(b)) {
    snf_ = smith_normal_form(b.to_integer_matrix(), static_cast<std::size_t>(b.row_count()),
                             static_cast<std::size_t>(b.n()));
    if (snf_.rank != b.n()) throw Error(ErrorKind::NotFullRank, "rank " + std::to_string(snf_.rank) + " < n");
    first_nontrivial_ = snf_.diagonal.size();
    for (std::size_t i = 0; i < snf_.diagonal.size(); ++i)
        if (snf_.diagonal[i] > 1) {
            if (first_nontrivial_ == snf_.diagonal.size()) first_nontrivial_ = i;
            group_.invariant_factors.push_back(snf_.diagonal[i]);
        }
}

std::vector<Character> CharacterGroup::elements() const {
    std::vector<Character> out;
    Character c;
    c.coordinates.assign(group_.invariant_factors.size(), 0);
    for (;;) {
        out.push_back(c);
        std::size_t i = c.coordinates.size();
        while (i > 0) {
            --i;
            if (++c.coordinates[i] < group_.invariant_factors[i]) break;
            c.coordinates[i] = 0;
            if (i == 0) return out;
        }
        if (c.coordinates.empty()) return out;
    }
}

Character CharacterGroup::identity() const {
    return Character{std::vector<Integer>(group_.invariant_factors.size(), 0)};
}

std::vector<Integer> CharacterGroup::lift(const Character& chi) const {
    if (chi.coordinates.size() != group_.invariant_factors.size())
        throw Error(ErrorKind::ShapeMismatch, "character coordinate count");
    const auto rows = static_cast<std::size_t>(b_.row_count());
    std::vector<Integer> y(rows, 0);
    for (std::size_t k = 0; k < chi.coordinates.size(); ++k) y[first_nontrivial_ + k] = chi.coordinates[k];
    std::vector<Integer> z(rows, 0);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < rows; ++j) z[i] += snf_.u_inv[i][j] * y[j];
    return z;
}

namespace {

std::vector<Integer> apply(const IntMatrix& a, const std::vector<Integer>& z) {
    std::vector<Integer> y(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < z.size(); ++j) y[i] += a[i][j] * z[j];
    return y;
}

}  // namespace

Character CharacterGroup::classify(const std::vector<Integer>& z) const {
    if (z.size() != static_cast<std::size_t>(b_.row_count())) throw Error(ErrorKind::ShapeMismatch, "vector length");
    std::vector<Integer> y = apply(snf_.u, z);
    for (std::size_t i = static_cast<std::size_t>(b_.n()); i < y.size(); ++i)
        if (y[i] != 0) throw Error(ErrorKind::InvalidArgument, "vector is not in the column span");
    Character c;
    for (std::size_t k = 0; k < group_.invariant_factors.size(); ++k) {
        Integer r;
        mpz_fdiv_r(r.get_mpz_t(), y[first_nontrivial_ + k].get_mpz_t(), group_.invariant_factors[k].get_mpz_t());
        c.coordinates.push_back(r);
    }
    return c;
}

std::vector<Rational> CharacterGroup::solve(const std::vector<Integer>& z) const {
    std::vector<Integer> y = apply(snf_.u, z);
    const auto n = static_cast<std::size_t>(b_.n());
    for (std::size_t i = n; i < y.size(); ++i)
        if (y[i] != 0) throw Error(ErrorKind::InvalidArgument, "vector is not in the column span");
    std::vector<Rational> w(n), u(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        w[i] = Rational(y[i], snf_.diagonal[i]);
        w[i].canonicalize();
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) u[i] += snf_.v[i][j] * w[j];
    return u;
}

Mask CharacterGroup::support(const Character& chi) const {
    std::vector<Rational> u = solve(lift(chi));
    Mask j = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i].get_den() != 1) j |= bit(static_cast<int>(i));
    return j;
}

std::vector<Character> CharacterGroup::subgroup(Mask anticlique) const {
    if (!graph_.is_anticlique(anticlique) || (anticlique & ~graph_.all()) != 0)
        throw Error(ErrorKind::NotAnticlique, "index set is not an anticlique");
    std::vector<Character> out;
    for (auto& c : elements())
        if (in_subgroup(c, anticlique)) out.push_back(std::move(c));
    return out;
}

CharacterReduction reduce_support(const ExtendedExchangeMatrix& b, Mask support) {
    CharacterReduction r;
    r.support = support;
    const Graph g = underlying_graph(b);
    if (!g.is_anticlique(support)) {
        r.zero = true;
        return r;
    }
    r.shift = popcount(support);
    Mask kept = 0;
    for (int i = 0; i < b.n(); ++i) {
        if ((support & bit(i)) != 0) continue;
        if ((g.neighbors(i) & support) == 0) kept |= bit(i);
    }
    r.kept = kept;
    const std::vector<int> ks = elements(kept);
    const int k = static_cast<int>(ks.size());
    const int target = b.row_count() - 2 * r.shift;
    const int rows = std::max(target, 2 * k);
    r.torus_deficit = rows - target;

    std::vector<std::vector<std::int64_t>> out(static_cast<std::size_t>(rows),
                                                std::vector<std::int64_t>(static_cast<std::size_t>(k), 0));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = b(ks[static_cast<std::size_t>(i)], ks[static_cast<std::size_t>(j)]);
        out[static_cast<std::size_t>(k + i)][static_cast<std::size_t>(i)] = 1;
    }
    r.reduced = ExtendedExchangeMatrix::validate(out, k, rows - k);
    return r;
}

CharacterReduction reduce_character(const ExtendedExchangeMatrix& b, const CharacterGroup& x, const Character& chi) {
    return reduce_support(b, x.support(chi));
}

}  // namespace clusterhodge
