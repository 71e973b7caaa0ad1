#pragma once

// Reference computations used only by the tests. Each one is written from first
// principles with dense matrices and exhaustive enumeration, sharing no code with the
// library beyond its value types.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Z = mpz_class;
using Dense = std::vector<std::vector<Q>>;
using Mask = std::uint64_t;

inline int pop(Mask m) { return __builtin_popcountll(m); }

/// Rank by textbook Gauss elimination over Q.
inline std::size_t rank(Dense a) {
    std::size_t r = 0;
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const Q f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

/// Solves a x = b exactly (a has full column rank); returns false when inconsistent.
inline bool solve(Dense a, std::vector<Q> b, std::vector<Q>& x) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        const Q inv = 1 / a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
        b[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const Q f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (b[i] != 0) return false;
    x.assign(cols, 0);
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
    return true;
}

// ---------------------------------------------------------------- graphs

struct SimpleGraph {
    int n = 0;
    std::set<std::pair<int, int>> edges;  // u < w
    bool adjacent(int u, int w) const { return edges.count({std::min(u, w), std::max(u, w)}) > 0; }
};

inline bool independent(const SimpleGraph& g, Mask s) {
    for (const auto& [u, w] : g.edges)
        if ((s >> u & 1) && (s >> w & 1)) return false;
    return true;
}

/// Counts of independent sets by size, over every subset of `within`.
inline std::vector<long> independent_counts(const SimpleGraph& g, Mask within) {
    std::vector<long> out(static_cast<std::size_t>(pop(within)) + 1, 0);
    for (Mask s = 0;; s = (s - within) & within) {
        if (independent(g, s)) ++out[static_cast<std::size_t>(pop(s))];
        if (s == within) break;
    }
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
}

/// Reduced Betti numbers of the independence complex on `within`, by dense coboundary ranks.
/// Keyed by degree, nonzero only; degree -1 is the empty face.
inline std::map<int, long> reduced_betti(const SimpleGraph& g, Mask within) {
    std::vector<std::vector<Mask>> faces(static_cast<std::size_t>(pop(within)) + 2);
    for (Mask s = 0;; s = (s - within) & within) {
        if (independent(g, s)) faces[static_cast<std::size_t>(pop(s))].push_back(s);
        if (s == within) break;
    }
    // boundary rank from size k to size k+1 faces
    auto cob_rank = [&](std::size_t k) -> long {
        if (k + 1 >= faces.size() || faces[k].empty() || faces[k + 1].empty()) return 0;
        Dense m(faces[k + 1].size(), std::vector<Q>(faces[k].size(), 0));
        for (std::size_t i = 0; i < faces[k + 1].size(); ++i)
            for (std::size_t j = 0; j < faces[k].size(); ++j) {
                const Mask big = faces[k + 1][i], small = faces[k][j];
                if ((big & small) != small) continue;
                const Mask v = big & ~small;
                const int below = pop(small & (v - 1));
                m[i][j] = (below % 2) ? -1 : 1;
            }
        return static_cast<long>(rank(m));
    };
    std::map<int, long> out;
    for (std::size_t k = 0; k < faces.size(); ++k) {
        const long dim = static_cast<long>(faces[k].size());
        const long b = dim - cob_rank(k) - (k > 0 ? cob_rank(k - 1) : 0);
        if (b != 0) out[static_cast<int>(k) - 1] = b;
    }
    return out;
}

inline bool connected(const SimpleGraph& g) {
    if (g.n == 0) return true;
    Mask seen = 1, frontier = 1;
    while (frontier) {
        Mask next = 0;
        for (const auto& [u, w] : g.edges) {
            if ((frontier >> u & 1) && !(seen >> w & 1)) next |= Mask{1} << w;
            if ((frontier >> w & 1) && !(seen >> u & 1)) next |= Mask{1} << u;
        }
        seen |= next;
        frontier = next;
    }
    return pop(seen) == g.n;
}

/// Graphs on exactly v vertices up to isomorphism (canonical = least edge code over all
/// relabellings).
inline std::vector<SimpleGraph> graphs_up_to_isomorphism(int v, bool connected_only) {
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < v; ++i)
        for (int j = i + 1; j < v; ++j) slots.emplace_back(i, j);
    std::vector<int> perm(static_cast<std::size_t>(v));
    std::set<std::uint32_t> seen;
    std::vector<SimpleGraph> out;
    for (std::uint32_t code = 0; code < (1u << slots.size()); ++code) {
        SimpleGraph g;
        g.n = v;
        for (std::size_t k = 0; k < slots.size(); ++k)
            if (code >> k & 1) g.edges.insert(slots[k]);
        if (connected_only && !connected(g)) continue;
        std::iota(perm.begin(), perm.end(), 0);
        std::uint32_t best = UINT32_MAX;
        do {
            std::uint32_t c = 0;
            for (std::size_t k = 0; k < slots.size(); ++k) {
                const int a = perm[static_cast<std::size_t>(slots[k].first)];
                const int b = perm[static_cast<std::size_t>(slots[k].second)];
                if (g.adjacent(slots[k].first, slots[k].second)) {
                    const auto it = std::find(slots.begin(), slots.end(), std::make_pair(std::min(a, b), std::max(a, b)));
                    c |= 1u << (it - slots.begin());
                }
            }
            best = std::min(best, c);
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (seen.insert(best).second) out.push_back(g);
    }
    return out;
}

/// Skew matrix orienting every edge from the earlier to the later vertex of `order`.
inline std::vector<std::vector<std::int64_t>> orient(const SimpleGraph& g, const std::vector<int>& order,
                                                     const std::vector<std::int64_t>& magnitude) {
    std::vector<int> pos(static_cast<std::size_t>(g.n));
    for (int i = 0; i < g.n; ++i) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    std::vector<std::vector<std::int64_t>> b(static_cast<std::size_t>(g.n), std::vector<std::int64_t>(static_cast<std::size_t>(g.n), 0));
    std::size_t k = 0;
    for (const auto& [u, w] : g.edges) {
        const std::int64_t m = magnitude.empty() ? 1 : magnitude[k++ % magnitude.size()];
        const bool forward = pos[static_cast<std::size_t>(u)] < pos[static_cast<std::size_t>(w)];
        b[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)] = forward ? m : -m;
        b[static_cast<std::size_t>(w)][static_cast<std::size_t>(u)] = forward ? -m : m;
    }
    return b;
}

/// Skew matrix with the identity stacked below.
inline std::vector<std::vector<std::int64_t>> with_identity(std::vector<std::vector<std::int64_t>> b) {
    const std::size_t n = b.size();
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::int64_t> row(n, 0);
        row[i] = 1;
        b.push_back(row);
    }
    return b;
}

// ---------------------------------------------------------------- matrices

using Rows = std::vector<std::vector<std::int64_t>>;

/// Mutation by the closed formula b'_ij = -b_ij on row/column k, else b_ij + (|b_ik| b_kj + b_ik |b_kj|) / 2.
inline Rows mutate(const Rows& b, int k) {
    Rows out = b;
    const std::size_t kk = static_cast<std::size_t>(k);
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < b[i].size(); ++j) {
            if (i == kk || j == kk) out[i][j] = -b[i][j];
            else out[i][j] = b[i][j] + (std::llabs(b[i][kk]) * b[kk][j] + b[i][kk] * std::llabs(b[kk][j])) / 2;
        }
    return out;
}

inline Z det(std::vector<std::vector<Q>> a) {
    const std::size_t n = a.size();
    Q d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            d = -d;
        }
        d *= a[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            const Q f = a[i][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    return d.get_num();
}

/// gcd of the maximal minors on the columns `cols`: the order of the torsion of
/// Z^{rows} / (column span) when those columns are independent.
inline Z torsion_order(const Rows& b, Mask cols) {
    std::vector<int> cs;
    for (int j = 0; j < 64; ++j)
        if (cols >> j & 1) cs.push_back(j);
    const std::size_t k = cs.size();
    if (k == 0) return 1;
    Z g = 0;
    const int rows = static_cast<int>(b.size());
    for (Mask rs = 0; rs < (Mask{1} << rows); ++rs) {
        if (static_cast<std::size_t>(pop(rs)) != k) continue;
        std::vector<std::vector<Q>> m;
        for (int r = 0; r < rows; ++r) {
            if (!(rs >> r & 1)) continue;
            std::vector<Q> row;
            for (int c : cs) row.emplace_back(static_cast<long>(b[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]));
            m.push_back(row);
        }
        g = gcd(g, det(m));
    }
    return abs(g);
}

/// Points of {x_j x'_j = prod y^{b+} + prod y^{b-}} with x, x' in F_q^n, frozen y in F_q^*,
/// by literal enumeration of all (x, x', y).
inline long literal_point_count(const Rows& b, int n, int m, long q) {
    const int vars = n + m;
    auto power = [q](long x, long e) {
        long r = 1;
        for (long i = 0; i < e; ++i) r = r * x % q;
        return r;
    };
    std::vector<long> v(static_cast<std::size_t>(vars + n), 0);
    for (int i = n; i < vars; ++i) v[static_cast<std::size_t>(i)] = 1;
    long total = 0;
    for (;;) {
        bool ok = true;
        for (int j = 0; j < n && ok; ++j) {
            long plus = 1, minus = 1;
            for (int r = 0; r < vars; ++r) {
                const long e = b[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
                if (e > 0) plus = plus * power(v[static_cast<std::size_t>(r)], e) % q;
                if (e < 0) minus = minus * power(v[static_cast<std::size_t>(r)], -e) % q;
            }
            ok = (v[static_cast<std::size_t>(j)] * v[static_cast<std::size_t>(vars + j)]) % q == (plus + minus) % q;
        }
        if (ok) ++total;
        int i = 0;
        for (; i < vars + n; ++i) {
            const bool frozen = i >= n && i < vars;
            if (++v[static_cast<std::size_t>(i)] < q) break;
            v[static_cast<std::size_t>(i)] = frozen ? 1 : 0;
        }
        if (i == vars + n) return total;
    }
}

// ---------------------------------------------------------------- exterior algebra

/// Forms keyed by sorted factor masks.
using Form = std::map<Mask, Q>;

/// Sign of concatenating monomial a then b, sorted; 0 on overlap.
inline int concat_sign(Mask a, Mask b) {
    if (a & b) return 0;
    int inversions = 0;
    for (Mask t = b; t; t &= t - 1) {
        const int j = __builtin_ctzll(t);
        inversions += pop(a >> (j + 1));
    }
    return inversions % 2 ? -1 : 1;
}

inline Form wedge(const Form& x, const Form& y) {
    Form out;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y) {
            const int s = concat_sign(a, b);
            if (s == 0) continue;
            out[a | b] += s * ca * cb;
        }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

inline Form column_one_form(const Rows& b, int j) {
    Form f;
    for (std::size_t r = 0; r < b.size(); ++r)
        if (b[r][static_cast<std::size_t>(j)] != 0) f[Mask{1} << r] = static_cast<long>(b[r][static_cast<std::size_t>(j)]);
    return f;
}

/// dlog x_A wedge alpha_{i_1} wedge ... in increasing order of i.
inline Form theta(const Rows& b, Mask a, Mask anticlique) {
    Form f{{a, 1}};
    for (int j = 0; j < 64; ++j)
        if (anticlique >> j & 1) f = wedge(f, column_one_form(b, j));
    return f;
}

}  // namespace oracle
