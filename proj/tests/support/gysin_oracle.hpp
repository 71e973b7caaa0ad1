#pragma once

// Hodge table from the residue complex built directly inside the full exterior algebra:
// the summand for an anticlique I is the span of dlog x_T wedge alpha_I, the differential
// contracts dlog x_j and appends alpha_j, and coordinates are recovered by dense solves.
// Characters enter only through their number per anticlique support, obtained by Moebius
// inversion of gcd-of-minors orders.

#include <map>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"

namespace oracle {

struct GysinOracle {
    Rows b;
    int n = 0, m = 0;
    std::vector<Mask> anticliques;
    std::map<Mask, std::vector<Mask>> basis;  // anticlique -> admissible T, increasing

    GysinOracle(Rows rows, int n_, int m_) : b(std::move(rows)), n(n_), m(m_) {
        for (Mask i = 0; i < (Mask{1} << n); ++i) {
            bool ok = true;
            for (int u = 0; u < n && ok; ++u)
                for (int w = 0; w < n && ok; ++w)
                    if ((i >> u & 1) && (i >> w & 1) && b[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)] != 0) ok = false;
            if (ok) anticliques.push_back(i);
        }
        const int d = n + m;
        for (Mask i : anticliques) {
            // First row set, in mask order, with an invertible square block on the columns I.
            Mask rows_n = 0;
            bool found = pop(i) == 0;
            for (Mask r = 0; r < (Mask{1} << d) && !found; ++r) {
                if (pop(r) != pop(i) || (r & i)) continue;
                std::vector<std::vector<Q>> sq;
                for (int x = 0; x < d; ++x) {
                    if (!(r >> x & 1)) continue;
                    std::vector<Q> row;
                    for (int c = 0; c < n; ++c)
                        if (i >> c & 1) row.emplace_back(static_cast<long>(b[static_cast<std::size_t>(x)][static_cast<std::size_t>(c)]));
                    sq.push_back(row);
                }
                if (det(sq) != 0) {
                    rows_n = r;
                    found = true;
                }
            }
            if (!found) throw std::runtime_error("oracle: columns dependent");
            const Mask avail = ((Mask{1} << d) - 1) & ~(i | rows_n);
            std::vector<Mask> ts;
            for (Mask t = 0;; t = (t - avail) & avail) {
                ts.push_back(t);
                if (t == avail) break;
            }
            std::sort(ts.begin(), ts.end());
            basis[i] = ts;
        }
    }

    bool is_anticlique(Mask i) const { return std::binary_search(anticliques.begin(), anticliques.end(), i); }

    /// H^p of the weight-s complex restricted to anticliques containing `containing`.
    std::map<int, long> cohomology(int s, Mask containing = 0) const {
        std::vector<std::vector<std::pair<Mask, Mask>>> spaces(static_cast<std::size_t>(n) + 1);
        for (Mask i : anticliques) {
            if ((i & containing) != containing) continue;
            for (Mask t : basis.at(i))
                if (pop(t) + pop(i) == s) spaces[static_cast<std::size_t>(pop(i))].push_back({i, t});
        }
        std::vector<long> ranks(spaces.size() + 1, 0);
        for (std::size_t p = 0; p + 1 < spaces.size(); ++p) {
            const auto& src = spaces[p];
            const auto& dst = spaces[p + 1];
            if (src.empty() || dst.empty()) continue;
            Dense mat(dst.size(), std::vector<Q>(src.size(), 0));
            for (std::size_t c = 0; c < src.size(); ++c) {
                const auto [i, t] = src[c];
                for (int j = 0; j < n; ++j) {
                    if (!(t >> j & 1)) continue;
                    const Mask target = i | (Mask{1} << j);
                    if (!is_anticlique(target)) continue;
                    const int sign = pop(t & ((Mask{1} << j) - 1)) % 2 ? -1 : 1;
                    Form image = wedge(theta(b, t & ~(Mask{1} << j), i), column_one_form(b, j));
                    // Coordinates in the basis of the target summand at this weight.
                    std::vector<std::size_t> rows_of;
                    for (std::size_t r = 0; r < dst.size(); ++r)
                        if (dst[r].first == target) rows_of.push_back(r);
                    std::map<Mask, std::size_t> monomials;
                    std::vector<Form> gens;
                    for (std::size_t r : rows_of) {
                        gens.push_back(theta(b, dst[r].second, target));
                        for (const auto& [mono, coef] : gens.back()) monomials.emplace(mono, monomials.size());
                    }
                    for (const auto& [mono, coef] : image) monomials.emplace(mono, monomials.size());
                    Dense a(monomials.size(), std::vector<Q>(gens.size(), 0));
                    std::vector<Q> rhs(monomials.size(), 0);
                    for (std::size_t g = 0; g < gens.size(); ++g)
                        for (const auto& [mono, coef] : gens[g]) a[monomials.at(mono)][g] = coef;
                    for (const auto& [mono, coef] : image) rhs[monomials.at(mono)] = coef;
                    std::vector<Q> x;
                    if (!solve(a, rhs, x)) throw std::runtime_error("oracle: image outside target summand");
                    for (std::size_t g = 0; g < gens.size(); ++g) mat[rows_of[g]][c] += sign * x[g];
                }
            }
            ranks[p] = static_cast<long>(rank(mat));
        }
        std::map<int, long> out;
        for (std::size_t p = 0; p < spaces.size(); ++p) {
            const long h = static_cast<long>(spaces[p].size()) - ranks[p] - (p > 0 ? ranks[p - 1] : 0);
            if (h != 0) out[static_cast<int>(p)] = h;
        }
        return out;
    }

    /// Number of characters whose minimal support is exactly the anticlique j.
    long characters_with_support(Mask j) const {
        long total = 0;
        for (Mask sub = j;; sub = (sub - 1) & j) {
            const long order = torsion_order(b, sub).get_si();
            total += (pop(j & ~sub) % 2 ? -1 : 1) * order;
            if (sub == 0) break;
        }
        return total;
    }

    /// dims(k, s), nonzero only.
    std::map<std::pair<int, int>, long> hodge() const {
        std::map<std::pair<int, int>, long> out;
        for (Mask j : anticliques) {
            const long count = characters_with_support(j);
            if (count == 0) continue;
            for (int s = 0; s <= n + m; ++s)
                for (const auto& [p, h] : cohomology(s, j)) out[{s + p, s}] += count * h;
        }
        return out;
    }
};

}  // namespace oracle
