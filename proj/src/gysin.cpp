#include "clusterhodge/gysin.hpp"

#include <algorithm>

#include "clusterhodge/error.hpp"
#include "clusterhodge/kernels.hpp"

namespace clusterhodge {

ExteriorForm alpha(const ExtendedExchangeMatrix& b, int j) {
    if (j < 0 || j >= b.n()) throw Error(ErrorKind::IndexOutOfRange, "alpha index");
    SparseVector v;
    for (int r = 0; r < b.row_count(); ++r)
        if (b(r, j) != 0) v.push_back({r, Rational(static_cast<long>(b(r, j)))});
    return ExteriorForm::one_form(v);
}

Mask choose_N(const ExtendedExchangeMatrix& b, Mask anticlique) {
    if ((anticlique & ~low_bits(b.n())) != 0 || !underlying_graph(b).is_anticlique(anticlique))
        throw Error(ErrorKind::NotAnticlique, "index set is not an anticlique");
    const std::vector<int> cols = elements(anticlique);
    std::vector<int> order;
    for (int r = b.n(); r < b.row_count(); ++r) order.push_back(r);
    for (int r = 0; r < b.n(); ++r) order.push_back(r);

    EchelonBasis basis;
    Mask chosen = 0;
    for (int r : order) {
        if (basis.dimension() == cols.size()) break;
        SparseVector row;
        for (std::size_t c = 0; c < cols.size(); ++c)
            if (b(r, cols[c]) != 0) row.push_back({static_cast<int>(c), Rational(static_cast<long>(b(r, cols[c])))});
        if (basis.insert(row)) chosen |= bit(r);
    }
    if (basis.dimension() != cols.size()) throw Error(ErrorKind::ColumnsDependent, "columns of I are dependent");
    return chosen;
}

std::vector<Mask> subsets_of_size(Mask pool, int k) {
    const std::vector<int> el = elements(pool);
    const int n = static_cast<int>(el.size());
    if (k < 0 || k > n) return {};
    if (n >= 63) throw Error(ErrorKind::TooLarge, "subset enumeration over 63 or more elements");
    std::vector<Mask> out;
    // Gosper's hack over positions, then map to pool elements (monotone, so order is kept).
    for (Mask c = low_bits(k); c < (Mask{1} << n);) {
        Mask m = 0;
        for (int i : elements(c)) m |= bit(el[static_cast<std::size_t>(i)]);
        out.push_back(m);
        if (c == 0) break;
        const Mask u = c & (~c + 1);
        const Mask v = u + c;
        c = v + (((v ^ c) / u) >> 2);
    }
    std::sort(out.begin(), out.end());
    return out;
}

ExteriorForm theta(const ExtendedExchangeMatrix& b, Mask a, Mask anticlique) {
    ExteriorForm f = ExteriorForm::monomial(a);
    for (int i : elements(anticlique)) f = f.wedge(alpha(b, i));
    return f;
}

GModuleBasis basis_G_I(const ExtendedExchangeMatrix& b, Mask anticlique) {
    GModuleBasis g;
    g.anticlique = anticlique;
    g.rows_n = choose_N(b, anticlique);
    g.available = low_bits(b.row_count()) & ~anticlique & ~g.rows_n;
    for (int k = 0; k <= popcount(g.available); ++k)
        for (Mask a : subsets_of_size(g.available, k)) g.basis_index.push_back(a);
    return g;
}

ExteriorForm GModuleBasis::expansion(const ExtendedExchangeMatrix& b, std::size_t idx) const {
    return theta(b, basis_index[idx], anticlique);
}

GysinData::GysinData(const ExtendedExchangeMatrix& b) : b_(b), graph_(underlying_graph(b)) {
    if (rank_class(b) == RankClass::NotFullRank) throw Error(ErrorKind::NotFullRank, "B is not of full rank");
    anticliques_ = clusterhodge::anticliques(graph_).all();
    for (Mask j : anticliques_) {
        max_size_ = std::max(max_size_, popcount(j));
        Site site;
        site.rows_n = choose_N(b, j);
        site.available = low_bits(b.row_count()) & ~j & ~site.rows_n;
        if (j != 0) {
            const std::vector<int> cols = elements(j);
            const std::vector<int> nrows = elements(site.rows_n);
            const std::size_t k = cols.size();
            // X_N = -(M^T)^{-1} P^T X_R with M = B_{N,J}, P = B_{R,J}.
            std::vector<std::vector<Rational>> mt(k, std::vector<Rational>(k));
            for (std::size_t x = 0; x < k; ++x)
                for (std::size_t y = 0; y < k; ++y) mt[x][y] = static_cast<long>(b(nrows[y], cols[x]));
            const auto inv = inverse(mt);
            for (std::size_t idx = 0; idx < k; ++idx) {
                SparseVector sub;
                for (int r : elements(site.available)) {
                    Rational acc = 0;
                    for (std::size_t c = 0; c < k; ++c) acc -= inv[idx][c] * static_cast<long>(b(r, cols[c]));
                    if (acc != 0) sub.push_back({r, acc});
                }
                site.substitution.emplace(nrows[idx], std::move(sub));
            }
        }
        sites_.emplace(j, std::move(site));
    }
}

const GysinData::Site& GysinData::site(Mask anticlique) const {
    auto it = sites_.find(anticlique);
    if (it == sites_.end()) throw Error(ErrorKind::NotAnticlique, "index set is not an anticlique");
    return it->second;
}

std::map<Mask, Rational> GysinData::express(Mask a, Mask anticlique) const {
    const Site& st = site(anticlique);
    if ((a & anticlique) != 0) return {};
    std::map<Mask, Rational> acc{{Mask{0}, Rational(1)}};
    for (int x : elements(a)) {
        std::map<Mask, Rational> next;
        auto sub = st.substitution.find(x);
        if (sub == st.substitution.end()) {
            for (const auto& [t, c] : acc) {
                if ((t & bit(x)) != 0) continue;
                Rational& slot = next[t | bit(x)];
                if (count_above(t, x) % 2 == 0) slot += c;
                else slot -= c;
            }
        } else {
            for (const auto& [t, c] : acc)
                for (const auto& e : sub->second) {
                    if ((t & bit(e.index)) != 0) continue;
                    Rational& slot = next[t | bit(e.index)];
                    if (count_above(t, e.index) % 2 == 0) slot += c * e.value;
                    else slot -= c * e.value;
                }
        }
        acc.clear();
        for (auto& [t, c] : next)
            if (c != 0) acc.emplace(t, std::move(c));
        if (acc.empty()) break;
    }
    return acc;
}

namespace {

int index_of(const std::vector<Mask>& sorted, Mask x) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
    if (it == sorted.end() || *it != x) throw Error(ErrorKind::InvalidArgument, "monomial outside basis");
    return static_cast<int>(it - sorted.begin());
}

}  // namespace

SparseMatrixQ GysinData::rho(Mask anticlique, int j, int s) const {
    const Mask target = anticlique | bit(j);
    if ((anticlique & bit(j)) != 0 || j < 0 || j >= b_.n() || !graph_.is_anticlique(target))
        throw Error(ErrorKind::NotAnticlique, "I + j is not an anticlique");
    const std::vector<Mask> src = subsets_of_size(available(anticlique), s - popcount(anticlique));
    const std::vector<Mask> dst = subsets_of_size(available(target), s - popcount(target));
    SparseMatrixQ m(static_cast<int>(dst.size()), static_cast<int>(src.size()));
    for (std::size_t c = 0; c < src.size(); ++c) {
        const Mask a = src[c];
        if ((a & bit(j)) == 0) continue;
        const bool negative = (count_below(a, j) + count_above(anticlique, j)) % 2 != 0;
        std::map<int, Rational> col;
        for (const auto& [t, v] : express(a & ~bit(j), target)) col[index_of(dst, t)] = negative ? Rational(-v) : v;
        m.set_column(static_cast<int>(c), from_map(col));
    }
    return m;
}

CochainComplexQ GysinData::complex(int s, Mask containing) const {
    CochainComplexQ c;
    const int top = std::min(s, max_size_);
    // Per position: anticliques used, their offsets, and their degree-s monomials.
    struct Block {
        Mask i;
        int offset;
        std::vector<Mask> monomials;
    };
    std::vector<std::vector<Block>> blocks(static_cast<std::size_t>(top + 1));
    for (Mask i : anticliques_) {
        const int p = popcount(i);
        if (p > top || (i & containing) != containing) continue;
        auto& pos = blocks[static_cast<std::size_t>(p)];
        const int offset = pos.empty() ? 0 : pos.back().offset + static_cast<int>(pos.back().monomials.size());
        pos.push_back({i, offset, subsets_of_size(available(i), s - p)});
    }
    for (int p = 0; p <= top; ++p) {
        std::vector<BasisLabel> labels;
        for (const auto& blk : blocks[static_cast<std::size_t>(p)])
            for (Mask a : blk.monomials) labels.push_back({a, blk.i});
        c.bases.push_back(std::move(labels));
    }
    for (int p = 0; p < top; ++p) {
        const auto& from = blocks[static_cast<std::size_t>(p)];
        const auto& to = blocks[static_cast<std::size_t>(p + 1)];
        std::unordered_map<Mask, const Block*> lookup;
        for (const auto& blk : to) lookup.emplace(blk.i, &blk);
        SparseMatrixQ d(static_cast<int>(c.bases[static_cast<std::size_t>(p + 1)].size()),
                        static_cast<int>(c.bases[static_cast<std::size_t>(p)].size()));
        for (const auto& blk : from) {
            for (std::size_t col = 0; col < blk.monomials.size(); ++col) {
                const Mask a = blk.monomials[col];
                std::map<int, Rational> image;
                for (int j : elements(a & low_bits(b_.n()))) {
                    auto hit = lookup.find(blk.i | bit(j));
                    if (hit == lookup.end() || (graph_.neighbors(j) & blk.i) != 0) continue;
                    // rho sign times the complex sign (-1)^{#{i in I : i < j}}.
                    const bool negative = (count_below(a, j) + popcount(blk.i)) % 2 != 0;
                    const Block& tgt = *hit->second;
                    for (const auto& [t, v] : express(a & ~bit(j), tgt.i)) {
                        Rational& slot = image[tgt.offset + index_of(tgt.monomials, t)];
                        if (negative) slot -= v;
                        else slot += v;
                    }
                }
                d.set_column(blk.offset + static_cast<int>(col), from_map(image));
            }
        }
        c.differentials.push_back(std::move(d));
    }
    return c;
}

CochainComplexQ build_gysin_complex(const ExtendedExchangeMatrix& b, int s) {
    if (!is_acyclic(b)) throw Error(ErrorKind::NotAcyclic, "quiver has an oriented cycle");
    const RankClass rc = rank_class(b);
    if (rc == RankClass::NotFullRank) throw Error(ErrorKind::NotFullRank, "B is not of full rank");
    if (rc != RankClass::ReallyFullRank)
        throw Error(ErrorKind::NotReallyFullRank, "rows do not span Z^n; use the character complexes");
    if (s < 0 || s > b.row_count()) throw Error(ErrorKind::InvalidArgument, "weight out of range");
    return GysinData(b).complex(s);
}

CharacterComplex build_character_complex(const ExtendedExchangeMatrix& b, const Character& chi, int s) {
    CharacterGroup x(b);
    CharacterComplex out;
    out.weight = s;
    out.reduction = reduce_character(b, x, chi);
    if (out.reduction.zero) return out;
    const int inner = s - out.reduction.shift;
    if (inner >= 0 && inner <= out.reduction.reduced.row_count())
        out.complex = GysinData(out.reduction.reduced).complex(inner);
    return out;
}

long HodgeTable::at(int k, int s) const {
    auto it = dims_.find({k, s});
    return it == dims_.end() ? 0 : it->second;
}

void HodgeTable::add(int k, int s, long v) {
    if (v == 0) return;
    long& slot = dims_[{k, s}];
    slot += v;
    if (slot == 0) dims_.erase({k, s});
}

BivariatePoly HodgeTable::polynomial() const {
    BivariatePoly p;
    for (const auto& [ks, v] : dims_) p.add(ks.first, ks.second, Integer(v));
    return p;
}

HodgeTable HodgeTable::from_polynomial(int n, int m, const BivariatePoly& p) {
    HodgeTable t(n, m);
    for (const auto& [ks, v] : p.terms) t.add(ks.first, ks.second, v.get_si());
    return t;
}

IntPolynomial HodgeTable::diagonal(int offset) const {
    std::vector<Integer> c;
    for (const auto& [ks, v] : dims_) {
        if (ks.first - ks.second != offset) continue;
        if (ks.second < 0) continue;
        const auto s = static_cast<std::size_t>(ks.second);
        if (c.size() <= s) c.resize(s + 1, 0);
        c[s] += v;
    }
    return IntPolynomial(std::move(c));
}

HodgeTable trivial_character_table(const GysinData& g, const HodgeOptions& opt) {
    const auto slices = opt.jobs > 1 ? kernels::slice_cohomology_parallel(g, opt.jobs)
                                     : kernels::slice_cohomology_serial(g);
    HodgeTable t(g.matrix().n(), g.matrix().m());
    for (std::size_t s = 0; s < slices.size(); ++s)
        for (const auto& [p, v] : slices[s]) t.add(static_cast<int>(s) + p, static_cast<int>(s), v);
    return t;
}

HodgeTable hodge_table(const ExtendedExchangeMatrix& b, const HodgeOptions& opt) {
    if (!is_acyclic(b)) throw Error(ErrorKind::NotAcyclic, "quiver has an oriented cycle");
    CharacterGroup x(b);
    HodgeTable table = trivial_character_table(GysinData(b), opt);
    if (x.group().invariant_factors.empty()) return table;

    std::map<Mask, long> by_support;
    for (const auto& chi : x.elements()) {
        const Mask j = x.support(chi);
        if (j != 0) ++by_support[j];
    }
    for (const auto& [support, count] : by_support) {
        const CharacterReduction red = reduce_support(b, support);
        if (red.zero) continue;
        BivariatePoly p = trivial_character_table(GysinData(red.reduced), opt).polynomial();
        if (red.torus_deficit > 0) p = p.divided_by_one_plus_xy(red.torus_deficit);
        for (const auto& [ks, v] : p.terms)
            table.add(ks.first + 2 * red.shift, ks.second + red.shift, count * v.get_si());
    }
    return table;
}

IntPolynomial standard_poincare(const ExtendedExchangeMatrix& b) {
    if (!b.is_principal()) throw Error(ErrorKind::NotPrincipal, "expected principal coefficients");
    if (!underlying_graph(b).is_connected()) throw Error(ErrorKind::NotConnected, "quiver is disconnected");
    const int n = b.n();
    std::vector<Integer> c(static_cast<std::size_t>(2 * n + 1), 0);
    Integer binom = 1;  // C(n, t)
    for (int t = 0; t <= n; ++t) {
        for (int j = 0; j + t <= n; ++j) c[static_cast<std::size_t>(2 * j + t)] += binom;
        binom = binom * (n - t) / (t + 1);
    }
    return IntPolynomial(std::move(c));
}

ExteriorForm gsv_form(const ExtendedExchangeMatrix& b, Mask component) {
    ExteriorForm f;
    const std::vector<int> mut = elements(component & low_bits(b.n()));
    for (std::size_t x = 0; x < mut.size(); ++x)
        for (std::size_t y = x + 1; y < mut.size(); ++y)
            f.add_term(bit(mut[x]) | bit(mut[y]), static_cast<long>(b(mut[x], mut[y])));
    // Frozen row r against mutable i (i < r): Bhat_{i r} = -B_{r i}.
    for (int r = b.n(); r < b.row_count(); ++r)
        for (int i : mut) f.add_term(bit(i) | bit(r), -static_cast<long>(b(r, i)));
    return f;
}

SparseVector edge_class_cochain(const GysinData& g, int a, int b) {
    if (!g.graph().has_edge(a, b)) throw Error(ErrorKind::NotAnEdge, "a and b are not adjacent");
    const CochainComplexQ c = g.complex(2);
    std::map<int, Rational> v;
    const auto& labels = c.bases.at(1);
    for (const auto& [t, coeff] : g.express(bit(a), bit(b))) {
        auto it = std::lower_bound(labels.begin(), labels.end(), BasisLabel{t, bit(b)},
                                   [](const BasisLabel& x, const BasisLabel& y) {
                                       return x.i != y.i ? x.i < y.i : x.a < y.a;
                                   });
        if (it == labels.end() || it->a != t || it->i != bit(b))
            throw Error(ErrorKind::InvalidArgument, "edge class outside the basis");
        v[static_cast<int>(it - labels.begin())] = coeff;
    }
    return from_map(v);
}

}  // namespace clusterhodge
