#include "clusterhodge/filtration.hpp"

#include <algorithm>
#include <climits>

#include "clusterhodge/counts.hpp"
#include "clusterhodge/error.hpp"
#include "clusterhodge/topology.hpp"

namespace clusterhodge {

HodgeTable PrincipalNormalization::transfer(const HodgeTable& principal_table) const {
    BivariatePoly p = principal_table.polynomial().times_one_plus_xy(b).divided_by_one_plus_xy(a);
    return HodgeTable::from_polynomial(principal.n(), principal.n() + b - a, p);
}

PrincipalNormalization principal_normalize(const ExtendedExchangeMatrix& b) {
    const RankClass rc = rank_class(b);
    if (rc == RankClass::NotFullRank) throw Error(ErrorKind::NotFullRank, "B is not of full rank");
    if (rc != RankClass::ReallyFullRank) throw Error(ErrorKind::NotReallyFullRank, "rows do not span Z^n");
    PrincipalNormalization out;
    out.principal = ExtendedExchangeMatrix::principal(b.top_block());
    out.a = std::max(0, b.n() - b.m());
    out.b = std::max(0, b.m() - b.n());
    return out;
}

int FilteredComplexQ::min_level() const {
    int lo = INT_MAX;
    for (const auto& l : level)
        for (int x : l) lo = std::min(lo, x);
    return lo == INT_MAX ? 0 : lo;
}

int FilteredComplexQ::max_level() const {
    int hi = INT_MIN;
    for (const auto& l : level)
        for (int x : l) hi = std::max(hi, x);
    return hi == INT_MIN ? 0 : hi;
}

bool FilteredComplexQ::respects_filtration() const {
    for (std::size_t p = 0; p < complex.differentials.size(); ++p) {
        const auto& d = complex.differentials[p];
        for (int c = 0; c < d.cols(); ++c)
            for (const auto& e : d.column(c))
                if (level[p + 1][static_cast<std::size_t>(e.index)] < level[p][static_cast<std::size_t>(c)]) return false;
    }
    return true;
}

namespace {

void require_principal(const ExtendedExchangeMatrix& b) {
    if (!b.is_principal()) throw Error(ErrorKind::NotPrincipal, "expected principal coefficients");
}

}  // namespace

FilteredComplexQ build_filtered(const ExtendedExchangeMatrix& b_prin, int s) {
    require_principal(b_prin);
    if (!is_acyclic(b_prin)) throw Error(ErrorKind::NotAcyclic, "quiver has an oriented cycle");
    FilteredComplexQ fc;
    fc.complex = GysinData(b_prin).complex(s);
    const Mask mutable_rows = low_bits(b_prin.n());
    for (const auto& basis : fc.complex.bases) {
        std::vector<int> lv;
        lv.reserve(basis.size());
        for (const auto& lab : basis) lv.push_back(popcount(lab.a & mutable_rows) + popcount(lab.i));
        fc.level.push_back(std::move(lv));
    }
    return fc;
}

std::vector<GradedPiece> graded_pieces(const ExtendedExchangeMatrix& b_prin, int s) {
    require_principal(b_prin);
    const int n = b_prin.n();
    const Graph g = underlying_graph(b_prin);
    std::vector<GradedPiece> out;
    for (int esize = 0; esize <= std::min(n, s); ++esize) {
        const int dsize = s - esize;
        if (dsize > n) continue;
        for (Mask e : subsets_of_size(low_bits(n), esize))
            for (Mask d : subsets_of_size(low_bits(n), dsize)) {
                GradedPiece piece;
                piece.d = d;
                piece.e = e;
                piece.weight = s;
                const AnticliqueFamily fam = anticliques(g, e & ~d);
                auto& c = piece.complex;
                for (const auto& level : fam.by_cardinality) {
                    std::vector<BasisLabel> labels;
                    for (Mask i : level) labels.push_back({(e & ~i) | (d << n), i});
                    c.bases.push_back(std::move(labels));
                }
                for (std::size_t p = 0; p + 1 < fam.by_cardinality.size(); ++p) {
                    const auto& src = fam.by_cardinality[p];
                    const auto& dst = fam.by_cardinality[p + 1];
                    SparseMatrixQ m(static_cast<int>(dst.size()), static_cast<int>(src.size()));
                    for (std::size_t col = 0; col < src.size(); ++col) {
                        const Mask i = src[col];
                        const Mask cset = e & ~i;
                        std::map<int, Rational> image;
                        for (int x : elements(cset & ~d)) {
                            const Mask j = i | bit(x);
                            auto it = std::lower_bound(dst.begin(), dst.end(), j);
                            if (it == dst.end() || *it != j) continue;
                            const bool negative = (count_below(cset, x) + popcount(i)) % 2 != 0;
                            image[static_cast<int>(it - dst.begin())] = negative ? -1 : 1;
                        }
                        m.set_column(static_cast<int>(col), from_map(image));
                    }
                    c.differentials.push_back(std::move(m));
                }
                out.push_back(std::move(piece));
            }
    }
    return out;
}

long SpectralSequencePage::at(int e, int f, int s) const {
    auto it = entries.find({e, f, s});
    return it == entries.end() ? 0 : it->second;
}

namespace {

// Exact spectral-sequence computation on one filtered complex.
class Engine {
public:
    Engine(const FilteredComplexQ& fc, int weight) : fc_(fc), weight_(weight) {
        lo_ = fc.min_level();
        hi_ = fc.max_level();
    }

    int width() const { return hi_ - lo_; }

    // Z_r^{e,p} = {x in F^e C^p : dx in F^{e+r}}, as full-length vectors.
    const std::vector<SparseVector>& cycles(int r, int e, int p) {
        const auto key = std::make_tuple(r, e, p);
        auto it = z_.find(key);
        if (it != z_.end()) return it->second;
        std::vector<SparseVector> basis;
        if (p >= 0 && p < static_cast<int>(fc_.complex.space_count())) {
            const auto& lv = fc_.level[static_cast<std::size_t>(p)];
            std::vector<int> cols;
            for (std::size_t i = 0; i < lv.size(); ++i)
                if (lv[i] >= e) cols.push_back(static_cast<int>(i));
            const bool has_next = p + 1 < static_cast<int>(fc_.complex.space_count());
            const SparseMatrixQ d = has_next ? fc_.complex.differentials[static_cast<std::size_t>(p)] : SparseMatrixQ();
            SparseMatrixQ sub(has_next ? d.rows() : 0, static_cast<int>(cols.size()));
            if (has_next) {
                const auto& next = fc_.level[static_cast<std::size_t>(p + 1)];
                for (std::size_t c = 0; c < cols.size(); ++c) {
                    SparseVector col;
                    for (const auto& en : d.column(cols[c]))
                        if (next[static_cast<std::size_t>(en.index)] < e + r) col.push_back(en);
                    sub.set_column(static_cast<int>(c), std::move(col));
                }
            }
            for (const auto& k : kernel_basis(sub)) {
                SparseVector full;
                for (const auto& en : k) full.push_back({cols[static_cast<std::size_t>(en.index)], en.value});
                basis.push_back(std::move(full));
            }
        }
        return z_.emplace(key, std::move(basis)).first->second;
    }

    struct Quotient {
        std::vector<SparseVector> reps;  // lifts in C^p
        EchelonBasis reducer{true};      // projected boundaries (labels < 0), projected reps (labels >= 0)
    };

    SparseVector project(const SparseVector& v, int e, int p) const {
        SparseVector out;
        const auto& lv = fc_.level[static_cast<std::size_t>(p)];
        for (const auto& en : v)
            if (lv[static_cast<std::size_t>(en.index)] == e) out.push_back(en);
        return out;
    }

    const Quotient& page_space(int r, int e, int p) {
        const auto key = std::make_tuple(r, e, p);
        auto it = q_.find(key);
        if (it != q_.end()) return it->second;
        Quotient q;
        if (p >= 0 && p < static_cast<int>(fc_.complex.space_count())) {
            int label = -1;
            if (p > 0) {
                const auto& d = fc_.complex.differentials[static_cast<std::size_t>(p - 1)];
                for (const auto& y : cycles(r - 1, e - r + 1, p - 1))
                    q.reducer.insert(project(d.apply(y), e, p), label--);
            }
            for (const auto& z : cycles(r, e, p)) {
                const int idx = static_cast<int>(q.reps.size());
                if (q.reducer.insert(project(z, e, p), idx)) q.reps.push_back(z);
            }
        }
        return q_.emplace(key, std::move(q)).first->second;
    }

    // Matrix of d_r from E_r^{e,p} to E_r^{e+r,p+1}.
    SparseMatrixQ differential(int r, int e, int p) {
        const Quotient& src = page_space(r, e, p);
        const Quotient& dst = page_space(r, e + r, p + 1);
        SparseMatrixQ m(static_cast<int>(dst.reps.size()), static_cast<int>(src.reps.size()));
        if (dst.reps.empty() || p + 1 >= static_cast<int>(fc_.complex.space_count())) return m;
        const auto& d = fc_.complex.differentials[static_cast<std::size_t>(p)];
        for (std::size_t c = 0; c < src.reps.size(); ++c) {
            SparseVector coeffs;
            SparseVector residue = dst.reducer.reduce(project(d.apply(src.reps[c]), e + r, p + 1), &coeffs);
            if (!residue.empty()) throw Error(ErrorKind::InvalidArgument, "image outside the page");
            SparseVector col;
            for (const auto& en : coeffs)
                if (en.index >= 0) col.push_back(en);
            m.set_column(static_cast<int>(c), std::move(col));
        }
        return m;
    }

    SpectralSequencePage page(int r) {
        SpectralSequencePage pg;
        pg.r = r;
        const int spaces = static_cast<int>(fc_.complex.space_count());
        for (int p = 0; p < spaces; ++p)
            for (int e = lo_; e <= hi_; ++e) {
                const long dim = static_cast<long>(page_space(r, e, p).reps.size());
                if (dim == 0) continue;
                const int degree = fc_.complex.offset + p;
                const PageKey key{e, degree - e, weight_};
                pg.entries[key] = dim;
                if (e + r <= hi_ && p + 1 < spaces) {
                    SparseMatrixQ m = differential(r, e, p);
                    if (!m.is_zero()) pg.differentials.emplace(key, std::move(m));
                }
            }
        return pg;
    }

private:
    const FilteredComplexQ& fc_;
    int weight_;
    int lo_ = 0, hi_ = 0;
    std::map<std::tuple<int, int, int>, std::vector<SparseVector>> z_;
    std::map<std::tuple<int, int, int>, Quotient> q_;
};

}  // namespace

SpectralSequence spectral_sequence(const FilteredComplexQ& fc, int weight, int max_page) {
    fc.complex.check_shapes();
    Engine engine(fc, weight);
    SpectralSequence ss;
    ss.stabilization_page = engine.width() + 1;
    const int last = max_page > 0 ? std::min(max_page, ss.stabilization_page) : ss.stabilization_page;
    int last_nonzero = 0;
    for (int r = 1; r <= last; ++r) {
        ss.pages.push_back(engine.page(r));
        if (!ss.pages.back().differentials.empty()) last_nonzero = r;
    }
    ss.observed_collapse = last_nonzero + 1;
    return ss;
}

std::map<PageKey, long> next_page_dims(const SpectralSequencePage& page) {
    std::map<PageKey, long> out = page.entries;
    for (const auto& [key, m] : page.differentials) {
        const long rk = static_cast<long>(rank(m));
        auto [e, f, s] = key;
        out[key] -= rk;
        out[{e + page.r, f + 1 - page.r, s}] -= rk;
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second == 0) it = out.erase(it);
        else ++it;
    }
    return out;
}

SpectralSequencePage e1_page(const ExtendedExchangeMatrix& b_prin, int s) {
    require_principal(b_prin);
    const int n = b_prin.n();
    const Graph g = underlying_graph(b_prin);
    SpectralSequencePage page;
    page.r = 1;

    struct Block {
        Mask d, e;
        int offset;
        long dim;
    };
    // Per key, the summands (D, E) in order; the cohomological degree is e + f.
    std::map<PageKey, std::vector<Block>> layout;
    std::map<std::tuple<Mask, Mask, int>, std::pair<PageKey, const Block*>> index;

    for (const auto& piece_de : [&] {
             std::vector<std::pair<Mask, Mask>> v;
             for (int esize = 0; esize <= std::min(n, s); ++esize)
                 if (s - esize <= n)
                     for (Mask e : subsets_of_size(low_bits(n), esize))
                         for (Mask d : subsets_of_size(low_bits(n), s - esize)) v.emplace_back(d, e);
             return v;
         }()) {
        const auto [d, e] = piece_de;
        const ReducedCohomology h = reduced_cohomology(independence_complex(g, e & ~d));
        for (const auto& [k, dim] : h.dims) {
            const int esize = popcount(e);
            const PageKey key{esize, k + 1 - esize, s};
            auto& blocks = layout[key];
            const int offset = blocks.empty() ? 0 : blocks.back().offset + static_cast<int>(blocks.back().dim);
            blocks.push_back({d, e, offset, dim});
            page.entries[key] += dim;
        }
    }
    for (const auto& [key, blocks] : layout)
        for (const auto& blk : blocks) {
            const int k = std::get<0>(key) + std::get<1>(key) - 1;
            index[{blk.d, blk.e, k}] = {key, &blk};
        }

    for (const auto& [key, blocks] : layout) {
        const auto [esize, f, w] = key;
        const PageKey target{esize + 1, f, w};
        auto tl = page.entries.find(target);
        if (tl == page.entries.end()) continue;
        SparseMatrixQ m(static_cast<int>(tl->second), static_cast<int>(page.entries.at(key)));
        const int k = esize + f - 1;
        for (const auto& blk : blocks) {
            const Mask x = blk.e & ~blk.d;
            for (int a : elements(blk.d & blk.e))
                for (int b : elements(low_bits(n) & ~(blk.d | blk.e))) {
                    const std::int64_t bba = b_prin(b, a);
                    if (bba == 0) continue;
                    auto tgt = index.find({blk.d & ~bit(a), blk.e | bit(b), k + 1});
                    if (tgt == index.end()) continue;
                    const MayerVietorisMap mv = mv_delta(g, x, a, b);
                    auto piece = mv.by_degree.find(k);
                    if (piece == mv.by_degree.end()) continue;
                    const int exponent = count_above(blk.e, b) + count_below(blk.d, a) + (k + 1);
                    Rational coeff = -static_cast<long>(bba);
                    if (exponent % 2 != 0) coeff = -coeff;
                    const Block& tb = *tgt->second.second;
                    for (int c = 0; c < piece->second.cols(); ++c)
                        for (const auto& en : piece->second.column(c))
                            m.add(tb.offset + en.index, blk.offset + c, coeff * en.value);
                }
        }
        if (!m.is_zero()) page.differentials.emplace(key, std::move(m));
    }
    return page;
}

bool PageReport::all_match() const {
    return std::all_of(items.begin(), items.end(), [](const NamedDimension& d) { return d.matches(); });
}

namespace {

long choose(long n, long k) {
    if (k < 0 || n < k) return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

PageReport e2_report_s2(const ExtendedExchangeMatrix& b_prin) {
    require_principal(b_prin);
    const GraphStats st = graph_stats(underlying_graph(b_prin));
    const SpectralSequence ss = spectral_sequence(build_filtered(b_prin, 2), 2);
    const auto& p2 = ss.page(std::min(2, static_cast<int>(ss.pages.size())));
    const long n = b_prin.n();
    PageReport r;
    r.items.push_back({"E2^{0,0} (wedge^2 frozen)", p2.at(0, 0, 2), choose(n, 2)});
    r.items.push_back({"E2^{1,-1} (GSV = H^0)", p2.at(1, -1, 2), st.components});
    r.items.push_back({"E2^{2,-1} (edge classes = H^1)", p2.at(2, -1, 2), st.h1});
    long tail = 0;
    for (const auto& [key, dim] : ss.limit().entries) tail += dim;
    long e2 = 0;
    for (const auto& [key, dim] : p2.entries) e2 += dim;
    r.items.push_back({"E2 total = E_inf total", e2, tail});
    return r;
}

PageReport e3_report_s3(const ExtendedExchangeMatrix& b_prin) {
    require_principal(b_prin);
    const GraphStats st = graph_stats(underlying_graph(b_prin));
    const SpectralSequence ss = spectral_sequence(build_filtered(b_prin, 3), 3);
    const int last = static_cast<int>(ss.pages.size());
    const auto& p2 = ss.page(std::min(2, last));
    const auto& p3 = ss.page(std::min(3, last));
    const long n = b_prin.n();
    long sum_e = 0, sum_pairs = 0, sum_h1_minus = 0;
    for (int i = 0; i < st.vertices; ++i) {
        const long d = st.degrees[static_cast<std::size_t>(i)];
        const long e = st.increments[static_cast<std::size_t>(i)];
        sum_e += e;
        sum_pairs += choose(d, 2);
        sum_h1_minus += d - e - 1;
    }
    PageReport r;
    r.items.push_back({"E2^{1,-1} (sum of H^0(G - i))", p2.at(1, -1, 3), st.components * n + sum_e});
    r.items.push_back({"E3^{0,0} (wedge^3 frozen)", p3.at(0, 0, 3), choose(n, 3)});
    r.items.push_back({"E3^{1,-1} (frozen x GSV)", p3.at(1, -1, 3), n * st.components - st.isolated});
    r.items.push_back({"E3^{2,-1} (sum of H^1(G - i))", p3.at(2, -1, 3), n * st.h1 - sum_h1_minus});
    r.items.push_back({"E3^{3,-2}", p3.at(3, -2, 3), sum_pairs - st.triangles - sum_e - st.isolated});
    long tail = 0;
    for (const auto& [key, dim] : ss.limit().entries) tail += dim;
    long e3 = 0;
    for (const auto& [key, dim] : p3.entries) e3 += dim;
    r.items.push_back({"E3 total = E_inf total", e3, tail});
    return r;
}

}  // namespace clusterhodge
