#include "clusterhodge/topology.hpp"

#include <algorithm>
#include <sstream>

#include "clusterhodge/error.hpp"

namespace clusterhodge {

namespace {

bool face_order(Mask x, Mask y) {
    const int px = popcount(x), py = popcount(y);
    return px != py ? px < py : x < y;
}

int face_index(const std::vector<Mask>& level, Mask f) {
    auto it = std::lower_bound(level.begin(), level.end(), f);
    return (it != level.end() && *it == f) ? static_cast<int>(it - level.begin()) : -1;
}

}  // namespace

SimplicialComplex independence_complex(const Graph& g, Mask within) {
    SimplicialComplex k;
    k.vertices = within & g.all();
    k.faces = anticliques(g, k.vertices).all();
    std::sort(k.faces.begin(), k.faces.end(), face_order);
    return k;
}

CochainComplexQ augmented_cochains(const SimplicialComplex& k) {
    std::vector<std::vector<Mask>> levels;
    for (Mask f : k.faces) {
        const auto s = static_cast<std::size_t>(popcount(f));
        if (levels.size() <= s) levels.resize(s + 1);
        levels[s].push_back(f);
    }
    for (auto& l : levels) std::sort(l.begin(), l.end());

    CochainComplexQ c;
    c.offset = -1;
    for (const auto& l : levels) {
        std::vector<BasisLabel> b;
        b.reserve(l.size());
        for (Mask f : l) b.push_back({f, 0});
        c.bases.push_back(std::move(b));
    }
    for (std::size_t p = 0; p + 1 < levels.size(); ++p) {
        SparseMatrixQ d(static_cast<int>(levels[p + 1].size()), static_cast<int>(levels[p].size()));
        for (std::size_t col = 0; col < levels[p].size(); ++col) {
            const Mask f = levels[p][col];
            std::map<int, Rational> image;
            for (int v : elements(k.vertices & ~f)) {
                const int row = face_index(levels[p + 1], f | bit(v));
                if (row < 0) continue;
                image[row] = (count_below(f, v) % 2 == 0) ? 1 : -1;
            }
            d.set_column(static_cast<int>(col), from_map(image));
        }
        c.differentials.push_back(std::move(d));
    }
    return c;
}

long ReducedCohomology::at(int r) const {
    auto it = dims.find(r);
    return it == dims.end() ? 0 : it->second;
}

std::string ReducedCohomology::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [r, d] : dims) {
        if (!first) os << ", ";
        os << r << ": " << d;
        first = false;
    }
    os << '}';
    return os.str();
}

ReducedCohomology reduced_cohomology(const SimplicialComplex& k) {
    return {augmented_cochains(k).cohomology_dims()};
}

HomotopyType HomotopyType::join(const HomotopyType& o) const {
    if (kind == Kind::Contractible || o.kind == Kind::Contractible) return contractible();
    return sphere(dim + o.dim + 1);
}

ReducedCohomology HomotopyType::cohomology() const {
    ReducedCohomology r;
    if (kind == Kind::Sphere) r.dims[dim] = 1;
    return r;
}

std::string HomotopyType::to_string() const {
    return kind == Kind::Contractible ? "Contractible" : "Sphere(" + std::to_string(dim) + ")";
}

HomotopyType closed_form_path(int edges) {
    if (edges < 0) throw Error(ErrorKind::InvalidArgument, "negative path length");
    if (edges % 3 == 0) return HomotopyType::contractible();
    return HomotopyType::sphere(edges / 3);
}

ReducedCohomology closed_form_cycle(int m) {
    if (m < 3) throw Error(ErrorKind::CycleTooSmall, "cycle on " + std::to_string(m) + " vertices");
    ReducedCohomology r;
    const int k = (m + 1) / 3;  // m = 3k, 3k - 1 or 3k + 1
    if (m % 3 == 0) {
        r.dims[m / 3 - 1] = 2;
    } else if (m % 3 == 2) {
        r.dims[k - 1] = 1;
    } else {
        r.dims[(m - 1) / 3 - 1] = 1;
    }
    return r;
}

namespace {

// Adjacency-mask forest with a live vertex set; removing vertices only shrinks `live`.
struct Forest {
    const Graph* g;
    Mask live;
    Mask nbrs(int v) const { return g->neighbors(v) & live; }
};

// Breadth-first parents and depths from root within the component `comp`.
void bfs(const Forest& f, int root, Mask comp, std::vector<int>& parent, std::vector<int>& depth) {
    parent.assign(static_cast<std::size_t>(f.g->vertex_count()), -1);
    depth.assign(static_cast<std::size_t>(f.g->vertex_count()), -1);
    std::vector<int> queue{root};
    depth[static_cast<std::size_t>(root)] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
        const int v = queue[h];
        for (int w : elements(f.nbrs(v) & comp)) {
            if (depth[static_cast<std::size_t>(w)] >= 0) continue;
            depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(v)] + 1;
            parent[static_cast<std::size_t>(w)] = v;
            queue.push_back(w);
        }
    }
}

int deepest(const std::vector<int>& depth, Mask comp) {
    int best = -1;
    for (int v : elements(comp))
        if (best < 0 || depth[static_cast<std::size_t>(v)] > depth[static_cast<std::size_t>(best)]) best = v;
    return best;
}

HomotopyType tree_homotopy(const Graph& g, Mask comp);

HomotopyType forest_mask_homotopy(const Graph& g, Mask live) {
    HomotopyType acc = HomotopyType::sphere(-1);
    for (Mask comp : g.components(live)) {
        acc = acc.join(tree_homotopy(g, comp));
        if (acc.kind == HomotopyType::Kind::Contractible) break;
    }
    return acc;
}

HomotopyType tree_homotopy(const Graph& g, Mask comp) {
    Forest f{&g, comp};
    int suspensions = 0;
    auto is_leaf = [&](int v) { return popcount(f.nbrs(v)) == 1; };
    for (;;) {
        const int size = popcount(f.live);
        if (size == 0) return HomotopyType::sphere(suspensions - 1);
        if (size == 1) return HomotopyType::contractible();
        if (size == 2) return HomotopyType::sphere(suspensions);

        // EH1: two leaves on one vertex, drop one.
        bool dropped = false;
        for (int v : elements(f.live)) {
            Mask leaves = 0;
            for (int x : elements(f.nbrs(v)))
                if (is_leaf(x)) leaves |= bit(x);
            if (popcount(leaves) >= 2) {
                f.live &= ~bit(__builtin_ctzll(leaves));
                dropped = true;
                break;
            }
        }
        if (dropped) continue;

        // Root at one end of a diameter; the deepest leaf hangs off u, and every
        // child of w = parent(u) is a leaf or carries exactly one leaf.
        std::vector<int> parent, depth;
        bfs(f, __builtin_ctzll(f.live), f.live, parent, depth);
        bfs(f, deepest(depth, f.live), f.live, parent, depth);
        const int leaf = deepest(depth, f.live);
        const int u = parent[static_cast<std::size_t>(leaf)];
        const int w = parent[static_cast<std::size_t>(u)];
        Mask siblings = 0;
        for (int x : elements(f.nbrs(w)))
            if (parent[static_cast<std::size_t>(x)] == w && x != u) siblings |= bit(x);

        // EH4: a leaf sibling of u lets u be removed, isolating `leaf`.
        for (int c : elements(siblings))
            if (is_leaf(c)) return HomotopyType::contractible();
        if (siblings != 0) {
            // EH3: a second pendant path of length 2 at w; remove it and suspend.
            const int c = __builtin_ctzll(siblings);
            f.live &= ~(bit(c) | (f.nbrs(c) & ~bit(w)));
        } else {
            // EH2: w carries only the pendant path; remove w, u, leaf and suspend.
            f.live &= ~(bit(w) | bit(u) | bit(leaf));
        }
        ++suspensions;
    }
}

}  // namespace

HomotopyType forest_homotopy(const Graph& forest) {
    if (!forest.is_forest()) throw Error(ErrorKind::NotAForest, "graph contains a cycle");
    return forest_mask_homotopy(forest, forest.all());
}

SparseVector mv_cochain(const SimplicialComplex& source, const SimplicialComplex& target, int degree,
                        int a, const SparseVector& psi) {
    std::vector<Mask> src, dst;
    for (Mask f : source.faces)
        if (popcount(f) == degree + 1) src.push_back(f);
    for (Mask f : target.faces)
        if (popcount(f) == degree + 2) dst.push_back(f);
    std::sort(src.begin(), src.end());
    std::sort(dst.begin(), dst.end());
    std::map<int, Rational> eta;
    for (const auto& e : psi) {
        const Mask face = src[static_cast<std::size_t>(e.index)];
        const int row = face_index(dst, face | bit(a));
        if (row < 0 || (face & bit(a)) != 0) continue;
        eta[row] += (count_above(face, a) % 2 == 0) ? e.value : Rational(-e.value);
    }
    return from_map(eta);
}

MayerVietorisMap mv_delta(const Graph& ambient, Mask x, int a, int b) {
    if (!ambient.has_edge(a, b)) throw Error(ErrorKind::NotAnEdge, "a and b are not adjacent");
    if ((x & (bit(a) | bit(b))) != 0) throw Error(ErrorKind::VertexInX, "edge endpoint lies in X");
    const SimplicialComplex source = independence_complex(ambient, x);
    const SimplicialComplex target = independence_complex(ambient, x | bit(a) | bit(b));
    const CochainComplexQ cs = augmented_cochains(source);
    const CochainComplexQ ct = augmented_cochains(target);

    MayerVietorisMap out;
    for (int r = -1; r + 1 < static_cast<int>(cs.space_count()); ++r) {
        CohomologyBasis hs(cs, r);
        if (hs.dimension() == 0) continue;
        CohomologyBasis ht(ct, r + 1);
        SparseMatrixQ m(static_cast<int>(ht.dimension()), static_cast<int>(hs.dimension()));
        for (std::size_t c = 0; c < hs.dimension(); ++c) {
            SparseVector eta = mv_cochain(source, target, r, a, hs.representatives()[c]);
            m.set_column(static_cast<int>(c), ht.coordinates(eta));
        }
        out.by_degree.emplace(r, std::move(m));
    }
    return out;
}

}  // namespace clusterhodge
