#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace clusterhodge {

/// Vertex or index subset; bit i set means element i is present.
using Mask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline int popcount(Mask m) { return __builtin_popcountll(m); }
inline Mask bit(int i) { return Mask{1} << i; }
inline Mask low_bits(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }
/// Number of elements of m strictly below i.
inline int count_below(Mask m, int i) { return popcount(m & low_bits(i)); }
/// Number of elements of m strictly above i.
inline int count_above(Mask m, int i) { return i >= 63 ? 0 : popcount(m >> (i + 1)); }
std::vector<int> elements(Mask m);

/// Simple undirected graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;
    explicit Graph(int vertex_count);

    int vertex_count() const { return n_; }
    Mask all() const { return low_bits(n_); }

    void add_edge(int u, int w);
    bool has_edge(int u, int w) const;
    Mask neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return popcount(neighbors(v)); }
    std::size_t edge_count() const;
    /// Edges (u, w) with u < w in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;

    bool is_anticlique(Mask s) const;
    std::vector<Mask> components(Mask within) const;
    std::vector<Mask> components() const { return components(all()); }
    bool is_connected() const;
    bool is_forest() const;
    /// Subgraph induced on `keep`, relabelled to 0..|keep|-1 preserving order.
    Graph compacted(Mask keep) const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

    static Graph path(int vertices);
    static Graph cycle(int vertices);
    static Graph star(int vertices);
    static Graph complete(int vertices);

private:
    int n_ = 0;
    std::vector<Mask> adj_;
};

/// Anticliques grouped by size; each group sorted by mask value.
struct AnticliqueFamily {
    std::vector<std::vector<Mask>> by_cardinality;
    std::size_t size() const;
    std::vector<Mask> all() const;
};

AnticliqueFamily anticliques(const Graph& g, Mask within);
inline AnticliqueFamily anticliques(const Graph& g) { return anticliques(g, g.all()); }

}  // namespace clusterhodge
