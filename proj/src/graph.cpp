#include "clusterhodge/graph.hpp"

#include <algorithm>

#include "clusterhodge/error.hpp"

namespace clusterhodge {

std::vector<int> elements(Mask m) {
    std::vector<int> out;
    while (m != 0) {
        out.push_back(__builtin_ctzll(m));
        m &= m - 1;
    }
    return out;
}

Graph::Graph(int vertex_count) : n_(vertex_count) {
    if (vertex_count < 0 || vertex_count > kMaxVertices)
        throw Error(ErrorKind::TooLarge, "graph supports at most 64 vertices");
    adj_.assign(static_cast<std::size_t>(vertex_count), 0);
}

void Graph::add_edge(int u, int w) {
    if (u < 0 || w < 0 || u >= n_ || w >= n_) throw Error(ErrorKind::IndexOutOfRange, "edge endpoint");
    if (u == w) throw Error(ErrorKind::InvalidArgument, "loops are not allowed");
    adj_[static_cast<std::size_t>(u)] |= bit(w);
    adj_[static_cast<std::size_t>(w)] |= bit(u);
}

bool Graph::has_edge(int u, int w) const {
    if (u < 0 || w < 0 || u >= n_ || w >= n_) return false;
    return (adj_[static_cast<std::size_t>(u)] & bit(w)) != 0;
}

std::size_t Graph::edge_count() const {
    std::size_t e = 0;
    for (Mask a : adj_) e += static_cast<std::size_t>(popcount(a));
    return e / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int w : elements(neighbors(u) & ~low_bits(u + 1))) out.emplace_back(u, w);
    return out;
}

bool Graph::is_anticlique(Mask s) const {
    for (int v : elements(s))
        if ((neighbors(v) & s) != 0) return false;
    return true;
}

std::vector<Mask> Graph::components(Mask within) const {
    std::vector<Mask> out;
    Mask left = within & all();
    while (left != 0) {
        Mask comp = left & (~left + 1);
        Mask frontier = comp;
        while (frontier != 0) {
            Mask next = 0;
            for (int v : elements(frontier)) next |= neighbors(v);
            next &= left & ~comp;
            comp |= next;
            frontier = next;
        }
        out.push_back(comp);
        left &= ~comp;
    }
    return out;
}

bool Graph::is_connected() const { return components().size() <= 1; }

bool Graph::is_forest() const { return edge_count() + components().size() == static_cast<std::size_t>(n_); }

Graph Graph::compacted(Mask keep) const {
    std::vector<int> kept = elements(keep & all());
    std::vector<int> pos(static_cast<std::size_t>(n_), -1);
    for (std::size_t i = 0; i < kept.size(); ++i) pos[static_cast<std::size_t>(kept[i])] = static_cast<int>(i);
    Graph out(static_cast<int>(kept.size()));
    for (auto [u, w] : edges())
        if (pos[static_cast<std::size_t>(u)] >= 0 && pos[static_cast<std::size_t>(w)] >= 0)
            out.add_edge(pos[static_cast<std::size_t>(u)], pos[static_cast<std::size_t>(w)]);
    return out;
}

Graph Graph::path(int vertices) {
    Graph g(vertices);
    for (int i = 0; i + 1 < vertices; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph Graph::cycle(int vertices) {
    if (vertices < 3) throw Error(ErrorKind::CycleTooSmall, "a cycle needs at least 3 vertices");
    Graph g = path(vertices);
    g.add_edge(vertices - 1, 0);
    return g;
}

Graph Graph::star(int vertices) {
    Graph g(vertices);
    for (int i = 1; i < vertices; ++i) g.add_edge(0, i);
    return g;
}

Graph Graph::complete(int vertices) {
    Graph g(vertices);
    for (int i = 0; i < vertices; ++i)
        for (int j = i + 1; j < vertices; ++j) g.add_edge(i, j);
    return g;
}

std::size_t AnticliqueFamily::size() const {
    std::size_t s = 0;
    for (const auto& level : by_cardinality) s += level.size();
    return s;
}

std::vector<Mask> AnticliqueFamily::all() const {
    std::vector<Mask> out;
    for (const auto& level : by_cardinality) out.insert(out.end(), level.begin(), level.end());
    return out;
}

namespace {

void grow(const Graph& g, Mask chosen, Mask candidates, AnticliqueFamily& out) {
    const auto k = static_cast<std::size_t>(popcount(chosen));
    if (out.by_cardinality.size() <= k) out.by_cardinality.resize(k + 1);
    out.by_cardinality[k].push_back(chosen);
    while (candidates != 0) {
        const int v = __builtin_ctzll(candidates);
        candidates &= candidates - 1;
        grow(g, chosen | bit(v), candidates & ~g.neighbors(v), out);
    }
}

}  // namespace

AnticliqueFamily anticliques(const Graph& g, Mask within) {
    AnticliqueFamily out;
    grow(g, 0, within & g.all(), out);
    for (auto& level : out.by_cardinality) std::sort(level.begin(), level.end());
    return out;
}

}  // namespace clusterhodge
