#pragma once

#include "restrictor/errors.hpp"
#include "restrictor/vertex_set.hpp"

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace restrictor {

/// Which of G, complement(G) a sparse/restricted condition refers to.
enum class Side
{
    graph,
    complement
};

inline auto opposite(Side side) -> Side { return side == Side::graph ? Side::complement : Side::graph; }

inline auto to_string(Side side) -> std::string_view { return side == Side::graph ? "graph" : "complement"; }

using Edge = std::pair<Vertex, Vertex>;

/**
 * Undirected simple graph on 0..n-1 with one adjacency bit row per vertex.
 *
 * Neighbourhood counts against a vertex set are a popcount of a row
 * intersection; counts in the complement are derived from them, so the
 * complement never has to be materialised.
 */
class Graph
{
public:
    Graph() = default;

    explicit Graph(std::size_t n) : n_(n), rows_(n, VertexSet(n)) {}

    static auto from_edges(std::size_t n, const std::vector<Edge> & edges) -> Graph
    {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    auto size() const -> std::size_t { return n_; }

    void add_edge(Vertex u, Vertex v)
    {
        check_pair(u, v);
        rows_[u].insert(v);
        rows_[v].insert(u);
    }

    void remove_edge(Vertex u, Vertex v)
    {
        check_pair(u, v);
        rows_[u].erase(v);
        rows_[v].erase(u);
    }

    auto adjacent(Vertex u, Vertex v) const -> bool { return rows_[u].contains(v); }

    /// Adjacency in G (side = graph) or in its complement; false when u == v.
    auto adjacent(Vertex u, Vertex v, Side side) const -> bool
    {
        if (u == v) return false;
        return side == Side::graph ? adjacent(u, v) : !adjacent(u, v);
    }

    auto neighbours(Vertex v) const -> const VertexSet & { return rows_[v]; }

    auto degree(Vertex v) const -> std::size_t { return rows_[v].count(); }

    /// |N(v) ∩ s| on the given side. `s_size` must equal s.count().
    auto neighbours_in(Vertex v, const VertexSet & s, Side side, std::size_t s_size) const -> std::size_t
    {
        const auto hits = rows_[v].intersection_count(s);
        if (side == Side::graph) return hits;
        return s_size - hits - (s.contains(v) ? 1 : 0);
    }

    auto neighbours_in(Vertex v, const VertexSet & s, Side side = Side::graph) const -> std::size_t
    {
        return neighbours_in(v, s, side, s.count());
    }

    auto edge_count() const -> std::size_t
    {
        std::size_t twice = 0;
        for (const auto & row : rows_) twice += row.count();
        return twice / 2;
    }

    auto vertices() const -> VertexSet { return VertexSet::full(n_); }

    /// Edges as (u, v) with u < v, in lexicographic order.
    auto edges() const -> std::vector<Edge>
    {
        std::vector<Edge> out;
        for (Vertex u = 0; u < n_; ++u)
            for (auto v = rows_[u].next(u); v != no_vertex; v = rows_[u].next(v)) out.emplace_back(u, v);
        return out;
    }

    friend auto operator==(const Graph & a, const Graph & b) -> bool { return a.n_ == b.n_ && a.rows_ == b.rows_; }

private:
    std::size_t n_ = 0;
    std::vector<VertexSet> rows_;

    void check_pair(Vertex u, Vertex v) const
    {
        if (u >= n_ || v >= n_)
            throw PreconditionViolated("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                       ") outside vertex range " + std::to_string(n_));
        if (u == v) throw PreconditionViolated("self-loop at vertex " + std::to_string(u));
    }
};

inline auto complement(const Graph & g) -> Graph
{
    Graph result(g.size());
    for (Vertex u = 0; u < g.size(); ++u)
        for (Vertex v = u + 1; v < g.size(); ++v)
            if (!g.adjacent(u, v)) result.add_edge(u, v);
    return result;
}

/// The graph itself or its complement.
inline auto on_side(const Graph & g, Side side) -> Graph { return side == Side::graph ? g : complement(g); }

struct InducedSubgraph
{
    Graph graph;
    std::vector<Vertex> original;  ///< new id -> old id
    std::vector<Vertex> relabeled; ///< old id -> new id, no_vertex if dropped
};

inline auto induced(const Graph & g, const VertexSet & x) -> InducedSubgraph
{
    if (x.universe() != g.size()) throw PreconditionViolated("vertex set universe does not match graph");
    InducedSubgraph out{Graph(x.count()), x.to_vector(), std::vector<Vertex>(g.size(), no_vertex)};
    for (Vertex i = 0; i < out.original.size(); ++i) out.relabeled[out.original[i]] = i;
    for (Vertex i = 0; i < out.original.size(); ++i)
        for (Vertex j = i + 1; j < out.original.size(); ++j)
            if (g.adjacent(out.original[i], out.original[j])) out.graph.add_edge(i, j);
    return out;
}

namespace detail {
inline void require_disjoint(const VertexSet & a, const VertexSet & b, std::string_view what)
{
    if (a.intersects(b)) throw PreconditionViolated(std::string(what) + ": vertex sets overlap");
}
} // namespace detail

/// Number of edges (on the given side) with one end in a and the other in b.
inline auto edges_between(const Graph & g, const VertexSet & a, const VertexSet & b, Side side = Side::graph)
    -> std::size_t
{
    detail::require_disjoint(a, b, "edges_between");
    const auto b_size = b.count();
    std::size_t total = 0;
    for (auto v : a) total += g.neighbours_in(v, b, side, b_size);
    return total;
}

/// max over v in b of |N(v) ∩ a| on the given side; 0 when b is empty.
inline auto max_degree_into(const Graph & g, const VertexSet & b, const VertexSet & a, Side side = Side::graph)
    -> std::size_t
{
    detail::require_disjoint(a, b, "max_degree_into");
    const auto a_size = a.count();
    std::size_t best = 0;
    for (auto v : b) best = std::max(best, g.neighbours_in(v, a, side, a_size));
    return best;
}

} // namespace restrictor
