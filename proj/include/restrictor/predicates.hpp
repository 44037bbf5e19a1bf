#pragma once

#include "restrictor/graph.hpp"
#include "restrictor/numeric.hpp"

#include <optional>

namespace restrictor {

/// Outcome of a "G[X] or its complement satisfies ..." test, with the side
/// that witnesses it. GRAPH wins ties.
struct SideVerdict
{
    bool holds = false;
    std::optional<Side> side;

    explicit operator bool() const { return holds; }
};

/// Largest degree inside G[x] and inside the complement of G[x].
struct DegreeProfile
{
    std::size_t graph_max = 0;
    std::size_t complement_max = 0;

    auto on(Side side) const -> std::size_t { return side == Side::graph ? graph_max : complement_max; }
};

inline auto max_degrees(const Graph & g, const VertexSet & x) -> DegreeProfile
{
    DegreeProfile out;
    const auto size = x.count();
    if (size == 0) return out;
    out.complement_max = 0;
    std::size_t min_graph = size;
    for (auto v : x) {
        const auto d = g.neighbours(v).intersection_count(x);
        out.graph_max = std::max(out.graph_max, d);
        min_graph = std::min(min_graph, d);
    }
    out.complement_max = size - 1 - min_graph;
    return out;
}

inline auto is_restricted_on(const Graph & g, const VertexSet & x, double eps, Side side) -> bool
{
    const auto size = x.count();
    if (size == 0) return true;
    return at_most(static_cast<double>(max_degrees(g, x).on(side)), eps * static_cast<double>(size));
}

/// X is eps-restricted if G[X] or its complement has max degree <= eps|X|.
inline auto is_restricted(const Graph & g, const VertexSet & x, double eps) -> SideVerdict
{
    const auto size = x.count();
    if (size == 0) return {true, Side::graph};
    const auto profile = max_degrees(g, x);
    const double budget = eps * static_cast<double>(size);
    if (at_most(static_cast<double>(profile.graph_max), budget)) return {true, Side::graph};
    if (at_most(static_cast<double>(profile.complement_max), budget)) return {true, Side::complement};
    return {false, std::nullopt};
}

/// Number of edges of G[x] on the given side.
inline auto induced_edge_count(const Graph & g, const VertexSet & x, Side side = Side::graph) -> std::size_t
{
    std::size_t twice = 0;
    for (auto v : x) twice += g.neighbours(v).intersection_count(x);
    const auto edges = twice / 2;
    if (side == Side::graph) return edges;
    const auto size = x.count();
    return size * (size - (size > 0 ? 1 : 0)) / 2 - edges;
}

/// X is weakly eps-restricted if G[X] or its complement has <= eps|X|^2 edges.
inline auto is_weakly_restricted(const Graph & g, const VertexSet & x, double eps) -> SideVerdict
{
    const auto size = static_cast<double>(x.count());
    const auto edges = induced_edge_count(g, x);
    const auto non_edges = induced_edge_count(g, x, Side::complement);
    const double budget = eps * size * size;
    if (at_most(static_cast<double>(edges), budget)) return {true, Side::graph};
    if (at_most(static_cast<double>(non_edges), budget)) return {true, Side::complement};
    return {false, std::nullopt};
}

/// b is eps-sparse to a (side = graph) or eps-dense to a (side = complement):
/// every vertex of b has at most eps|a| neighbours in a on that side.
inline auto is_sparse_to(const Graph & g, const VertexSet & b, const VertexSet & a, double eps, Side side) -> bool
{
    const auto worst = max_degree_into(g, b, a, side);
    return at_most(static_cast<double>(worst), eps * static_cast<double>(a.count()));
}

/// Sparse on either side; reports the side (GRAPH preferred).
inline auto sparse_or_dense(const Graph & g, const VertexSet & b, const VertexSet & a, double eps) -> SideVerdict
{
    if (is_sparse_to(g, b, a, eps, Side::graph)) return {true, Side::graph};
    if (is_sparse_to(g, b, a, eps, Side::complement)) return {true, Side::complement};
    return {false, std::nullopt};
}

} // namespace restrictor
