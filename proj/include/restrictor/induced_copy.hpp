#pragma once

#include "restrictor/graph.hpp"

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

namespace restrictor {

/// True iff `mapping` (pattern vertex -> host vertex) is injective and
/// preserves adjacency and non-adjacency in both directions.
inline auto is_induced_copy(const Graph & host, const Graph & pattern, std::span<const Vertex> mapping) -> bool
{
    if (mapping.size() != pattern.size()) return false;
    for (auto v : mapping)
        if (v >= host.size()) return false;
    for (std::size_t i = 0; i < mapping.size(); ++i)
        for (std::size_t j = i + 1; j < mapping.size(); ++j) {
            if (mapping[i] == mapping[j]) return false;
            if (host.adjacent(mapping[i], mapping[j]) != pattern.adjacent(i, j)) return false;
        }
    return true;
}

namespace detail {

/// Pattern vertices in search order: start from a max-degree vertex, then
/// repeatedly take the vertex with most pattern-neighbours already placed.
inline auto pattern_order(const Graph & pattern) -> std::vector<Vertex>
{
    const auto n = pattern.size();
    std::vector<Vertex> order;
    std::vector<bool> placed(n, false);
    for (std::size_t step = 0; step < n; ++step) {
        Vertex best = no_vertex;
        std::pair<std::size_t, std::size_t> best_key{0, 0};
        for (Vertex v = 0; v < n; ++v) {
            if (placed[v]) continue;
            std::size_t linked = 0;
            for (auto u : order) linked += pattern.adjacent(u, v) ? 1 : 0;
            std::pair<std::size_t, std::size_t> key{linked, pattern.degree(v)};
            if (best == no_vertex || key > best_key) {
                best = v;
                best_key = key;
            }
        }
        placed[best] = true;
        order.push_back(best);
    }
    return order;
}

inline auto extend_copy(const Graph & host, const Graph & pattern, const std::vector<Vertex> & order,
                        std::size_t depth, const VertexSet & available, std::vector<Vertex> & mapping) -> bool
{
    if (depth == order.size()) return true;
    const auto v = order[depth];
    VertexSet candidates = available;
    for (std::size_t i = 0; i < depth; ++i) {
        const auto u = order[i];
        if (pattern.adjacent(u, v))
            candidates &= host.neighbours(mapping[u]);
        else
            candidates -= host.neighbours(mapping[u]);
    }
    for (auto a : candidates) {
        mapping[v] = a;
        VertexSet rest = available;
        rest.erase(a);
        if (extend_copy(host, pattern, order, depth + 1, rest, mapping)) return true;
    }
    mapping[v] = no_vertex;
    return false;
}

} // namespace detail

/// Backtracking search for an induced copy of `pattern` using only host
/// vertices in `within`. Candidates are tried in increasing id order, so
/// the result is deterministic.
inline auto find_induced_copy(const Graph & host, const Graph & pattern, const VertexSet & within)
    -> std::optional<std::vector<Vertex>>
{
    if (within.universe() != host.size()) throw PreconditionViolated("search set universe does not match host");
    std::vector<Vertex> mapping(pattern.size(), no_vertex);
    if (pattern.size() == 0) return mapping;
    const auto order = detail::pattern_order(pattern);
    if (detail::extend_copy(host, pattern, order, 0, within, mapping)) return mapping;
    return std::nullopt;
}

inline auto find_induced_copy(const Graph & host, const Graph & pattern) -> std::optional<std::vector<Vertex>>
{
    return find_induced_copy(host, pattern, host.vertices());
}

} // namespace restrictor
