#pragma once

#include "restrictor/graph.hpp"
#include "restrictor/induced_copy.hpp"
#include "restrictor/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace restrictor {

/// Blocks A_v, one per pattern vertex, expected to be pairwise
/// (eps^|H|, eps)-full where H has an edge and empty where it has none.
struct BlockSystem
{
    Graph pattern;
    std::vector<VertexSet> blocks;
    double eps = 0.5;
};

inline void validate_block_system(const Graph & g, const BlockSystem & sys)
{
    if (sys.blocks.size() != sys.pattern.size())
        throw PreconditionViolated("need exactly one block per pattern vertex");
    if (!(sys.eps > 0.0 && at_most(sys.eps, 0.5))) throw PreconditionViolated("block system eps must lie in (0, 1/2]");
    VertexSet seen(g.size());
    for (std::size_t v = 0; v < sys.blocks.size(); ++v) {
        const auto & block = sys.blocks[v];
        if (block.universe() != g.size()) throw PreconditionViolated("block universe does not match graph");
        if (block.empty()) throw PreconditionViolated("block " + std::to_string(v) + " is empty");
        if (block.intersects(seen)) throw PreconditionViolated("blocks overlap at block " + std::to_string(v));
        seen |= block;
    }
}

struct EmbeddingLevel
{
    Vertex pattern_vertex = no_vertex;
    Vertex chosen = no_vertex;
    /// Blocks of the still-unplaced pattern vertices after shrinking.
    std::vector<VertexSet> blocks;
};

struct Embedding
{
    std::vector<Vertex> mapping; ///< pattern vertex -> host vertex
    std::vector<EmbeddingLevel> trace;
};

namespace detail {

/// Pattern vertices by descending degree, ties by id.
inline auto embedding_order(const Graph & pattern) -> std::vector<Vertex>
{
    std::vector<Vertex> order(pattern.size());
    for (Vertex v = 0; v < order.size(); ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return pattern.degree(a) > pattern.degree(b); });
    return order;
}

} // namespace detail

/// Pick a_v level by level as in the inductive embedding argument: a_v needs
/// at least eps|A_u| neighbours (non-neighbours) in every block A_u of a
/// pattern neighbour (non-neighbour) u; the surviving blocks shrink to
/// those neighbourhoods and the next level measures against the shrunken
/// sizes. Among viable a_v, the one keeping the largest minimum fraction
/// of the remaining blocks wins (ties by id). `order` overrides the
/// default processing order.
inline auto embed_transversal(const Graph & g, const BlockSystem & sys, std::vector<Vertex> order = {}) -> Embedding
{
    validate_block_system(g, sys);
    const auto & h = sys.pattern;
    if (order.empty()) order = detail::embedding_order(h);
    std::vector<bool> listed(h.size(), false);
    for (auto v : order) {
        if (v >= h.size() || listed[v]) throw PreconditionViolated("processing order must list every pattern vertex once");
        listed[v] = true;
    }
    if (order.size() != h.size()) throw PreconditionViolated("processing order must list every pattern vertex once");

    Embedding out;
    out.mapping.assign(h.size(), no_vertex);
    std::vector<VertexSet> current = sys.blocks;
    std::vector<bool> placed(h.size(), false);

    for (std::size_t level = 0; level < order.size(); ++level) {
        const auto v = order[level];

        Vertex best = no_vertex;
        double best_fraction = -1.0;
        for (auto candidate : current[v]) {
            double fraction = 1.0;
            bool viable = true;
            for (Vertex u = 0; u < h.size() && viable; ++u) {
                if (u == v || placed[u]) continue;
                const auto side = h.adjacent(u, v) ? Side::graph : Side::complement;
                const auto kept = g.neighbours_in(candidate, current[u], side);
                const auto block_size = static_cast<double>(current[u].count());
                if (!at_least(static_cast<double>(kept), sys.eps * block_size) || kept == 0) viable = false;
                fraction = std::min(fraction, static_cast<double>(kept) / block_size);
            }
            if (viable && fraction > best_fraction) {
                best = candidate;
                best_fraction = fraction;
            }
        }
        if (best == no_vertex) throw NoViableVertex(v, level);

        out.mapping[v] = best;
        placed[v] = true;
        EmbeddingLevel record{v, best, {}};
        for (Vertex u = 0; u < h.size(); ++u) {
            if (placed[u]) continue;
            const auto & row = g.neighbours(best);
            if (h.adjacent(u, v))
                current[u] &= row;
            else
                current[u] -= row;
            current[u].erase(best);
            record.blocks.push_back(current[u]);
        }
        out.trace.push_back(std::move(record));
    }

    if (!is_induced_copy(g, h, out.mapping))
        throw std::logic_error("embedding produced a mapping that is not an induced copy");
    return out;
}

} // namespace restrictor
