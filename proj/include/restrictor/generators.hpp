#pragma once

#include "restrictor/embedding.hpp"
#include "restrictor/errors.hpp"
#include "restrictor/fullness.hpp"
#include "restrictor/graph.hpp"
#include "restrictor/induced_copy.hpp"
#include "restrictor/partitions.hpp"
#include "restrictor/rng.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace restrictor {

/// Erdos-Renyi G(n, p); pairs visited in (u, v) order, u < v.
inline auto random_graph(std::size_t n, double p, std::uint64_t seed) -> Graph
{
    if (n == 0) throw PreconditionViolated("random graph needs n >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw PreconditionViolated("edge probability must lie in [0, 1]");
    auto engine = make_engine(seed);
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (uniform_unit(engine) < p) g.add_edge(u, v);
    return g;
}

/// g with vertex `drop` removed; later vertices shift down by one.
inline auto delete_vertex(const Graph & g, Vertex drop) -> Graph
{
    Graph out(g.size() - 1);
    auto shift = [drop](Vertex v) { return v > drop ? v - 1 : v; };
    for (auto [u, v] : g.edges())
        if (u != drop && v != drop) out.add_edge(shift(u), shift(v));
    return out;
}

/// G(n, p) made H-free by deleting the lowest-id vertex of each induced copy
/// found, until none is left. The result may have fewer than n vertices.
inline auto hfree_graph(const Graph & pattern, std::size_t n, double p, std::uint64_t seed) -> Graph
{
    if (pattern.size() == 0) throw PreconditionViolated("pattern needs at least one vertex");
    auto g = random_graph(n, p, seed);
    while (g.size() > 0) {
        auto copy = find_induced_copy(g, pattern);
        if (!copy) break;
        g = delete_vertex(g, *std::min_element(copy->begin(), copy->end()));
    }
    if (g.size() == 0) throw PreconditionViolated("every vertex was deleted; the pattern is unavoidable");
    return g;
}

/// K_{1, n-1} with centre 0.
inline auto star_graph(std::size_t n) -> Graph
{
    if (n == 0) throw PreconditionViolated("star needs n >= 1");
    Graph g(n);
    for (Vertex v = 1; v < n; ++v) g.add_edge(0, v);
    return g;
}

/// Clique on 0..k-1, independent set on the rest, cross edges with
/// probability p.
inline auto split_graph(std::size_t n, std::size_t clique, double p, std::uint64_t seed) -> Graph
{
    if (n == 0 || clique > n) throw PreconditionViolated("split graph needs 1 <= n and clique <= n");
    if (!(p >= 0.0 && p <= 1.0)) throw PreconditionViolated("edge probability must lie in [0, 1]");
    auto engine = make_engine(seed);
    Graph g(n);
    for (Vertex u = 0; u < clique; ++u)
        for (Vertex v = u + 1; v < clique; ++v) g.add_edge(u, v);
    for (Vertex u = 0; u < clique; ++u)
        for (Vertex v = static_cast<Vertex>(clique); v < n; ++v)
            if (uniform_unit(engine) < p) g.add_edge(u, v);
    return g;
}

/// Overwrite the edges among `at` so that they induce `pattern`.
inline void plant_copy(Graph & g, const Graph & pattern, const std::vector<Vertex> & at)
{
    if (at.size() != pattern.size()) throw PreconditionViolated("need one host vertex per pattern vertex");
    for (Vertex i = 0; i < at.size(); ++i)
        for (Vertex j = i + 1; j < at.size(); ++j) {
            if (pattern.adjacent(i, j)) {
                if (!g.adjacent(at[i], at[j])) g.add_edge(at[i], at[j]);
            } else if (g.adjacent(at[i], at[j])) {
                g.remove_edge(at[i], at[j]);
            }
        }
}

struct PlantedInstance
{
    Graph graph;
    std::vector<Vertex> planted;
};

/// G(n, p) with an induced copy of `pattern` on random distinct vertices.
inline auto planted_copy_graph(const Graph & pattern, std::size_t n, double p, std::uint64_t seed) -> PlantedInstance
{
    if (n < pattern.size()) throw PreconditionViolated("host is smaller than the pattern");
    PlantedInstance out{random_graph(n, p, derive_seed(seed, 0)), {}};
    auto engine = make_engine(derive_seed(seed, 1));
    std::vector<Vertex> pool(n);
    for (Vertex v = 0; v < n; ++v) pool[v] = v;
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        std::swap(pool[i], pool[i + uniform_below(engine, n - i)]);
        out.planted.push_back(pool[i]);
    }
    plant_copy(out.graph, pattern, out.planted);
    return out;
}

// ---------------------------------------------------------------------------
// Layered instances

namespace detail {

/// Random edges inside `bag` with every vertex keeping at most `cap`
/// neighbours on `side` within the bag.
inline void fill_bag(Graph & g, const std::vector<Vertex> & bag, Side side, std::size_t cap, double density,
                     Engine & engine)
{
    std::vector<std::size_t> used(bag.size(), 0);
    if (side == Side::complement) {
        for (std::size_t i = 0; i < bag.size(); ++i)
            for (std::size_t j = i + 1; j < bag.size(); ++j) g.add_edge(bag[i], bag[j]);
    }
    for (std::size_t i = 0; i < bag.size(); ++i)
        for (std::size_t j = i + 1; j < bag.size(); ++j) {
            if (used[i] >= cap || used[j] >= cap || !(uniform_unit(engine) < density)) continue;
            if (side == Side::graph) g.add_edge(bag[i], bag[j]);
            else g.remove_edge(bag[i], bag[j]);
            ++used[i];
            ++used[j];
        }
}

/// Give u at most `cap` side-neighbours in `bag`.
inline void attach(Graph & g, Vertex u, const std::vector<Vertex> & bag, Side direction, std::size_t cap,
                   double density, Engine & engine)
{
    std::size_t used = 0;
    for (auto w : bag) {
        const bool hit = used < cap && uniform_unit(engine) < density;
        if (hit) ++used;
        const bool edge = (direction == Side::graph) == hit;
        if (edge) g.add_edge(u, w);
    }
}

} // namespace detail

struct LayerOptions
{
    double inner_density = 0.3; ///< chance of each allowed in-bag edge (or non-edge)
    double cross_density = 0.3; ///< chance of each allowed sparse-direction contact
};

struct PathInstance
{
    Graph graph;
    PathPartition partition;
};

/// A (k, eps)-path-partition with the given level sizes (k = sizes.size()-1),
/// built to the definition: level i is eps-restricted on level_sides[i], and
/// every vertex of a later level gets at most floor(eps/12 |W_i|) contacts on
/// directions[i]. Level sizes must shrink by a factor 12 as required.
inline auto path_partition_instance(const std::vector<std::size_t> & sizes, double eps,
                                    const std::vector<Side> & directions, const std::vector<Side> & level_sides,
                                    std::uint64_t seed, const LayerOptions & options = {}) -> PathInstance
{
    if (sizes.size() < 2) throw PreconditionViolated("need at least two levels");
    const auto k = sizes.size() - 1;
    if (directions.size() != k || level_sides.size() != sizes.size())
        throw PreconditionViolated("need k directions and k+1 level sides");
    std::size_t n = 0;
    for (auto s : sizes) n += s;
    std::size_t tail = 0;
    for (std::size_t i = k; i-- > 0;) {
        tail += sizes[i + 1];
        if (!at_most(static_cast<double>(tail), static_cast<double>(sizes[i]) / 12.0))
            throw PreconditionViolated("level " + std::to_string(i) + " is not 12 times its tail");
    }

    auto engine = make_engine(seed);
    PathInstance out{Graph(n), {{}, eps, directions}};
    std::vector<std::vector<Vertex>> members(k + 1);
    Vertex next = 0;
    for (std::size_t i = 0; i <= k; ++i)
        for (std::size_t j = 0; j < sizes[i]; ++j) members[i].push_back(next++);
    for (std::size_t i = 0; i <= k; ++i) {
        detail::fill_bag(out.graph, members[i], level_sides[i], floor_count(eps * static_cast<double>(sizes[i])),
                         options.inner_density, engine);
        out.partition.levels.push_back(VertexSet::from(n, members[i]));
    }
    for (std::size_t i = 0; i < k; ++i) {
        const auto cap = floor_count(eps / 12.0 * static_cast<double>(sizes[i]));
        for (std::size_t j = i + 1; j <= k; ++j)
            for (auto u : members[j])
                detail::attach(out.graph, u, members[i], directions[i], cap, options.cross_density, engine);
    }
    return out;
}

struct TreeInstance
{
    Graph graph;
    TreePartition partition;
};

/// A tree-partition over the given parent links and bag sizes, built the same
/// way: restricted bags, and descendants limited to eps/12 contacts on the
/// node's direction. Pairs of bags with no ancestor relation get random
/// edges at cross_density.
inline auto tree_partition_instance(const std::vector<Vertex> & parents, const std::vector<std::size_t> & sizes,
                                    std::size_t h, std::size_t ell, double eps, double eta,
                                    const std::vector<Side> & directions, const std::vector<Side> & bag_sides,
                                    std::uint64_t seed, const LayerOptions & options = {}) -> TreeInstance
{
    auto tree = RootedTree::from_parents(parents);
    const auto nodes = tree.size();
    if (sizes.size() != nodes || directions.size() != nodes || bag_sides.size() != nodes)
        throw PreconditionViolated("need one size, direction and bag side per node");
    std::size_t n = 0;
    for (auto s : sizes) n += s;

    auto engine = make_engine(seed);
    std::vector<std::vector<Vertex>> members(nodes);
    Vertex next = 0;
    for (auto t : tree.bfs_order())
        for (std::size_t j = 0; j < sizes[t]; ++j) members[t].push_back(next++);

    TreeInstance out{Graph(n), {tree, {}, h, ell, eps, eta, directions}};
    for (Vertex t = 0; t < nodes; ++t) {
        detail::fill_bag(out.graph, members[t], bag_sides[t], floor_count(eps * static_cast<double>(sizes[t])),
                         options.inner_density, engine);
        out.partition.bags.push_back(VertexSet::from(n, members[t]));
    }
    for (Vertex t = 0; t < nodes; ++t) {
        const auto cap = floor_count(eps / 12.0 * static_cast<double>(sizes[t]));
        for (auto s : tree.descendants(t))
            for (auto u : members[s])
                detail::attach(out.graph, u, members[t], directions[t], cap, options.cross_density, engine);
    }
    for (Vertex t = 0; t < nodes; ++t)
        for (Vertex s = t + 1; s < nodes; ++s) {
            const auto above = tree.path_from_root(s);
            const auto below = tree.path_from_root(t);
            if (std::find(above.begin(), above.end(), t) != above.end()) continue;
            if (std::find(below.begin(), below.end(), s) != below.end()) continue;
            for (auto u : members[t])
                for (auto v : members[s])
                    if (uniform_unit(engine) < options.cross_density) out.graph.add_edge(u, v);
        }
    return out;
}

// ---------------------------------------------------------------------------
// Block systems

struct BlockInstance
{
    Graph graph;
    BlockSystem system;
    std::size_t attempts = 0;
};

/// Blocks of the given size matching `pattern`: complete between blocks of
/// adjacent pattern vertices and empty otherwise, then each cross pair is
/// flipped with probability `noise`. Draws are repeated until every block
/// pair is confirmed (eps^|H|, eps)-full or empty by the exact checker.
inline auto block_system_instance(const Graph & pattern, std::size_t block_size, double eps, double noise,
                                  double inner_density, std::uint64_t seed, std::size_t max_attempts = 1000)
    -> BlockInstance
{
    const auto h = pattern.size();
    if (h == 0 || block_size == 0) throw PreconditionViolated("need a nonempty pattern and blocks");
    const auto n = h * block_size;
    const double c = std::pow(eps, static_cast<double>(h));
    auto engine = make_engine(seed);
    for (std::size_t attempt = 1; attempt <= max_attempts; ++attempt) {
        BlockInstance out{Graph(n), {pattern, {}, eps}, attempt};
        for (std::size_t b = 0; b < h; ++b) {
            std::vector<Vertex> members;
            for (std::size_t j = 0; j < block_size; ++j) members.push_back(static_cast<Vertex>(b * block_size + j));
            out.system.blocks.push_back(VertexSet::from(n, members));
            for (std::size_t i = 0; i < members.size(); ++i)
                for (std::size_t j = i + 1; j < members.size(); ++j)
                    if (uniform_unit(engine) < inner_density) out.graph.add_edge(members[i], members[j]);
        }
        for (std::size_t a = 0; a < h; ++a)
            for (std::size_t b = a + 1; b < h; ++b)
                for (auto u : out.system.blocks[a])
                    for (auto v : out.system.blocks[b]) {
                        const bool flip = uniform_unit(engine) < noise;
                        if (pattern.adjacent(a, b) != flip) out.graph.add_edge(u, v);
                    }
        bool confirmed = true;
        for (std::size_t a = 0; a < h && confirmed; ++a)
            for (std::size_t b = a + 1; b < h && confirmed; ++b) {
                const auto side = pattern.adjacent(a, b) ? Side::graph : Side::complement;
                confirmed = is_full_pair_exact(out.graph, out.system.blocks[a], out.system.blocks[b], c, eps, side);
            }
        if (confirmed) return out;
    }
    throw RetryExhausted(max_attempts);
}

} // namespace restrictor
