#pragma once

#include "restrictor/main_lemma.hpp"
#include "restrictor/partitions.hpp"

#include <cmath>
#include <variant>
#include <vector>

namespace restrictor {

struct SmallTreeResult
{
    PartitionCertificate certificate;
    std::size_t lemma_runs = 0;
    /// Largest C-set count of any lemma run (stands in for N).
    std::size_t achieved_n = 0;
    std::size_t standalone = 0; ///< C-sets emitted while growing the tree
    double bound = 0.0;
};

using SmallTreeOutcome = std::variant<SmallTreeResult, InducedCopy>;

/// (K - k) h^K N + 9218 h^K eps^-2.
inline auto small_tree_bound(std::size_t h, std::size_t big_k, std::size_t k, double n, double eps) -> double
{
    const double hk = std::pow(static_cast<double>(h), static_cast<double>(big_k));
    return static_cast<double>(big_k - k) * hk * n + tree_cover_bound(h, big_k, eps, 9218.0);
}

namespace detail {

/// Replace every depth-ell leaf s by the pairs the main lemma finds in
/// bag(s): each pair (A, B) becomes a node with bag A under parent(s) and a
/// child with bag B. C-sets leave the tree.
struct GrowStep
{
    TreePartition tree;
    std::vector<Part> c_sets;
    std::size_t lemma_runs = 0;
    std::size_t max_n = 0;
};

inline auto grow_tree(const Graph & g, const TreePartition & tp, const Graph & pattern, double lemma_eps,
                      double lemma_theta, const LemmaConfig & config, std::uint64_t seed)
    -> std::variant<GrowStep, InducedCopy>
{
    const auto & tree = tp.tree;
    GrowStep step;
    std::vector<Vertex> parents;
    std::vector<VertexSet> bags;
    std::vector<Side> directions;
    std::vector<Vertex> relabel(tree.size(), no_vertex);

    auto add_node = [&](Vertex parent, VertexSet bag, Side side) {
        parents.push_back(parent);
        bags.push_back(std::move(bag));
        directions.push_back(side);
        return static_cast<Vertex>(parents.size() - 1);
    };

    for (auto t : tree.bfs_order()) {
        const bool expand = tree.children(t).empty() && tree.depth(t) == tp.ell;
        const auto parent = tree.parent(t) == no_vertex ? no_vertex : relabel[tree.parent(t)];
        if (!expand) {
            relabel[t] = add_node(parent, tp.bags[t], tp.directions[t]);
            continue;
        }
        if (parent == no_vertex) throw PreconditionViolated("cannot grow a tree whose only node is a leaf");
        ++step.lemma_runs;
        auto outcome = main_lemma_partition(g, pattern, lemma_eps, tp.eta, lemma_theta, config, derive_seed(seed, t),
                                            tp.bags[t]);
        if (auto * copy = std::get_if<InducedCopy>(&outcome)) return std::move(*copy);
        auto & lemma = std::get<LemmaPartition>(outcome);
        step.max_n = std::max(step.max_n, lemma.c_sets.size());
        for (auto & c : lemma.c_sets) step.c_sets.push_back(std::move(c));
        for (auto & pair : lemma.pairs) {
            const auto node = add_node(parent, std::move(pair.a), pair.side);
            add_node(node, std::move(pair.b), Side::graph);
        }
    }

    step.tree = TreePartition{RootedTree::from_parents(std::move(parents)), std::move(bags), tp.h, tp.ell + 1,
                              tp.eps, tp.eta, std::move(directions)};
    return step;
}

} // namespace detail

/// Grow a (h, k)-tree-partition to depth K = ceil(2/eps) by running the main
/// lemma on its deepest bags, then cover the result. h must be |H|^2.
inline auto cover_small_tree(const Graph & g, const TreePartition & tp, const Graph & pattern, double eps,
                             const LemmaConfig & config, std::uint64_t seed, const VertexSet & ground,
                             const CoverPathOptions & options = {}) -> SmallTreeOutcome
{
    if (!(eps > 0.0 && at_most(eps, 1.0))) throw PreconditionViolated("cover_small_tree needs 0 < eps <= 1");
    const auto big_k = ceil_count(2.0 / eps);
    const auto h = pattern.size() * pattern.size();
    if (tp.h != h) throw PreconditionViolated("tree-partition h must be |H|^2");
    if (tp.ell > big_k) throw PreconditionViolated("tree-partition deeper than K = ceil(2/eps)");
    const double hk = std::pow(static_cast<double>(h), static_cast<double>(big_k));
    const double lemma_eps = eps / (4.0 * hk);
    const double lemma_theta = eps / (48.0 * hk);
    if (auto report = validate_tree_partition(g, tp, ground); !report.ok())
        throw PreconditionViolated("invalid tree-partition: " + report.first()->clause + ": " + report.first()->detail);

    SmallTreeResult out;
    const auto start = tp.ell;
    TreePartition current = tp;
    std::vector<Part> loose;
    VertexSet tree_ground = ground;
    while (current.ell < big_k) {
        auto grown = detail::grow_tree(g, current, pattern, lemma_eps, lemma_theta, config,
                                       derive_seed(seed, current.ell));
        if (auto * copy = std::get_if<InducedCopy>(&grown)) return std::move(*copy);
        auto & step = std::get<detail::GrowStep>(grown);
        out.lemma_runs += step.lemma_runs;
        out.achieved_n = std::max(out.achieved_n, step.max_n);
        for (auto & c : step.c_sets) {
            tree_ground -= c.vertices;
            loose.push_back(std::move(c));
        }
        current = std::move(step.tree);
        if (auto report = validate_tree_partition(g, current, tree_ground); !report.ok())
            throw ValidationFailed("grown tree-partition is invalid: " + report.first()->clause + ": " +
                                   report.first()->detail);
    }

    auto covered = cover_tree(g, current, eps, derive_seed(seed, big_k + 1), tree_ground, options);
    out.certificate.eps = eps;
    out.standalone = loose.size();
    for (auto & c : loose) {
        // Lemma C-sets are restricted at a far smaller level; record the side
        // that certifies them at eps.
        auto part = restricted_part(g, c.vertices, eps);
        if (!part) throw ValidationFailed("a main-lemma C-set is not eps-restricted");
        out.certificate.parts.push_back(std::move(*part));
    }
    for (auto & part : covered.certificate.parts) out.certificate.parts.push_back(std::move(part));
    out.bound = small_tree_bound(h, big_k, start, static_cast<double>(out.achieved_n), eps);
    if (static_cast<double>(out.certificate.parts.size()) > out.bound)
        throw std::logic_error("cover_small_tree exceeded its part bound");
    return out;
}

} // namespace restrictor
