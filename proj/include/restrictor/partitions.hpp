#pragma once

#include "restrictor/certificate.hpp"
#include "restrictor/covering.hpp"
#include "restrictor/graph.hpp"
#include "restrictor/numeric.hpp"
#include "restrictor/predicates.hpp"
#include "restrictor/rng.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

namespace restrictor {

struct ClauseViolation
{
    std::string clause;
    std::optional<std::size_t> index; ///< level or tree node
    std::string detail;
};

struct ValidationReport
{
    std::vector<ClauseViolation> violations;

    auto ok() const -> bool { return violations.empty(); }
    auto first() const -> const ClauseViolation * { return violations.empty() ? nullptr : &violations.front(); }

    void add(std::string clause, std::optional<std::size_t> index, std::string detail)
    {
        violations.push_back({std::move(clause), index, std::move(detail)});
    }
};

namespace detail {

/// Shared disjoint/cover check for the level and bag families.
inline void check_family(const Graph & g, const std::vector<VertexSet> & family, const VertexSet & ground,
                         bool require_nonempty, ValidationReport & report)
{
    VertexSet seen(g.size());
    for (std::size_t i = 0; i < family.size(); ++i) {
        const auto & set = family[i];
        if (set.universe() != g.size()) {
            report.add("universe", i, "set is not over the graph's vertex range");
            continue;
        }
        if (require_nonempty && set.empty()) report.add("nonempty", i, "set is empty");
        if (set.intersects(seen)) report.add("disjoint", i, "set overlaps an earlier one");
        if (!set.is_subset_of(ground)) report.add("union", i, "set leaves the ground set");
        seen |= set;
    }
    if (seen.universe() == ground.universe() && !(ground - seen).empty())
        report.add("union", std::nullopt, std::to_string((ground - seen).count()) + " ground vertices uncovered");
}

inline auto union_of(std::size_t universe, const std::vector<VertexSet> & family) -> VertexSet
{
    VertexSet out(universe);
    for (const auto & set : family) out |= set;
    return out;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Path-partitions

/// Levels W_0..W_k. directions[i] (i < k) records whether W_{i+1} ∪ ... ∪ W_k
/// is eps/12-sparse (graph) or eps/12-dense (complement) to W_i.
struct PathPartition
{
    std::vector<VertexSet> levels;
    double eps = 0.0;
    std::vector<Side> directions;

    auto k() const -> std::size_t { return levels.empty() ? 0 : levels.size() - 1; }
};

inline auto validate_path_partition(const Graph & g, const PathPartition & pp, const VertexSet & ground)
    -> ValidationReport
{
    ValidationReport report;
    if (pp.levels.size() < 2) {
        report.add("shape", std::nullopt, "a path-partition needs k >= 1");
        return report;
    }
    const auto k = pp.k();
    if (pp.directions.size() != k) {
        report.add("shape", std::nullopt, "need one direction per level below k");
        return report;
    }
    detail::check_family(g, pp.levels, ground, false, report);
    if (!report.ok()) return report;

    VertexSet rest(g.size());
    std::vector<VertexSet> tails(k + 1, VertexSet(g.size()));
    for (std::size_t i = k; i-- > 0;) {
        rest |= pp.levels[i + 1];
        tails[i] = rest;
    }
    for (std::size_t i = 0; i < k; ++i) {
        const auto & w = pp.levels[i];
        const auto & tail = tails[i];
        if (!is_restricted(g, w, pp.eps)) report.add("restricted", i, "level is not eps-restricted");
        if (!at_most(static_cast<double>(tail.count()), static_cast<double>(w.count()) / 12.0))
            report.add("cardinality", i,
                       "|later levels| = " + std::to_string(tail.count()) + " exceeds |W_i|/12 with |W_i| = " +
                           std::to_string(w.count()));
        else if (!is_sparse_to(g, tail, w, pp.eps / 12.0, pp.directions[i]))
            report.add("sparse-dense", i,
                       "later levels are not eps/12-" +
                           std::string(pp.directions[i] == Side::graph ? "sparse" : "dense") + " to the level");
    }
    return report;
}

inline auto validate_path_partition(const Graph & g, const PathPartition & pp) -> ValidationReport
{
    return validate_path_partition(g, pp, g.vertices());
}

inline auto cover_path_bound(double eps) -> std::size_t { return ceil_count(9217.0 / (eps * eps)); }

struct CoverChain
{
    std::vector<VertexSet> sets; ///< C_0..C_k, each of size p
    std::size_t attempts = 0;    ///< total sampling attempts over all levels
};

/// C_k = W_k, then for i = k-1..0 a covering set C_i ⊆ W_i of size p against
/// B = C_{i+1} ∪ ... ∪ C_k on the level's side.
inline auto build_cover_chain(const Graph & g, const std::vector<VertexSet> & levels,
                              const std::vector<Side> & directions, double eps_prime, std::uint64_t seed,
                              std::size_t retry_cap) -> CoverChain
{
    if (levels.size() < 2 || directions.size() + 1 != levels.size())
        throw PreconditionViolated("cover chain needs levels W_0..W_k with one direction per level below k");
    const auto k = levels.size() - 1;
    const auto p = levels[k].count();
    CoverChain chain;
    chain.sets.assign(k + 1, VertexSet(g.size()));
    chain.sets[k] = levels[k];
    VertexSet b = levels[k];
    for (std::size_t i = k; i-- > 0;) {
        CoverRequest req{levels[i], b, eps_prime, p, directions[i], derive_seed(seed, i), retry_cap};
        auto result = find_cover_set(g, req);
        chain.attempts += result.attempts;
        chain.sets[i] = std::move(result.p_set);
        b |= chain.sets[i];
    }
    return chain;
}

/// Indices below k sharing the majority direction (ties: sparse).
inline auto majority_levels(const std::vector<Side> & directions) -> std::pair<std::vector<std::size_t>, Side>
{
    const auto sparse = static_cast<std::size_t>(std::count(directions.begin(), directions.end(), Side::graph));
    const auto side = 2 * sparse >= directions.size() ? Side::graph : Side::complement;
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < directions.size(); ++i)
        if (directions[i] == side) chosen.push_back(i);
    return {std::move(chosen), side};
}

/// The candidate parts from a chain: W_i off the majority, W_i \ C_i on it,
/// and C = the union of C_i over the majority and k. Empty sets are dropped.
inline auto assemble_cover(const std::vector<VertexSet> & levels, const std::vector<Side> & directions,
                           const CoverChain & chain) -> std::vector<VertexSet>
{
    const auto k = levels.size() - 1;
    const auto chosen = majority_levels(directions).first;
    std::vector<bool> in_majority(k, false);
    for (auto i : chosen) in_majority[i] = true;
    std::vector<VertexSet> parts;
    VertexSet c = chain.sets[k];
    for (std::size_t i = 0; i < k; ++i) {
        if (in_majority[i]) {
            parts.push_back(levels[i] - chain.sets[i]);
            c |= chain.sets[i];
        } else {
            parts.push_back(levels[i]);
        }
    }
    parts.push_back(std::move(c));
    std::erase_if(parts, [](const VertexSet & s) { return s.empty(); });
    return parts;
}

struct CoverPathOptions
{
    std::size_t retry_cap = 1000;
    /// Rounds of internal eps halving when an assembled part fails.
    std::size_t fallback_rounds = 3;
    /// Require k = ceil(2/eps) as in the statement; tests of the chain
    /// mechanics at desk scale switch this off.
    bool enforce_level_count = true;
};

struct CoverPathResult
{
    PartitionCertificate certificate;
    int branch = 1;             ///< 1: singletons of W_k; 2: covering chain
    std::size_t p = 0;          ///< |W_k|
    std::size_t attempts = 0;   ///< covering attempts over the accepted chain
    std::size_t fallback_rounds = 0;
    std::size_t bound = 0;      ///< ceil(9217 / eps^2)
};

namespace detail {

inline auto certify_parts(const Graph & g, const std::vector<VertexSet> & sets, double eps)
    -> std::optional<std::vector<Part>>
{
    std::vector<Part> parts;
    for (const auto & s : sets) {
        auto part = restricted_part(g, s, eps);
        if (!part) return std::nullopt;
        parts.push_back(std::move(*part));
    }
    return parts;
}

inline auto branch_one_sets(const PathPartition & pp, std::size_t universe) -> std::vector<VertexSet>
{
    std::vector<VertexSet> sets;
    const auto k = pp.k();
    for (std::size_t i = 0; i < k; ++i)
        if (!pp.levels[i].empty()) sets.push_back(pp.levels[i]);
    for (auto v : pp.levels[k]) sets.push_back(VertexSet(universe, {v}));
    return sets;
}

} // namespace detail

/// Partition the union of a (k, eps/2)-path-partition into eps-restricted
/// sets: keep the levels and split W_k into singletons when W_k is too small
/// for covering (or empty), else cover the levels by a chain of size-p sets.
inline auto cover_path(const Graph & g, const PathPartition & pp, double eps, std::uint64_t seed,
                       const CoverPathOptions & options = {}) -> CoverPathResult
{
    if (!(eps > 0.0 && at_most(eps, 1.0))) throw PreconditionViolated("cover_path needs 0 < eps <= 1");
    if (!at_most(pp.eps, eps / 2.0)) throw PreconditionViolated("cover_path needs a (k, eps/2)-path-partition");
    const auto ground = detail::union_of(g.size(), pp.levels);
    if (auto report = validate_path_partition(g, pp, ground); !report.ok())
        throw PreconditionViolated("invalid path-partition: " + report.first()->clause + ": " + report.first()->detail);
    const auto k = pp.k();
    if (options.enforce_level_count && k != ceil_count(2.0 / eps))
        throw PreconditionViolated("cover_path needs k = ceil(2/eps) = " + std::to_string(ceil_count(2.0 / eps)));

    CoverPathResult out;
    out.certificate.eps = eps;
    out.p = pp.levels[k].count();
    out.bound = cover_path_bound(eps);
    const double p = static_cast<double>(out.p);

    auto branch_one = [&](double eps_prime) {
        return out.p == 0 || std::log(2.0 * static_cast<double>(k) * p) > eps_prime * p;
    };
    auto finish = [&](std::vector<Part> parts) {
        out.certificate.parts = std::move(parts);
        if (out.certificate.parts.size() > out.bound)
            throw std::logic_error("cover_path exceeded its part bound");
        return out;
    };

    if (branch_one(eps / 24.0)) {
        if (out.p > 0 && static_cast<double>(k) <= 4.0 / eps + kSlack && !(p < 815.0 / (eps * eps)))
            throw std::logic_error("cover_path: singleton branch with p >= 815/eps^2");
        out.branch = 1;
        auto parts = detail::certify_parts(g, detail::branch_one_sets(pp, g.size()), eps);
        if (!parts) throw ValidationFailed("a level of the path-partition is not eps-restricted");
        return finish(std::move(*parts));
    }

    out.branch = 2;
    std::string last_failure;
    double internal_eps = eps;
    for (std::size_t round = 0; round <= options.fallback_rounds; ++round, internal_eps /= 2.0) {
        out.fallback_rounds = round;
        const double eps_prime = internal_eps / 24.0;
        if (round > 0 && branch_one(eps_prime)) {
            auto sets = detail::branch_one_sets(pp, g.size());
            auto parts = detail::certify_parts(g, sets, eps);
            if (parts && parts->size() <= out.bound) {
                out.branch = 1;
                return finish(std::move(*parts));
            }
            last_failure = "singleton fallback exceeds the part bound";
            break;
        }
        CoverChain chain;
        try {
            chain = build_cover_chain(g, pp.levels, pp.directions, eps_prime, derive_seed(seed, round),
                                      options.retry_cap);
        } catch (const PreconditionViolated & e) {
            // Only reachable once eps has been halved below the input's sparsity.
            if (round == 0) throw;
            last_failure = e.what();
            continue;
        }
        out.attempts = chain.attempts;
        const auto sets = assemble_cover(pp.levels, pp.directions, chain);
        if (auto parts = detail::certify_parts(g, sets, eps)) return finish(std::move(*parts));
        last_failure = "covering union C is not eps-restricted at internal eps " + std::to_string(internal_eps);
    }
    throw ValidationFailed("cover_path could not certify its output: " + last_failure);
}

// ---------------------------------------------------------------------------
// Rooted trees and tree-partitions

class RootedTree
{
public:
    RootedTree() = default;

    /// parents[t] is t's parent, or no_vertex for the root.
    static auto from_parents(std::vector<Vertex> parents) -> RootedTree
    {
        RootedTree t;
        const auto n = parents.size();
        if (n == 0) throw PreconditionViolated("a rooted tree needs at least one node");
        t.parent_ = std::move(parents);
        t.children_.assign(n, {});
        t.depth_.assign(n, 0);
        for (Vertex v = 0; v < n; ++v) {
            const auto p = t.parent_[v];
            if (p == no_vertex) {
                if (t.root_ != no_vertex) throw PreconditionViolated("tree has more than one root");
                t.root_ = v;
            } else {
                if (p >= n || p == v) throw PreconditionViolated("bad parent link at node " + std::to_string(v));
                t.children_[p].push_back(v);
            }
        }
        if (t.root_ == no_vertex) throw PreconditionViolated("tree has no root");
        // Depths by BFS from the root; unreached nodes mean a cycle.
        std::vector<bool> reached(n, false);
        std::vector<Vertex> queue{t.root_};
        reached[t.root_] = true;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const auto v = queue[head];
            for (auto c : t.children_[v]) {
                t.depth_[c] = t.depth_[v] + 1;
                reached[c] = true;
                queue.push_back(c);
            }
        }
        if (queue.size() != n) throw PreconditionViolated("parent links contain a cycle");
        t.order_ = std::move(queue);
        return t;
    }

    auto size() const -> std::size_t { return parent_.size(); }
    auto root() const -> Vertex { return root_; }
    auto parent(Vertex t) const -> Vertex { return parent_[t]; }
    auto parents() const -> const std::vector<Vertex> & { return parent_; }
    auto children(Vertex t) const -> const std::vector<Vertex> & { return children_[t]; }
    auto depth(Vertex t) const -> std::size_t { return depth_[t]; }
    /// Nodes in BFS order from the root.
    auto bfs_order() const -> const std::vector<Vertex> & { return order_; }

    auto height() const -> std::size_t { return depth_.empty() ? 0 : *std::max_element(depth_.begin(), depth_.end()); }

    /// Proper descendants of t.
    auto descendants(Vertex t) const -> std::vector<Vertex>
    {
        std::vector<Vertex> out;
        std::vector<Vertex> stack(children_[t].rbegin(), children_[t].rend());
        while (!stack.empty()) {
            const auto v = stack.back();
            stack.pop_back();
            out.push_back(v);
            for (auto it = children_[v].rbegin(); it != children_[v].rend(); ++it) stack.push_back(*it);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    /// Nodes s with t on the root-s path (t included) at depth `level`.
    auto descendants_at_depth(Vertex t, std::size_t level) const -> std::vector<Vertex>
    {
        std::vector<Vertex> out;
        if (depth_[t] == level) out.push_back(t);
        for (auto s : descendants(t))
            if (depth_[s] == level) out.push_back(s);
        std::sort(out.begin(), out.end());
        return out;
    }

    /// Root-to-t path, root first.
    auto path_from_root(Vertex t) const -> std::vector<Vertex>
    {
        std::vector<Vertex> out;
        for (auto v = t; v != no_vertex; v = parent_[v]) out.push_back(v);
        std::reverse(out.begin(), out.end());
        return out;
    }

private:
    std::vector<Vertex> parent_;
    std::vector<std::vector<Vertex>> children_;
    std::vector<std::size_t> depth_;
    std::vector<Vertex> order_;
    Vertex root_ = no_vertex;
};

/// (h, ell, eps, eta)-tree-partition. directions[t] records whether the
/// union of t's proper descendants' bags is eps/12-sparse (graph) or
/// eps/12-dense (complement) to bag(t).
struct TreePartition
{
    RootedTree tree;
    std::vector<VertexSet> bags;
    std::size_t h = 1;
    std::size_t ell = 1;
    double eps = 0.0;
    double eta = 0.0;
    std::vector<Side> directions;
};

inline auto descendant_union(const TreePartition & tp, Vertex t, std::size_t universe) -> VertexSet
{
    VertexSet out(universe);
    for (auto s : tp.tree.descendants(t)) out |= tp.bags[s];
    return out;
}

inline auto validate_tree_partition(const Graph & g, const TreePartition & tp, const VertexSet & ground)
    -> ValidationReport
{
    ValidationReport report;
    const auto & tree = tp.tree;
    if (tree.size() == 0 || tp.bags.size() != tree.size() || tp.directions.size() != tree.size()) {
        report.add("shape", std::nullopt, "need one bag and one direction per tree node");
        return report;
    }
    for (Vertex t = 0; t < tree.size(); ++t) {
        if (tree.depth(t) > tp.ell)
            report.add("depth", t, "depth " + std::to_string(tree.depth(t)) + " exceeds ell");
        const auto kids = tree.children(t).size();
        if (kids > tp.h) report.add("children", t, std::to_string(kids) + " children exceed h");
        if (tree.depth(t) + 1 == tp.ell && kids > 1)
            report.add("children", t, "a node at depth ell-1 may have at most one child");
    }
    detail::check_family(g, tp.bags, ground, true, report);
    if (!report.ok()) return report;

    for (Vertex t = 0; t < tree.size(); ++t) {
        const auto & bag = tp.bags[t];
        if (tree.depth(t) < tp.ell && !is_restricted(g, bag, tp.eps))
            report.add("restricted", t, "bag is not eps-restricted");
        const auto below = descendant_union(tp, t, g.size());
        if (!at_most(static_cast<double>(below.count()), tp.eta * static_cast<double>(bag.count())))
            report.add("cardinality", t,
                       "descendant bags hold " + std::to_string(below.count()) + " vertices, above eta|W_t|");
        else if (!is_sparse_to(g, below, bag, tp.eps / 12.0, tp.directions[t]))
            report.add("sparse-dense", t, "descendant bags are not eps/12-sparse/dense as recorded");
    }
    return report;
}

inline auto validate_tree_partition(const Graph & g, const TreePartition & tp) -> ValidationReport
{
    return validate_tree_partition(g, tp, g.vertices());
}

/// Every root-leaf path has length ell.
inline auto is_tight(const TreePartition & tp) -> bool
{
    for (Vertex t = 0; t < tp.tree.size(); ++t)
        if (tp.tree.children(t).empty() && tp.tree.depth(t) != tp.ell) return false;
    return true;
}

/// Split bag(t) round-robin (id order) into one slice per deep descendant
/// s ∈ S(t), listed in increasing s.
struct BagSlices
{
    std::vector<Vertex> owners;
    std::vector<VertexSet> slices;
};

inline auto slice_bag(const VertexSet & bag, const std::vector<Vertex> & owners) -> BagSlices
{
    if (owners.empty()) throw PreconditionViolated("slicing a bag needs at least one owner");
    BagSlices out{owners, std::vector<VertexSet>(owners.size(), VertexSet(bag.universe()))};
    std::size_t next = 0;
    for (auto v : bag) {
        out.slices[next].insert(v);
        next = (next + 1) % owners.size();
    }
    return out;
}

inline auto tree_cover_bound(std::size_t h, std::size_t big_k, double eps, double constant) -> double
{
    return std::ceil(constant * std::pow(static_cast<double>(h), static_cast<double>(big_k)) / (eps * eps) - 1e-9);
}

struct TreeCoverResult
{
    PartitionCertificate certificate;
    std::size_t chains = 0;
    std::size_t standalone = 0;
    double bound = 0.0;
};

namespace detail {

inline void check_tree_cover_inputs(const Graph & g, const TreePartition & tp, double eps, const VertexSet & ground)
{
    if (!(eps > 0.0 && at_most(eps, 1.0))) throw PreconditionViolated("tree covering needs 0 < eps <= 1");
    const auto big_k = ceil_count(2.0 / eps);
    const double hk = std::pow(static_cast<double>(tp.h), static_cast<double>(big_k));
    if (tp.ell != big_k) throw PreconditionViolated("tree-partition depth must be K = ceil(2/eps)");
    if (!at_most(tp.eps, eps / (4.0 * hk))) throw PreconditionViolated("tree-partition eps must be <= eps/(4h^K)");
    if (!(tp.eta > 0.0 && at_most(tp.eta, 1.0 / (24.0 * hk))))
        throw PreconditionViolated("tree-partition eta must lie in (0, 1/(24h^K)]");
    if (auto report = validate_tree_partition(g, tp, ground); !report.ok())
        throw PreconditionViolated("invalid tree-partition: " + report.first()->clause + ": " + report.first()->detail);
}

} // namespace detail

/// Tight tree: slice every bag among its deep descendants and cover each
/// root-to-leaf chain of slices as a path-partition.
inline auto cover_tight_tree(const Graph & g, const TreePartition & tp, double eps, std::uint64_t seed,
                             const VertexSet & ground, const CoverPathOptions & options = {}) -> TreeCoverResult
{
    detail::check_tree_cover_inputs(g, tp, eps, ground);
    if (!is_tight(tp)) throw PreconditionViolated("cover_tight_tree needs a tight tree-partition");
    const auto big_k = tp.ell;
    const auto & tree = tp.tree;
    const double h = static_cast<double>(tp.h);

    std::vector<BagSlices> slices(tree.size());
    for (Vertex t = 0; t < tree.size(); ++t) {
        slices[t] = slice_bag(tp.bags[t], tree.descendants_at_depth(t, big_k));
        const double floor_size = static_cast<double>(tp.bags[t].count()) *
                                  std::pow(h, static_cast<double>(tree.depth(t)) - static_cast<double>(big_k)) / 2.0;
        for (const auto & s : slices[t].slices)
            if (!at_least(static_cast<double>(s.count()), floor_size))
                throw ValidationFailed("slice of node " + std::to_string(t) + " is below |W_t| h^(i-K) / 2");
    }

    TreeCoverResult out;
    out.certificate.eps = eps;
    out.bound = tree_cover_bound(tp.h, big_k, eps, 9217.0);
    for (auto s : tree.descendants_at_depth(tree.root(), big_k)) {
        PathPartition pp;
        pp.eps = eps / 2.0;
        for (auto t : tree.path_from_root(s)) {
            const auto & owners = slices[t].owners;
            const auto at = static_cast<std::size_t>(std::find(owners.begin(), owners.end(), s) - owners.begin());
            pp.levels.push_back(slices[t].slices[at]);
            if (t != s) pp.directions.push_back(tp.directions[t]);
        }
        const auto chain_ground = detail::union_of(g.size(), pp.levels);
        if (auto report = validate_path_partition(g, pp, chain_ground); !report.ok())
            throw ValidationFailed("chain to node " + std::to_string(s) + " is not a path-partition: " +
                                   report.first()->clause);
        auto covered = cover_path(g, pp, eps, derive_seed(seed, s), options);
        for (auto & part : covered.certificate.parts) out.certificate.parts.push_back(std::move(part));
        ++out.chains;
    }
    if (static_cast<double>(out.certificate.parts.size()) > out.bound)
        throw std::logic_error("cover_tight_tree exceeded its part bound");
    return out;
}

inline auto cover_tight_tree(const Graph & g, const TreePartition & tp, double eps, std::uint64_t seed,
                             const CoverPathOptions & options = {}) -> TreeCoverResult
{
    return cover_tight_tree(g, tp, eps, seed, g.vertices(), options);
}

/// Any tree of depth K: bags without deep descendants stand alone, the rest
/// form a tight tree.
inline auto cover_tree(const Graph & g, const TreePartition & tp, double eps, std::uint64_t seed,
                       const VertexSet & ground, const CoverPathOptions & options = {}) -> TreeCoverResult
{
    detail::check_tree_cover_inputs(g, tp, eps, ground);
    const auto big_k = tp.ell;
    const auto & tree = tp.tree;

    std::vector<Vertex> kept; // T' in BFS order, so parents precede children
    std::vector<Vertex> relabel(tree.size(), no_vertex);
    TreeCoverResult out;
    out.certificate.eps = eps;
    for (auto t : tree.bfs_order()) {
        if (tree.descendants_at_depth(t, big_k).empty()) {
            auto part = restricted_part(g, tp.bags[t], eps);
            if (!part) throw ValidationFailed("shallow bag " + std::to_string(t) + " is not eps-restricted");
            out.certificate.parts.push_back(std::move(*part));
            ++out.standalone;
        } else {
            relabel[t] = kept.size();
            kept.push_back(t);
        }
    }
    out.bound = tree_cover_bound(tp.h, big_k, eps, 9218.0);

    if (!kept.empty()) {
        std::vector<Vertex> parents(kept.size(), no_vertex);
        TreePartition tight{{}, {}, tp.h, tp.ell, tp.eps, tp.eta, {}};
        VertexSet tight_ground(g.size());
        for (std::size_t i = 0; i < kept.size(); ++i) {
            const auto t = kept[i];
            if (tree.parent(t) != no_vertex) parents[i] = relabel[tree.parent(t)];
            tight.bags.push_back(tp.bags[t]);
            tight.directions.push_back(tp.directions[t]);
            tight_ground |= tp.bags[t];
        }
        tight.tree = RootedTree::from_parents(std::move(parents));
        auto covered = cover_tight_tree(g, tight, eps, seed, tight_ground, options);
        out.chains = covered.chains;
        for (auto & part : covered.certificate.parts) out.certificate.parts.push_back(std::move(part));
    }
    if (static_cast<double>(out.certificate.parts.size()) > out.bound)
        throw std::logic_error("cover_tree exceeded its part bound");
    return out;
}

inline auto cover_tree(const Graph & g, const TreePartition & tp, double eps, std::uint64_t seed,
                       const CoverPathOptions & options = {}) -> TreeCoverResult
{
    return cover_tree(g, tp, eps, seed, g.vertices(), options);
}

} // namespace restrictor
