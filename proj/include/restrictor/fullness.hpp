#pragma once

#include "restrictor/graph.hpp"
#include "restrictor/numeric.hpp"
#include "restrictor/rng.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace restrictor {

// (A, B) is (c, eps)-full if every A' ⊆ A, B' ⊆ B with |A'| >= c|A| and
// |B'| >= c|B| spans at least eps|A'||B'| edges; (c, eps)-empty is the same
// statement in the complement.
//
// Exact checking enumerates only A' of the minimum admissible size and takes
// B' greedily as the min-size set of B-vertices with fewest edges to A'.
// This loses nothing: deleting a highest-degree row from a violating pair
// never raises its density, so a violation exists iff one exists at minimum
// sizes, and for fixed A' and |B'| the greedy B' minimises the edge count.

struct FullnessOptions
{
    /// Enumeration is allowed while C(size, k) on the cheaper side stays
    /// within C(exact_cap, exact_cap / 2); every |A| <= exact_cap qualifies.
    std::size_t exact_cap = 20;
};

struct SubPair
{
    VertexSet a;
    VertexSet b;
};

/// Smallest admissible |A'| for a block of `size` vertices: ceil(c * size),
/// at least 1 (the empty sub-pair never violates).
inline auto min_subset_size(double c, std::size_t size) -> std::size_t
{
    return std::clamp<std::size_t>(ceil_count(c * static_cast<double>(size)), 1, std::max<std::size_t>(size, 1));
}

inline auto exact_check_cost(std::size_t a_size, std::size_t b_size, double c) -> double
{
    return std::min(binomial(a_size, min_subset_size(c, a_size)), binomial(b_size, min_subset_size(c, b_size)));
}

inline auto exact_check_feasible(std::size_t a_size, std::size_t b_size, double c, const FullnessOptions & options = {})
    -> bool
{
    return exact_check_cost(a_size, b_size, c) <= binomial(options.exact_cap, options.exact_cap / 2);
}

namespace detail {

inline void check_pair_arguments(const Graph & g, const VertexSet & a, const VertexSet & b, std::string_view what)
{
    if (a.universe() != g.size() || b.universe() != g.size())
        throw PreconditionViolated(std::string(what) + ": universe does not match graph");
    require_disjoint(a, b, what);
    if (a.empty() || b.empty()) throw PreconditionViolated(std::string(what) + ": both sides must be nonempty");
}

/// For a fixed A' (`chosen`, of size `chosen_size`), the `take` members of
/// `others` with fewest side-neighbours in A' (ties by id), and their total.
inline auto fewest_edges_to(const Graph & g, const VertexSet & chosen, std::size_t chosen_size,
                            const std::vector<Vertex> & others, std::size_t take, Side side)
    -> std::pair<std::vector<Vertex>, std::size_t>
{
    std::vector<std::pair<std::size_t, Vertex>> scored;
    scored.reserve(others.size());
    for (auto v : others) scored.emplace_back(g.neighbours_in(v, chosen, side, chosen_size), v);
    std::partial_sort(scored.begin(), scored.begin() + static_cast<std::ptrdiff_t>(take), scored.end());
    std::vector<Vertex> picked;
    std::size_t total = 0;
    for (std::size_t i = 0; i < take; ++i) {
        picked.push_back(scored[i].second);
        total += scored[i].first;
    }
    return {std::move(picked), total};
}

/// Advance `idx` (strictly increasing indices into [0, n)) to the next
/// combination in lexicographic order; false when exhausted.
inline auto next_combination(std::vector<std::size_t> & idx, std::size_t n) -> bool
{
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace detail

/// A violating sub-pair (A', B') of minimum admissible sizes, or nullopt if
/// (a, b) is (c, eps)-full on `side`. Throws CapExceeded past the cap.
inline auto find_fullness_violation(const Graph & g, const VertexSet & a, const VertexSet & b, double c, double eps,
                                    Side side, const FullnessOptions & options = {}) -> std::optional<SubPair>
{
    detail::check_pair_arguments(g, a, b, "fullness check");
    const auto a_size = a.count(), b_size = b.count();
    if (!exact_check_feasible(a_size, b_size, c, options))
        throw CapExceeded("|A| = " + std::to_string(a_size) + ", |B| = " + std::to_string(b_size) +
                          "; use sampled refutation instead");

    // Fullness is symmetric in (A, B); enumerate whichever side is cheaper.
    const bool swap = binomial(b_size, min_subset_size(c, b_size)) < binomial(a_size, min_subset_size(c, a_size));
    const VertexSet & enum_side = swap ? b : a;
    const VertexSet & greedy_side = swap ? a : b;
    const auto members = enum_side.to_vector();
    const auto others = greedy_side.to_vector();
    const auto k_enum = min_subset_size(c, members.size());
    const auto k_greedy = min_subset_size(c, others.size());
    const double threshold = eps * static_cast<double>(k_enum) * static_cast<double>(k_greedy);

    std::vector<std::size_t> idx(k_enum);
    std::iota(idx.begin(), idx.end(), 0);
    VertexSet chosen(g.size());
    do {
        chosen.clear();
        for (auto i : idx) chosen.insert(members[i]);
        auto [picked, total] = detail::fewest_edges_to(g, chosen, k_enum, others, k_greedy, side);
        if (strictly_less(static_cast<double>(total), threshold)) {
            auto other = VertexSet::from(g.size(), picked);
            return swap ? SubPair{std::move(other), chosen} : SubPair{chosen, std::move(other)};
        }
    } while (detail::next_combination(idx, members.size()));
    return std::nullopt;
}

inline auto is_full_pair_exact(const Graph & g, const VertexSet & a, const VertexSet & b, double c, double eps,
                               Side side, const FullnessOptions & options = {}) -> bool
{
    return !find_fullness_violation(g, a, b, c, eps, side, options).has_value();
}

/// Randomised search for a violation when exact enumeration is too large:
/// random minimum-size A' (from both sides) with greedy B', plus the
/// lowest-degree A' as a deterministic first probe. Finding nothing is
/// evidence, not proof.
inline auto sample_fullness_violation(const Graph & g, const VertexSet & a, const VertexSet & b, double c, double eps,
                                      Side side, Engine & engine, std::size_t samples) -> std::optional<SubPair>
{
    detail::check_pair_arguments(g, a, b, "sampled fullness check");
    for (int pass = 0; pass < 2; ++pass) {
        const bool swap = pass == 1;
        const auto members = (swap ? b : a).to_vector();
        const auto others = (swap ? a : b).to_vector();
        const auto k_enum = min_subset_size(c, members.size());
        const auto k_greedy = min_subset_size(c, others.size());
        const double threshold = eps * static_cast<double>(k_enum) * static_cast<double>(k_greedy);
        const VertexSet & opposite_block = swap ? a : b;

        auto probe = [&](const VertexSet & chosen) -> std::optional<SubPair> {
            auto [picked, total] = detail::fewest_edges_to(g, chosen, k_enum, others, k_greedy, side);
            if (!strictly_less(static_cast<double>(total), threshold)) return std::nullopt;
            auto other = VertexSet::from(g.size(), picked);
            return swap ? SubPair{std::move(other), chosen} : SubPair{chosen, std::move(other)};
        };

        {
            std::vector<std::pair<std::size_t, Vertex>> by_degree;
            const auto opposite_size = opposite_block.count();
            for (auto v : members) by_degree.emplace_back(g.neighbours_in(v, opposite_block, side, opposite_size), v);
            std::sort(by_degree.begin(), by_degree.end());
            VertexSet chosen(g.size());
            for (std::size_t i = 0; i < k_enum; ++i) chosen.insert(by_degree[i].second);
            if (auto hit = probe(chosen)) return hit;
        }

        std::vector<Vertex> pool = members;
        for (std::size_t s = 0; s < samples; ++s) {
            // Partial Fisher-Yates for a uniform k_enum-subset.
            for (std::size_t i = 0; i < k_enum; ++i) {
                auto j = i + static_cast<std::size_t>(uniform_below(engine, pool.size() - i));
                std::swap(pool[i], pool[j]);
            }
            VertexSet chosen(g.size());
            for (std::size_t i = 0; i < k_enum; ++i) chosen.insert(pool[i]);
            if (auto hit = probe(chosen)) return hit;
        }
    }
    return std::nullopt;
}

} // namespace restrictor
