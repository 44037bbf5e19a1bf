#pragma once

#include "restrictor/certificate.hpp"
#include "restrictor/fullness.hpp"
#include "restrictor/graph.hpp"
#include "restrictor/numeric.hpp"
#include "restrictor/predicates.hpp"
#include "restrictor/rng.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <vector>

namespace restrictor {

enum class SearchMode
{
    greedy,
    exact
};

inline auto to_string(SearchMode mode) -> std::string_view { return mode == SearchMode::greedy ? "greedy" : "exact"; }

struct RestrictedSubset
{
    VertexSet vertices;
    Side side = Side::graph;
};

namespace detail {

inline auto side_degree_in(const Graph & g, Vertex v, const VertexSet & s, Side side, std::size_t s_size) -> std::size_t
{
    return g.neighbours_in(v, s, side, s_size);
}

/// Local search for an eps-restricted subset of x on one side.
inline auto grow_restricted(const Graph & g, const VertexSet & x, double eps, Side side) -> VertexSet
{
    const auto x_size = x.count();
    std::vector<std::size_t> degree_in_x(g.size(), 0);
    for (auto v : x) degree_in_x[v] = side_degree_in(g, v, x, side, x_size);

    VertexSet chosen(g.size());
    VertexSet candidates = x;
    while (!candidates.empty()) {
        const auto chosen_size = chosen.count();
        Vertex best = no_vertex;
        std::pair<std::size_t, std::size_t> best_key{};
        for (auto v : candidates) {
            std::pair<std::size_t, std::size_t> key{side_degree_in(g, v, chosen, side, chosen_size), degree_in_x[v]};
            if (best == no_vertex || key < best_key) {
                best = v;
                best_key = key;
            }
        }
        candidates.erase(best);
        chosen.insert(best);

        // Shed the worst vertex until the budget eps|S| holds again.
        for (;;) {
            const auto size = chosen.count();
            Vertex worst = no_vertex;
            std::size_t worst_degree = 0;
            for (auto v : chosen) {
                const auto d = side_degree_in(g, v, chosen, side, size);
                if (worst == no_vertex || d > worst_degree) {
                    worst = v;
                    worst_degree = d;
                }
            }
            if (at_most(static_cast<double>(worst_degree), eps * static_cast<double>(size))) break;
            chosen.erase(worst);
        }
    }

    // Maximality: anything that still fits goes in.
    for (bool changed = true; changed;) {
        changed = false;
        for (auto v : x - chosen) {
            chosen.insert(v);
            if (is_restricted_on(g, chosen, eps, side)) {
                changed = true;
            } else {
                chosen.erase(v);
            }
        }
    }
    return chosen;
}

/// Backtracking for an s-subset of `pool` whose side-degrees stay within `budget`.
inline auto restricted_of_size(const Graph & g, const std::vector<Vertex> & pool, std::size_t s, std::size_t budget,
                               Side side) -> std::optional<VertexSet>
{
    const auto n = pool.size();
    VertexSet chosen(g.size());
    std::vector<std::size_t> degree(g.size(), 0);
    std::size_t size = 0;

    auto recurse = [&](auto & self, std::size_t index) -> bool {
        if (size == s) return true;
        if (n - index < s - size) return false;
        const auto v = pool[index];
        // Include v if no degree (its own or its neighbours') overflows.
        std::size_t own = 0;
        bool fits = true;
        for (auto u : chosen) {
            if (g.adjacent(u, v, side)) {
                ++own;
                if (degree[u] + 1 > budget) fits = false;
            }
        }
        if (fits && own <= budget) {
            for (auto u : chosen)
                if (g.adjacent(u, v, side)) ++degree[u];
            degree[v] = own;
            chosen.insert(v);
            ++size;
            if (self(self, index + 1)) return true;
            chosen.erase(v);
            --size;
            for (auto u : chosen)
                if (g.adjacent(u, v, side)) --degree[u];
            degree[v] = 0;
        }
        return self(self, index + 1);
    };
    if (recurse(recurse, 0)) return chosen;
    return std::nullopt;
}

inline auto to_restricted_subset(const Graph & g, VertexSet set, double eps) -> RestrictedSubset
{
    auto verdict = is_restricted(g, set, eps);
    if (!verdict) throw std::logic_error("restricted-subset search produced an unrestricted set");
    return {std::move(set), *verdict.side};
}

} // namespace detail

/// A large eps-restricted subset of x. Exact mode returns one of maximum
/// size (exponential); greedy mode a maximal one. The side is the one
/// is_restricted reports for the returned set.
inline auto find_restricted_subset(const Graph & g, const VertexSet & x, double eps, SearchMode mode)
    -> RestrictedSubset
{
    if (x.universe() != g.size()) throw PreconditionViolated("vertex set universe does not match graph");
    if (x.empty()) throw PreconditionViolated("find_restricted_subset needs a nonempty set");

    auto sparse = detail::grow_restricted(g, x, eps, Side::graph);
    auto dense = detail::grow_restricted(g, x, eps, Side::complement);
    VertexSet best = dense.count() > sparse.count() ? std::move(dense) : std::move(sparse);
    if (mode == SearchMode::greedy) return detail::to_restricted_subset(g, std::move(best), eps);

    // The size condition is not monotone in s (the budget eps*s grows),
    // so every size above the greedy one is tried.
    const auto pool = x.to_vector();
    for (std::size_t s = pool.size(); s > best.count(); --s) {
        const auto budget = floor_count(eps * static_cast<double>(s));
        for (auto side : {Side::graph, Side::complement}) {
            if (auto hit = detail::restricted_of_size(g, pool, s, budget, side))
                return detail::to_restricted_subset(g, std::move(*hit), eps);
        }
    }
    return detail::to_restricted_subset(g, std::move(best), eps);
}

struct ExtractionResult
{
    std::vector<Part> parts;
    VertexSet leftover;
    /// Smallest |part| / |remainder before extraction| over all rounds; 1 if no rounds.
    double achieved_delta = 1.0;
    /// Per-round ratios, in extraction order.
    std::vector<double> round_ratios;
    /// Remainder size before each round (first entry |x|).
    std::vector<std::size_t> remainder_sizes;
};

/// Repeatedly extract restricted subsets from the remainder of x until at
/// most `max_leftover` vertices are left.
inline auto extract_until(const Graph & g, const VertexSet & x, double eps, std::size_t max_leftover, SearchMode mode)
    -> ExtractionResult
{
    ExtractionResult out;
    out.leftover = x;
    for (auto remaining = x.count(); remaining > max_leftover; remaining = out.leftover.count()) {
        auto found = find_restricted_subset(g, out.leftover, eps, mode);
        const double ratio = static_cast<double>(found.vertices.count()) / static_cast<double>(remaining);
        out.remainder_sizes.push_back(remaining);
        out.round_ratios.push_back(ratio);
        out.achieved_delta = std::min(out.achieved_delta, ratio);
        out.leftover -= found.vertices;
        out.parts.push_back({std::move(found.vertices), found.side});
    }
    return out;
}

/// Partition x into eps-restricted parts plus a leftover of size <= gamma|x|.
inline auto extraction_partition(const Graph & g, const VertexSet & x, double eps, double gamma, SearchMode mode)
    -> ExtractionResult
{
    if (!(gamma > 0.0 && gamma < 1.0)) throw PreconditionViolated("extraction needs 0 < gamma < 1");
    return extract_until(g, x, eps, floor_count(gamma * static_cast<double>(x.count())), mode);
}

/// Upper bound on extraction rounds implied by the achieved decay: the
/// least n with (1 - delta)^n <= leftover_target / |x|. Unbounded (max)
/// when the target is zero.
inline auto decay_round_bound(double achieved_delta, std::size_t x_size, std::size_t leftover_target) -> std::uint64_t
{
    if (x_size == 0) return 0;
    if (leftover_target == 0) return std::numeric_limits<std::uint64_t>::max();
    return least_decay_exponent(achieved_delta,
                                static_cast<double>(leftover_target) / static_cast<double>(x_size));
}

struct WeakPartitionResult
{
    std::vector<Part> parts;
    double achieved_delta = 1.0;
    /// Fraction of V(g) still unassigned when the last extraction started;
    /// 0 when no extraction was needed.
    double merge_threshold = 0.0;
    bool merged = false;
};

namespace detail {

/// Peel the highest side-degree vertex (ties: lowest id) until x spans at
/// most eps|x|^2 side-edges.
inline auto peel_weak(const Graph & g, const VertexSet & x, double eps, Side side) -> VertexSet
{
    VertexSet current = x;
    for (;;) {
        const auto size = current.count();
        if (at_most(static_cast<double>(induced_edge_count(g, current, side)),
                    eps * static_cast<double>(size) * static_cast<double>(size)))
            return current;
        Vertex worst = no_vertex;
        std::size_t worst_degree = 0;
        for (auto v : current) {
            const auto d = g.neighbours_in(v, current, side, size);
            if (worst == no_vertex || d > worst_degree) {
                worst = v;
                worst_degree = d;
            }
        }
        current.erase(worst);
    }
}

inline auto weak_part(const Graph & g, VertexSet x, double eps) -> Part
{
    auto verdict = is_weakly_restricted(g, x, eps);
    if (!verdict) throw std::logic_error("weak partition produced an unrestricted part");
    return {std::move(x), *verdict.side};
}

} // namespace detail

/// Partition V(g) into weakly eps-restricted parts: extract weakly
/// eps/2-restricted sets until the remainder can be absorbed by the largest
/// part (checked directly, not assumed).
inline auto weak_partition(const Graph & g, double eps) -> WeakPartitionResult
{
    if (!(eps > 0.0)) throw PreconditionViolated("weak_partition needs eps > 0");
    WeakPartitionResult out;
    VertexSet remainder = g.vertices();
    const auto n = g.size();
    while (!remainder.empty()) {
        if (out.parts.empty()) {
            if (is_weakly_restricted(g, remainder, eps)) {
                out.parts.push_back(detail::weak_part(g, std::move(remainder), eps));
                break;
            }
        } else {
            auto largest = std::max_element(out.parts.begin(), out.parts.end(), [](const Part & a, const Part & b) {
                return a.vertices.count() < b.vertices.count();
            });
            const auto merged = largest->vertices | remainder;
            if (auto verdict = is_weakly_restricted(g, merged, eps)) {
                *largest = Part{merged, *verdict.side};
                out.merged = true;
                break;
            }
        }
        const auto remaining = remainder.count();
        out.merge_threshold = static_cast<double>(remaining) / static_cast<double>(n);
        auto sparse = detail::peel_weak(g, remainder, eps / 2, Side::graph);
        auto dense = detail::peel_weak(g, remainder, eps / 2, Side::complement);
        auto piece = dense.count() > sparse.count() ? std::move(dense) : std::move(sparse);
        out.achieved_delta =
            std::min(out.achieved_delta, static_cast<double>(piece.count()) / static_cast<double>(remaining));
        remainder -= piece;
        out.parts.push_back(detail::weak_part(g, std::move(piece), eps));
    }
    return out;
}

enum class FullnessStatus
{
    verified,
    witnessed,
    trusted
};

inline auto to_string(FullnessStatus status) -> std::string_view
{
    switch (status) {
    case FullnessStatus::verified: return "verified";
    case FullnessStatus::witnessed: return "witnessed";
    case FullnessStatus::trusted: return "trusted";
    }
    return "trusted";
}

struct FullPairOptions
{
    FullnessOptions fullness;
    /// Exhaustive search over sub-pairs only when |a| + |b| is at most this.
    std::size_t exhaustive_cap = 24;
    /// Random probes per check when the exact checker is out of reach.
    std::size_t refutation_samples = 256;
    std::uint64_t seed = 0;
};

struct FullPair
{
    VertexSet a;
    VertexSet b;
    double achieved_gamma = 0.0;
    FullnessStatus status = FullnessStatus::verified;
};

namespace detail {

/// Exact when within the cap, otherwise sampled refutation.
inline auto check_full(const Graph & g, const VertexSet & a, const VertexSet & b, double c, double eps, Side side,
                       const FullPairOptions & options, Engine & engine) -> std::optional<FullnessStatus>
{
    if (exact_check_feasible(a.count(), b.count(), c, options.fullness)) {
        if (is_full_pair_exact(g, a, b, c, eps, side, options.fullness)) return FullnessStatus::verified;
        return std::nullopt;
    }
    if (sample_fullness_violation(g, a, b, c, eps, side, engine, options.refutation_samples)) return std::nullopt;
    return FullnessStatus::witnessed;
}

inline auto make_full_pair(VertexSet a, VertexSet b, std::size_t a_size, std::size_t b_size, FullnessStatus status)
    -> FullPair
{
    const double gamma = std::min(static_cast<double>(a.count()) / static_cast<double>(a_size),
                                  static_cast<double>(b.count()) / static_cast<double>(b_size));
    return {std::move(a), std::move(b), gamma, status};
}

inline auto subsets_of_size(const std::vector<Vertex> & members, std::size_t k, std::size_t universe)
    -> std::vector<VertexSet>
{
    std::vector<VertexSet> out;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    do {
        VertexSet s(universe);
        for (auto i : idx) s.insert(members[i]);
        out.push_back(std::move(s));
    } while (next_combination(idx, members.size()));
    return out;
}

} // namespace detail

/// Sub-pair (A', B') of (a, b) that is (c, eps)-full on `side`, as large as
/// the search can find. Exhaustive (largest min-ratio first, then largest
/// total, then lexicographically least) for small inputs in exact mode;
/// otherwise peel the vertex of smallest cross-degree ratio until the
/// remaining pair checks out.
inline auto find_full_pair(const Graph & g, const VertexSet & a, const VertexSet & b, double c, double eps, double tau,
                           Side side, SearchMode mode, const FullPairOptions & options = {}) -> FullPair
{
    detail::check_pair_arguments(g, a, b, "find_full_pair");
    if (!(eps < tau && tau <= 8.0 / 9.0 + kSlack))
        throw PreconditionViolated("find_full_pair needs eps < tau <= 8/9");
    const auto a_size = a.count(), b_size = b.count();
    const auto cross = edges_between(g, a, b, side);
    if (!at_least(static_cast<double>(cross), tau * static_cast<double>(a_size) * static_cast<double>(b_size)))
        throw PreconditionViolated("pair density " +
                                   std::to_string(static_cast<double>(cross) / static_cast<double>(a_size * b_size)) +
                                   " is below tau = " + std::to_string(tau));

    auto engine = make_engine(options.seed);

    if (mode == SearchMode::exact && a_size + b_size <= options.exhaustive_cap) {
        struct Level
        {
            std::size_t sa, sb;
            double ratio;
        };
        std::vector<Level> levels;
        for (std::size_t sa = 1; sa <= a_size; ++sa)
            for (std::size_t sb = 1; sb <= b_size; ++sb)
                levels.push_back({sa, sb,
                                  std::min(static_cast<double>(sa) / static_cast<double>(a_size),
                                           static_cast<double>(sb) / static_cast<double>(b_size))});
        std::stable_sort(levels.begin(), levels.end(), [](const Level & x, const Level & y) {
            if (x.ratio != y.ratio) return x.ratio > y.ratio;
            return x.sa + x.sb > y.sa + y.sb;
        });
        const auto a_members = a.to_vector(), b_members = b.to_vector();
        for (const auto & level : levels) {
            const auto a_subsets = detail::subsets_of_size(a_members, level.sa, g.size());
            const auto b_subsets = detail::subsets_of_size(b_members, level.sb, g.size());
            for (const auto & sa : a_subsets)
                for (const auto & sb : b_subsets)
                    if (is_full_pair_exact(g, sa, sb, c, eps, side, options.fullness))
                        return detail::make_full_pair(sa, sb, a_size, b_size, FullnessStatus::verified);
        }
        throw SearchFailed("no full sub-pair exists");
    }

    VertexSet cur_a = a, cur_b = b;
    for (;;) {
        if (auto status = detail::check_full(g, cur_a, cur_b, c, eps, side, options, engine))
            return detail::make_full_pair(cur_a, cur_b, a_size, b_size, *status);
        const auto sa = cur_a.count(), sb = cur_b.count();
        if (sa + sb <= 2) break;
        // Candidate with the smallest cross-degree ratio; ties by id.
        Vertex worst = no_vertex;
        double worst_ratio = std::numeric_limits<double>::infinity();
        auto consider = [&](const VertexSet & from, const VertexSet & to, std::size_t to_size, std::size_t from_size) {
            if (from_size <= 1) return;
            for (auto v : from) {
                const double r =
                    static_cast<double>(g.neighbours_in(v, to, side, to_size)) / static_cast<double>(to_size);
                if (r < worst_ratio || (r == worst_ratio && v < worst)) {
                    worst_ratio = r;
                    worst = v;
                }
            }
        };
        consider(cur_a, cur_b, sb, sa);
        consider(cur_b, cur_a, sa, sb);
        if (worst == no_vertex) break;
        if (cur_a.contains(worst))
            cur_a.erase(worst);
        else
            cur_b.erase(worst);
    }
    throw SearchFailed("peeling exhausted the pair without a full sub-pair");
}

} // namespace restrictor
