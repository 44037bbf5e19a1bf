#pragma once

#include "restrictor/graph.hpp"
#include "restrictor/numeric.hpp"
#include "restrictor/predicates.hpp"
#include "restrictor/rng.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace restrictor {

struct CoverRequest
{
    VertexSet a;
    VertexSet b;
    double eps = 1.0 / 16.0;
    std::size_t p = 0;
    Side side = Side::graph;
    std::uint64_t seed = 0;
    std::size_t retry_cap = 1000;
};

struct CoverResult
{
    VertexSet p_set;
    std::size_t attempts = 0; ///< 0 when sampling was skipped
    std::size_t q = 0;        ///< |Q|
    std::size_t k = 0;        ///< multiplicity threshold ceil(12 eps p)
    bool bypassed = false;
};

/// Q: vertices of a with fewer than 2eps|b| side-neighbours in b (strict).
inline auto cover_candidates(const Graph & g, const VertexSet & a, const VertexSet & b, double eps, Side side)
    -> VertexSet
{
    VertexSet q(g.size());
    const auto b_size = b.count();
    const double limit = 2.0 * eps * static_cast<double>(b_size);
    for (auto v : a)
        if (strictly_less(static_cast<double>(g.neighbours_in(v, b, side, b_size)), limit)) q.insert(v);
    return q;
}

inline void check_cover_request(const Graph & g, const CoverRequest & req)
{
    if (req.a.universe() != g.size() || req.b.universe() != g.size())
        throw PreconditionViolated("cover request universe does not match graph");
    detail::require_disjoint(req.a, req.b, "find_cover_set");
    if (req.a.empty() || req.b.empty()) throw PreconditionViolated("find_cover_set needs nonempty a and b");
    if (!(req.eps > 0.0 && at_most(req.eps, 1.0 / 16.0)))
        throw PreconditionViolated("find_cover_set needs 0 < eps <= 1/16");
    const auto a_size = static_cast<double>(req.a.count());
    const double p = static_cast<double>(req.p);
    if (!at_most(std::log(2.0 * static_cast<double>(req.b.count())) / req.eps, p))
        throw PreconditionViolated("p = " + std::to_string(req.p) + " is below log(2|b|)/eps");
    if (!at_most(p, a_size / 12.0)) throw PreconditionViolated("p = " + std::to_string(req.p) + " exceeds |a|/12");
    if (!is_sparse_to(g, req.b, req.a, req.eps, req.side)) throw PreconditionViolated("b is not eps-sparse to a");
}

/// Randomised covering: sample 2p vertices of Q independently and uniformly
/// until more than p distinct vertices appear and no vertex of b is
/// side-adjacent to k or more of the samples (counted with multiplicity).
/// P is the p smallest distinct samples. Retries up to the cap.
inline auto find_cover_set(const Graph & g, const CoverRequest & req) -> CoverResult
{
    check_cover_request(g, req);
    const auto & a = req.a;
    const auto & b = req.b;
    const auto p = req.p;

    CoverResult out;
    out.k = ceil_count(12.0 * req.eps * static_cast<double>(p));

    bool any_cross = false;
    for (auto v : b)
        if (g.neighbours_in(v, a, req.side) > 0) {
            any_cross = true;
            break;
        }
    if (!any_cross) {
        out.bypassed = true;
        out.p_set = VertexSet(g.size());
        std::size_t taken = 0;
        for (auto v : a) {
            if (taken == p) break;
            out.p_set.insert(v);
            ++taken;
        }
        return out;
    }

    const auto q_set = cover_candidates(g, a, b, req.eps, req.side);
    const auto q_members = q_set.to_vector();
    out.q = q_members.size();
    if (2 * out.q < a.count()) throw std::logic_error("covering: |Q| < |A|/2 despite the preconditions");

    const auto b_members = b.to_vector();
    auto engine = make_engine(req.seed);
    std::vector<Vertex> sample(2 * p);
    std::vector<std::size_t> hits(b_members.size());
    for (std::size_t attempt = 1; attempt <= req.retry_cap; ++attempt) {
        for (auto & u : sample) u = q_members[uniform_below(engine, q_members.size())];

        auto distinct = sample;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        if (distinct.size() <= p) continue;

        std::fill(hits.begin(), hits.end(), 0);
        bool crowded = false;
        for (std::size_t j = 0; j < b_members.size() && !crowded; ++j) {
            for (auto u : sample)
                if (g.adjacent(b_members[j], u, req.side)) ++hits[j];
            crowded = hits[j] >= out.k;
        }
        if (crowded) continue;

        out.attempts = attempt;
        out.p_set = VertexSet::from(g.size(), std::vector<Vertex>(distinct.begin(), distinct.begin() + p));
        // The acceptance test implies both bounds; re-check them anyway.
        const double p_real = static_cast<double>(p);
        if (!is_sparse_to(g, out.p_set, b, 2.0 * req.eps, req.side) ||
            !at_most(static_cast<double>(max_degree_into(g, b, out.p_set, req.side)), 12.0 * req.eps * p_real))
            throw std::logic_error("covering: accepted sample fails the sparsity bounds");
        return out;
    }
    throw RetryExhausted(req.retry_cap);
}

} // namespace restrictor
