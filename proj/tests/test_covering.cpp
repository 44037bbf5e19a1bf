#include "restrictor/covering.hpp"
#include "restrictor/generators.hpp"
#include "support/brute_force.hpp"

#include <gtest/gtest.h>

using namespace restrictor;

namespace {

auto range_set(std::size_t n, Vertex lo, Vertex hi) -> VertexSet
{
    VertexSet s(n);
    for (Vertex v = lo; v < hi; ++v) s.insert(v);
    return s;
}

/// a = [0, a_size), b = the next b_size vertices; b-vertex j sees the j-th
/// slice of a of the given width.
auto sliced(std::size_t a_size, std::size_t b_size, std::size_t width) -> Graph
{
    Graph g(a_size + b_size);
    for (std::size_t j = 0; j < b_size; ++j)
        for (std::size_t i = 0; i < width; ++i)
            g.add_edge(static_cast<Vertex>(a_size + j), static_cast<Vertex>(j * width + i));
    return g;
}

} // namespace

TEST(Covering, BypassWhenBHasNoNeighbours)
{
    Graph g(145);
    CoverRequest req{range_set(145, 0, 144), range_set(145, 144, 145), 1.0 / 16.0, 12, Side::graph, 7, 1000};
    auto result = find_cover_set(g, req);
    EXPECT_TRUE(result.bypassed);
    EXPECT_EQ(result.attempts, 0U);
    EXPECT_EQ(result.p_set, range_set(145, 0, 12));
}

TEST(Covering, PRangeIsChecked)
{
    Graph g(145);
    CoverRequest req{range_set(145, 0, 144), range_set(145, 144, 145), 1.0 / 16.0, 13, Side::graph, 0, 1000};
    EXPECT_THROW(find_cover_set(g, req), PreconditionViolated); // 13 > 144/12
    req.p = 11;
    EXPECT_THROW(find_cover_set(g, req), PreconditionViolated); // 11 < 16 log 2
    req.p = 12;
    req.eps = 0.1;
    EXPECT_THROW(find_cover_set(g, req), PreconditionViolated);
}

TEST(Covering, LowerBoundRejectsSmallA)
{
    // 150 vertices with p = 12 sits below log(8)/eps ~ 33.3.
    const auto g = sliced(150, 4, 7);
    CoverRequest req{range_set(154, 0, 150), range_set(154, 150, 154), 1.0 / 16.0, 12, Side::graph, 1, 1000};
    EXPECT_THROW(find_cover_set(g, req), PreconditionViolated);
}

TEST(Covering, DenseBIsRejected)
{
    // b sees 40 of 600 > eps|a| = 37.5.
    const auto g = sliced(600, 4, 40);
    CoverRequest req{range_set(604, 0, 600), range_set(604, 600, 604), 1.0 / 16.0, 40, Side::graph, 1, 1000};
    EXPECT_THROW(find_cover_set(g, req), PreconditionViolated);
}

TEST(Covering, SlicedInstanceIsValid)
{
    const auto g = sliced(600, 4, 30);
    const auto a = range_set(604, 0, 600), b = range_set(604, 600, 604);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        CoverRequest req{a, b, 1.0 / 16.0, 40, Side::graph, seed, 1000};
        auto result = find_cover_set(g, req);
        EXPECT_FALSE(result.bypassed);
        EXPECT_GE(result.attempts, 1U);
        EXPECT_EQ(result.p_set.count(), 40U);
        EXPECT_TRUE(result.p_set.is_subset_of(a));
        EXPECT_EQ(result.k, 30U);
        EXPECT_GE(2 * result.q, 600U);
        EXPECT_TRUE(brute::cover_valid(g, result.p_set.to_vector(), b.to_vector(), 1.0 / 16.0, Side::graph));
    }
    // 2eps|b| = 0.5, so any cover avoids the 120 sliced vertices.
    const auto untouched = range_set(604, 120, 600);
    EXPECT_TRUE(brute::some_cover_exists(g, untouched.to_vector(), b.to_vector(), 40, 1.0 / 16.0, Side::graph, 3, 100));
}

TEST(Covering, ComplementSide)
{
    // Complete except the slices: on the complement side this is the sliced instance.
    const auto g = complement(sliced(600, 4, 30));
    const auto a = range_set(604, 0, 600), b = range_set(604, 600, 604);
    CoverRequest req{a, b, 1.0 / 16.0, 40, Side::complement, 5, 1000};
    auto result = find_cover_set(g, req);
    EXPECT_TRUE(brute::cover_valid(g, result.p_set.to_vector(), b.to_vector(), 1.0 / 16.0, Side::complement));
}

TEST(Covering, SameSeedSameAnswer)
{
    const auto g = sliced(600, 4, 30);
    CoverRequest req{range_set(604, 0, 600), range_set(604, 600, 604), 1.0 / 16.0, 40, Side::graph, 99, 1000};
    const auto first = find_cover_set(g, req);
    const auto second = find_cover_set(g, req);
    EXPECT_EQ(first.p_set, second.p_set);
    EXPECT_EQ(first.attempts, second.attempts);
}

TEST(Covering, CandidateCountOnRandomInstances)
{
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto g = random_graph(608, 0.0, seed);
        auto engine = make_engine(seed);
        const auto a = range_set(608, 0, 600), b = range_set(608, 600, 608);
        for (auto v : b)
            for (auto u : a)
                if (uniform_unit(engine) < 0.04) g.add_edge(u, v);
        if (!is_sparse_to(g, b, a, 1.0 / 16.0, Side::graph)) continue;
        const auto q = cover_candidates(g, a, b, 1.0 / 16.0, Side::graph);
        EXPECT_GE(2 * q.count(), a.count()) << seed;
        CoverRequest req{a, b, 1.0 / 16.0, 50, Side::graph, seed, 1000};
        auto result = find_cover_set(g, req);
        EXPECT_TRUE(brute::cover_valid(g, result.p_set.to_vector(), b.to_vector(), 1.0 / 16.0, Side::graph));
    }
}

TEST(Covering, ZeroRetryCapExhausts)
{
    const auto g = sliced(600, 4, 30);
    CoverRequest req{range_set(604, 0, 600), range_set(604, 600, 604), 1.0 / 16.0, 40, Side::graph, 2, 0};
    try {
        find_cover_set(g, req);
        FAIL() << "expected RetryExhausted";
    } catch (const RetryExhausted & e) {
        EXPECT_EQ(e.attempts(), 0U);
    }
}
