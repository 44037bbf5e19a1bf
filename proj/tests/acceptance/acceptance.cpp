// Acceptance run: one PASS/FAIL line per criterion. Optional arguments pick
// criteria by number (default: all ten).

#include "restrictor/commands.hpp"
#include "support/brute_force.hpp"
#include "support/temp_dir.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace restrictor;
using namespace restrictor::cli;

namespace {

struct Verdict
{
    bool pass = true;
    std::string detail;
    std::vector<std::string> problems;

    void fail(const std::string & what)
    {
        pass = false;
        if (problems.size() < 5) problems.push_back(what);
    }
};

auto seconds_since(std::chrono::steady_clock::time_point start) -> double
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

auto as_vector(const VertexSet & s) -> std::vector<Vertex> { return s.to_vector(); }

auto parse_mapping(const std::string & output) -> std::vector<Vertex>
{
    return restrictor::detail::parse_json(output).at("induced_copy").at("mapping").get<std::vector<Vertex>>();
}

const std::vector<std::string> pattern_names{"K3", "P4", "C5"};

// ---------------------------------------------------------------------------

auto certificate_validity() -> Verdict
{
    Verdict v;
    testing_support::TempDir dir;
    const double densities[] = {0.05, 0.2, 0.5, 0.8};
    const double epsilons[] = {0.1, 0.2, 0.3};
    std::size_t certified = 0, copies = 0;
    double slowest = 0.0;
    for (std::uint64_t i = 0; i < 200; ++i) {
        // Half the draws are small so that H-free ones (certificates) are common.
        const std::size_t n = i % 2 == 0 ? 4 + (i * 37) % 197 : 4 + (i * 7) % 27;
        const double p = densities[i % 4];
        const auto & h = pattern_names[(i / 4) % 3];
        const double eps = epsilons[(i / 12) % 3];
        const auto g = random_graph(n, p, derive_seed(1000, i));

        PartitionArgs args;
        args.graph = dir.write("g" + std::to_string(i) + ".txt", render_graph(g));
        args.pattern = h;
        args.eps = eps;
        args.common.seed = i;
        const auto start = std::chrono::steady_clock::now();
        const auto result = run_partition(args);
        const double took = seconds_since(start);
        slowest = std::max(slowest, took);
        const auto label = "instance " + std::to_string(i) + " (n=" + std::to_string(n) + ", H=" + h + ")";
        if (took >= 60.0) v.fail(label + " took " + std::to_string(took) + " s");
        if (result.exit_code == exit_ok) {
            ++certified;
            VerifyArgs verify;
            verify.graph = args.graph;
            verify.certificate = dir.write("c" + std::to_string(i) + ".json", result.output);
            const auto checked = run_verify(verify);
            if (checked.exit_code != exit_ok || checked.output.rfind("valid:", 0) != 0)
                v.fail(label + ": " + checked.output);
        } else if (result.exit_code == exit_induced_copy) {
            ++copies;
            if (!brute::induced_copy(g, *preset_pattern(h), parse_mapping(result.output)))
                v.fail(label + ": reported copy is not induced");
        } else {
            v.fail(label + " exited " + std::to_string(result.exit_code) + ": " + result.errors);
        }
    }
    std::ostringstream d;
    d << certified << " certificates verified, " << copies << " induced copies, slowest " << slowest << " s";
    v.detail = d.str();
    return v;
}

auto dichotomy_soundness() -> Verdict
{
    Verdict v;
    testing_support::TempDir dir;
    std::size_t copies = 0, certified_planted = 0;
    for (std::uint64_t i = 0; i < 100; ++i) {
        const auto & h = pattern_names[i % 3];
        const auto pattern = *preset_pattern(h);
        const auto inst = planted_copy_graph(pattern, 10 + (i * 13) % 90, 0.1 + 0.1 * static_cast<double>(i % 7),
                                             derive_seed(2000, i));
        if (!brute::induced_copy(inst.graph, pattern, inst.planted)) v.fail("plant " + std::to_string(i) + " broken");
        PartitionArgs args;
        args.graph = dir.write("planted.txt", render_graph(inst.graph));
        args.pattern = h;
        args.eps = 0.3;
        args.common.seed = i;
        const auto result = run_partition(args);
        if (result.exit_code == exit_induced_copy) {
            ++copies;
            if (!brute::induced_copy(inst.graph, pattern, parse_mapping(result.output)))
                v.fail("planted " + std::to_string(i) + ": copy fails the check");
        } else if (result.exit_code == exit_ok) {
            ++certified_planted;
        } else {
            v.fail("planted " + std::to_string(i) + " exited " + std::to_string(result.exit_code));
        }
    }
    std::size_t free_certified = 0, free_vertices = 0;
    for (std::uint64_t i = 0; i < 100; ++i) {
        const auto & h = pattern_names[i % 3];
        // Repair deletes vertices, so sparse draws keep the instances large.
        const auto g = hfree_graph(*preset_pattern(h), 20 + (i * 17) % 181, 0.02 + 0.03 * static_cast<double>(i % 5),
                                   derive_seed(3000, i));
        free_vertices += g.size();
        PartitionArgs args;
        args.graph = dir.write("free.txt", render_graph(g));
        args.pattern = h;
        args.eps = 0.3;
        args.common.seed = i;
        const auto result = run_partition(args);
        if (result.exit_code == exit_induced_copy)
            v.fail("H-free " + std::to_string(i) + " returned an induced copy");
        else if (result.exit_code != exit_ok)
            v.fail("H-free " + std::to_string(i) + " exited " + std::to_string(result.exit_code) + ": " + result.errors);
        else
            ++free_certified;
    }
    std::ostringstream d;
    d << copies << "/100 planted copies verified (" << certified_planted << " certified), " << free_certified
      << "/100 H-free certified (mean " << free_vertices / 100 << " vertices)";
    v.detail = d.str();
    return v;
}

auto covering_lemma() -> Verdict
{
    Verdict v;
    constexpr double eps = 1.0 / 16.0;
    std::size_t succeeded = 0, bypassed = 0, max_attempts = 0;
    for (std::uint64_t i = 0; i < 100; ++i) {
        auto engine = make_engine(derive_seed(4000, i));
        const std::size_t a_size = 144 + uniform_below(engine, 1057);
        const auto p_high = a_size / 12;
        auto p_floor = [](std::size_t b) {
            return static_cast<std::size_t>(std::ceil(std::log(2.0 * static_cast<double>(b)) / eps));
        };
        // Largest |B| (at most 40) that leaves some integer p in range.
        std::size_t b_limit = 1;
        while (b_limit < 40 && p_floor(b_limit + 1) <= p_high) ++b_limit;
        const std::size_t b_size = 1 + uniform_below(engine, b_limit);
        const auto p_low = p_floor(b_size);
        const std::size_t p = p_low + uniform_below(engine, p_high - p_low + 1);
        const auto side = i % 2 == 0 ? Side::graph : Side::complement;

        Graph g(a_size + b_size);
        for (Vertex u = 0; u < a_size; ++u)
            for (Vertex w = u + 1; w < a_size; ++w)
                if (uniform_unit(engine) < 0.1) g.add_edge(u, w);
        const auto cap = static_cast<std::size_t>(std::floor(eps * static_cast<double>(a_size)));
        std::vector<Vertex> a_members(a_size);
        for (Vertex u = 0; u < a_size; ++u) a_members[u] = u;
        for (std::size_t j = 0; j < b_size; ++j) {
            const auto b = static_cast<Vertex>(a_size + j);
            for (std::size_t t = 0; t < cap; ++t)
                std::swap(a_members[t], a_members[t + uniform_below(engine, a_size - t)]);
            const auto contacts = uniform_below(engine, cap + 1);
            VertexSet touched = VertexSet::from(g.size(), std::vector<Vertex>(a_members.begin(), a_members.begin() + static_cast<std::ptrdiff_t>(contacts)));
            for (Vertex u = 0; u < a_size; ++u) {
                const bool contact = touched.contains(u);
                if ((side == Side::graph) == contact) g.add_edge(b, u);
            }
        }
        VertexSet a(g.size()), bset(g.size());
        for (Vertex u = 0; u < a_size; ++u) a.insert(u);
        for (std::size_t j = 0; j < b_size; ++j) bset.insert(static_cast<Vertex>(a_size + j));

        const auto label = "instance " + std::to_string(i);
        try {
            CoverRequest req{a, bset, eps, p, side, derive_seed(4100, i), 100};
            const auto result = find_cover_set(g, req);
            ++succeeded;
            if (result.bypassed) ++bypassed;
            max_attempts = std::max(max_attempts, result.attempts);
            if (result.p_set.count() != p || !result.p_set.is_subset_of(a)) v.fail(label + ": wrong P size");
            if (!brute::cover_valid(g, as_vector(result.p_set), as_vector(bset), eps, side))
                v.fail(label + ": sparsity bounds fail");
            if (!result.bypassed && 2 * result.q < a_size) v.fail(label + ": q < |A|/2");
        } catch (const RetryExhausted &) {
            // counted against the 99 threshold
        } catch (const std::exception & e) {
            v.fail(label + ": " + e.what());
        }
    }
    if (succeeded < 99) v.fail("only " + std::to_string(succeeded) + " successes");
    std::ostringstream d;
    d << succeeded << "/100 succeeded within 100 retries (" << bypassed << " bypassed), max attempts "
      << max_attempts;
    v.detail = d.str();
    return v;
}

auto embedding_lemma() -> Verdict
{
    Verdict v;
    const std::vector<std::string> names{"K1", "K2", "2K1", "K3", "P3", "3K1", "P4", "C4", "K4", "paw", "claw"};
    std::vector<std::string> usable;
    for (const auto & name : names)
        if (auto h = preset_pattern(name); h && h->size() <= 4) usable.push_back(name);
    std::size_t embedded = 0;
    for (std::uint64_t i = 0; i < 100; ++i) {
        const auto & name = usable[i % usable.size()];
        const auto pattern = *preset_pattern(name);
        const std::size_t block = 2 + i % 5;
        const double eps = i % 2 == 0 ? 0.5 : 0.4;
        const auto label = "system " + std::to_string(i) + " (" + name + ")";
        try {
            const auto inst = block_system_instance(pattern, block, eps, 0.01, 0.3, derive_seed(5000, i));
            const double c = std::pow(eps, static_cast<double>(pattern.size()));
            for (std::size_t x = 0; x < pattern.size(); ++x)
                for (std::size_t y = x + 1; y < pattern.size(); ++y) {
                    const auto side = pattern.adjacent(x, y) ? Side::graph : Side::complement;
                    if (!is_full_pair_exact(inst.graph, inst.system.blocks[x], inst.system.blocks[y], c, eps, side))
                        v.fail(label + ": pair not confirmed");
                }
            const auto e = embed_transversal(inst.graph, inst.system);
            bool transversal = true;
            for (std::size_t x = 0; x < pattern.size(); ++x)
                transversal = transversal && inst.system.blocks[x].contains(e.mapping[x]);
            if (transversal && brute::induced_copy(inst.graph, pattern, e.mapping)) ++embedded;
            else v.fail(label + ": mapping rejected");
        } catch (const std::exception & e) {
            v.fail(label + ": " + e.what());
        }
    }
    v.detail = std::to_string(embedded) + "/100 transversals verified";
    if (embedded != 100) v.fail("not all embedded");
    return v;
}

auto cover_path_bound_check() -> Verdict
{
    Verdict v;
    std::size_t branch_one = 0, worst_parts = 0;
    for (std::uint64_t i = 0; i < 50; ++i) {
        const double eps = i % 2 == 0 ? 1.0 / 3.0 : 1.0 / 4.0;
        const auto k = ceil_count(2.0 / eps);
        auto engine = make_engine(derive_seed(6000, i));
        std::vector<std::size_t> sizes{156 + uniform_below(engine, 2000)};
        while (sizes.size() < k + 1) sizes.push_back(sizes.back() / 13);
        std::vector<Side> directions, sides;
        for (std::size_t j = 0; j < k; ++j) directions.push_back(uniform_below(engine, 2) ? Side::graph : Side::complement);
        for (std::size_t j = 0; j <= k; ++j) sides.push_back(uniform_below(engine, 2) ? Side::graph : Side::complement);
        const auto inst = path_partition_instance(sizes, eps / 2.0, directions, sides, derive_seed(6100, i));
        const auto label = "path " + std::to_string(i);
        if (!validate_path_partition(inst.graph, inst.partition).ok()) {
            v.fail(label + ": generated partition invalid");
            continue;
        }
        try {
            const auto result = cover_path(inst.graph, inst.partition, eps, i);
            const auto parts = result.certificate.parts.size();
            worst_parts = std::max(worst_parts, parts);
            if (parts > static_cast<std::size_t>(std::ceil(9217.0 / (eps * eps)))) v.fail(label + ": too many parts");
            if (!verify_certificate(inst.graph, result.certificate).ok()) v.fail(label + ": certificate fails");
            for (const auto & part : result.certificate.parts)
                if (!brute::restricted(inst.graph, as_vector(part.vertices), eps)) v.fail(label + ": part not restricted");
            if (result.branch == 1) {
                ++branch_one;
                if (!(static_cast<double>(result.p) < 815.0 / (eps * eps))) v.fail(label + ": p too large");
            }
        } catch (const std::exception & e) {
            v.fail(label + ": " + e.what());
        }
    }
    std::ostringstream d;
    d << "50 path-partitions, " << branch_one << " in branch 1, at most " << worst_parts << " parts";
    v.detail = d.str();
    return v;
}

auto fullness_equivalence() -> Verdict
{
    Verdict v;
    const double cs[] = {1.0 / 7.0, 0.2, 0.25, 1.0 / 3.0, 0.5, 0.6, 2.0 / 3.0, 0.75, 1.0};
    const double epsilons[] = {0.0, 0.1, 0.25, 1.0 / 3.0, 0.5, 0.7, 1.0};
    std::size_t agree = 0, full = 0;
    for (std::uint64_t i = 0; i < 500; ++i) {
        auto engine = make_engine(derive_seed(7000, i));
        const std::size_t a_size = 1 + uniform_below(engine, 7), b_size = 1 + uniform_below(engine, 7);
        const double density = uniform_unit(engine);
        const auto g = random_graph(a_size + b_size, density, derive_seed(7100, i));
        std::vector<Vertex> a, b;
        for (Vertex u = 0; u < a_size; ++u) a.push_back(u);
        for (Vertex u = 0; u < b_size; ++u) b.push_back(static_cast<Vertex>(a_size + u));
        const double c = cs[uniform_below(engine, std::size(cs))];
        const double eps = epsilons[uniform_below(engine, std::size(epsilons))];
        const auto side = uniform_below(engine, 2) ? Side::graph : Side::complement;
        const bool fast = is_full_pair_exact(g, VertexSet::from(g.size(), a), VertexSet::from(g.size(), b), c, eps, side);
        const bool naive = brute::full_pair(g, a, b, c, eps, side);
        if (fast == naive) ++agree;
        else v.fail("instance " + std::to_string(i) + " disagrees");
        if (naive) ++full;
    }
    v.detail = std::to_string(agree) + "/500 agree (" + std::to_string(full) + " full)";
    return v;
}

auto extractor_optimality() -> Verdict
{
    Verdict v;
    const double epsilons[] = {0.0, 0.1, 0.2, 0.25, 1.0 / 3.0, 0.5};
    std::size_t optimal = 0, strictly_smaller_greedy = 0;
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        auto engine = make_engine(derive_seed(8000, seed));
        const std::size_t n = 1 + uniform_below(engine, 10);
        const auto g = random_graph(n, uniform_unit(engine), derive_seed(8100, seed));
        const double eps = epsilons[uniform_below(engine, std::size(epsilons))];
        const auto best = brute::max_restricted_size(g, eps);
        const auto exact = find_restricted_subset(g, g.vertices(), eps, SearchMode::exact);
        const auto greedy = find_restricted_subset(g, g.vertices(), eps, SearchMode::greedy);
        const auto label = "seed " + std::to_string(seed);
        if (exact.vertices.count() == best && brute::restricted(g, as_vector(exact.vertices), eps)) ++optimal;
        else v.fail(label + ": exact mode not maximum");
        if (greedy.vertices.count() > exact.vertices.count()) v.fail(label + ": greedy larger than exact");
        if (!brute::restricted(g, as_vector(greedy.vertices), eps)) v.fail(label + ": greedy set invalid");
        if (greedy.vertices.count() < exact.vertices.count()) ++strictly_smaller_greedy;
    }
    v.detail = std::to_string(optimal) + "/300 maximum, greedy smaller on " + std::to_string(strictly_smaller_greedy);
    return v;
}

auto extraction_partition_check() -> Verdict
{
    Verdict v;
    const double epsilons[] = {0.1, 0.2, 0.3};
    const double gammas[] = {0.05, 0.1, 0.25, 0.5};
    std::size_t rounds_total = 0;
    for (std::uint64_t i = 0; i < 200; ++i) {
        auto engine = make_engine(derive_seed(9000, i));
        const bool exact = i % 4 == 0;
        const std::size_t n = exact ? 4 + uniform_below(engine, 9) : 10 + uniform_below(engine, 111);
        const auto g = random_graph(n, uniform_unit(engine), derive_seed(9100, i));
        VertexSet x(n);
        for (Vertex u = 0; u < n; ++u)
            if (uniform_unit(engine) < 0.8) x.insert(u);
        if (x.empty()) x.insert(0);
        const double eps = epsilons[uniform_below(engine, std::size(epsilons))];
        const double gamma = gammas[uniform_below(engine, std::size(gammas))];
        const auto label = "instance " + std::to_string(i);

        const auto r = extraction_partition(g, x, eps, gamma, exact ? SearchMode::exact : SearchMode::greedy);
        const auto x_size = x.count();
        const auto target = static_cast<std::size_t>(std::floor(gamma * static_cast<double>(x_size) + 1e-9));
        if (r.leftover.count() > target) v.fail(label + ": leftover too large");
        VertexSet seen = r.leftover;
        for (const auto & part : r.parts) {
            if (!brute::restricted(g, as_vector(part.vertices), eps)) v.fail(label + ": part not restricted");
            if (seen.intersects(part.vertices)) v.fail(label + ": parts overlap");
            seen |= part.vertices;
        }
        if (seen != x) v.fail(label + ": parts and leftover do not cover X");

        // Each round removes at least the achieved fraction of what is left.
        const auto rounds = r.parts.size();
        rounds_total += rounds;
        double min_ratio = 1.0;
        for (auto ratio : r.round_ratios) min_ratio = std::min(min_ratio, ratio);
        if (std::abs(min_ratio - r.achieved_delta) > 1e-12) v.fail(label + ": achieved delta mismatch");
        for (std::size_t t = 0; t < rounds; ++t) {
            if (t > 0 && r.remainder_sizes[t] >= r.remainder_sizes[t - 1]) v.fail(label + ": remainder not shrinking");
            const double envelope = std::pow(1.0 - r.achieved_delta, static_cast<double>(t)) * static_cast<double>(x_size);
            if (static_cast<double>(r.remainder_sizes[t]) > envelope + 1e-6) v.fail(label + ": decay envelope broken");
        }
        if (rounds > decay_round_bound(r.achieved_delta, x_size, target)) v.fail(label + ": more rounds than n_gamma");
    }
    v.detail = "200 instances, " + std::to_string(rounds_total) + " extraction rounds";
    return v;
}

auto weak_partition_check() -> Verdict
{
    Verdict v;
    const double epsilons[] = {0.01, 0.05, 0.1, 0.2, 0.3};
    std::size_t parts_total = 0;
    for (std::uint64_t i = 0; i < 200; ++i) {
        auto engine = make_engine(derive_seed(10000, i));
        const std::size_t n = 1 + uniform_below(engine, 150);
        const auto g = random_graph(n, uniform_unit(engine), derive_seed(10100, i));
        const double eps = epsilons[uniform_below(engine, std::size(epsilons))];
        const auto r = weak_partition(g, eps);
        const auto label = "instance " + std::to_string(i);
        VertexSet seen(n);
        for (const auto & part : r.parts) {
            if (part.vertices.empty()) v.fail(label + ": empty part");
            if (!brute::weakly_restricted(g, as_vector(part.vertices), eps)) v.fail(label + ": part not weakly restricted");
            if (seen.intersects(part.vertices)) v.fail(label + ": parts overlap");
            seen |= part.vertices;
        }
        if (seen != g.vertices()) v.fail(label + ": parts do not cover V");
        parts_total += r.parts.size();
    }
    for (std::size_t n : {100, 1000, 2000}) {
        const auto star = star_graph(n);
        for (double eps : {1.0 / static_cast<double>(n + 1), 2.0 / static_cast<double>(n + 1), 0.5}) {
            const auto r = weak_partition(star, eps);
            if (r.parts.size() != 1) v.fail("star n=" + std::to_string(n) + " gave " + std::to_string(r.parts.size()) + " parts");
        }
    }
    v.detail = "200 instances (" + std::to_string(parts_total) + " parts), stars of 100/1000/2000 give 1 part";
    return v;
}

auto determinism() -> Verdict
{
    Verdict v;
    testing_support::TempDir dir;
    const auto graph = dir.write("g.txt", render_graph(random_graph(40, 0.3, 5)));
    const auto free_graph = dir.write("free.txt", render_graph(hfree_graph(*preset_pattern("K3"), 60, 0.3, 6)));
    const auto star = dir.write("star.txt", render_graph(star_graph(12)));

    std::vector<std::pair<std::string, std::function<CommandResult()>>> configs;
    auto add_gen = [&](const std::string & kind, std::size_t n, std::uint64_t seed) {
        GenArgs a;
        a.kind = kind;
        a.n = n;
        a.common.seed = seed;
        configs.emplace_back("gen " + kind, [a] { return run_gen(a); });
    };
    add_gen("random", 50, 1);
    add_gen("hfree", 40, 2);
    add_gen("split", 30, 3);
    add_gen("path-partition", 200, 4);
    add_gen("tree-partition", 50, 5);
    add_gen("blocks", 0, 6);
    add_gen("star", 25, 0);

    GenArgs blocks;
    blocks.kind = "blocks";
    blocks.common.seed = 6;
    const auto block_file = dir.write("blocks.json", run_gen(blocks).output);
    GenArgs path;
    path.kind = "path-partition";
    path.n = 300;
    path.common.seed = 7;
    const auto path_file = dir.write("path.json", run_gen(path).output);

    auto add_partition = [&](const std::string & file, const std::string & h, double eps, std::uint64_t seed,
                             const std::string & search) {
        PartitionArgs a;
        a.graph = file;
        a.pattern = h;
        a.eps = eps;
        a.search = search;
        a.common.seed = seed;
        configs.emplace_back("partition " + h, [a] { return run_partition(a); });
    };
    add_partition(free_graph, "K3", 0.3, 1, "greedy");
    add_partition(free_graph, "K3", 0.2, 2, "greedy");
    add_partition(graph, "P4", 0.3, 3, "greedy");
    add_partition(graph, "C5", 0.1, 4, "greedy");
    add_partition(star, "K3", 0.3, 5, "exact");
    add_partition(free_graph, "P4", 0.25, 6, "greedy");

    LemmaArgs lemma;
    lemma.graph = free_graph;
    lemma.common.seed = 8;
    configs.emplace_back("lemma", [lemma] { return run_lemma(lemma); });
    LemmaArgs lemma_copy = lemma;
    lemma_copy.graph = graph;
    configs.emplace_back("lemma with copy", [lemma_copy] { return run_lemma(lemma_copy); });
    LemmaArgs lemma_p4 = lemma;
    lemma_p4.pattern = "P4";
    lemma_p4.common.seed = 11;
    configs.emplace_back("lemma P4", [lemma_p4] { return run_lemma(lemma_p4); });

    PartitionArgs for_cert;
    for_cert.graph = free_graph;
    for_cert.common.seed = 1;
    VerifyArgs verify;
    verify.graph = free_graph;
    verify.certificate = dir.write("cert.json", run_partition(for_cert).output);
    configs.emplace_back("verify", [verify] { return run_verify(verify); });

    EmbedArgs embed;
    embed.instance = block_file;
    configs.emplace_back("embed", [embed] { return run_embed(embed); });
    GenArgs k3_blocks;
    k3_blocks.kind = "blocks";
    k3_blocks.pattern = "K3";
    k3_blocks.block_size = 5;
    k3_blocks.common.seed = 10;
    EmbedArgs embed_k3;
    embed_k3.instance = dir.write("k3blocks.json", run_gen(k3_blocks).output);
    configs.emplace_back("embed K3", [embed_k3] { return run_embed(embed_k3); });
    CoverPathArgs cover;
    cover.instance = path_file;
    cover.common.seed = 9;
    configs.emplace_back("cover-path", [cover] { return run_cover_path(cover); });
    FindRestrictedArgs find;
    find.graph = star;
    configs.emplace_back("find-restricted exact", [find] { return run_find_restricted(find); });
    FindRestrictedArgs find_greedy;
    find_greedy.graph = graph;
    find_greedy.search = "greedy";
    configs.emplace_back("find-restricted greedy", [find_greedy] { return run_find_restricted(find_greedy); });

    std::size_t identical = 0;
    for (const auto & [name, run] : configs) {
        const auto first = run();
        const auto second = run();
        if (first.exit_code != exit_ok && first.exit_code != exit_induced_copy)
            v.fail(name + " exited " + std::to_string(first.exit_code) + ": " + first.errors);
        if (first.exit_code == second.exit_code && first.output == second.output && first.errors == second.errors &&
            !first.output.empty())
            ++identical;
        else
            v.fail(name + ": outputs differ");
    }
    v.detail = std::to_string(identical) + "/" + std::to_string(configs.size()) + " configurations byte-identical";
    if (configs.size() < 20) v.fail("fewer than 20 configurations");
    return v;
}

struct Criterion
{
    int number;
    const char * name;
    Verdict (*run)();
};

const Criterion criteria[] = {
    {1, "certificate validity", certificate_validity},
    {2, "dichotomy soundness", dichotomy_soundness},
    {3, "covering", covering_lemma},
    {4, "embedding", embedding_lemma},
    {5, "cover_path bound", cover_path_bound_check},
    {6, "fullness checker equivalence", fullness_equivalence},
    {7, "extractor optimality", extractor_optimality},
    {8, "extraction partition", extraction_partition_check},
    {9, "weak partition", weak_partition_check},
    {10, "determinism", determinism},
};

} // namespace

int main(int argc, char ** argv)
{
    std::set<int> chosen;
    for (int i = 1; i < argc; ++i) chosen.insert(std::atoi(argv[i]));
    int failed = 0;
    for (const auto & c : criteria) {
        if (!chosen.empty() && !chosen.count(c.number)) continue;
        const auto start = std::chrono::steady_clock::now();
        Verdict verdict;
        try {
            verdict = c.run();
        } catch (const std::exception & e) {
            verdict.fail(std::string("uncaught: ") + e.what());
        }
        std::printf("%s %2d %s: %s [%.1f s]\n", verdict.pass ? "PASS" : "FAIL", c.number, c.name,
                    verdict.detail.c_str(), seconds_since(start));
        for (const auto & problem : verdict.problems) std::printf("     %s\n", problem.c_str());
        std::fflush(stdout);
        if (!verdict.pass) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
