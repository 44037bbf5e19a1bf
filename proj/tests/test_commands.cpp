#include "restrictor/commands.hpp"
#include "support/brute_force.hpp"
#include "support/temp_dir.hpp"

#include <gtest/gtest.h>

#include <cstdlib>

using namespace restrictor;
using namespace restrictor::cli;

namespace {

auto seeded(std::uint64_t seed) -> CommonArgs
{
    CommonArgs common;
    common.seed = seed;
    return common;
}

auto gen(const std::string & kind, std::size_t n, std::uint64_t seed) -> CommandResult
{
    GenArgs args;
    args.kind = kind;
    args.n = n;
    args.common = seeded(seed);
    return run_gen(args);
}

/// Scoped RESTRICTOR_SEED.
class SeedEnv
{
public:
    explicit SeedEnv(const char * value) { ::setenv("RESTRICTOR_SEED", value, 1); }
    ~SeedEnv() { ::unsetenv("RESTRICTOR_SEED"); }
};

} // namespace

TEST(Gen, StarAndEmptyRandom)
{
    auto star = gen("star", 10, 0);
    ASSERT_EQ(star.exit_code, exit_ok);
    const auto g = parse_graph(star.output);
    EXPECT_EQ(g.size(), 10U);
    EXPECT_EQ(g.edge_count(), 9U);
    EXPECT_EQ(gen("random", 0, 0).exit_code, exit_error);
    EXPECT_EQ(gen("nonsense", 5, 0).exit_code, exit_parse);
}

TEST(Gen, HFreeHasNoTriangle)
{
    auto result = gen("hfree", 50, 7);
    ASSERT_EQ(result.exit_code, exit_ok);
    EXPECT_FALSE(find_induced_copy(parse_graph(result.output), *preset_pattern("K3")).has_value());
}

TEST(Gen, LayeredInstancesParse)
{
    auto path = gen("path-partition", 200, 3);
    ASSERT_EQ(path.exit_code, exit_ok) << path.errors;
    auto doc = restrictor::detail::parse_json(path.output);
    auto g = graph_from_json(doc.at("graph"));
    auto pp = path_partition_from_json(doc.at("path_partition"), g.size());
    EXPECT_EQ(pp.k(), 6U);
    EXPECT_TRUE(validate_path_partition(g, pp).ok());

    GenArgs tree;
    tree.kind = "tree-partition";
    tree.common = seeded(1);
    auto made = run_gen(tree);
    ASSERT_EQ(made.exit_code, exit_ok) << made.errors;
    auto tdoc = restrictor::detail::parse_json(made.output);
    auto tg = graph_from_json(tdoc.at("graph"));
    auto tp = tree_partition_from_json(tdoc.at("tree_partition"), tg.size());
    EXPECT_TRUE(validate_tree_partition(tg, tp).ok());
    EXPECT_TRUE(is_tight(tp));
}

TEST(Partition, EmptyGraphCertifies)
{
    testing_support::TempDir dir;
    PartitionArgs args;
    args.graph = dir.write("g.txt", render_graph(Graph(30)));
    args.common = seeded(1);
    auto result = run_partition(args);
    ASSERT_EQ(result.exit_code, exit_ok) << result.errors;
    auto doc = restrictor::detail::parse_json(result.output);
    EXPECT_EQ(doc.at("meta").at("achieved_counts").at("parts"), 1);
    EXPECT_EQ(doc.at("meta").at("H"), "K3");

    VerifyArgs verify;
    verify.graph = args.graph;
    verify.certificate = dir.write("c.json", result.output);
    auto checked = run_verify(verify);
    EXPECT_EQ(checked.exit_code, exit_ok);
    EXPECT_EQ(checked.output, "valid: 1 parts\n");
}

TEST(Partition, CompleteGraphReportsACopy)
{
    testing_support::TempDir dir;
    PartitionArgs args;
    args.graph = dir.write("k5.txt", render_graph(complement(Graph(5))));
    auto result = run_partition(args);
    ASSERT_EQ(result.exit_code, exit_induced_copy);
    auto doc = restrictor::detail::parse_json(result.output);
    std::vector<Vertex> mapping = doc.at("induced_copy").at("mapping").get<std::vector<Vertex>>();
    EXPECT_TRUE(brute::induced_copy(complement(Graph(5)), *preset_pattern("K3"), mapping));
}

TEST(Partition, ByteIdenticalReruns)
{
    testing_support::TempDir dir;
    PartitionArgs args;
    args.graph = dir.write("g.txt", gen("hfree", 60, 4).output);
    args.eps = 0.3;
    args.common = seeded(9);
    auto first = run_partition(args);
    auto second = run_partition(args);
    ASSERT_EQ(first.exit_code, exit_ok) << first.errors;
    EXPECT_EQ(first.output, second.output);
}

TEST(Partition, OutFileAndBadInputs)
{
    testing_support::TempDir dir;
    PartitionArgs args;
    args.graph = dir.write("g.txt", render_graph(Graph(8)));
    args.common.out = dir.file("cert.json");
    auto result = run_partition(args);
    ASSERT_EQ(result.exit_code, exit_ok);
    EXPECT_TRUE(result.output.empty());
    EXPECT_NO_THROW(certificate_from_json(restrictor::detail::parse_json(read_text_file(args.common.out)), 8));

    args.common.out.clear();
    args.pattern = "K9";
    EXPECT_EQ(run_partition(args).exit_code, exit_error); // neither preset nor file
    args.pattern = "K3";
    args.mode = "sideways";
    EXPECT_EQ(run_partition(args).exit_code, exit_parse);
    args.mode = "theoretical";
    EXPECT_EQ(run_partition(args).exit_code, exit_error); // no delta / gamma
    args.mode = "empirical";
    args.common.format = "yaml";
    EXPECT_EQ(run_partition(args).exit_code, exit_parse);
    args.common.format = "json";
    args.graph = dir.write("bad.txt", "3 1\n0 7\n");
    EXPECT_EQ(run_partition(args).exit_code, exit_parse);
}

TEST(Partition, SeedFromEnvironment)
{
    testing_support::TempDir dir;
    PartitionArgs args;
    args.graph = dir.write("g.txt", render_graph(Graph(6)));
    {
        SeedEnv env("42");
        auto result = run_partition(args);
        ASSERT_EQ(result.exit_code, exit_ok);
        EXPECT_EQ(restrictor::detail::parse_json(result.output).at("meta").at("seed"), 42);
    }
    {
        SeedEnv env("forty-two");
        EXPECT_EQ(run_partition(args).exit_code, exit_parse);
    }
    args.common.seed = 5;
    {
        SeedEnv env("42");
        EXPECT_EQ(restrictor::detail::parse_json(run_partition(args).output).at("meta").at("seed"), 5);
    }
}

TEST(Verify, TamperedCertificates)
{
    testing_support::TempDir dir;
    Graph g(8);
    for (Vertex u = 0; u < 4; ++u)
        for (Vertex v = u + 1; v < 4; ++v) g.add_edge(u, v);
    VerifyArgs verify;
    verify.graph = dir.write("g.txt", render_graph(g));

    PartitionCertificate good{0.1, {{VertexSet(8, {0, 1, 2, 3}), Side::complement}, {VertexSet(8, {4, 5, 6, 7}), Side::graph}}};
    verify.certificate = dir.write("good.json", dump(certificate_to_json(good)));
    EXPECT_EQ(run_verify(verify).exit_code, exit_ok);

    auto moved = good;
    moved.parts[1].vertices.erase(4);
    moved.parts[0].vertices.insert(4);
    verify.certificate = dir.write("moved.json", dump(certificate_to_json(moved)));
    auto report = run_verify(verify);
    EXPECT_EQ(report.exit_code, exit_error);
    EXPECT_NE(report.output.find("violation max-degree part=0"), std::string::npos) << report.output;

    auto wrong_side = good;
    wrong_side.parts[0].side = Side::graph;
    verify.certificate = dir.write("side.json", dump(certificate_to_json(wrong_side)));
    report = run_verify(verify);
    EXPECT_EQ(report.exit_code, exit_error);
    EXPECT_NE(report.output.find("violation max-degree part=0"), std::string::npos) << report.output;

    auto dropped = good;
    dropped.parts[1].vertices.erase(7);
    verify.certificate = dir.write("dropped.json", dump(certificate_to_json(dropped)));
    report = run_verify(verify);
    EXPECT_NE(report.output.find("coverage"), std::string::npos) << report.output;

    verify.certificate = dir.write("broken.json", "{\"eps\": 0.1, \"parts\": [{\"vertices\": [99], \"side\": \"graph\"}]}");
    EXPECT_EQ(run_verify(verify).exit_code, exit_parse);
}

TEST(FindRestricted, StarLeaves)
{
    testing_support::TempDir dir;
    FindRestrictedArgs args;
    args.graph = dir.write("star.txt", gen("star", 10, 0).output);
    auto result = run_find_restricted(args);
    ASSERT_EQ(result.exit_code, exit_ok);
    auto doc = restrictor::detail::parse_json(result.output);
    EXPECT_EQ(doc.at("size"), 9);
    EXPECT_EQ(doc.at("vertices").size(), 9U);
    args.search = "lucky";
    EXPECT_EQ(run_find_restricted(args).exit_code, exit_parse);
}

TEST(Embed, PathBlocks)
{
    testing_support::TempDir dir;
    Graph g(12);
    for (Vertex u = 0; u < 4; ++u)
        for (Vertex v = 4; v < 8; ++v) g.add_edge(u, v);
    for (Vertex u = 4; u < 8; ++u)
        for (Vertex v = 8; v < 12; ++v) g.add_edge(u, v);
    BlockSystem sys{*preset_pattern("P3"),
                    {VertexSet(12, {0, 1, 2, 3}), VertexSet(12, {4, 5, 6, 7}), VertexSet(12, {8, 9, 10, 11})},
                    0.5};
    EmbedArgs args;
    args.instance = dir.write("p3.json", dump(json{{"graph", graph_to_json(g)}, {"block_system", block_system_to_json(sys)}}));
    auto result = run_embed(args);
    ASSERT_EQ(result.exit_code, exit_ok) << result.errors;
    EXPECT_EQ(restrictor::detail::parse_json(result.output).at("mapping"), json::array({0, 4, 8}));

    args.instance = dir.write("empty.json", dump(json{{"graph", graph_to_json(Graph(12))}, {"block_system", block_system_to_json(sys)}}));
    EXPECT_EQ(run_embed(args).exit_code, exit_error); // no viable vertex
    args.instance = dir.write("bare.json", "{}");
    EXPECT_EQ(run_embed(args).exit_code, exit_parse);
}

TEST(CoverPathCommand, GeneratedFixture)
{
    testing_support::TempDir dir;
    CoverPathArgs args;
    args.instance = dir.write("pp.json", gen("path-partition", 200, 6).output);
    args.common = seeded(2);
    auto result = run_cover_path(args);
    ASSERT_EQ(result.exit_code, exit_ok) << result.errors;
    auto doc = restrictor::detail::parse_json(result.output);
    EXPECT_EQ(doc.at("meta").at("branch"), 1);
    EXPECT_EQ(doc.at("meta").at("bound"), 82953);

    const auto instance = restrictor::detail::parse_json(read_text_file(args.instance));
    VerifyArgs verify;
    verify.graph = dir.write("g.txt", render_graph(graph_from_json(instance.at("graph"))));
    verify.certificate = dir.write("c.json", result.output);
    EXPECT_EQ(run_verify(verify).exit_code, exit_ok);

    args.eps = 0.25; // k = 8 expected
    EXPECT_EQ(run_cover_path(args).exit_code, exit_error);
}

TEST(Lemma, TriangleFreeOutput)
{
    testing_support::TempDir dir;
    LemmaArgs args;
    args.graph = dir.write("g.txt", gen("hfree", 60, 2).output);
    args.common = seeded(4);
    auto result = run_lemma(args);
    ASSERT_EQ(result.exit_code, exit_ok) << result.errors;
    auto doc = restrictor::detail::parse_json(result.output);
    EXPECT_TRUE(doc.at("pairs").is_array());
    EXPECT_GE(doc.at("c_sets").size(), 1U);
    EXPECT_EQ(run_lemma(args).output, result.output);
}
