#include "restrictor/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace cli = restrictor::cli;

namespace {

void add_common(CLI::App * app, cli::CommonArgs & common)
{
    app->add_option("--seed", common.seed, "Seed (falls back to RESTRICTOR_SEED, then 0)");
    app->add_option("--out", common.out, "Write the result here instead of stdout");
    app->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json"}));
    app->add_option("--retry-cap", common.retry_cap, "Covering retries before giving up");
    app->add_option("--exact-cap", common.exact_cap, "Largest side enumerated by the exact fullness checker");
}

void add_schedule(CLI::App * app, std::string & mode, std::string & search, std::string & ladder,
                  std::optional<double> & delta, std::optional<double> & gamma)
{
    app->add_option("--mode", mode, "Schedule mode")->check(CLI::IsMember({"empirical", "theoretical"}));
    app->add_option("--search", search, "Oracle search mode")->check(CLI::IsMember({"greedy", "exact"}));
    app->add_option("--ladder", ladder, "Anchor level ladder")->check(CLI::IsMember({"increasing", "as-printed"}));
    app->add_option("--delta", delta, "Constant delta for theoretical mode");
    app->add_option("--gamma", gamma, "Constant gamma for theoretical mode");
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"Partition graphs into eps-restricted sets or find an induced copy of H"};
    app.require_subcommand(1);

    cli::GenArgs gen;
    auto * gen_cmd = app.add_subcommand("gen", "Generate an instance");
    gen_cmd->add_option("kind", gen.kind, "random|hfree|star|split|path-partition|tree-partition|blocks")->required();
    gen_cmd->add_option("count", gen.n, "Number of vertices (or first level / star size)");
    gen_cmd->add_option("--n", gen.n, "Number of vertices");
    gen_cmd->add_option("--p", gen.p, "Edge probability");
    gen_cmd->add_option("--H", gen.pattern, "Forbidden pattern: preset name or graph file");
    gen_cmd->add_option("--clique", gen.clique, "Clique size for split graphs");
    gen_cmd->add_option("--eps", gen.eps, "eps for partition and block instances");
    gen_cmd->add_option("--eta", gen.eta, "eta for tree-partitions");
    gen_cmd->add_option("--branching", gen.h, "Branching bound for tree-partitions");
    gen_cmd->add_option("--ell", gen.ell, "Depth for tree-partitions");
    gen_cmd->add_option("--block-size", gen.block_size, "Block size for block systems");
    gen_cmd->add_option("--noise", gen.noise, "Cross-pair flip probability for block systems");
    add_common(gen_cmd, gen.common);

    cli::PartitionArgs part;
    auto * part_cmd = app.add_subcommand("partition", "Certificate or induced copy");
    part_cmd->add_option("graph", part.graph, "Graph file")->required();
    part_cmd->add_option("--H", part.pattern, "Forbidden pattern: preset name or graph file");
    part_cmd->add_option("--eps", part.eps, "Restriction level in (0, 1]");
    add_schedule(part_cmd, part.mode, part.search, part.ladder, part.delta, part.gamma);
    add_common(part_cmd, part.common);

    cli::LemmaArgs lemma;
    auto * lemma_cmd = app.add_subcommand("lemma", "Run the pair/C-set decomposition alone");
    lemma_cmd->add_option("graph", lemma.graph, "Graph file")->required();
    lemma_cmd->add_option("--H", lemma.pattern, "Forbidden pattern: preset name or graph file");
    lemma_cmd->add_option("--eps", lemma.eps, "eps");
    lemma_cmd->add_option("--eta", lemma.eta, "eta");
    lemma_cmd->add_option("--theta", lemma.theta, "theta");
    add_schedule(lemma_cmd, lemma.mode, lemma.search, lemma.ladder, lemma.delta, lemma.gamma);
    add_common(lemma_cmd, lemma.common);

    cli::VerifyArgs verify;
    auto * verify_cmd = app.add_subcommand("verify", "Re-check a certificate");
    verify_cmd->add_option("graph", verify.graph, "Graph file")->required();
    verify_cmd->add_option("certificate", verify.certificate, "Certificate JSON")->required();
    verify_cmd->add_option("--out", verify.common.out, "Write the report here instead of stdout");

    cli::EmbedArgs embed;
    auto * embed_cmd = app.add_subcommand("embed", "Induced transversal of a block system");
    embed_cmd->add_option("instance", embed.instance, "JSON with graph and block_system")->required();
    add_common(embed_cmd, embed.common);

    cli::CoverPathArgs cover;
    auto * cover_cmd = app.add_subcommand("cover-path", "Cover a path-partition");
    cover_cmd->add_option("instance", cover.instance, "JSON with graph and path_partition")->required();
    cover_cmd->add_option("--eps", cover.eps, "Target eps");
    add_common(cover_cmd, cover.common);

    cli::FindRestrictedArgs find;
    auto * find_cmd = app.add_subcommand("find-restricted", "Large eps-restricted subset");
    find_cmd->add_option("graph", find.graph, "Graph file")->required();
    find_cmd->add_option("--eps", find.eps, "eps");
    find_cmd->add_option("--search", find.search, "greedy or exact")->check(CLI::IsMember({"greedy", "exact"}));
    add_common(find_cmd, find.common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    } catch (const CLI::ParseError & e) {
        app.exit(e);
        return cli::exit_parse;
    }

    cli::CommandResult result;
    if (gen_cmd->parsed()) result = cli::run_gen(gen);
    else if (part_cmd->parsed()) result = cli::run_partition(part);
    else if (lemma_cmd->parsed()) result = cli::run_lemma(lemma);
    else if (verify_cmd->parsed()) result = cli::run_verify(verify);
    else if (embed_cmd->parsed()) result = cli::run_embed(embed);
    else if (cover_cmd->parsed()) result = cli::run_cover_path(cover);
    else if (find_cmd->parsed()) result = cli::run_find_restricted(find);

    std::cout << result.output;
    std::cerr << result.errors;
    return result.exit_code;
}
