#pragma once

#include "restrictor/embedding.hpp"
#include "restrictor/generators.hpp"
#include "restrictor/io.hpp"
#include "restrictor/main_lemma.hpp"
#include "restrictor/oracles.hpp"
#include "restrictor/partitions.hpp"
#include "restrictor/theorem.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

namespace restrictor::cli {

enum ExitCode : int
{
    exit_ok = 0,
    exit_error = 1,
    exit_parse = 2,
    exit_induced_copy = 3,
};

struct CommandResult
{
    int exit_code = exit_ok;
    std::string output; ///< what goes to stdout (empty when written to --out)
    std::string errors; ///< what goes to stderr
};

/// Flags shared by most commands.
struct CommonArgs
{
    std::optional<std::uint64_t> seed;
    std::string out;
    std::string format = "json";
    std::size_t retry_cap = 1000;
    std::size_t exact_cap = 20;
};

/// --seed, else RESTRICTOR_SEED, else 0.
inline auto resolve_seed(const std::optional<std::uint64_t> & flag) -> std::uint64_t
{
    if (flag) return *flag;
    const char * env = std::getenv("RESTRICTOR_SEED");
    if (env == nullptr || *env == '\0') return 0;
    std::size_t used = 0;
    unsigned long long value = 0;
    try {
        value = std::stoull(env, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used == 0 || env[used] != '\0') throw ParseError(std::string("RESTRICTOR_SEED is not an integer: ") + env);
    return value;
}

namespace detail {

inline auto emit(const CommonArgs & common, const std::string & text, int code = exit_ok) -> CommandResult
{
    if (common.out.empty()) return {code, text, {}};
    std::ofstream file(common.out, std::ios::binary | std::ios::trunc);
    if (!file) return {exit_error, {}, "cannot write " + common.out + "\n"};
    file << text;
    return {code, {}, {}};
}

inline void check_format(const CommonArgs & common)
{
    if (common.format != "json") throw ParseError("unsupported --format '" + common.format + "' (only json)");
}

inline auto copy_json(const std::vector<Vertex> & mapping) -> json
{
    json out = json::array();
    for (auto v : mapping) out.push_back(v);
    return out;
}

inline auto search_mode(const std::string & name) -> SearchMode
{
    if (name == "greedy") return SearchMode::greedy;
    if (name == "exact") return SearchMode::exact;
    throw ParseError("unknown search mode '" + name + "'");
}

inline auto schedule_mode(const std::string & name) -> ScheduleMode
{
    if (name == "empirical") return ScheduleMode::empirical;
    if (name == "theoretical") return ScheduleMode::theoretical;
    throw ParseError("unknown schedule mode '" + name + "'");
}

inline auto ladder(const std::string & name) -> AnchorLadder
{
    if (name == "increasing") return AnchorLadder::increasing;
    if (name == "as-printed") return AnchorLadder::as_printed;
    throw ParseError("unknown anchor ladder '" + name + "'");
}

/// Run `body`, mapping the library's exceptions to exit codes.
template <typename Body>
auto guarded(Body && body) -> CommandResult
{
    try {
        return body();
    } catch (const ParseError & e) {
        return {exit_parse, {}, std::string("parse error: ") + e.what() + "\n"};
    } catch (const StallDetected & e) {
        const auto & s = e.state();
        std::ostringstream ledger;
        ledger << "error: " << e.what() << "\nledger: pairs=" << s.k() << " c_sets=" << s.ell()
               << " anchors=" << s.m() << " residue=" << s.residue.count() << "\n";
        for (std::size_t i = 0; i < s.anchors.size(); ++i)
            ledger << "  anchor " << i << ": " << s.anchors[i].count() << " vertices\n";
        for (const auto & c : s.claims)
            ledger << "  claim (" << c.i << ", " << c.j << ") " << to_string(c.side) << ": " << to_string(c.status)
                   << "\n";
        return {exit_error, {}, ledger.str()};
    } catch (const std::exception & e) {
        return {exit_error, {}, std::string("error: ") + e.what() + "\n"};
    }
}

} // namespace detail

// ---------------------------------------------------------------------------
// gen

struct GenArgs
{
    std::string kind; ///< random | hfree | star | split | path-partition | tree-partition | blocks
    std::size_t n = 50;
    double p = 0.3;
    std::string pattern = "K3";
    std::size_t clique = 0;
    double eps = 1.0 / 3.0;
    double eta = 1.0 / 24.0;
    std::size_t h = 1;
    std::size_t ell = 2;
    std::size_t block_size = 4;
    double noise = 0.0;
    CommonArgs common;
};

namespace detail {

inline auto random_sides(std::size_t count, Engine & engine) -> std::vector<Side>
{
    std::vector<Side> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(uniform_below(engine, 2) == 0 ? Side::graph : Side::complement);
    return out;
}

/// Level sizes n, n/13, n/169, ...: each tail is at most a twelfth of its level.
inline auto shrinking_sizes(std::size_t first, std::size_t levels) -> std::vector<std::size_t>
{
    std::vector<std::size_t> sizes{first};
    while (sizes.size() < levels) sizes.push_back(sizes.back() / 13);
    return sizes;
}

/// Complete h-ary tree down to depth ell-1, then one child per node; bags
/// sized bottom-up so that every node holds 1/eta times its descendants.
inline auto tight_tree_shape(std::size_t h, std::size_t ell, double eta)
    -> std::pair<std::vector<Vertex>, std::vector<std::size_t>>
{
    std::vector<Vertex> parents{no_vertex};
    std::vector<std::size_t> depth{0};
    for (std::size_t at = 0; at < parents.size(); ++at) {
        if (depth[at] == ell) continue;
        const auto kids = depth[at] + 1 == ell ? 1 : h;
        for (std::size_t c = 0; c < kids; ++c) {
            parents.push_back(static_cast<Vertex>(at));
            depth.push_back(depth[at] + 1);
        }
    }
    std::vector<std::size_t> sizes(parents.size(), 1);
    std::vector<std::size_t> below(parents.size(), 0);
    for (std::size_t t = parents.size(); t-- > 0;) {
        if (depth[t] < ell) sizes[t] = std::max<std::size_t>(1, ceil_count(static_cast<double>(below[t]) / eta));
        if (parents[t] != no_vertex) below[parents[t]] += below[t] + sizes[t];
    }
    return {parents, sizes};
}

} // namespace detail

inline auto run_gen(const GenArgs & args) -> CommandResult
{
    return detail::guarded([&]() -> CommandResult {
        detail::check_format(args.common);
        const auto seed = resolve_seed(args.common.seed);
        if (args.kind == "random") return detail::emit(args.common, render_graph(random_graph(args.n, args.p, seed)));
        if (args.kind == "hfree")
            return detail::emit(args.common,
                                render_graph(hfree_graph(resolve_pattern(args.pattern), args.n, args.p, seed)));
        if (args.kind == "star") return detail::emit(args.common, render_graph(star_graph(args.n)));
        if (args.kind == "split")
            return detail::emit(args.common, render_graph(split_graph(args.n, args.clique, args.p, seed)));

        auto engine = make_engine(derive_seed(seed, 1));
        if (args.kind == "path-partition") {
            const auto k = ceil_count(2.0 / args.eps);
            const auto sizes = detail::shrinking_sizes(args.n, k + 1);
            auto inst = path_partition_instance(sizes, args.eps / 2.0, detail::random_sides(k, engine),
                                                detail::random_sides(k + 1, engine), seed);
            json doc{{"graph", graph_to_json(inst.graph)}, {"path_partition", path_partition_to_json(inst.partition)}};
            return detail::emit(args.common, dump(doc));
        }
        if (args.kind == "tree-partition") {
            auto [parents, sizes] = detail::tight_tree_shape(args.h, args.ell, args.eta);
            const auto nodes = parents.size();
            auto inst = tree_partition_instance(parents, sizes, args.h, args.ell, args.eps, args.eta,
                                                detail::random_sides(nodes, engine), detail::random_sides(nodes, engine),
                                                seed);
            json doc{{"graph", graph_to_json(inst.graph)}, {"tree_partition", tree_partition_to_json(inst.partition)}};
            return detail::emit(args.common, dump(doc));
        }
        if (args.kind == "blocks") {
            auto inst = block_system_instance(resolve_pattern(args.pattern), args.block_size, args.eps, args.noise,
                                              args.p, seed);
            json doc{{"graph", graph_to_json(inst.graph)}, {"block_system", block_system_to_json(inst.system)}};
            return detail::emit(args.common, dump(doc));
        }
        throw ParseError("unknown generator kind '" + args.kind + "'");
    });
}

// ---------------------------------------------------------------------------
// partition

struct PartitionArgs
{
    std::string graph;
    std::string pattern = "K3";
    double eps = 0.2;
    std::string mode = "empirical";
    std::string search = "greedy";
    std::string ladder = "increasing";
    std::optional<double> delta; ///< constant delta, theoretical mode
    std::optional<double> gamma; ///< constant gamma, theoretical mode
    CommonArgs common;
};

inline auto lemma_config(const std::string & mode, const std::string & search, const std::string & ladder,
                         std::optional<double> delta, std::optional<double> gamma, const CommonArgs & common)
    -> LemmaConfig
{
    LemmaConfig config;
    config.schedule.mode = detail::schedule_mode(mode);
    config.schedule.ladder = detail::ladder(ladder);
    if (delta) config.schedule.delta = [d = *delta](double) { return d; };
    if (gamma) config.schedule.gamma = [c = *gamma](std::size_t, std::size_t) { return c; };
    config.mode = detail::search_mode(search);
    config.full_pair.fullness.exact_cap = common.exact_cap;
    return config;
}

inline auto induced_copy_json(const Graph & pattern, const std::vector<Vertex> & mapping) -> json
{
    return {{"induced_copy", {{"pattern", graph_to_json(pattern)}, {"mapping", detail::copy_json(mapping)}}}};
}

inline auto run_partition(const PartitionArgs & args) -> CommandResult
{
    return detail::guarded([&]() -> CommandResult {
        detail::check_format(args.common);
        const auto seed = resolve_seed(args.common.seed);
        const auto g = load_graph(args.graph);
        const auto pattern = resolve_pattern(args.pattern);
        const auto config = lemma_config(args.mode, args.search, args.ladder, args.delta, args.gamma, args.common);
        CoverPathOptions cover;
        cover.retry_cap = args.common.retry_cap;

        auto result = partition_into_restricted(g, pattern, args.eps, config, seed, cover);
        if (auto * copy = std::get_if<InducedCopy>(&result.outcome)) {
            if (!is_induced_copy(g, pattern, copy->mapping))
                throw ValidationFailed("induced copy failed verification");
            return detail::emit(args.common, dump(induced_copy_json(pattern, copy->mapping)), exit_induced_copy);
        }
        const auto & cert = std::get<PartitionCertificate>(result.outcome);
        if (!verify_certificate(g, cert).ok()) throw ValidationFailed("certificate failed verification");
        const auto & s = result.stats;
        json meta{{"seed", seed},
                  {"mode", args.mode},
                  {"H", args.pattern},
                  {"bound", s.bound},
                  {"achieved_counts",
                   {{"parts", cert.parts.size()},
                    {"pairs", s.pairs},
                    {"lemma_c_sets", s.lemma_c_sets},
                    {"lemma_runs", s.lemma_runs},
                    {"n_used", s.n_used}}}};
        return detail::emit(args.common, dump(certificate_to_json(cert, meta)));
    });
}

// ---------------------------------------------------------------------------
// lemma

struct LemmaArgs
{
    std::string graph;
    std::string pattern = "K3";
    double eps = 0.25;
    double eta = 0.2;
    double theta = 0.25;
    std::string mode = "empirical";
    std::string search = "greedy";
    std::string ladder = "increasing";
    std::optional<double> delta;
    std::optional<double> gamma;
    CommonArgs common;
};

inline auto run_lemma(const LemmaArgs & args) -> CommandResult
{
    return detail::guarded([&]() -> CommandResult {
        detail::check_format(args.common);
        const auto seed = resolve_seed(args.common.seed);
        const auto g = load_graph(args.graph);
        const auto pattern = resolve_pattern(args.pattern);
        const auto config = lemma_config(args.mode, args.search, args.ladder, args.delta, args.gamma, args.common);

        auto outcome = main_lemma_partition(g, pattern, args.eps, args.eta, args.theta, config, seed);
        if (auto * copy = std::get_if<InducedCopy>(&outcome)) {
            if (!is_induced_copy(g, pattern, copy->mapping))
                throw ValidationFailed("induced copy failed verification");
            return detail::emit(args.common, dump(induced_copy_json(pattern, copy->mapping)), exit_induced_copy);
        }
        const auto & lemma = std::get<LemmaPartition>(outcome);
        json pairs = json::array();
        for (const auto & pair : lemma.pairs)
            pairs.push_back({{"a", restrictor::detail::set_to_json(pair.a)},
                             {"b", restrictor::detail::set_to_json(pair.b)},
                             {"side", std::string(to_string(pair.side))}});
        json c_sets = json::array();
        for (const auto & c : lemma.c_sets)
            c_sets.push_back({{"vertices", restrictor::detail::set_to_json(c.vertices)},
                              {"side", std::string(to_string(c.side))}});
        json doc{{"eps", lemma.schedule.eps},
                 {"eta", lemma.schedule.eta},
                 {"theta", lemma.schedule.theta},
                 {"pairs", std::move(pairs)},
                 {"c_sets", std::move(c_sets)},
                 {"stats",
                  {{"iterations", lemma.stats.iterations},
                   {"repairs", lemma.stats.repairs},
                   {"achieved_n", lemma.stats.achieved_n},
                   {"ell_bound", lemma.stats.ell_bound}}}};
        return detail::emit(args.common, dump(doc));
    });
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs
{
    std::string graph;
    std::string certificate;
    CommonArgs common;
};

inline auto run_verify(const VerifyArgs & args) -> CommandResult
{
    return detail::guarded([&]() -> CommandResult {
        const auto g = load_graph(args.graph);
        const auto doc = restrictor::detail::parse_json(read_text_file(args.certificate));
        const auto cert = certificate_from_json(doc, g.size());
        const auto report = verify_certificate(g, cert);
        std::ostringstream text;
        if (report.ok()) {
            text << "valid: " << cert.parts.size() << " parts\n";
            return detail::emit(args.common, text.str());
        }
        for (const auto & v : report.violations) {
            text << "violation " << v.clause;
            if (v.part) text << " part=" << *v.part;
            if (v.vertex) text << " vertex=" << *v.vertex;
            text << ": " << v.detail << "\n";
        }
        return detail::emit(args.common, text.str(), exit_error);
    });
}

// ---------------------------------------------------------------------------
// embed, cover-path, find-restricted

struct EmbedArgs
{
    std::string instance; ///< JSON with "graph" and "block_system"
    CommonArgs common;
};

inline auto run_embed(const EmbedArgs & args) -> CommandResult
{
    return detail::guarded([&]() -> CommandResult {
        detail::check_format(args.common);
        const auto doc = restrictor::detail::parse_json(read_text_file(args.instance));
        if (!doc.contains("graph") || !doc.contains("block_system"))
            throw ParseError("instance needs 'graph' and 'block_system'");
        const auto g = graph_from_json(doc.at("graph"));
        const auto sys = block_system_from_json(doc.at("block_system"), g.size());
        const auto embedding = embed_transversal(g, sys);
        json out{{"mapping", detail::copy_json(embedding.mapping)}};
        return detail::emit(args.common, dump(out));
    });
}

struct CoverPathArgs
{
    std::string instance; ///< JSON with "graph" and "path_partition"
    double eps = 1.0 / 3.0;
    CommonArgs common;
};

inline auto run_cover_path(const CoverPathArgs & args) -> CommandResult
{
    return detail::guarded([&]() -> CommandResult {
        detail::check_format(args.common);
        const auto seed = resolve_seed(args.common.seed);
        const auto doc = restrictor::detail::parse_json(read_text_file(args.instance));
        if (!doc.contains("graph") || !doc.contains("path_partition"))
            throw ParseError("instance needs 'graph' and 'path_partition'");
        const auto g = graph_from_json(doc.at("graph"));
        const auto pp = path_partition_from_json(doc.at("path_partition"), g.size());
        CoverPathOptions options;
        options.retry_cap = args.common.retry_cap;
        const auto result = cover_path(g, pp, args.eps, seed, options);
        const auto ground = restrictor::detail::union_of(g.size(), pp.levels);
        if (!verify_certificate(g, result.certificate, ground).ok())
            throw ValidationFailed("cover_path certificate failed verification");
        json meta{{"seed", seed},
                  {"branch", result.branch},
                  {"p", result.p},
                  {"bound", result.bound},
                  {"attempts", result.attempts},
                  {"fallback_rounds", result.fallback_rounds}};
        return detail::emit(args.common, dump(certificate_to_json(result.certificate, meta)));
    });
}

struct FindRestrictedArgs
{
    std::string graph;
    double eps = 0.3;
    std::string search = "exact";
    CommonArgs common;
};

inline auto run_find_restricted(const FindRestrictedArgs & args) -> CommandResult
{
    return detail::guarded([&]() -> CommandResult {
        detail::check_format(args.common);
        const auto g = load_graph(args.graph);
        const auto found = find_restricted_subset(g, g.vertices(), args.eps, detail::search_mode(args.search));
        json out{{"size", found.vertices.count()},
                 {"side", std::string(to_string(found.side))},
                 {"vertices", restrictor::detail::set_to_json(found.vertices)}};
        return detail::emit(args.common, dump(out));
    });
}

} // namespace restrictor::cli
