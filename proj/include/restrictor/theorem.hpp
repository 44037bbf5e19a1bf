#pragma once

#include "restrictor/main_lemma.hpp"
#include "restrictor/outcome.hpp"
#include "restrictor/small_tree.hpp"

#include <cmath>
#include <variant>

namespace restrictor {

struct TheoremStats
{
    std::size_t big_k = 0;       ///< K = ceil(2/eps)
    std::size_t h = 0;           ///< |H|^2
    double eta = 0.0;            ///< 1/(24 h^K)
    double n_used = 0.0;         ///< N in the bound (achieved in empirical mode)
    double bound = 0.0;          ///< M
    std::size_t pairs = 0;       ///< pairs handed to the tree cover
    std::size_t lemma_c_sets = 0;
    std::size_t lemma_runs = 0;
};

struct TheoremResult
{
    Outcome outcome;
    TheoremStats stats;
};

/// M = h^(K+1) ((K - 1) N + 9218 eps^-2) + N.
inline auto theorem_bound(std::size_t h, std::size_t big_k, double n, double eps) -> double
{
    const double hk1 = std::pow(static_cast<double>(h), static_cast<double>(big_k + 1));
    return hk1 * ((static_cast<double>(big_k) - 1.0) * n + 9218.0 / (eps * eps)) + n;
}

/// Partition V(g) into eps-restricted sets, or exhibit an induced copy of H.
inline auto partition_into_restricted(const Graph & g, const Graph & pattern, double eps, const LemmaConfig & config,
                                      std::uint64_t seed, const CoverPathOptions & options = {}) -> TheoremResult
{
    if (!(eps > 0.0 && at_most(eps, 1.0))) throw PreconditionViolated("eps must lie in (0, 1]");
    if (g.size() == 0) throw PreconditionViolated("the input graph has no vertices");

    TheoremStats stats;
    stats.big_k = ceil_count(2.0 / eps);
    stats.h = pattern.size() * pattern.size();
    const double hk = std::pow(static_cast<double>(stats.h), static_cast<double>(stats.big_k));
    stats.eta = 1.0 / (24.0 * hk);
    const double lemma_eps = eps / (4.0 * hk);
    const double lemma_theta = eps / (48.0 * hk);

    auto lemma = main_lemma_partition(g, pattern, lemma_eps, stats.eta, lemma_theta, config, derive_seed(seed, 0));
    if (auto * copy = std::get_if<InducedCopy>(&lemma)) return {*copy, stats};
    auto & top = std::get<LemmaPartition>(lemma);
    stats.lemma_runs = 1;
    stats.lemma_c_sets = top.c_sets.size();
    stats.pairs = top.pairs.size();
    double n_used = static_cast<double>(top.c_sets.size());

    PartitionCertificate cert;
    cert.eps = eps;
    for (const auto & c : top.c_sets) {
        auto part = restricted_part(g, c.vertices, eps);
        if (!part) throw ValidationFailed("a main-lemma C-set is not eps-restricted");
        cert.parts.push_back(std::move(*part));
    }
    for (std::size_t i = 0; i < top.pairs.size(); ++i) {
        const auto & pair = top.pairs[i];
        TreePartition tp{RootedTree::from_parents({no_vertex, 0}), {pair.a, pair.b}, stats.h, 1, lemma_eps,
                         stats.eta, {pair.side, Side::graph}};
        auto covered = cover_small_tree(g, tp, pattern, eps, config, derive_seed(seed, i + 1), pair.a | pair.b, options);
        if (auto * copy = std::get_if<InducedCopy>(&covered)) return {*copy, stats};
        auto & result = std::get<SmallTreeResult>(covered);
        stats.lemma_runs += result.lemma_runs;
        n_used = std::max(n_used, static_cast<double>(result.achieved_n));
        for (auto & part : result.certificate.parts) cert.parts.push_back(std::move(part));
    }

    if (config.schedule.mode == ScheduleMode::theoretical && top.schedule.N) n_used = *top.schedule.N;
    stats.n_used = n_used;
    stats.bound = theorem_bound(stats.h, stats.big_k, n_used, eps);
    if (static_cast<double>(cert.parts.size()) > stats.bound)
        throw std::logic_error("partition exceeded the bound M");
    if (auto report = verify_certificate(g, cert); !report.ok())
        throw ValidationFailed("final certificate failed verification: " + report.violations.front().detail);
    return {std::move(cert), stats};
}

} // namespace restrictor
