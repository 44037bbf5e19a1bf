#pragma once

#include "restrictor/certificate.hpp"
#include "restrictor/embedding.hpp"
#include "restrictor/fullness.hpp"
#include "restrictor/graph.hpp"
#include "restrictor/induced_copy.hpp"
#include "restrictor/oracles.hpp"
#include "restrictor/outcome.hpp"
#include "restrictor/partitions.hpp"
#include "restrictor/predicates.hpp"
#include "restrictor/rng.hpp"
#include "restrictor/schedule.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <variant>
#include <vector>

namespace restrictor {

/// (A_i, B_i): B_i is theta-sparse (graph) or theta-dense (complement) to A_i.
struct PairEntry
{
    VertexSet a;
    VertexSet b;
    Side side = Side::graph;
};

/// Claimed fullness (side graph) or emptiness (complement) of anchors (i, j).
struct FullnessClaim
{
    std::size_t i = 0;
    std::size_t j = 0;
    Side side = Side::graph;
    FullnessStatus status = FullnessStatus::trusted;
};

/// A partition of type (k, ell, m): pairs, C-sets, anchors D_1..D_m and
/// the residue E.
struct LemmaState
{
    std::vector<PairEntry> pairs;
    std::vector<Part> c_sets;
    std::vector<VertexSet> anchors;
    std::vector<FullnessClaim> claims;
    VertexSet residue;
    /// Allowed number of C-sets: ell_m from the schedule (theoretical) or
    /// the decay bound accumulated from achieved ratios (empirical).
    double ell_bound = 0.0;

    auto k() const -> std::size_t { return pairs.size(); }
    auto ell() const -> std::size_t { return c_sets.size(); }
    auto m() const -> std::size_t { return anchors.size(); }
};

class StallDetected : public Error
{
public:
    StallDetected(const std::string & reason, LemmaState state) :
        Error("main lemma stalled: " + reason), state_(std::move(state))
    {
    }

    auto state() const -> const LemmaState & { return state_; }

private:
    LemmaState state_;
};

struct LemmaReport
{
    std::vector<ClauseViolation> violations;
    std::vector<FullnessClaim> claims; ///< with the status the verifier assigned

    auto ok() const -> bool { return violations.empty(); }
};

/// Check every condition of a type-(k, ell, m) partition of `ground`.
/// Fullness claims are re-checked exactly when the checker's cap allows,
/// otherwise the ledger's status (witnessed or trusted) is reported as is.
inline auto verify_lemma_state(const Graph & g, const Graph & pattern, const LemmaState & state,
                               const ParamSchedule & schedule, const VertexSet & ground,
                               const FullnessOptions & fullness = {}) -> LemmaReport
{
    LemmaReport report;
    auto flag = [&](std::string clause, std::optional<std::size_t> index, std::string detail) {
        report.violations.push_back({std::move(clause), index, std::move(detail)});
    };
    const auto m = state.m();
    if (m > schedule.h) {
        flag("counts", std::nullopt, "more anchors than pattern vertices");
        return report;
    }

    // The terminal step turns the anchors into pairs and leaves m = 0.
    const bool terminal = m == 0 && state.residue.empty();
    if (state.k() > schedule.k_m[terminal ? schedule.h : m]) flag("counts", std::nullopt, "k exceeds k_m");
    if (!at_most(static_cast<double>(state.ell()), state.ell_bound))
        flag("counts", std::nullopt,
             "ell = " + std::to_string(state.ell()) + " exceeds the bound " + std::to_string(state.ell_bound));

    std::vector<VertexSet> family;
    for (const auto & pair : state.pairs) {
        family.push_back(pair.a);
        family.push_back(pair.b);
    }
    for (const auto & part : state.c_sets) family.push_back(part.vertices);
    for (const auto & d : state.anchors) family.push_back(d);
    family.push_back(state.residue);
    {
        ValidationReport cover;
        detail::check_family(g, family, ground, false, cover);
        for (auto & v : cover.violations) flag("conservation", std::nullopt, v.clause + ": " + v.detail);
    }

    for (std::size_t i = 0; i < state.pairs.size(); ++i) {
        const auto & pair = state.pairs[i];
        if (pair.a.empty()) flag("nonempty", i, "A is empty");
        else if (!is_restricted(g, pair.a, schedule.eps)) flag("restricted", i, "A is not eps-restricted");
        if (!at_most(static_cast<double>(pair.b.count()), schedule.eta * static_cast<double>(pair.a.count())))
            flag("pair-size", i, "|B| exceeds eta|A|");
        else if (!pair.a.empty() && !is_sparse_to(g, pair.b, pair.a, schedule.theta, pair.side))
            flag("pair-sparse", i, "B is not theta-sparse/dense to A as recorded");
    }
    for (std::size_t i = 0; i < state.c_sets.size(); ++i) {
        const auto & c = state.c_sets[i].vertices;
        if (c.empty()) flag("nonempty", i, "C-set is empty");
        else if (!is_restricted(g, c, schedule.eps)) flag("restricted", i, "C-set is not eps-restricted");
    }
    std::size_t min_anchor = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < m; ++i) {
        const auto & d = state.anchors[i];
        min_anchor = std::min(min_anchor, d.count());
        if (d.empty()) flag("nonempty", i, "anchor is empty");
        else if (!is_restricted(g, d, schedule.eps_m[m])) flag("anchor-restricted", i, "anchor is not eps_m-restricted");
    }

    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            const auto side = pattern.adjacent(i, j) ? Side::graph : Side::complement;
            FullnessClaim claim{i, j, side, FullnessStatus::trusted};
            for (const auto & c : state.claims)
                if (c.i == i && c.j == j) claim.status = c.status;
            const auto & a = state.anchors[i];
            const auto & b = state.anchors[j];
            if (!a.empty() && !b.empty() && exact_check_feasible(a.count(), b.count(), schedule.c[m], fullness)) {
                if (is_full_pair_exact(g, a, b, schedule.c[m], schedule.theta / 4.0, side, fullness))
                    claim.status = FullnessStatus::verified;
                else
                    flag("anchor-fullness", i, "anchors " + std::to_string(i) + ", " + std::to_string(j) +
                                                   " are not (c_m, theta/4)-" +
                                                   (side == Side::graph ? "full" : "empty"));
            }
            report.claims.push_back(claim);
        }

    if (m > 0 && !at_most(static_cast<double>(state.residue.count()),
                          schedule.eta / 2.0 * static_cast<double>(min_anchor)))
        flag("residue", std::nullopt, "|E| exceeds (eta/2) min |D_i|");
    return report;
}

struct LemmaConfig
{
    ScheduleConfig schedule;
    SearchMode mode = SearchMode::greedy;
    /// Look for an induced copy of H in the ground set before anything else.
    bool check_hypothesis = true;
    FullPairOptions full_pair;
    /// Split any output set that fails eps-restrictedness instead of failing.
    bool repair = true;
};

struct LemmaStats
{
    std::size_t iterations = 0;
    std::size_t repairs = 0;
    /// Number of C-sets in the final output (the achieved n).
    std::size_t achieved_n = 0;
    double ell_bound = 0.0;
    std::vector<double> achieved_delta; ///< |F|/|E| per iteration
};

struct LemmaPartition
{
    std::vector<PairEntry> pairs; ///< all with B nonempty
    std::vector<Part> c_sets;
    LemmaState final_state;
    ParamSchedule schedule;
    LemmaStats stats;
};

using LemmaOutcome = std::variant<LemmaPartition, InducedCopy>;

namespace detail {

inline auto lowest(const VertexSet & s, std::size_t count) -> VertexSet
{
    VertexSet out(s.universe());
    for (auto v : s) {
        if (out.count() == count) break;
        out.insert(v);
    }
    return out;
}

inline auto smallest_size(const std::vector<VertexSet> & sets) -> std::size_t
{
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (const auto & s : sets) best = std::min(best, s.count());
    return best;
}

inline auto pattern_side(const Graph & pattern, std::size_t i, std::size_t j) -> Side
{
    return pattern.adjacent(i, j) ? Side::graph : Side::complement;
}

} // namespace detail

/// The main lemma's construction on g[ground]: either an induced copy of H or
/// pairs (A_i, B_i) and C-sets partitioning ground with A_i, C_j
/// eps-restricted, |B_i| <= eta|A_i| and B_i theta-sparse/dense to A_i.
inline auto main_lemma_partition(const Graph & g, const Graph & pattern, double eps, double eta, double theta,
                                 const LemmaConfig & config, std::uint64_t seed, const VertexSet & ground)
    -> LemmaOutcome
{
    if (ground.universe() != g.size()) throw PreconditionViolated("ground set universe does not match graph");
    if (pattern.size() == 0) throw PreconditionViolated("the forbidden pattern needs at least one vertex");
    const auto schedule = compute_schedule(pattern.size(), eps, eta, theta, config.schedule);
    const auto h = schedule.h;

    if (config.check_hypothesis)
        if (auto copy = find_induced_copy(g, pattern, ground)) return InducedCopy{std::move(*copy)};

    LemmaState state;
    state.residue = ground;
    LemmaStats stats;

    while (!state.residue.empty()) {
        const auto m = state.m();
        ++stats.iterations;
        auto iteration_seed = derive_seed(seed, stats.iterations);

        if (m == h) {
            const BlockSystem system{pattern, state.anchors, std::min(0.5, schedule.theta / 4.0)};
            try {
                auto embedded = embed_transversal(g, system);
                return InducedCopy{std::move(embedded.mapping)};
            } catch (const NoViableVertex &) {
                VertexSet anchors_union(g.size());
                for (const auto & d : state.anchors) anchors_union |= d;
                if (auto copy = find_induced_copy(g, pattern, anchors_union)) return InducedCopy{std::move(*copy)};
            }
            throw StallDetected("all |H| anchors placed but no induced copy found", state);
        }

        // Split E: E_i takes vertices theta/2-sparse (or dense) to D_i, first
        // qualifying i; E_0 keeps the rest.
        std::vector<VertexSet> split(m + 1, VertexSet(g.size()));
        std::vector<Side> sides(m);
        std::vector<std::size_t> anchor_sizes(m);
        for (std::size_t i = 0; i < m; ++i) {
            sides[i] = detail::pattern_side(pattern, m, i);
            anchor_sizes[i] = state.anchors[i].count();
        }
        for (auto v : state.residue) {
            std::size_t home = 0;
            for (std::size_t i = 0; i < m && home == 0; ++i) {
                const auto d = g.neighbours_in(v, state.anchors[i], sides[i], anchor_sizes[i]);
                if (at_most(static_cast<double>(d), schedule.theta / 2.0 * static_cast<double>(anchor_sizes[i])))
                    home = i + 1;
            }
            split[home].insert(v);
        }

        if (split[0].empty()) {
            // Everything left attaches to an anchor: those become the last pairs.
            for (std::size_t i = 0; i < m; ++i)
                state.pairs.push_back({state.anchors[i], split[i + 1], sides[i]});
            state.anchors.clear();
            state.claims.clear();
            state.residue = VertexSet(g.size());
            break;
        }
        const auto & e0 = split[0];
        const auto e_size = state.residue.count();

        const double eps_prime = schedule.eps_m[m + 1] * schedule.Gamma[m][0];
        const auto f = find_restricted_subset(g, e0, eps_prime, config.mode).vertices;
        const double delta_prime = schedule.dynamic()
                                       ? static_cast<double>(f.count()) / static_cast<double>(e_size)
                                       : schedule.delta(eps_prime);
        stats.achieved_delta.push_back(static_cast<double>(f.count()) / static_cast<double>(e_size));

        VertexSet f_cur = f;
        std::vector<VertexSet> new_anchors;
        std::vector<FullnessStatus> new_status;
        for (std::size_t i = 0; i < m; ++i) {
            const auto & d = state.anchors[i];
            const auto half = d.count() / 2;
            if (half == 0) throw StallDetected("anchor " + std::to_string(i) + " is too small to halve", state);
            auto options = config.full_pair;
            options.seed = derive_seed(iteration_seed, i);
            FullPair pair;
            try {
                pair = find_full_pair(g, f_cur, d, schedule.Gamma[m][i + 1] * schedule.c[m + 1] / 3.0,
                                      schedule.theta / 4.0, schedule.theta / 2.0, sides[i], config.mode, options);
            } catch (const SearchFailed & e) {
                throw StallDetected(std::string("full pair against anchor ") + std::to_string(i) + ": " + e.what(),
                                    state);
            } catch (const PreconditionViolated & e) {
                throw StallDetected(std::string("full pair against anchor ") + std::to_string(i) + ": " + e.what(),
                                    state);
            }
            f_cur = std::move(pair.a);
            new_anchors.push_back(detail::lowest(pair.b, std::min(pair.b.count(), half)));
            new_status.push_back(pair.status);
        }
        const auto & f_m = f_cur;
        new_anchors.push_back(f_m);

        const double gamma_eff = schedule.dynamic() ? static_cast<double>(f_m.count()) / static_cast<double>(f.count())
                                                    : schedule.Gamma[m][0];
        const double eta_prime = schedule.eta * delta_prime * gamma_eff / 2.0;
        const auto x = e0 - f_m;
        const auto x_size = x.count();
        const auto target = std::min(floor_count(eta_prime * static_cast<double>(x_size)),
                                     floor_count(schedule.eta / 2.0 * static_cast<double>(detail::smallest_size(new_anchors))));
        auto extraction = extract_until(g, x, schedule.eps, target, config.mode);
        const auto rounds = extraction.parts.size();
        if (schedule.dynamic()) {
            const auto bound = decay_round_bound(extraction.achieved_delta, x_size, target);
            state.ell_bound += bound == std::numeric_limits<std::uint64_t>::max() ? static_cast<double>(rounds)
                                                                                   : static_cast<double>(bound);
        } else {
            state.ell_bound = schedule.ell[m + 1];
        }

        // Rebuild as a partition of type (k + m, ell + n, m + 1).
        for (std::size_t i = 0; i < m; ++i)
            state.pairs.push_back({state.anchors[i] - new_anchors[i], split[i + 1], sides[i]});
        for (auto & part : extraction.parts) state.c_sets.push_back(std::move(part));
        std::vector<FullnessClaim> claims;
        for (const auto & c : state.claims) claims.push_back(c);
        for (std::size_t i = 0; i < m; ++i)
            claims.push_back({i, m, detail::pattern_side(pattern, i, m), new_status[i]});
        state.claims = std::move(claims);
        state.anchors = std::move(new_anchors);
        state.residue = std::move(extraction.leftover);
    }

    // E is empty: pairs with B empty and the anchors join the C-sets.
    LemmaPartition out;
    out.schedule = schedule;
    for (const auto & pair : state.pairs) {
        if (pair.b.empty()) {
            out.c_sets.push_back({pair.a, Side::graph});
        } else {
            out.pairs.push_back(pair);
        }
    }
    for (const auto & c : state.c_sets) out.c_sets.push_back(c);
    for (const auto & d : state.anchors) out.c_sets.push_back({d, Side::graph});

    // Record the witnessing side of each set; split any that is not
    // eps-restricted (possible only under the as-printed ladder).
    std::vector<Part> c_sets;
    auto place = [&](const VertexSet & s) {
        if (auto part = restricted_part(g, s, schedule.eps)) {
            c_sets.push_back(std::move(*part));
            return;
        }
        if (!config.repair) throw ValidationFailed("output set is not eps-restricted");
        ++stats.repairs;
        for (auto & part : extract_until(g, s, schedule.eps, 0, config.mode).parts) c_sets.push_back(std::move(part));
    };
    for (const auto & c : out.c_sets) place(c.vertices);
    std::vector<PairEntry> pairs;
    for (auto & pair : out.pairs) {
        if (is_restricted(g, pair.a, schedule.eps)) {
            pairs.push_back(std::move(pair));
        } else {
            place(pair.a);
            place(pair.b);
        }
    }
    out.pairs = std::move(pairs);
    out.c_sets = std::move(c_sets);

    if (out.pairs.size() > h * h) throw std::logic_error("main lemma produced more than |H|^2 pairs");
    for (const auto & pair : out.pairs) {
        if (!at_most(static_cast<double>(pair.b.count()), schedule.eta * static_cast<double>(pair.a.count())) ||
            !is_sparse_to(g, pair.b, pair.a, schedule.theta, pair.side))
            throw std::logic_error("main lemma produced a pair violating its size or sparsity bound");
    }

    stats.achieved_n = out.c_sets.size();
    stats.ell_bound = state.ell_bound;
    out.final_state = std::move(state);
    out.stats = std::move(stats);
    return out;
}

inline auto main_lemma_partition(const Graph & g, const Graph & pattern, double eps, double eta, double theta,
                                 const LemmaConfig & config, std::uint64_t seed) -> LemmaOutcome
{
    return main_lemma_partition(g, pattern, eps, eta, theta, config, seed, g.vertices());
}

} // namespace restrictor
