#pragma once

#include "restrictor/errors.hpp"
#include "restrictor/numeric.hpp"

#include <cmath>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

namespace restrictor {

enum class ScheduleMode
{
    empirical,
    theoretical
};

inline auto to_string(ScheduleMode mode) -> std::string_view
{
    return mode == ScheduleMode::empirical ? "empirical" : "theoretical";
}

/// How the anchor restriction levels eps_m scale with m.
///  increasing: eps_m = 3^(m-|H|) eps, so eps_m <= eps throughout and each
///              step may triple the level, which is what keeps the anchors
///              and everything split off them eps-restricted.
///  as_printed: eps_m = 3^(|H|-m) eps.
enum class AnchorLadder
{
    increasing,
    as_printed
};

struct ScheduleConfig
{
    ScheduleMode mode = ScheduleMode::empirical;
    AnchorLadder ladder = AnchorLadder::increasing;
    /// Stand-in for every gamma_{m,i} when evaluating c_m and Gamma(m,i) in
    /// empirical mode.
    double planning_gamma = 1.0 / 3.0;
    /// delta(eps'): linear-size constant for eps'-restricted subsets.
    /// Required in theoretical mode.
    std::function<double(double)> delta;
    /// gamma(m, i) for 0 <= i <= m < |H|. Required in theoretical mode.
    std::function<double(std::size_t, std::size_t)> gamma;
};

/// Every constant of the main-lemma recursion for a pattern of size h.
struct ParamSchedule
{
    std::size_t h = 0;
    double eps = 0.0, eta = 0.0, theta = 0.0; ///< after clamping below 1/3
    ScheduleMode mode = ScheduleMode::empirical;
    AnchorLadder ladder = AnchorLadder::increasing;

    std::vector<double> c;                     ///< c[m], m = 0..h
    std::vector<double> eps_m;                 ///< eps_m[m], m = 0..h
    std::vector<std::vector<double>> gamma;    ///< gamma[m][i], 0 <= i <= m < h
    std::vector<std::vector<double>> Gamma;    ///< Gamma[m][i], 0 <= i <= m < h
    std::vector<std::size_t> k_m;              ///< m(m-1)/2, m = 0..h

    // Theoretical mode only (empty / nullopt otherwise).
    std::vector<double> p;   ///< p_i = eps_{i+1} Gamma(i,0), i = 0..h-1
    std::vector<double> q;   ///< q_i = eta delta(p_i) Gamma(i,0) / 2
    std::vector<double> ell; ///< ell_m = sum_{i<m} n_{q_i}, m = 0..h
    std::optional<double> N; ///< ell_h + k_h + h
    std::function<double(double)> delta;

    auto dynamic() const -> bool { return mode == ScheduleMode::empirical; }

    /// Least n with (1 - delta_eps)^n <= gamma (theoretical mode).
    auto n_gamma(double g) const -> double
    {
        if (!delta) throw ConfigMissing("n_gamma needs a configured delta");
        return static_cast<double>(least_decay_exponent(delta(eps), g));
    }
};

/// Strictly below 1/3, as the recursion assumes eps, eta, theta < 1/3.
inline auto clamp_below_third(double x) -> double { return std::min(x, std::nextafter(1.0 / 3.0, 0.0)); }

inline auto compute_schedule(std::size_t h, double eps, double eta, double theta, const ScheduleConfig & config = {})
    -> ParamSchedule
{
    for (double x : {eps, eta, theta})
        if (!(x > 0.0 && x < 1.0)) throw PreconditionViolated("schedule parameters must lie in (0, 1)");
    const bool theoretical = config.mode == ScheduleMode::theoretical;
    if (theoretical && !config.delta) throw ConfigMissing("theoretical mode needs delta");
    if (theoretical && !config.gamma) throw ConfigMissing("theoretical mode needs gamma");
    if (!theoretical && !(config.planning_gamma > 0.0 && at_most(config.planning_gamma, 1.0 / 3.0)))
        throw PreconditionViolated("planning gamma must lie in (0, 1/3]");

    ParamSchedule s;
    s.h = h;
    s.eps = clamp_below_third(eps);
    s.eta = clamp_below_third(eta);
    s.theta = clamp_below_third(theta);
    s.mode = config.mode;
    s.ladder = config.ladder;
    s.delta = config.delta;

    s.eps_m.resize(h + 1);
    s.k_m.resize(h + 1);
    for (std::size_t m = 0; m <= h; ++m) {
        const double exponent = config.ladder == AnchorLadder::increasing ? static_cast<double>(m) - static_cast<double>(h)
                                                                          : static_cast<double>(h) - static_cast<double>(m);
        s.eps_m[m] = std::pow(3.0, exponent) * s.eps;
        s.k_m[m] = m * (m > 0 ? m - 1 : 0) / 2;
    }

    s.gamma.assign(h, {});
    s.Gamma.assign(h, {});
    for (std::size_t m = 0; m < h; ++m) {
        auto & row = s.gamma[m];
        row.resize(m + 1);
        for (std::size_t i = m + 1; i-- > 0;) {
            double value = theoretical ? config.gamma(m, i) : config.planning_gamma;
            if (!(value > 0.0)) throw PreconditionViolated("gamma values must be positive");
            // Decrease as allowed: gamma_{m,i} <= 1/3 and <= gamma_{m,i+1}.
            value = std::min(value, 1.0 / 3.0);
            if (i < m) value = std::min(value, row[i + 1]);
            row[i] = value;
        }
        auto & big = s.Gamma[m];
        big.assign(m + 1, 1.0);
        for (std::size_t i = m; i-- > 1;) big[i] = row[i + 1] * big[i + 1];
        if (m >= 1) big[0] = row[0] * row[1] * big[1];
    }

    s.c.assign(h + 1, 0.0);
    s.c[h] = std::pow(s.theta / 4.0, static_cast<double>(h));
    for (std::size_t m = h; m-- > 0;) s.c[m] = s.gamma[m][0] * s.c[m + 1];

    if (theoretical) {
        s.p.resize(h);
        s.q.resize(h);
        s.ell.assign(h + 1, 0.0);
        for (std::size_t i = 0; i < h; ++i) {
            s.p[i] = s.eps_m[i + 1] * s.Gamma[i][0];
            s.q[i] = s.eta * config.delta(s.p[i]) * s.Gamma[i][0] / 2.0;
            s.ell[i + 1] = s.ell[i] + s.n_gamma(s.q[i]);
        }
        s.N = s.ell[h] + static_cast<double>(s.k_m[h]) + static_cast<double>(h);
    }
    return s;
}

} // namespace restrictor
