#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>

namespace restrictor {

// Real-valued thresholds such as eps * |X| are compared against integer
// counts. Products like 0.1 * 30 land a few ulps above the exact value, so
// every comparison goes through these helpers with a small relative slack.
inline constexpr double kSlack = 1e-9;

inline double slack_for(double x) { return kSlack * std::max(1.0, std::abs(x)); }

/// lhs <= rhs up to rounding noise.
inline bool at_most(double lhs, double rhs) { return lhs <= rhs + slack_for(rhs); }

/// lhs >= rhs up to rounding noise.
inline bool at_least(double lhs, double rhs) { return lhs + slack_for(rhs) >= rhs; }

/// lhs < rhs, strictly, with the same slack (so exact ties are not "less").
inline bool strictly_less(double lhs, double rhs) { return !at_least(lhs, rhs); }

/// Smallest integer >= x, ignoring rounding noise above an exact integer.
inline std::size_t ceil_count(double x)
{
    if (x <= 0.0) return 0;
    return static_cast<std::size_t>(std::ceil(x - slack_for(x)));
}

/// Largest integer <= x, ignoring rounding noise below an exact integer.
inline std::size_t floor_count(double x)
{
    if (x <= 0.0) return 0;
    return static_cast<std::size_t>(std::floor(x + slack_for(x)));
}

/// Binomial coefficient as a double, saturating at +inf.
inline double binomial(std::size_t n, std::size_t k)
{
    if (k > n) return 0.0;
    k = std::min(k, n - k);
    double result = 1.0;
    for (std::size_t i = 1; i <= k; ++i) {
        result = result * static_cast<double>(n - k + i) / static_cast<double>(i);
        if (!std::isfinite(result)) return std::numeric_limits<double>::infinity();
    }
    return std::round(result);
}

/// Least n >= 0 with (1 - delta)^n <= gamma. Requires 0 < delta <= 1 and
/// gamma > 0; gamma >= 1 gives 0.
inline std::uint64_t least_decay_exponent(double delta, double gamma)
{
    if (gamma >= 1.0) return 0;
    if (delta >= 1.0) return 1;
    const double base = 1.0 - delta;
    double guess = std::ceil(std::log(gamma) / std::log(base));
    if (!(guess >= 0.0)) guess = 0.0;
    if (guess > 9.0e15) return static_cast<std::uint64_t>(guess);
    auto n = static_cast<std::uint64_t>(guess);
    // Correct for rounding in the logarithms.
    while (n > 0 && std::pow(base, static_cast<double>(n - 1)) <= gamma) --n;
    while (std::pow(base, static_cast<double>(n)) > gamma) ++n;
    return n;
}

} // namespace restrictor
