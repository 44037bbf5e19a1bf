#pragma once

#include "restrictor/graph.hpp"
#include "restrictor/numeric.hpp"
#include "restrictor/predicates.hpp"

#include <optional>
#include <string>
#include <vector>

namespace restrictor {

/// One class of a partition, with the side on which it is restricted.
struct Part
{
    VertexSet vertices;
    Side side = Side::graph;

    friend auto operator==(const Part &, const Part &) -> bool = default;
};

struct PartitionCertificate
{
    double eps = 0.0;
    std::vector<Part> parts;

    friend auto operator==(const PartitionCertificate &, const PartitionCertificate &) -> bool = default;
};

struct CertificateViolation
{
    std::string clause; ///< "universe", "empty-part", "overlap", "coverage", "max-degree", "eps"
    std::optional<std::size_t> part;
    std::optional<Vertex> vertex;
    std::string detail;
};

struct CertificateReport
{
    std::vector<CertificateViolation> violations;

    auto ok() const -> bool { return violations.empty(); }
};

/// Independent re-check of a certificate against `ground`: parts nonempty,
/// pairwise disjoint, covering ground exactly, and each part eps-restricted
/// on its recorded side.
inline auto verify_certificate(const Graph & g, const PartitionCertificate & cert, const VertexSet & ground)
    -> CertificateReport
{
    CertificateReport report;
    auto flag = [&](std::string clause, std::optional<std::size_t> part, std::optional<Vertex> vertex,
                    std::string detail) {
        report.violations.push_back({std::move(clause), part, vertex, std::move(detail)});
    };

    if (!(cert.eps >= 0.0 && cert.eps <= 1.0)) flag("eps", std::nullopt, std::nullopt, "eps must lie in [0, 1]");

    VertexSet seen(g.size());
    for (std::size_t i = 0; i < cert.parts.size(); ++i) {
        const auto & part = cert.parts[i];
        if (part.vertices.universe() != g.size()) {
            flag("universe", i, std::nullopt, "part is not over the graph's vertex range");
            continue;
        }
        if (part.vertices.empty()) flag("empty-part", i, std::nullopt, "part has no vertices");
        const auto clash = part.vertices & seen;
        if (!clash.empty())
            flag("overlap", i, clash.first(), "vertex " + std::to_string(clash.first()) + " lies in two parts");
        seen |= part.vertices;

        const auto stray = part.vertices - ground;
        if (!stray.empty())
            flag("coverage", i, stray.first(), "vertex " + std::to_string(stray.first()) + " is outside the ground set");

        const auto size = part.vertices.count();
        if (size == 0) continue;
        const auto degree = max_degrees(g, part.vertices).on(part.side);
        if (!at_most(static_cast<double>(degree), cert.eps * static_cast<double>(size)))
            flag("max-degree", i, std::nullopt,
                 "max degree " + std::to_string(degree) + " on side " + std::string(to_string(part.side)) +
                     " exceeds eps*|X| = " + std::to_string(cert.eps * static_cast<double>(size)));
    }
    const auto missing = ground - seen;
    if (!missing.empty())
        flag("coverage", std::nullopt, missing.first(),
             std::to_string(missing.count()) + " vertices uncovered, first " + std::to_string(missing.first()));
    return report;
}

inline auto verify_certificate(const Graph & g, const PartitionCertificate & cert) -> CertificateReport
{
    return verify_certificate(g, cert, g.vertices());
}

/// A part for `x` with its witnessing side, or nullopt if x is not
/// eps-restricted.
inline auto restricted_part(const Graph & g, const VertexSet & x, double eps) -> std::optional<Part>
{
    auto verdict = is_restricted(g, x, eps);
    if (!verdict) return std::nullopt;
    return Part{x, *verdict.side};
}

} // namespace restrictor
