#pragma once

#include "restrictor/certificate.hpp"
#include "restrictor/graph.hpp"
#include "restrictor/induced_copy.hpp"

#include <variant>
#include <vector>

namespace restrictor {

struct InducedCopy
{
    std::vector<Vertex> mapping; ///< pattern vertex -> host vertex

    friend auto operator==(const InducedCopy &, const InducedCopy &) -> bool = default;
};

/// Either a certificate or a copy of the forbidden pattern, never both.
using Outcome = std::variant<PartitionCertificate, InducedCopy>;

inline auto verify_outcome(const Graph & g, const Graph & pattern, const Outcome & outcome) -> bool
{
    if (const auto * copy = std::get_if<InducedCopy>(&outcome)) return is_induced_copy(g, pattern, copy->mapping);
    return verify_certificate(g, std::get<PartitionCertificate>(outcome)).ok();
}

} // namespace restrictor
