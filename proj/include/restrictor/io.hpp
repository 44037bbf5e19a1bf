#pragma once

#include "restrictor/certificate.hpp"
#include "restrictor/embedding.hpp"
#include "restrictor/errors.hpp"
#include "restrictor/graph.hpp"
#include "restrictor/partitions.hpp"

#include <json.hpp>

#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace restrictor {

/// Malformed input file: the CLI maps it to exit code 2.
class ParseError : public Error
{
public:
    using Error::Error;
};

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Graph text format: "n m", then m lines "u v"; '#' starts a comment.

namespace detail {

inline auto strip_comment(std::string line) -> std::string
{
    if (auto at = line.find('#'); at != std::string::npos) line.erase(at);
    return line;
}

inline auto only_space(const std::string & s) -> bool
{
    return s.find_first_not_of(" \t\r") == std::string::npos;
}

} // namespace detail

inline auto parse_graph(std::istream & in) -> Graph
{
    std::string line;
    std::size_t line_no = 0;
    auto next_line = [&](std::string & out) {
        while (std::getline(in, line)) {
            ++line_no;
            out = detail::strip_comment(line);
            if (!detail::only_space(out)) return true;
        }
        return false;
    };
    auto fail = [&](const std::string & what) -> ParseError {
        return ParseError("graph line " + std::to_string(line_no) + ": " + what);
    };
    auto read_pair = [&](const std::string & text, long long & a, long long & b) {
        std::istringstream fields(text);
        std::string extra;
        if (!(fields >> a >> b)) throw fail("expected two integers");
        if (fields >> extra) throw fail("trailing text '" + extra + "'");
    };

    std::string text;
    if (!next_line(text)) throw ParseError("graph file is empty");
    long long n = 0;
    long long m = 0;
    read_pair(text, n, m);
    if (n < 0 || m < 0) throw fail("negative vertex or edge count");

    Graph g(static_cast<std::size_t>(n));
    for (long long i = 0; i < m; ++i) {
        if (!next_line(text)) throw ParseError("graph file ends after " + std::to_string(i) + " of " +
                                               std::to_string(m) + " edges");
        long long u = 0;
        long long v = 0;
        read_pair(text, u, v);
        if (u < 0 || v < 0 || u >= n || v >= n) throw fail("vertex out of range");
        if (u == v) throw fail("self-loop at " + std::to_string(u));
        const auto a = static_cast<Vertex>(u);
        const auto b = static_cast<Vertex>(v);
        if (g.adjacent(a, b)) throw fail("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        g.add_edge(a, b);
    }
    if (next_line(text)) throw fail("more edges than declared");
    return g;
}

inline auto parse_graph(const std::string & text) -> Graph
{
    std::istringstream in(text);
    return parse_graph(in);
}

inline auto render_graph(const Graph & g) -> std::string
{
    std::ostringstream out;
    const auto edges = g.edges();
    out << g.size() << ' ' << edges.size() << '\n';
    for (const auto & [u, v] : edges) out << u << ' ' << v << '\n';
    return out.str();
}

inline auto read_text_file(const std::string & path) -> std::string
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline auto load_graph(const std::string & path) -> Graph { return parse_graph(read_text_file(path)); }

// ---------------------------------------------------------------------------
// Forbidden-pattern presets

inline auto preset_names() -> std::vector<std::string> { return {"K2", "K3", "P3", "P4", "C4", "C5", "paw"}; }

inline auto preset_pattern(const std::string & name) -> std::optional<Graph>
{
    static const std::map<std::string, std::pair<std::size_t, std::vector<Edge>>> presets{
        {"K2", {2, {{0, 1}}}},
        {"K3", {3, {{0, 1}, {0, 2}, {1, 2}}}},
        {"P3", {3, {{0, 1}, {1, 2}}}},
        {"P4", {4, {{0, 1}, {1, 2}, {2, 3}}}},
        {"C4", {4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}}},
        {"C5", {5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}}},
        {"paw", {4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}}}},
    };
    auto it = presets.find(name);
    if (it == presets.end()) return std::nullopt;
    return Graph::from_edges(it->second.first, it->second.second);
}

/// A preset name or a path to a graph file.
inline auto resolve_pattern(const std::string & spec) -> Graph
{
    if (auto preset = preset_pattern(spec)) return *preset;
    return load_graph(spec);
}

// ---------------------------------------------------------------------------
// JSON

namespace detail {

inline auto side_from_json(const json & j) -> Side
{
    if (!j.is_string()) throw ParseError("side must be a string");
    const auto s = j.get<std::string>();
    if (s == "graph") return Side::graph;
    if (s == "complement") return Side::complement;
    throw ParseError("unknown side '" + s + "'");
}

inline auto set_to_json(const VertexSet & s) -> json
{
    json out = json::array();
    for (auto v : s) out.push_back(v);
    return out;
}

inline auto set_from_json(const json & j, std::size_t universe, const char * what) -> VertexSet
{
    if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of vertices");
    VertexSet out(universe);
    for (const auto & item : j) {
        if (!item.is_number_integer()) throw ParseError(std::string(what) + " holds a non-integer vertex");
        const auto v = item.get<long long>();
        if (v < 0 || static_cast<std::size_t>(v) >= universe)
            throw ParseError(std::string(what) + " vertex " + std::to_string(v) + " is out of range");
        if (out.contains(static_cast<Vertex>(v)))
            throw ParseError(std::string(what) + " lists vertex " + std::to_string(v) + " twice");
        out.insert(static_cast<Vertex>(v));
    }
    return out;
}

inline auto number_field(const json & j, const char * key) -> double
{
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_number())
        throw ParseError(std::string("missing numeric field '") + key + "'");
    return j.at(key).get<double>();
}

inline auto array_field(const json & j, const char * key) -> const json &
{
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_array())
        throw ParseError(std::string("missing array field '") + key + "'");
    return j.at(key);
}

inline auto parse_json(const std::string & text) -> json
{
    try {
        return json::parse(text);
    } catch (const nlohmann::json::parse_error & e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

} // namespace detail

inline auto certificate_to_json(const PartitionCertificate & cert, const json & meta = json::object()) -> json
{
    json parts = json::array();
    for (const auto & part : cert.parts)
        parts.push_back({{"vertices", detail::set_to_json(part.vertices)}, {"side", std::string(to_string(part.side))}});
    return {{"eps", cert.eps}, {"parts", std::move(parts)}, {"meta", meta}};
}

/// Vertices are checked against the graph's range; `meta` is ignored.
inline auto certificate_from_json(const json & j, std::size_t universe) -> PartitionCertificate
{
    PartitionCertificate cert;
    cert.eps = detail::number_field(j, "eps");
    for (const auto & part : detail::array_field(j, "parts")) {
        if (!part.is_object() || !part.contains("vertices") || !part.contains("side"))
            throw ParseError("each part needs 'vertices' and 'side'");
        cert.parts.push_back({detail::set_from_json(part.at("vertices"), universe, "part"),
                              detail::side_from_json(part.at("side"))});
    }
    return cert;
}

inline auto graph_to_json(const Graph & g) -> json
{
    json edges = json::array();
    for (const auto & [u, v] : g.edges()) edges.push_back({u, v});
    return {{"n", g.size()}, {"edges", std::move(edges)}};
}

inline auto graph_from_json(const json & j) -> Graph
{
    const auto n = detail::number_field(j, "n");
    if (n < 0 || n != static_cast<double>(static_cast<std::size_t>(n))) throw ParseError("bad vertex count");
    Graph g(static_cast<std::size_t>(n));
    for (const auto & e : detail::array_field(j, "edges")) {
        if (!e.is_array() || e.size() != 2) throw ParseError("edges must be [u, v] pairs");
        const auto pair = detail::set_from_json(e, g.size(), "edge");
        if (pair.count() != 2) throw ParseError("edge is a self-loop");
        const auto u = pair.first();
        const auto v = pair.next(u);
        if (g.adjacent(u, v)) throw ParseError("duplicate edge");
        g.add_edge(u, v);
    }
    return g;
}

inline auto block_system_to_json(const BlockSystem & sys) -> json
{
    json blocks = json::array();
    for (const auto & b : sys.blocks) blocks.push_back(detail::set_to_json(b));
    return {{"pattern", graph_to_json(sys.pattern)}, {"eps", sys.eps}, {"blocks", std::move(blocks)}};
}

inline auto block_system_from_json(const json & j, std::size_t universe) -> BlockSystem
{
    if (!j.is_object() || !j.contains("pattern")) throw ParseError("block system needs a 'pattern'");
    BlockSystem sys;
    sys.pattern = graph_from_json(j.at("pattern"));
    if (j.contains("eps")) sys.eps = detail::number_field(j, "eps");
    for (const auto & b : detail::array_field(j, "blocks")) sys.blocks.push_back(detail::set_from_json(b, universe, "block"));
    return sys;
}

inline auto path_partition_to_json(const PathPartition & pp) -> json
{
    json levels = json::array();
    for (const auto & w : pp.levels) levels.push_back(detail::set_to_json(w));
    json directions = json::array();
    for (auto d : pp.directions) directions.push_back(std::string(to_string(d)));
    return {{"eps", pp.eps}, {"levels", std::move(levels)}, {"directions", std::move(directions)}};
}

inline auto path_partition_from_json(const json & j, std::size_t universe) -> PathPartition
{
    PathPartition pp;
    pp.eps = detail::number_field(j, "eps");
    for (const auto & w : detail::array_field(j, "levels")) pp.levels.push_back(detail::set_from_json(w, universe, "level"));
    for (const auto & d : detail::array_field(j, "directions")) pp.directions.push_back(detail::side_from_json(d));
    return pp;
}

inline auto tree_partition_to_json(const TreePartition & tp) -> json
{
    json parents = json::array();
    for (auto p : tp.tree.parents()) parents.push_back(p == no_vertex ? json(nullptr) : json(p));
    json bags = json::array();
    for (const auto & b : tp.bags) bags.push_back(detail::set_to_json(b));
    json directions = json::array();
    for (auto d : tp.directions) directions.push_back(std::string(to_string(d)));
    return {{"h", tp.h},     {"ell", tp.ell},         {"eps", tp.eps},
            {"eta", tp.eta}, {"parents", std::move(parents)}, {"bags", std::move(bags)},
            {"directions", std::move(directions)}};
}

inline auto tree_partition_from_json(const json & j, std::size_t universe) -> TreePartition
{
    TreePartition tp;
    tp.h = static_cast<std::size_t>(detail::number_field(j, "h"));
    tp.ell = static_cast<std::size_t>(detail::number_field(j, "ell"));
    tp.eps = detail::number_field(j, "eps");
    tp.eta = detail::number_field(j, "eta");
    std::vector<Vertex> parents;
    for (const auto & p : detail::array_field(j, "parents")) {
        if (p.is_null()) {
            parents.push_back(no_vertex);
        } else if (p.is_number_integer() && p.get<long long>() >= 0) {
            parents.push_back(p.get<Vertex>());
        } else {
            throw ParseError("parents must be node ids or null");
        }
    }
    try {
        tp.tree = RootedTree::from_parents(std::move(parents));
    } catch (const PreconditionViolated & e) {
        throw ParseError(e.what());
    }
    for (const auto & b : detail::array_field(j, "bags")) tp.bags.push_back(detail::set_from_json(b, universe, "bag"));
    for (const auto & d : detail::array_field(j, "directions")) tp.directions.push_back(detail::side_from_json(d));
    return tp;
}

/// Two-space indent and a trailing newline.
inline auto dump(const json & j) -> std::string { return j.dump(2) + "\n"; }

} // namespace restrictor
