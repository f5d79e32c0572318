#pragma once

#include <sncolor/coloring.hpp>
#include <sncolor/graph.hpp>

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace sncolor
{
    using Json = nlohmann::ordered_json;

    enum class GraphFormat
    {
        EdgeList,
        Json
    };

    /// EdgeList: "n m" followed by m lines "u v", 0-based.
    /// Json: {"n": <int>, "edges": [[u,v], ...]}.
    /// Malformed text throws ParseError; bad vertices surface from Graph::build.
    auto parse_graph(std::string_view text, GraphFormat format) -> Graph;

    /// Picks Json when the first non-blank character is '{', EdgeList otherwise.
    auto detect_format(std::string_view text) -> GraphFormat;

    /// Canonical text: edges with u < v in lexicographic order.
    auto serialize_graph(const Graph & g, GraphFormat format) -> std::string;

    auto graph_to_json(const Graph & g) -> Json;
    auto graph_from_json(const Json & j) -> Graph;

    /// {"k": <int>, "colors": {"<vertex>": <colour>, ...}}
    auto coloring_to_json(const PartialColoring & c) -> Json;
    auto coloring_from_json(const Json & j, int vertex_count) -> PartialColoring;
    auto parse_coloring(std::string_view text, int vertex_count) -> PartialColoring;

    /// Graphviz text. Coloured vertices get a fill keyed by colour index.
    auto emit_dot(const Graph & g, const std::optional<PartialColoring> & coloring = std::nullopt) -> std::string;

    /// The fill used by emit_dot for colour c.
    auto dot_fill(Color c) -> std::string;
}
