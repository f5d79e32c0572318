#include <sncolor/io.hpp>
#include <sncolor/error.hpp>

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

using namespace sncolor;

namespace
{
    struct Position
    {
        std::size_t line = 1, column = 1, byte = 0;
    };

    auto position_of(std::string_view text, std::size_t byte) -> Position
    {
        Position p;
        for (std::size_t i = 0 ; i < byte && i < text.size() ; ++i) {
            if (text[i] == '\n') {
                ++p.line;
                p.column = 1;
            }
            else
                ++p.column;
        }
        p.byte = byte;
        return p;
    }

    /// Whitespace-separated non-negative integers with line tracking.
    class Scanner
    {
        public:
            explicit Scanner(std::string_view text) : _text(text) { }

            auto skip_blanks() -> void
            {
                while (_at < _text.size() && std::isspace(static_cast<unsigned char>(_text[_at])))
                    ++_at;
            }

            auto at_end() -> bool
            {
                skip_blanks();
                return _at == _text.size();
            }

            auto line() -> std::size_t { return position_of(_text, _at).line; }

            auto next_int(const char * what) -> int
            {
                skip_blanks();
                auto start = _at;
                if (_at == _text.size())
                    fail(std::string("expected ") + what + ", found end of input", start);

                int value = 0;
                auto [ptr, ec] = std::from_chars(_text.data() + _at, _text.data() + _text.size(), value);
                auto consumed = static_cast<std::size_t>(ptr - (_text.data() + _at));
                if (ec != std::errc{} || consumed == 0 || _text[_at] == '-' || _text[_at] == '+')
                    fail(std::string("expected ") + what, start);
                _at += consumed;
                if (_at < _text.size() && ! std::isspace(static_cast<unsigned char>(_text[_at])))
                    fail(std::string("unexpected character after ") + what, _at);
                return value;
            }

            [[noreturn]] auto fail(const std::string & message, std::size_t byte) -> void
            {
                auto p = position_of(_text, byte);
                throw ParseError(message, p.line, p.column, p.byte);
            }

            auto offset() const -> std::size_t { return _at; }

        private:
            std::string_view _text;
            std::size_t _at = 0;
    };

    auto parse_edge_list(std::string_view text) -> Graph
    {
        Scanner in(text);
        int n = in.next_int("vertex count");
        int m = in.next_int("edge count");
        std::vector<Edge> edges;
        edges.reserve(m);
        for (int i = 0 ; i < m ; ++i) {
            int u = in.next_int("edge endpoint");
            int v = in.next_int("edge endpoint");
            edges.emplace_back(u, v);
        }
        if (! in.at_end())
            in.fail("trailing data after " + std::to_string(m) + " edges", in.offset());
        return Graph::build(n, edges);
    }

    [[noreturn]] auto schema_error(const std::string & message) -> void
    {
        throw ParseError(message, 1, 1, 0);
    }

    auto parse_json_text(std::string_view text) -> Json
    {
        try {
            return Json::parse(text);
        }
        catch (const nlohmann::json::parse_error & e) {
            auto p = position_of(text, e.byte > 0 ? e.byte - 1 : 0);
            throw ParseError(e.what(), p.line, p.column, p.byte);
        }
    }

    auto as_int(const Json & j, const char * what) -> int
    {
        if (! j.is_number_integer())
            schema_error(std::string(what) + " must be an integer");
        return j.get<int>();
    }
}

auto sncolor::detect_format(std::string_view text) -> GraphFormat
{
    for (char c : text)
        if (! std::isspace(static_cast<unsigned char>(c)))
            return c == '{' ? GraphFormat::Json : GraphFormat::EdgeList;
    return GraphFormat::EdgeList;
}

auto sncolor::parse_graph(std::string_view text, GraphFormat format) -> Graph
{
    if (format == GraphFormat::EdgeList)
        return parse_edge_list(text);
    return graph_from_json(parse_json_text(text));
}

auto sncolor::graph_to_json(const Graph & g) -> Json
{
    Json edges = Json::array();
    for (auto [u, v] : g.edges())
        edges.push_back({ u, v });
    return Json{ { "n", g.order() }, { "edges", std::move(edges) } };
}

auto sncolor::graph_from_json(const Json & j) -> Graph
{
    if (! j.is_object() || ! j.contains("n") || ! j.contains("edges"))
        schema_error("graph JSON needs \"n\" and \"edges\"");
    int n = as_int(j["n"], "n");
    if (! j["edges"].is_array())
        schema_error("\"edges\" must be an array");

    std::vector<Edge> edges;
    for (auto & e : j["edges"]) {
        if (! e.is_array() || e.size() != 2)
            schema_error("each edge must be a pair [u, v]");
        edges.emplace_back(as_int(e[0], "edge endpoint"), as_int(e[1], "edge endpoint"));
    }
    return Graph::build(n, edges);
}

auto sncolor::serialize_graph(const Graph & g, GraphFormat format) -> std::string
{
    if (format == GraphFormat::Json)
        return graph_to_json(g).dump();

    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

auto sncolor::coloring_to_json(const PartialColoring & c) -> Json
{
    Json colors = Json::object();
    for (Vertex v = 0 ; v < c.vertex_count() ; ++v)
        if (c.colored(v))
            colors[std::to_string(v)] = c[v];
    return Json{ { "k", c.k() }, { "colors", std::move(colors) } };
}

auto sncolor::coloring_from_json(const Json & j, int vertex_count) -> PartialColoring
{
    if (! j.is_object() || ! j.contains("k") || ! j.contains("colors") || ! j["colors"].is_object())
        schema_error("coloring JSON needs \"k\" and a \"colors\" object");

    int k = as_int(j["k"], "k");
    if (k < 1)
        schema_error("k must be positive");

    PartialColoring c(vertex_count, k);
    for (auto & [key, value] : j["colors"].items()) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), v);
        if (ec != std::errc{} || ptr != key.data() + key.size())
            schema_error("coloring key \"" + key + "\" is not a vertex number");
        int colour = as_int(value, "colour");
        if (colour < 1)
            throw Error(ErrorCode::InvalidColoring, "colour " + std::to_string(colour) + " outside 1.." + std::to_string(k));
        c.assign(v, colour);
    }
    return c;
}

auto sncolor::parse_coloring(std::string_view text, int vertex_count) -> PartialColoring
{
    return coloring_from_json(parse_json_text(text), vertex_count);
}

auto sncolor::dot_fill(Color c) -> std::string
{
    static constexpr std::array<const char *, 12> palette{
        "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#ffff33",
        "#a65628", "#f781bf", "#999999", "#66c2a5", "#fc8d62", "#8da0cb"
    };
    if (c >= 1 && c <= static_cast<Color>(palette.size()))
        return palette[c - 1];

    // graphviz "H S V" form; golden-angle hue spacing keeps fills distinct
    double hue = std::fmod(c * 0.618033988749895, 1.0);
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.3f 0.550 0.950", hue);
    return buffer;
}

auto sncolor::emit_dot(const Graph & g, const std::optional<PartialColoring> & coloring) -> std::string
{
    std::ostringstream out;
    out << "graph G {\n";
    out << "  node [shape=circle];\n";
    for (Vertex v = 0 ; v < g.order() ; ++v) {
        if (coloring && v < coloring->vertex_count() && coloring->colored(v))
            out << "  " << v << " [label=\"" << v << ":" << (*coloring)[v]
                << "\", style=filled, fillcolor=\"" << dot_fill((*coloring)[v]) << "\"];\n";
        else
            out << "  " << v << ";\n";
    }
    for (auto [u, v] : g.edges())
        out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}
