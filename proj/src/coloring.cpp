#include <sncolor/coloring.hpp>
#include <sncolor/error.hpp>

#include <string>

using namespace sncolor;

PartialColoring::PartialColoring(int vertex_count, int k) :
    _k(k),
    _colors(vertex_count, no_color)
{
    if (k < 0)
        throw Error(ErrorCode::InvalidColoring, "negative colour count");
}

auto PartialColoring::assign(Vertex v, Color c) -> void
{
    if (v < 0 || v >= vertex_count())
        throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v) + " not in graph");
    if (c < 0 || c > _k)
        throw Error(ErrorCode::InvalidColoring, "colour " + std::to_string(c) + " outside 1.." + std::to_string(_k));
    _colors[v] = c;
}

auto PartialColoring::domain() const -> std::vector<Vertex>
{
    std::vector<Vertex> result;
    for (Vertex v = 0 ; v < vertex_count() ; ++v)
        if (colored(v))
            result.push_back(v);
    return result;
}

auto PartialColoring::domain_size() const -> int
{
    int count = 0;
    for (auto c : _colors)
        if (c != no_color)
            ++count;
    return count;
}

auto PartialColoring::used_colors() const -> ColorSet
{
    ColorSet used;
    for (auto c : _colors)
        if (c != no_color)
            used.insert(c);
    return used;
}

auto PartialColoring::classes() const -> std::vector<std::vector<Vertex>>
{
    std::vector<std::vector<Vertex>> result(_k);
    for (Vertex v = 0 ; v < vertex_count() ; ++v)
        if (colored(v))
            result[_colors[v] - 1].push_back(v);
    return result;
}

auto PartialColoring::permuted(const std::vector<Color> & permutation) const -> PartialColoring
{
    PartialColoring result(vertex_count(), _k);
    for (Vertex v = 0 ; v < vertex_count() ; ++v)
        if (colored(v))
            result.assign(v, permutation[_colors[v]]);
    return result;
}

auto PartialColoring::relabelled(const std::vector<Vertex> & vertex_map) const -> PartialColoring
{
    PartialColoring result(vertex_count(), _k);
    for (Vertex v = 0 ; v < vertex_count() ; ++v)
        result._colors[vertex_map[v]] = _colors[v];
    return result;
}

auto sncolor::is_proper(const Graph & g, const PartialColoring & c) -> bool
{
    for (auto [u, v] : g.edges())
        if (c.colored(u) && c[u] == c[v])
            return false;
    return true;
}

auto sncolor::color_lists(const Graph & g, const PartialColoring & c) -> ColorListState
{
    ColorListState lists(g.order());
    for (Vertex v = 0 ; v < g.order() ; ++v) {
        if (c.colored(v))
            continue;
        lists[v] = ColorSet::all(c.k());
        for (auto w : g.neighbours(v))
            if (c.colored(w))
                lists[v].erase(c[w]);
    }
    return lists;
}
