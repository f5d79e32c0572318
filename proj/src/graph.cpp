#include <sncolor/graph.hpp>
#include <sncolor/error.hpp>

#include <algorithm>
#include <string>

using namespace sncolor;

auto Graph::build(int n, std::span<const Edge> edges, int max_vertices) -> Graph
{
    if (n < 0)
        throw Error(ErrorCode::VertexOutOfRange, "negative vertex count " + std::to_string(n));
    if (n > max_vertices)
        throw Error(ErrorCode::GraphTooLarge, std::to_string(n) + " vertices exceeds the limit of " + std::to_string(max_vertices));

    Graph g;
    g._edges.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw Error(ErrorCode::VertexOutOfRange, "edge (" + std::to_string(u) + "," + std::to_string(v)
                    + ") outside 0.." + std::to_string(n - 1));
        if (u == v)
            throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(u));
        g._edges.emplace_back(std::min(u, v), std::max(u, v));
    }

    std::sort(g._edges.begin(), g._edges.end());
    g._edges.erase(std::unique(g._edges.begin(), g._edges.end()), g._edges.end());

    g._adjacency.assign(n, {});
    for (auto [u, v] : g._edges) {
        g._adjacency[u].push_back(v);
        g._adjacency[v].push_back(u);
    }
    for (auto & a : g._adjacency)
        std::sort(a.begin(), a.end());

    return g;
}

auto Graph::adjacent(Vertex u, Vertex v) const -> bool
{
    const auto & a = _adjacency[u];
    return std::binary_search(a.begin(), a.end(), v);
}

auto Graph::connected() const -> bool
{
    if (order() == 0)
        return true;

    std::vector<bool> seen(order(), false);
    std::vector<Vertex> stack{ 0 };
    seen[0] = true;
    int reached = 1;
    while (! stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (auto w : _adjacency[v])
            if (! seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == order();
}

auto Graph::bipartite() const -> bool
{
    std::vector<int> side(order(), -1);
    for (Vertex root = 0 ; root < order() ; ++root) {
        if (side[root] != -1)
            continue;
        side[root] = 0;
        std::vector<Vertex> stack{ root };
        while (! stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (auto w : _adjacency[v]) {
                if (side[w] == -1) {
                    side[w] = 1 - side[v];
                    stack.push_back(w);
                }
                else if (side[w] == side[v])
                    return false;
            }
        }
    }
    return true;
}

auto Graph::induced(std::span<const Vertex> vertices) const -> Graph
{
    std::vector<int> position(order(), -1);
    for (std::size_t i = 0 ; i < vertices.size() ; ++i)
        position[vertices[i]] = static_cast<int>(i);

    std::vector<Edge> sub;
    for (auto [u, v] : _edges)
        if (position[u] != -1 && position[v] != -1)
            sub.emplace_back(position[u], position[v]);

    return build(static_cast<int>(vertices.size()), sub, static_cast<int>(vertices.size()));
}

auto Graph::relabelled(std::span<const Vertex> permutation) const -> Graph
{
    std::vector<Edge> renamed;
    renamed.reserve(_edges.size());
    for (auto [u, v] : _edges)
        renamed.emplace_back(permutation[u], permutation[v]);
    return build(order(), renamed, order());
}
