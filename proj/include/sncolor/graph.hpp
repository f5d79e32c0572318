#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace sncolor
{
    using Vertex = int;
    using Edge = std::pair<Vertex, Vertex>;

    inline constexpr int default_max_vertices = 10'000;

    /**
     * Immutable simple undirected graph on vertices 0..n-1.
     *
     * Edges are stored normalised (u < v) and sorted lexicographically, which
     * makes serialisation canonical. Neighbour lists are sorted ascending.
     */
    class Graph
    {
        public:
            Graph() = default;

            /// Validates and deduplicates. Throws Error with SelfLoop,
            /// VertexOutOfRange or GraphTooLarge.
            static auto build(int n, std::span<const Edge> edges, int max_vertices = default_max_vertices) -> Graph;

            auto order() const noexcept -> int { return static_cast<int>(_adjacency.size()); }
            auto size() const noexcept -> std::size_t { return _edges.size(); }

            auto edges() const noexcept -> const std::vector<Edge> & { return _edges; }
            auto neighbours(Vertex v) const -> std::span<const Vertex> { return _adjacency[v]; }
            auto degree(Vertex v) const -> int { return static_cast<int>(_adjacency[v].size()); }
            auto adjacent(Vertex u, Vertex v) const -> bool;

            auto connected() const -> bool;
            auto bipartite() const -> bool;

            /// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
            auto induced(std::span<const Vertex> vertices) const -> Graph;

            /// Graph with vertex v renamed to permutation[v].
            auto relabelled(std::span<const Vertex> permutation) const -> Graph;

            friend auto operator== (const Graph &, const Graph &) -> bool = default;

        private:
            std::vector<Edge> _edges;
            std::vector<std::vector<Vertex>> _adjacency;
    };
}
