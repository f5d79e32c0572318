#pragma once

#include <sncolor/coloring.hpp>
#include <sncolor/graph.hpp>

#include <cstdint>
#include <vector>

namespace sncolor
{
    struct ChromaticResult
    {
        int chromatic_number = 0;
        PartialColoring coloring;           ///< proper, complete, colours 1..chromatic_number
        std::vector<Vertex> clique;         ///< the lower-bound clique
        std::uint64_t nodes = 0;
    };

    /**
     * Exact chromatic number by DSATUR branch and bound.
     *
     * Vertex order is maximum saturation, then higher degree, then lower index;
     * colours are tried ascending, so the witness is deterministic. The lower
     * bound is a greedy clique, precoloured 1..q before branching. A max_nodes
     * of 0 means unlimited; otherwise BudgetExceeded is thrown once the search
     * visits more nodes than that.
     */
    auto chromatic_number(const Graph & g, std::uint64_t max_nodes = 0) -> ChromaticResult;

    /// Largest clique found by greedy extension from the highest-degree starts.
    auto greedy_clique(const Graph & g) -> std::vector<Vertex>;
}
