#pragma once

#include <sncolor/graph.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sncolor
{
    enum class Family
    {
        Path,
        Cycle,
        Complete,
        CompleteMultipartite,
        Star,
        Tree,
        Friendship,
        Amalgam,
        Tadpole,
        Lollipop,
        CycleOfCliques,
        CycleOfCliquesMinus,
        StackedTriangulation,
        Fan,
        Wheel,
        SudokuGrid
    };

    auto to_string(Family family) -> std::string_view;
    auto family_from_string(std::string_view name) -> std::optional<Family>;

    /**
     * Parameters for one named graph family. Which fields are read depends on
     * the family:
     *
     *   Path, Cycle, Complete, Fan, Wheel       n
     *   Star, Friendship                        m
     *   Tree                                    n, seed
     *   CompleteMultipartite                    parts
     *   Amalgam                                 m copies of K_n glued on K_r
     *   Tadpole, Lollipop                       C_n / K_n plus a path P_m
     *   CycleOfCliques, CycleOfCliquesMinus     n cliques K_m on the rim C_2n
     *   StackedTriangulation                    attachments
     *   SudokuGrid                              b
     */
    struct FamilySpec
    {
        Family family = Family::Path;
        int n = 0;
        int m = 0;
        int r = 0;
        int b = 0;
        std::vector<int> parts;
        std::vector<Edge> attachments;
        std::uint64_t seed = 0;

        static auto path(int n) -> FamilySpec;
        static auto cycle(int n) -> FamilySpec;
        static auto complete(int n) -> FamilySpec;
        static auto complete_multipartite(std::vector<int> parts) -> FamilySpec;
        static auto star(int leaves) -> FamilySpec;
        static auto tree(int n, std::uint64_t seed) -> FamilySpec;
        static auto friendship(int triangles) -> FamilySpec;
        static auto amalgam(int copies, int clique, int core) -> FamilySpec;
        static auto tadpole(int cycle, int path) -> FamilySpec;
        static auto lollipop(int clique, int path) -> FamilySpec;
        static auto cycle_of_cliques(int n, int clique) -> FamilySpec;
        static auto cycle_of_cliques_minus(int n, int clique) -> FamilySpec;
        static auto stacked_triangulation(std::vector<Edge> attachments) -> FamilySpec;
        static auto fan(int n) -> FamilySpec;
        static auto wheel(int rim) -> FamilySpec;
        static auto sudoku_grid(int box_side) -> FamilySpec;

        /// Human-readable form such as "Tadpole(n=5,m=2)".
        auto describe() const -> std::string;
    };

    /// Throws Error(InvalidFamilyParams) naming the violated hypothesis.
    auto validate(const FamilySpec & spec) -> void;

    /**
     * Deterministic generator. Labelling conventions (0-based):
     *
     *   Path/Cycle         v_i -> i-1 in order around the path or cycle.
     *   CompleteMultipartite  parts occupy consecutive blocks.
     *   Star               centre 0, leaves 1..m.
     *   Tree               uniform random labelled tree from a Pruefer sequence.
     *   Amalgam            core K_r is 0..r-1; copy i (1-based) owns the block
     *                      r+(i-1)(n-r) .. r+i(n-r)-1.  Friendship(m) = Amalgam(m,3,1).
     *   Tadpole            cycle v_1..v_n -> 0..n-1, u_1 = v_1, u_j -> n+j-2.
     *   Lollipop           clique v_1..v_n -> 0..n-1, u_1 = v_1, u_j -> n+j-2.
     *   CycleOfCliques     rim x_1..x_2n -> 0..2n-1, then H^i as blocks of m-2:
     *                      y_{i,j} -> 2n+(i-1)(m-2)+(j-1).  K^i = {x_2i-1, x_2i} + H^i.
     *   CycleOfCliquesMinus  same, without the n edges x_2i-1 x_2i.
     *   StackedTriangulation  y=0, z=1, x_1=2; vertex x_i (i>=2) is i+1 and is
     *                      joined to both ends of attachments[i-2], which must
     *                      be an edge of the graph built so far.
     *   Fan                path v_1..v_n -> 0..n-1, apex n.
     *   Wheel              rim 0..n-1, hub n.
     *   SudokuGrid(b)      cell (row, col) -> row*b^2 + col.
     */
    auto generate(const FamilySpec & spec) -> Graph;

    /// Uniform random labelled tree on n vertices (Pruefer decoding).
    auto random_tree(int n, std::uint64_t seed) -> Graph;
}
