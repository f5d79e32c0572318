#pragma once

#include <sncolor/coloring.hpp>
#include <sncolor/graph.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace sncolor
{
    /// 81 characters, row-major; '1'..'9' are givens, '0' or '.' blank.
    /// Surrounding whitespace is ignored. Throws MalformedPuzzle, or
    /// ImproperGivens when two equal givens share a row, column or box.
    auto parse_puzzle(std::string_view text) -> PartialColoring;

    struct PuzzleResult
    {
        int solutions = 0;                  ///< 0, 1, or 2 meaning "two or more"
        std::optional<std::string> grid;    ///< the solution when unique
        std::uint64_t nodes = 0;
    };

    /// Digit d is colour d on the 81-vertex Sudoku graph; counts completions up to 2.
    auto solve_puzzle(std::string_view text) -> PuzzleResult;

    auto sudoku_graph() -> const Graph &;
}
