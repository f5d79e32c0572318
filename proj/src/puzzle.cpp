#include <sncolor/puzzle.hpp>
#include <sncolor/error.hpp>
#include <sncolor/extension.hpp>
#include <sncolor/families.hpp>

#include <cctype>

using namespace sncolor;

auto sncolor::sudoku_graph() -> const Graph &
{
    static const Graph grid = generate(FamilySpec::sudoku_grid(3));
    return grid;
}

auto sncolor::parse_puzzle(std::string_view text) -> PartialColoring
{
    while (! text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (! text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);

    if (text.size() != 81)
        throw Error(ErrorCode::MalformedPuzzle, "expected 81 cells, got " + std::to_string(text.size()));

    PartialColoring givens(81, 9);
    for (int cell = 0 ; cell < 81 ; ++cell) {
        char ch = text[cell];
        if (ch == '0' || ch == '.')
            continue;
        if (ch < '1' || ch > '9')
            throw Error(ErrorCode::MalformedPuzzle, std::string("bad character '") + ch + "' at cell " + std::to_string(cell));
        givens.assign(cell, ch - '0');
    }

    if (! is_proper(sudoku_graph(), givens))
        throw Error(ErrorCode::ImproperGivens, "two equal givens share a row, column or box");
    return givens;
}

auto sncolor::solve_puzzle(std::string_view text) -> PuzzleResult
{
    auto givens = parse_puzzle(text);
    auto outcome = ExtensionEngine(sudoku_graph(), 9).count_extensions(givens, 2);

    PuzzleResult result;
    result.nodes = outcome.nodes;
    result.solutions = static_cast<int>(std::min<std::uint64_t>(outcome.count, 2));
    if (outcome.kind == ExtensionKind::Unique) {
        std::string grid(81, '0');
        for (int cell = 0 ; cell < 81 ; ++cell)
            grid[cell] = static_cast<char>('0' + (*outcome.witness1)[cell]);
        result.grid = std::move(grid);
    }
    return result;
}
