#include <sncolor/error.hpp>

using namespace sncolor;

auto sncolor::to_string(ErrorCode code) -> std::string_view
{
    switch (code) {
        case ErrorCode::SelfLoop:            return "SelfLoop";
        case ErrorCode::VertexOutOfRange:    return "VertexOutOfRange";
        case ErrorCode::GraphTooLarge:       return "GraphTooLarge";
        case ErrorCode::InvalidFamilyParams: return "InvalidFamilyParams";
        case ErrorCode::InvalidColoring:     return "InvalidColoring";
        case ErrorCode::ParseError:          return "ParseError";
        case ErrorCode::BudgetExceeded:      return "BudgetExceeded";
        case ErrorCode::DisconnectedGraph:   return "DisconnectedGraph";
        case ErrorCode::MalformedPuzzle:     return "MalformedPuzzle";
        case ErrorCode::ImproperGivens:      return "ImproperGivens";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string & message) :
    std::runtime_error(std::string(to_string(code)) + ": " + message),
    _code(code)
{
}

ParseError::ParseError(const std::string & message, std::size_t line, std::size_t column, std::size_t byte) :
    Error(ErrorCode::ParseError, message + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
    _line(line),
    _column(column),
    _byte(byte)
{
}

BudgetExceeded::BudgetExceeded(const std::string & message, std::size_t proven_lower_bound) :
    Error(ErrorCode::BudgetExceeded, message),
    _proven_lower_bound(proven_lower_bound)
{
}
