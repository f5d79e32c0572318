#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sncolor
{
    enum class ErrorCode
    {
        SelfLoop,
        VertexOutOfRange,
        GraphTooLarge,
        InvalidFamilyParams,
        InvalidColoring,
        ParseError,
        BudgetExceeded,
        DisconnectedGraph,
        MalformedPuzzle,
        ImproperGivens
    };

    auto to_string(ErrorCode code) -> std::string_view;

    class Error : public std::runtime_error
    {
        public:
            Error(ErrorCode code, const std::string & message);

            auto code() const noexcept -> ErrorCode { return _code; }

        private:
            ErrorCode _code;
    };

    /// Raised by the text readers; line and column are 1-based, byte is 0-based.
    class ParseError : public Error
    {
        public:
            ParseError(const std::string & message, std::size_t line, std::size_t column, std::size_t byte);

            auto line() const noexcept -> std::size_t { return _line; }
            auto column() const noexcept -> std::size_t { return _column; }
            auto byte() const noexcept -> std::size_t { return _byte; }

        private:
            std::size_t _line, _column, _byte;
    };

    /// Raised when a node, subset, or wall-clock budget runs out. For the Sudoku
    /// number search, proven_lower_bound() is the value every completed size
    /// level has ruled out below.
    class BudgetExceeded : public Error
    {
        public:
            explicit BudgetExceeded(const std::string & message, std::size_t proven_lower_bound = 0);

            auto proven_lower_bound() const noexcept -> std::size_t { return _proven_lower_bound; }

        private:
            std::size_t _proven_lower_bound;
    };
}
