#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace icf
{
    /// Raised when an operation receives an argument outside its domain.
    class InvalidArgument : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    class InvalidVertex : public InvalidArgument
    {
        public:
            using InvalidArgument::InvalidArgument;
    };

    /// A documented hypothesis of a bound (for example k <= q) does not hold.
    class PreconditionError : public InvalidArgument
    {
        public:
            using InvalidArgument::InvalidArgument;
    };

    /// An enumeration or sampling run would exceed its configured step budget.
    class BudgetExceeded : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    enum class ParseErrorKind
    {
        malformed_header,
        malformed_edge,
        edge_order,
        duplicate_edge,
        endpoint_out_of_range,
        bipartite_split,
        edge_count_mismatch,
        missing_final_newline
    };

    auto to_string(ParseErrorKind kind) -> std::string;

    class ParseError : public std::runtime_error
    {
        public:
            ParseError(ParseErrorKind kind, std::size_t line, const std::string & detail);

            auto kind() const -> ParseErrorKind { return _kind; }
            auto line() const -> std::size_t { return _line; }

        private:
            ParseErrorKind _kind;
            std::size_t _line;
    };
}
