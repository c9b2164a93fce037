#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graphcode {

// Thrown for malformed external input (matrix text, edge lists, graph6,
// Pauli strings). Carries a 1-based line/column so CLI messages can point
// at the offending character.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace graphcode
