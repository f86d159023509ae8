#ifndef PREHOM_PARSER_HPP
#define PREHOM_PARSER_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "prehom/multipoly.hpp"

namespace prehom {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    size_t position;
};

/// Parses the polynomial grammar: integer/rational literals ("3", "1/2"),
/// named variables, +, -, *, ^ with non-negative integer exponents, and
/// parentheses.  Implicit multiplication and floating-point literals are
/// rejected.  Unknown variable names raise ParseError.
MultiPoly parse_poly(std::string_view src, std::span<const std::string> vars);

}  // namespace prehom

#endif
