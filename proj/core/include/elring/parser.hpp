#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "elring/ring.hpp"

namespace elring {

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          position(position) {}

    std::size_t position;
};

/// Parses an element expression against a ring's generators:
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := integer ('*' factor)* | factor ('*' factor)*
///   factor := primary ('^' posint)?
///   primary:= ident | '(' expr ')'
/// Whitespace is insignificant. Returns the canonical element.
Value parse_element(const Ring& ring, std::string_view text);

}  // namespace elring
