#pragma once

#include <string>

#include "nichols/cyclotomic.hpp"

namespace nichols {

// Parse an exact scalar literal:
//   literal  := factor ( "*" factor )*
//   factor   := rational | root
//   root     := "zeta(" uint ")" [ "^" int ]
//   rational := [ "+" | "-" ] uint [ "/" uint ]
// Whitespace is allowed between tokens.  Examples: "1", "-1", "2/3",
// "zeta(3)", "zeta(8)^3", "1/2*zeta(4)".
// Throws std::invalid_argument with a position-bearing message on bad input.
CyclotomicNumber parse_scalar_literal(const std::string& text);

}  // namespace nichols
