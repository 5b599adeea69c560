#pragma once

#include <string_view>

#include "constructive/crn.hpp"

namespace constructive {

/// Parses the real-expression language
///
///   real := rational | "(" real ")" | real ("+" | "-" | "*") real
///         | "abs(" real ")" | "min(" real "," real ")" | "max(" real "," real ")"
///         | "div(" real "," real "," k ")"
///
/// with "*" binding tighter than "+" and "-". Rationals are "p" or "p/q" and
/// may carry a leading minus. In div, k is the precision at which the divisor
/// must be certified apart from zero; a failing check throws
/// Error(InvalidWitness). Syntax errors throw Error(Parse).
Crn parse_real(std::string_view text);

}  // namespace constructive
