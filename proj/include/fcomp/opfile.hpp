#pragma once

#include <string>
#include <string_view>

#include "fcomp/tables.hpp"

namespace fcomp {

// Line-oriented operator file format:
//   # comment
//   domain <m>
//   op <name> <arity> : <m^arity level codes, argument-major>
// The domain line comes first among non-comment lines and appears once.
// Names match [A-Za-z_][A-Za-z0-9_]* and are unique.

operator_set parse_operator_file(std::string_view text);

std::string render_operator_file(const operator_set& set);

} // namespace fcomp
