#pragma once

#include <string_view>

#include "formula.hpp"

namespace sahl {

// Both parsers throw ParseError with a 1-based line/column and the set of
// tokens that would have been accepted.
ModalFormula parse_modal(std::string_view text);
FoFormula parse_fo(std::string_view text);

}  // namespace sahl
