#pragma once

#include "formula.hpp"

namespace sahl {

// ST_x. Fresh variables come from `vars`, so several translations can share
// one supply and stay disjoint.
FoFormula standard_translation(const std::string& x, const ModalFormula& f, VarSupply& vars);
FoFormula standard_translation(const std::string& x, const ModalFormula& f);

// ∀P̄ ST_x(f), prefix in first-occurrence order of the letters.
SoFormula second_order_translation(const ModalFormula& f, const std::string& x = "x");

}  // namespace sahl
