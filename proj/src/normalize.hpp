#pragma once

#include <map>
#include <string>
#include <vector>

#include "classify.hpp"
#include "formula.hpp"

namespace sahl {

ModalFormula nnf(const ModalFormula& f);

// Negation pushed through □, ∧, ∨ down to the implication leaves, where
// ¬(α → Pos) becomes α ∧ nnf(¬Pos). Leaves must be atomic regular
// implications. Throws NotInClass otherwise.
ModalFormula negate_to_antecedent(const ModalFormula& f);

constexpr std::size_t default_conjunct_cap = 256;

// Splits an implication of class VSSI, SI, AII (or atomic regular) into
// definite implications. Throws NotInClass or ConjunctCap.
std::vector<ModalFormula> to_definite_implications(const ModalFormula& imp,
                                                   std::size_t cap = default_conjunct_cap);

struct UniformElimination {
  ModalFormula result;
  std::map<std::string, ModalFormula> replaced;  // letter ↦ ⊥ or ⊤
};

UniformElimination eliminate_uniform_variables(const ModalFormula& f);

// Folds ⊤/⊥ through the boolean and modal connectives where the result is
// equivalent. a → ⊥ is left alone.
ModalFormula fold_constants(const ModalFormula& f);

}  // namespace sahl
