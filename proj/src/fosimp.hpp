#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "formula.hpp"
#include "semantics.hpp"

namespace sahl {

struct SimpRule {
  std::string name;
  // Rewrites the root of its argument, or returns nullopt if not applicable.
  std::function<std::optional<FoFormula>(const FoFormula&)> apply;
};

// In the order they are tried at each node.
const std::vector<SimpRule>& simplification_rules();

// Innermost-first rewriting to a fixed point.
FoFormula simplify(const FoFormula& f);

struct FoCounterexample {
  Frame frame;
  Assignment assignment;
  Interpretation interpretation;
};

struct EquivalenceVerdict {
  bool pass = true;
  std::optional<FoCounterexample> counterexample;
};

// Exhaustive over all frames of size 1..max_n, assignments of the free
// variables and interpretations of the predicate symbols.
EquivalenceVerdict equivalent_on_small_frames(const FoFormula& a, const FoFormula& b, int max_n);

}  // namespace sahl
