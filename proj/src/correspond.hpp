#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "classify.hpp"
#include "errors.hpp"
#include "formula.hpp"

namespace sahl {

enum class SchemeKind { ConstEmpty, ConstFull, FiniteSet, BoxAtomUnion, InductiveUnion };

const char* to_string(SchemeKind k);

struct SchemeEntry {
  std::string z;
  std::vector<std::string> rho;
  std::size_t k = 0;
};

struct LetterScheme {
  std::string letter;
  SchemeKind kind = SchemeKind::ConstEmpty;
  std::vector<SchemeEntry> entries;
};

using TameScheme = std::vector<LetterScheme>;

// α_p with its hole variable `free`.
struct AlphaDefinition {
  std::string letter;
  std::string free;
  FoFormula body;
};

struct StrategyResult {
  TameScheme scheme;
  std::vector<AlphaDefinition> alpha;
  FoFormula raw;
};

struct ConjunctResult {
  ModalFormula implication;  // as split off, before uniform elimination
  ModalFormula reduced;      // after elimination and constant folding
  SyntacticClass cls = SyntacticClass::Unclassified;
  std::map<std::string, ModalFormula> eliminated;
  StrategyResult strategy;
  FoFormula simplified;
};

struct CorrespondenceResult {
  ModalFormula input;
  SyntacticClass class_used = SyntacticClass::Unclassified;
  ClassificationReport report;
  std::map<std::string, ModalFormula> eliminated_uniform;
  std::vector<ConjunctResult> conjuncts;
  FoFormula combined_raw;
  FoFormula combined;
  std::string free_var = "x";
};

class UnsupportedError : public Error {
 public:
  UnsupportedError(ClassificationReport report, const std::string& what);
  const ClassificationReport& report() const noexcept { return report_; }

 private:
  ClassificationReport report_;
};

// R^k(a, b) as an existential chain; k = 0 gives a = b.
FoFormula r_path(const std::string& a, const std::string& b, std::size_t k, VarSupply& vars);

// Throws Unsupported (carrying the classification text) when no strategy applies.
CorrespondenceResult correspond(const ModalFormula& f);

// Throws NotUniform.
FoFormula correspond_uniform(const ModalFormula& f);

// Each takes a definite implication of the respective class. Letters
// without a positive antecedent occurrence are rejected with NotInClass.
StrategyResult correspond_vssi(const ModalFormula& imp);
StrategyResult correspond_si(const ModalFormula& imp);
StrategyResult correspond_aii(const ModalFormula& imp);

FoFormula compose_conjunction(const std::vector<FoFormula>& parts);
FoFormula compose_box(const FoFormula& alpha, std::size_t k);
// Throws SharedLetters when two disjuncts share a proposition letter.
FoFormula compose_disjoint_disjunction(const std::vector<std::pair<ModalFormula, FoFormula>>& parts);

}  // namespace sahl
