#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "formula.hpp"

namespace sahl {

enum class Polarity { Absent, Positive, Negative, Both };
using PolarityMap = std::map<std::string, Polarity>;

const char* to_string(Polarity p);

PolarityMap polarity_map(const ModalFormula& f);
Polarity polarity_of(const PolarityMap& m, const std::string& letter);
bool is_positive_formula(const ModalFormula& f);
bool is_negative_formula(const ModalFormula& f);
bool is_closed(const ModalFormula& f);
bool is_uniform(const ModalFormula& f);

struct BoxedAtom {
  std::size_t k = 0;
  std::string head;
};

// □(ρ¹ → □(ρ² → … □(ρ^h → □^k head)…))
struct AtomicBoxFormula {
  std::vector<std::string> rho;
  std::size_t k = 0;
  std::string head;

  ModalFormula to_formula() const;
  bool is_boxed_atom() const { return rho.empty(); }
  friend bool operator==(const AtomicBoxFormula&, const AtomicBoxFormula&) = default;
};

std::optional<AtomicBoxFormula> decompose_atomic_box_formula(const ModalFormula& f);
std::optional<BoxedAtom> decompose_boxed_atom(const ModalFormula& f);

enum class SlotKind { Gamma, Chi };

struct Slot {
  SlotKind kind;
  ModalFormula content;
  std::optional<AtomicBoxFormula> chi;
};

// Antecedent = skeleton[#i := slots[i].content]; the skeleton uses only
// ∧, ∨, ◇ over the placeholder letters #0, #1, ...
struct AntecedentDecomposition {
  ModalFormula skeleton;
  std::vector<Slot> slots;

  bool definite() const;
  ModalFormula reassemble() const;
  std::vector<AtomicBoxFormula> chis() const;
  std::vector<ModalFormula> gammas() const;
};

std::string slot_name(std::size_t i);

std::optional<AntecedentDecomposition> decompose_antecedent(const ModalFormula& f);

struct DependencyDigraph {
  std::set<std::string> vertices;
  std::set<std::pair<std::string, std::string>> edges;
};

DependencyDigraph digraph_of(const std::vector<AtomicBoxFormula>& chis);
// Throws NotRegularAntecedent when the antecedent does not decompose.
DependencyDigraph dependency_digraph(const ModalFormula& antecedent);
std::optional<std::vector<std::string>> topological_order(const DependencyDigraph& g);

enum class SyntacticClass { Closed, Uniform, VSSI, SI, AII, AtomicRegularImp, SF, AIF, Unclassified };

const char* to_string(SyntacticClass c);
bool is_implication_class(SyntacticClass c);

struct Component {
  ModalFormula formula;
  SyntacticClass cls;
};

struct ClassificationReport {
  ModalFormula input;
  SyntacticClass cls = SyntacticClass::Unclassified;
  bool definite = false;
  PolarityMap polarity;
  // For implication classes the antecedent of the input; for SF/AIF the
  // negated antecedent, with consequent ⊥.
  std::optional<AntecedentDecomposition> antecedent;
  std::optional<ModalFormula> consequent;
  DependencyDigraph digraph;
  std::optional<std::vector<std::string>> order;
  std::vector<Component> components;
  std::string note;

  // The implication the correspondence strategies work on.
  std::optional<ModalFormula> implication() const;
};

// Implication classes only; nullopt when f is not one of VSSI, SI, AII or
// atomic regular.
std::optional<ClassificationReport> classify_implication(const ModalFormula& f);

ClassificationReport classify(const ModalFormula& f);

}  // namespace sahl
