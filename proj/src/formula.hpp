#pragma once

// Syntax trees for the basic modal language and for the first-order
// correspondence language over {R, =, unary predicates}.
//
// Both tree types are immutable handles over shared nodes, so copies are
// cheap and values can be shared freely between threads.

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace sahl {

// ---------------------------------------------------------------------------
// Modal formulas
// ---------------------------------------------------------------------------

enum class ModalKind { Bottom, Top, Prop, Not, And, Or, Implies, Iff, Box, Dia };

class ModalFormula {
 public:
  // ⊥
  ModalFormula() : ModalFormula(bottom()) {}
  static ModalFormula bottom();
  static ModalFormula top();
  static ModalFormula prop(std::string name);
  static ModalFormula negation(ModalFormula f);
  static ModalFormula conj(ModalFormula a, ModalFormula b);
  static ModalFormula disj(ModalFormula a, ModalFormula b);
  static ModalFormula implies(ModalFormula a, ModalFormula b);
  static ModalFormula iff(ModalFormula a, ModalFormula b);
  static ModalFormula box(ModalFormula f);
  static ModalFormula dia(ModalFormula f);
  // □^k f
  static ModalFormula box_power(ModalFormula f, std::size_t k);

  ModalKind kind() const noexcept;
  bool is(ModalKind k) const noexcept { return kind() == k; }
  bool is_unary() const noexcept;
  bool is_binary() const noexcept;

  // Prop only.
  const std::string& name() const;
  // Not, Box, Dia.
  const ModalFormula& arg() const;
  // And, Or, Implies, Iff.
  const ModalFormula& lhs() const;
  const ModalFormula& rhs() const;

  std::size_t size() const noexcept;

  friend bool operator==(const ModalFormula& a, const ModalFormula& b);

 private:
  struct Node;
  explicit ModalFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Letters in order of first occurrence (left to right, depth first).
std::vector<std::string> prop_letters(const ModalFormula& f);

// Max nesting of □ and ◇.
std::size_t modal_depth(const ModalFormula& f);

ModalFormula substitute_prop(const ModalFormula& f,
                             const std::map<std::string, ModalFormula>& s);

// Rewrites to the primitive basis {⊥, p, ¬, ∨, ◇}.
ModalFormula desugar(const ModalFormula& f);

std::string print_modal(const ModalFormula& f);

bool is_valid_letter_name(std::string_view name);

// ---------------------------------------------------------------------------
// First-order formulas
// ---------------------------------------------------------------------------

enum class VarOrigin { Source, Translation, Parameter, Chain };

// Origin is carried by the name prefix: x is the source variable, y/z/v
// followed by a counter are translation, parameter and chain variables.
VarOrigin origin_of(std::string_view var);

// Fresh names y0, z1, v2, ... drawn from one monotone counter. Names already
// present in `taken` are skipped.
class VarSupply {
 public:
  VarSupply() = default;
  explicit VarSupply(std::set<std::string> taken) : taken_(std::move(taken)) {}
  std::string fresh(VarOrigin origin);
  void reserve(const std::string& name) { taken_.insert(name); }

 private:
  std::size_t counter_ = 0;
  std::set<std::string> taken_;
};

enum class FoKind { True, False, Eq, Rel, Pred, Not, And, Or, Implies, Iff, Forall, Exists };

class FoFormula {
 public:
  // true
  FoFormula() : FoFormula(truth()) {}
  static FoFormula truth();
  static FoFormula falsity();
  static FoFormula eq(std::string a, std::string b);
  static FoFormula rel(std::string a, std::string b);
  static FoFormula pred(std::string symbol, std::string var);
  static FoFormula negation(FoFormula f);
  // Empty list gives True, a single element is returned as is.
  static FoFormula conj(std::vector<FoFormula> parts);
  static FoFormula disj(std::vector<FoFormula> parts);
  static FoFormula conj(FoFormula a, FoFormula b) { return conj(std::vector<FoFormula>{std::move(a), std::move(b)}); }
  static FoFormula disj(FoFormula a, FoFormula b) { return disj(std::vector<FoFormula>{std::move(a), std::move(b)}); }
  static FoFormula implies(FoFormula a, FoFormula b);
  static FoFormula iff(FoFormula a, FoFormula b);
  static FoFormula forall(std::string var, FoFormula body);
  static FoFormula exists(std::string var, FoFormula body);
  static FoFormula forall(const std::vector<std::string>& vars, FoFormula body);
  static FoFormula exists(const std::vector<std::string>& vars, FoFormula body);

  FoKind kind() const noexcept;
  bool is(FoKind k) const noexcept { return kind() == k; }
  bool is_quantifier() const noexcept { return is(FoKind::Forall) || is(FoKind::Exists); }
  bool is_atom() const noexcept;

  // Eq and Rel: two terms; Pred: one term.
  const std::vector<std::string>& terms() const;
  // Pred symbol.
  const std::string& symbol() const;
  // Bound variable of a quantifier.
  const std::string& var() const;
  const std::vector<FoFormula>& children() const;
  const FoFormula& child(std::size_t i) const { return children().at(i); }
  // Body of a quantifier or operand of Not.
  const FoFormula& body() const { return children().at(0); }

  std::size_t size() const noexcept;

  friend bool operator==(const FoFormula& a, const FoFormula& b);

 private:
  struct Node;
  explicit FoFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Universally quantified monadic second-order formula.
struct SoFormula {
  std::vector<std::string> prefix;
  FoFormula matrix;
};

// p -> P, foo_1 -> Foo_1
std::string predicate_for(std::string_view letter);
std::string letter_for(std::string_view predicate);

std::set<std::string> free_vars(const FoFormula& f);
std::set<std::string> all_vars(const FoFormula& f);
std::vector<std::string> predicates(const FoFormula& f);
std::size_t quantifier_count(const FoFormula& f);

// Capture-avoiding simultaneous substitution of variables by variables.
FoFormula substitute_vars(const FoFormula& f, const std::map<std::string, std::string>& s);

// Replaces every Pred(P, t) with `fn(P, t)` when fn returns a value.
template <typename Fn>
FoFormula map_predicates(const FoFormula& f, Fn&& fn);

// Structural equality up to renaming of bound variables, flattening of
// nested And/Or and orientation of equalities.
bool alpha_equivalent(const FoFormula& a, const FoFormula& b);

std::string print_fo(const FoFormula& f);
std::string print_so(const SoFormula& f);

// ---------------------------------------------------------------------------

template <typename Fn>
FoFormula map_predicates(const FoFormula& f, Fn&& fn) {
  switch (f.kind()) {
    case FoKind::Pred: {
      auto r = fn(f.symbol(), f.terms()[0]);
      return r ? *r : f;
    }
    case FoKind::True:
    case FoKind::False:
    case FoKind::Eq:
    case FoKind::Rel:
      return f;
    case FoKind::Not:
      return FoFormula::negation(map_predicates(f.body(), fn));
    case FoKind::And:
    case FoKind::Or: {
      std::vector<FoFormula> parts;
      for (const auto& c : f.children()) parts.push_back(map_predicates(c, fn));
      return f.is(FoKind::And) ? FoFormula::conj(std::move(parts)) : FoFormula::disj(std::move(parts));
    }
    case FoKind::Implies:
    case FoKind::Iff: {
      auto a = map_predicates(f.child(0), fn);
      auto b = map_predicates(f.child(1), fn);
      return f.is(FoKind::Implies) ? FoFormula::implies(std::move(a), std::move(b))
                                   : FoFormula::iff(std::move(a), std::move(b));
    }
    case FoKind::Forall:
      return FoFormula::forall(f.var(), map_predicates(f.body(), fn));
    case FoKind::Exists:
      return FoFormula::exists(f.var(), map_predicates(f.body(), fn));
  }
  return f;
}

}  // namespace sahl
