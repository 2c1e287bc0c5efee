#pragma once

#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "classify.hpp"
#include "formula.hpp"
#include "semantics.hpp"

namespace sahl {

// A map P(W)^arity -> P(W) on a fixed finite carrier.
class SetFunction {
 public:
  using Fn = std::function<WorldSet(std::span<const WorldSet>)>;

  SetFunction(int n, int arity, Fn fn, std::string label = "");

  // ⟦f⟧ as a function of `args`, other letters fixed by `params`.
  static SetFunction of_formula(const Frame& F, const ModalFormula& f, std::vector<std::string> args,
                                const Valuation& params = {});
  // values[i] is the image of the tuple with index i (see tuple()).
  static SetFunction table(int n, int arity, std::vector<WorldSet> values, std::string label = "");
  static SetFunction unary(int n, std::function<WorldSet(WorldSet)> fn, std::string label = "");

  int n() const { return n_; }
  int arity() const { return arity_; }
  const std::string& label() const { return label_; }
  WorldSet all() const { return full_set(n_); }

  WorldSet operator()(std::span<const WorldSet> xs) const { return fn_(xs); }
  WorldSet operator()(WorldSet x) const { return fn_(std::span<const WorldSet>(&x, 1)); }

  std::uint64_t tuple_count() const { return std::uint64_t{1} << (n_ * arity_); }
  std::vector<WorldSet> tuple(std::uint64_t index) const;
  std::vector<WorldSet> tabulate() const;
  bool operator==(const SetFunction& o) const;

 private:
  int n_;
  int arity_;
  Fn fn_;
  std::string label_;
};

struct PropVerdict {
  bool pass = true;
  std::vector<WorldSet> witness;
  std::string detail;

  explicit operator bool() const { return pass; }
};

std::string format_set(WorldSet s, int n);

// Throws ResourceCap beyond |W| ≤ 5 or n·arity > 20.
PropVerdict is_m_additive(const SetFunction& f, const std::vector<std::size_t>& mbar);
PropVerdict is_complete_operator(const SetFunction& f, std::uint64_t seed = default_seed);
PropVerdict is_order_preserving(const SetFunction& f);
PropVerdict is_order_reversing(const SetFunction& f);

std::optional<SetFunction> right_adjoint_of(const SetFunction& f);
std::optional<SetFunction> left_adjoint_of(const SetFunction& g);
bool adjunction_holds(const SetFunction& f, const SetFunction& g);

// |W| ≤ 4.
PropVerdict is_completely_meet_preserving(const SetFunction& g);
// S with g = l_S. Throws NotMeetPreserving.
Frame extract_relation(const SetFunction& g);

// Residual in coordinate h: g(X̄[h := Y]) = ⋃{X | f(X̄[h := X]) ⊆ Y}, if the law holds.
std::optional<SetFunction> residual(const SetFunction& f, int h);
std::optional<SetFunction> residual_in_last(const SetFunction& f);

struct DirectImageRelation {
  int n = 1;
  int arity = 2;  // j + 1
  std::set<std::vector<int>> tuples;

  // S[X_1, …, X_j]
  WorldSet image(std::span<const WorldSet> xs) const;
  bool operator==(const DirectImageRelation&) const = default;
};

DirectImageRelation relation_of(const Frame& F);
// Throws NotResiduated.
DirectImageRelation relation_from_residuated(const SetFunction& f);

struct ConditionCheck {
  std::string name;
  bool pass = true;
  std::string detail;
};

using Checklist = std::vector<ConditionCheck>;

// |W| ≤ 3. Throws InvalidArgument for a non-implication or non-definite input.
Checklist validate_conditions(const ModalFormula& imp, const ClassificationReport& report, const Frame& F);

struct AggregateCheck {
  std::string name;
  std::uint64_t passed = 0;
  std::uint64_t total = 0;
  std::optional<Frame> first_failure;
  std::string detail;

  bool pass() const { return passed == total; }
};

// validate_conditions on every frame of size n, merged by check name.
std::vector<AggregateCheck> validate_conditions_all(const ModalFormula& imp, const ClassificationReport& report,
                                                    int n);

}  // namespace sahl
