#include "translate.hpp"

namespace sahl {

FoFormula standard_translation(const std::string& x, const ModalFormula& f, VarSupply& vars) {
  using F = FoFormula;
  switch (f.kind()) {
    case ModalKind::Bottom: return F::negation(F::eq(x, x));
    case ModalKind::Top: return F::eq(x, x);
    case ModalKind::Prop: return F::pred(predicate_for(f.name()), x);
    case ModalKind::Not: return F::negation(standard_translation(x, f.arg(), vars));
    case ModalKind::And:
    case ModalKind::Or:
    case ModalKind::Implies:
    case ModalKind::Iff: {
      auto a = standard_translation(x, f.lhs(), vars);
      auto b = standard_translation(x, f.rhs(), vars);
      if (f.is(ModalKind::And)) return F::conj(std::move(a), std::move(b));
      if (f.is(ModalKind::Or)) return F::disj(std::move(a), std::move(b));
      if (f.is(ModalKind::Implies)) return F::implies(std::move(a), std::move(b));
      return F::iff(std::move(a), std::move(b));
    }
    case ModalKind::Dia: {
      auto y = vars.fresh(VarOrigin::Translation);
      return F::exists(y, F::conj(F::rel(x, y), standard_translation(y, f.arg(), vars)));
    }
    case ModalKind::Box: {
      auto y = vars.fresh(VarOrigin::Translation);
      return F::forall(y, F::implies(F::rel(x, y), standard_translation(y, f.arg(), vars)));
    }
  }
  return F::truth();
}

FoFormula standard_translation(const std::string& x, const ModalFormula& f) {
  VarSupply vars({x});
  return standard_translation(x, f, vars);
}

SoFormula second_order_translation(const ModalFormula& f, const std::string& x) {
  SoFormula so{{}, standard_translation(x, f)};
  for (const auto& p : prop_letters(f)) so.prefix.push_back(predicate_for(p));
  return so;
}

}  // namespace sahl
