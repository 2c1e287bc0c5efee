#include "normalize.hpp"

#include <algorithm>

#include "errors.hpp"

namespace sahl {

using M = ModalFormula;

namespace {

M nnf_signed(const M& f, bool negate) {
  switch (f.kind()) {
    case ModalKind::Bottom: return negate ? M::top() : f;
    case ModalKind::Top: return negate ? M::bottom() : f;
    case ModalKind::Prop: return negate ? M::negation(f) : f;
    case ModalKind::Not: return nnf_signed(f.arg(), !negate);
    case ModalKind::Box: {
      auto a = nnf_signed(f.arg(), negate);
      return negate ? M::dia(a) : M::box(a);
    }
    case ModalKind::Dia: {
      auto a = nnf_signed(f.arg(), negate);
      return negate ? M::box(a) : M::dia(a);
    }
    case ModalKind::And:
    case ModalKind::Or: {
      auto a = nnf_signed(f.lhs(), negate);
      auto b = nnf_signed(f.rhs(), negate);
      return f.is(ModalKind::And) != negate ? M::conj(a, b) : M::disj(a, b);
    }
    case ModalKind::Implies: {
      // a → b ≡ ¬a ∨ b; ¬(a → b) ≡ a ∧ ¬b
      auto a = nnf_signed(f.lhs(), !negate);
      auto b = nnf_signed(f.rhs(), negate);
      return negate ? M::conj(a, b) : M::disj(a, b);
    }
    case ModalKind::Iff: {
      auto pa = nnf_signed(f.lhs(), false);
      auto na = nnf_signed(f.lhs(), true);
      auto pb = nnf_signed(f.rhs(), false);
      auto nb = nnf_signed(f.rhs(), true);
      if (negate) return M::disj(M::conj(pa, nb), M::conj(pb, na));
      return M::conj(M::disj(na, pb), M::disj(nb, pa));
    }
  }
  return f;
}

}  // namespace

M nnf(const M& f) { return nnf_signed(f, false); }

M negate_to_antecedent(const M& f) {
  switch (f.kind()) {
    case ModalKind::Implies: {
      if (!decompose_antecedent(f.lhs()) || !is_positive_formula(f.rhs()))
        throw Error(ErrorKind::NotInClass, "not an atomic regular implication: " + print_modal(f));
      return M::conj(f.lhs(), nnf_signed(f.rhs(), true));
    }
    case ModalKind::Box: return M::dia(negate_to_antecedent(f.arg()));
    case ModalKind::And: return M::disj(negate_to_antecedent(f.lhs()), negate_to_antecedent(f.rhs()));
    case ModalKind::Or: return M::conj(negate_to_antecedent(f.lhs()), negate_to_antecedent(f.rhs()));
    default:
      throw Error(ErrorKind::NotInClass, "not built from implications by boxes, conjunctions and disjunctions: " +
                                             print_modal(f));
  }
}

namespace {

void push_unique(std::vector<M>& out, M f) {
  if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(std::move(f));
}

std::vector<M> alternatives(const M& skel, std::size_t cap) {
  auto check = [&](const std::vector<M>& v) {
    if (v.size() > cap)
      throw Error(ErrorKind::ConjunctCap, "more than " + std::to_string(cap) + " definite conjuncts");
    return v;
  };
  switch (skel.kind()) {
    case ModalKind::Or: {
      auto out = alternatives(skel.lhs(), cap);
      for (auto& b : alternatives(skel.rhs(), cap)) push_unique(out, std::move(b));
      return check(out);
    }
    case ModalKind::And: {
      const auto as = alternatives(skel.lhs(), cap);
      const auto bs = alternatives(skel.rhs(), cap);
      if (as.size() * bs.size() > cap)
        throw Error(ErrorKind::ConjunctCap, "more than " + std::to_string(cap) + " definite conjuncts");
      std::vector<M> out;
      for (const auto& a : as)
        for (const auto& b : bs) push_unique(out, M::conj(a, b));
      return out;
    }
    case ModalKind::Dia: {
      std::vector<M> out;
      for (auto& a : alternatives(skel.arg(), cap)) push_unique(out, M::dia(std::move(a)));
      return out;
    }
    default: return {skel};
  }
}

}  // namespace

std::vector<M> to_definite_implications(const M& imp, std::size_t cap) {
  auto r = classify_implication(imp);
  if (!r) throw Error(ErrorKind::NotInClass, "not an atomic regular implication: " + print_modal(imp));
  const auto& d = *r->antecedent;
  std::map<std::string, M> fill;
  for (std::size_t i = 0; i < d.slots.size(); ++i) fill.emplace(slot_name(i), d.slots[i].content);
  std::vector<M> out;
  for (const auto& alt : alternatives(d.skeleton, cap)) push_unique(out, M::implies(substitute_prop(alt, fill), imp.rhs()));
  return out;
}

UniformElimination eliminate_uniform_variables(const M& f) {
  UniformElimination out{f, {}};
  for (const auto& [letter, pol] : polarity_map(f)) {
    if (pol == Polarity::Positive) out.replaced.emplace(letter, M::bottom());
    else if (pol == Polarity::Negative) out.replaced.emplace(letter, M::top());
  }
  if (!out.replaced.empty()) out.result = substitute_prop(f, out.replaced);
  return out;
}

namespace {

M fold_step(const M& f) {
  auto is_bot = [](const M& g) { return g.is(ModalKind::Bottom); };
  auto is_top = [](const M& g) { return g.is(ModalKind::Top); };
  switch (f.kind()) {
    case ModalKind::Not: {
      auto a = fold_step(f.arg());
      if (is_bot(a)) return M::top();
      if (is_top(a)) return M::bottom();
      return M::negation(a);
    }
    case ModalKind::Box: {
      auto a = fold_step(f.arg());
      return is_top(a) ? M::top() : M::box(a);
    }
    case ModalKind::Dia: {
      auto a = fold_step(f.arg());
      return is_bot(a) ? M::bottom() : M::dia(a);
    }
    case ModalKind::And: {
      auto a = fold_step(f.lhs());
      auto b = fold_step(f.rhs());
      if (is_bot(a) || is_bot(b)) return M::bottom();
      if (is_top(a)) return b;
      if (is_top(b)) return a;
      return M::conj(a, b);
    }
    case ModalKind::Or: {
      auto a = fold_step(f.lhs());
      auto b = fold_step(f.rhs());
      if (is_top(a) || is_top(b)) return M::top();
      if (is_bot(a)) return b;
      if (is_bot(b)) return a;
      return M::disj(a, b);
    }
    case ModalKind::Implies: {
      auto a = fold_step(f.lhs());
      auto b = fold_step(f.rhs());
      if (is_bot(a) || is_top(b)) return M::top();
      if (is_top(a)) return b;
      return M::implies(a, b);
    }
    case ModalKind::Iff: {
      auto a = fold_step(f.lhs());
      auto b = fold_step(f.rhs());
      if (is_top(a)) return b;
      if (is_top(b)) return a;
      return M::iff(a, b);
    }
    default: return f;
  }
}

}  // namespace

M fold_constants(const M& f) {
  M cur = f;
  for (;;) {
    M next = fold_step(cur);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

}  // namespace sahl
