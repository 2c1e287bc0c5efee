#include "fosimp.hpp"

#include <algorithm>

#include "errors.hpp"

namespace sahl {

using F = FoFormula;

namespace {

using Opt = std::optional<F>;

F rebuild_nary(FoKind k, std::vector<F> parts) {
  return k == FoKind::And ? F::conj(std::move(parts)) : F::disj(std::move(parts));
}

Opt eq_refl(const F& f) {
  if (f.is(FoKind::Eq) && f.terms()[0] == f.terms()[1]) return F::truth();
  return std::nullopt;
}

Opt not_const(const F& f) {
  if (!f.is(FoKind::Not)) return std::nullopt;
  if (f.body().is(FoKind::True)) return F::falsity();
  if (f.body().is(FoKind::False)) return F::truth();
  return std::nullopt;
}

Opt double_negation(const F& f) {
  if (f.is(FoKind::Not) && f.body().is(FoKind::Not)) return f.body().body();
  return std::nullopt;
}

Opt flatten(const F& f) {
  if (!f.is(FoKind::And) && !f.is(FoKind::Or)) return std::nullopt;
  const bool nested = std::any_of(f.children().begin(), f.children().end(), [&](const F& c) { return c.is(f.kind()); });
  if (!nested) return std::nullopt;
  std::vector<F> parts;
  for (const auto& c : f.children()) {
    if (c.is(f.kind())) parts.insert(parts.end(), c.children().begin(), c.children().end());
    else parts.push_back(c);
  }
  return rebuild_nary(f.kind(), std::move(parts));
}

Opt unit_zero(const F& f) {
  if (!f.is(FoKind::And) && !f.is(FoKind::Or)) return std::nullopt;
  const FoKind unit = f.is(FoKind::And) ? FoKind::True : FoKind::False;
  const FoKind zero = f.is(FoKind::And) ? FoKind::False : FoKind::True;
  bool changed = false;
  std::vector<F> parts;
  for (const auto& c : f.children()) {
    if (c.is(zero)) return zero == FoKind::True ? F::truth() : F::falsity();
    if (c.is(unit)) {
      changed = true;
      continue;
    }
    parts.push_back(c);
  }
  if (!changed) return std::nullopt;
  return rebuild_nary(f.kind(), std::move(parts));
}

Opt idempotence(const F& f) {
  if (!f.is(FoKind::And) && !f.is(FoKind::Or)) return std::nullopt;
  std::vector<F> parts;
  for (const auto& c : f.children())
    if (std::find(parts.begin(), parts.end(), c) == parts.end()) parts.push_back(c);
  if (parts.size() == f.children().size()) return std::nullopt;
  return rebuild_nary(f.kind(), std::move(parts));
}

Opt implies_const(const F& f) {
  if (!f.is(FoKind::Implies)) return std::nullopt;
  const auto& a = f.child(0);
  const auto& b = f.child(1);
  if (a.is(FoKind::True)) return b;
  if (a.is(FoKind::False) || b.is(FoKind::True)) return F::truth();
  if (b.is(FoKind::False)) return F::negation(a);
  return std::nullopt;
}

Opt iff_const(const F& f) {
  if (!f.is(FoKind::Iff)) return std::nullopt;
  const auto& a = f.child(0);
  const auto& b = f.child(1);
  if (a.is(FoKind::True)) return b;
  if (b.is(FoKind::True)) return a;
  if (a.is(FoKind::False)) return F::negation(b);
  if (b.is(FoKind::False)) return F::negation(a);
  return std::nullopt;
}

Opt vacuous_quantifier(const F& f) {
  if (!f.is_quantifier() || free_vars(f.body()).count(f.var())) return std::nullopt;
  return f.body();
}

// The other side of an equation y = t or t = y with t distinct from y.
std::optional<std::string> pinned(const F& g, const std::string& y) {
  if (!g.is(FoKind::Eq)) return std::nullopt;
  const auto& a = g.terms()[0];
  const auto& b = g.terms()[1];
  if (a == y && b != y) return b;
  if (b == y && a != y) return a;
  return std::nullopt;
}

// Finds an equation pinning y among the conjuncts of g (or g itself).
// Returns the value and the remaining conjuncts.
std::optional<std::pair<std::string, F>> split_pin(const F& g, const std::string& y) {
  if (auto t = pinned(g, y)) return std::make_pair(*t, F::truth());
  if (!g.is(FoKind::And)) return std::nullopt;
  const auto& kids = g.children();
  for (std::size_t i = 0; i < kids.size(); ++i) {
    if (auto t = pinned(kids[i], y)) {
      std::vector<F> rest;
      for (std::size_t j = 0; j < kids.size(); ++j)
        if (j != i) rest.push_back(kids[j]);
      return std::make_pair(*t, F::conj(std::move(rest)));
    }
  }
  return std::nullopt;
}

Opt one_point_exists(const F& f) {
  if (!f.is(FoKind::Exists)) return std::nullopt;
  auto pin = split_pin(f.body(), f.var());
  if (!pin) return std::nullopt;
  return substitute_vars(pin->second, {{f.var(), pin->first}});
}

// ∀y ∀ū (A → φ) where A pins y to a term outside ū.
Opt one_point_forall(const F& f) {
  if (!f.is(FoKind::Forall)) return std::nullopt;
  std::vector<std::string> block;
  const F* cur = &f.body();
  while (cur->is(FoKind::Forall)) {
    block.push_back(cur->var());
    cur = &cur->body();
  }
  if (!cur->is(FoKind::Implies)) return std::nullopt;
  auto pin = split_pin(cur->child(0), f.var());
  if (!pin || std::find(block.begin(), block.end(), pin->first) != block.end() ||
      std::find(block.begin(), block.end(), f.var()) != block.end())
    return std::nullopt;
  auto inner = substitute_vars(F::implies(pin->second, cur->child(1)), {{f.var(), pin->first}});
  return F::forall(block, std::move(inner));
}

// a → (b → c) becomes a ∧ b → c
Opt uncurry(const F& f) {
  if (!f.is(FoKind::Implies) || !f.child(1).is(FoKind::Implies)) return std::nullopt;
  return F::implies(F::conj(f.child(0), f.child(1).child(0)), f.child(1).child(1));
}

}  // namespace

const std::vector<SimpRule>& simplification_rules() {
  static const std::vector<SimpRule> rules = {
      {"eq-refl", eq_refl},
      {"not-const", not_const},
      {"double-negation", double_negation},
      {"flatten", flatten},
      {"unit-zero", unit_zero},
      {"idempotence", idempotence},
      {"implies-const", implies_const},
      {"iff-const", iff_const},
      {"uncurry", uncurry},
      {"vacuous-quantifier", vacuous_quantifier},
      {"one-point-exists", one_point_exists},
      {"one-point-forall", one_point_forall},
  };
  return rules;
}

namespace {

F rewrite_root(F f) {
  for (;;) {
    bool fired = false;
    for (const auto& r : simplification_rules()) {
      if (auto g = r.apply(f)) {
        f = std::move(*g);
        fired = true;
        break;
      }
    }
    if (!fired) return f;
  }
}

F pass(const F& f) {
  switch (f.kind()) {
    case FoKind::Not: return rewrite_root(F::negation(pass(f.body())));
    case FoKind::And:
    case FoKind::Or: {
      std::vector<F> parts;
      for (const auto& c : f.children()) parts.push_back(pass(c));
      return rewrite_root(rebuild_nary(f.kind(), std::move(parts)));
    }
    case FoKind::Implies: return rewrite_root(F::implies(pass(f.child(0)), pass(f.child(1))));
    case FoKind::Iff: return rewrite_root(F::iff(pass(f.child(0)), pass(f.child(1))));
    case FoKind::Forall: return rewrite_root(F::forall(f.var(), pass(f.body())));
    case FoKind::Exists: return rewrite_root(F::exists(f.var(), pass(f.body())));
    default: return rewrite_root(f);
  }
}

}  // namespace

F simplify(const F& f) {
  F cur = f;
  for (;;) {
    F next = pass(cur);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

EquivalenceVerdict equivalent_on_small_frames(const F& a, const F& b, int max_n) {
  if (max_n > frame_size_cap())
    throw Error(ErrorKind::ResourceCap,
                "frame size " + std::to_string(max_n) + " exceeds cap " + std::to_string(frame_size_cap()));
  // Compile both sides against a shared free-variable and predicate layout.
  auto both = F::iff(a, b);
  FoProgram prog(both);
  const auto& vars = prog.free_slots();
  const auto& preds = prog.predicates();
  EquivalenceVerdict v;
  for (int n = 1; n <= max_n; ++n) {
    const std::size_t pbits = preds.size() * static_cast<std::size_t>(n);
    if (pbits > static_cast<std::size_t>(valuation_bit_cap))
      throw Error(ErrorKind::ResourceCap, "predicate interpretation space too large");
    std::uint64_t assignments = 1;
    for (std::size_t i = 0; i < vars.size(); ++i) assignments *= static_cast<std::uint64_t>(n);
    std::vector<WorldSet> interp(preds.size());
    std::vector<int> env(prog.slot_count(), 0);
    for (const Frame& fr : enumerate_frames(n)) {
      for (std::uint64_t asg = 0; asg < assignments; ++asg) {
        std::uint64_t rest = asg;
        for (std::size_t i = 0; i < vars.size(); ++i) {
          env[i] = static_cast<int>(rest % n);
          rest /= n;
        }
        for (std::uint64_t pv = 0; pv < (std::uint64_t{1} << pbits); ++pv) {
          for (std::size_t i = 0; i < preds.size(); ++i)
            interp[i] = static_cast<WorldSet>(pv >> (i * n)) & fr.all();
          if (prog.eval(fr, env, interp)) continue;
          FoCounterexample c{fr, {}, {}};
          for (std::size_t i = 0; i < vars.size(); ++i) c.assignment[vars[i]] = env[i];
          for (std::size_t i = 0; i < preds.size(); ++i) c.interpretation[preds[i]] = interp[i];
          v.pass = false;
          v.counterexample = std::move(c);
          return v;
        }
      }
    }
  }
  return v;
}

}  // namespace sahl
