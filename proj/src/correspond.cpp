#include "correspond.hpp"

#include <algorithm>
#include <functional>

#include "errors.hpp"
#include "fosimp.hpp"
#include "normalize.hpp"
#include "translate.hpp"

namespace sahl {

using F = FoFormula;

const char* to_string(SchemeKind k) {
  switch (k) {
    case SchemeKind::ConstEmpty: return "empty";
    case SchemeKind::ConstFull: return "full";
    case SchemeKind::FiniteSet: return "finite-set";
    case SchemeKind::BoxAtomUnion: return "box-atom-union";
    case SchemeKind::InductiveUnion: return "inductive-union";
  }
  return "?";
}

UnsupportedError::UnsupportedError(ClassificationReport report, const std::string& what)
    : Error(ErrorKind::Unsupported, what), report_(std::move(report)) {}

F r_path(const std::string& a, const std::string& b, std::size_t k, VarSupply& vars) {
  if (k == 0) return F::eq(a, b);
  if (k == 1) return F::rel(a, b);
  std::vector<std::string> chain;
  for (std::size_t i = 1; i < k; ++i) chain.push_back(vars.fresh(VarOrigin::Chain));
  std::vector<F> steps;
  std::string prev = a;
  for (const auto& v : chain) {
    steps.push_back(F::rel(prev, v));
    prev = v;
  }
  steps.push_back(F::rel(prev, b));
  return F::exists(chain, F::conj(std::move(steps)));
}

namespace {

struct Occurrence {
  std::string z;
  AtomicBoxFormula chi;
};

struct Setup {
  ClassificationReport report;
  std::vector<std::string> letters;
  VarSupply vars;
  F matrix = F::truth();
  std::map<std::string, std::vector<Occurrence>> occ;
  std::vector<std::string> zs;
};

Setup prepare(const ModalFormula& imp, std::initializer_list<SyntacticClass> allowed, const char* what) {
  auto rep = classify_implication(imp);
  if (!rep) throw Error(ErrorKind::NotInClass, std::string("not ") + what + ": " + print_modal(imp));
  if (rep->cls == SyntacticClass::AtomicRegularImp && std::find(allowed.begin(), allowed.end(), SyntacticClass::AII) != allowed.end())
    throw Error(ErrorKind::CyclicDigraph, "dependency digraph has a cycle: " + print_modal(imp));
  if (std::find(allowed.begin(), allowed.end(), rep->cls) == allowed.end())
    throw Error(ErrorKind::NotInClass, std::string("not ") + what + ": " + print_modal(imp));
  if (!rep->definite) throw Error(ErrorKind::NotInClass, std::string("not definite: ") + print_modal(imp));

  Setup s{std::move(*rep), prop_letters(imp), VarSupply({"x"}), F::truth(), {}, {}};
  s.matrix = standard_translation("x", imp, s.vars);
  const auto chis = s.report.antecedent->chis();
  for (const auto& p : s.letters) {
    auto& list = s.occ[p];
    for (const auto& c : chis)
      if (c.head == p) list.push_back({"", c});
    if (list.empty())
      throw Error(ErrorKind::NotInClass, "letter " + p + " has no positive antecedent occurrence; eliminate it first");
  }
  for (const auto& p : s.letters)
    for (auto& o : s.occ[p]) {
      o.z = s.vars.fresh(VarOrigin::Parameter);
      s.zs.push_back(o.z);
    }
  return s;
}

using AlphaFn = std::function<F(const std::string& letter, const std::string& t, VarSupply& vars)>;

StrategyResult finish(Setup& s, const AlphaFn& alpha, const std::vector<std::string>& order, SchemeKind kind) {
  auto body = map_predicates(s.matrix, [&](const std::string& sym, const std::string& t) -> std::optional<F> {
    return alpha(letter_for(sym), t, s.vars);
  });
  StrategyResult r{{}, {}, F::forall(s.zs, std::move(body))};
  VarSupply display = s.vars;
  for (const auto& p : order) {
    LetterScheme ls{p, kind, {}};
    for (const auto& o : s.occ[p]) ls.entries.push_back({o.z, o.chi.rho, o.chi.k});
    r.scheme.push_back(std::move(ls));
    r.alpha.push_back({p, "y", alpha(p, "y", display)});
  }
  return r;
}

}  // namespace

StrategyResult correspond_vssi(const ModalFormula& imp) {
  auto s = prepare(imp, {SyntacticClass::VSSI}, "a very simple Sahlqvist implication");
  auto alpha = [&](const std::string& p, const std::string& t, VarSupply&) {
    std::vector<F> parts;
    for (const auto& o : s.occ.at(p)) parts.push_back(F::eq(t, o.z));
    return F::disj(std::move(parts));
  };
  return finish(s, alpha, s.letters, SchemeKind::FiniteSet);
}

StrategyResult correspond_si(const ModalFormula& imp) {
  auto s = prepare(imp, {SyntacticClass::VSSI, SyntacticClass::SI}, "a Sahlqvist implication");
  auto alpha = [&](const std::string& p, const std::string& t, VarSupply& vars) {
    std::vector<F> parts;
    for (const auto& o : s.occ.at(p)) parts.push_back(r_path(o.z, t, o.chi.k, vars));
    return F::disj(std::move(parts));
  };
  return finish(s, alpha, s.letters, SchemeKind::BoxAtomUnion);
}

StrategyResult correspond_aii(const ModalFormula& imp) {
  auto s = prepare(imp, {SyntacticClass::VSSI, SyntacticClass::SI, SyntacticClass::AII},
                   "an atomic inductive implication");
  std::vector<std::string> order;
  for (const auto& p : *s.report.order)
    if (s.occ.count(p)) order.push_back(p);
  AlphaFn alpha = [&](const std::string& p, const std::string& t, VarSupply& vars) -> F {
    std::vector<F> parts;
    for (const auto& o : s.occ.at(p)) {
      const auto& rho = o.chi.rho;
      if (rho.empty()) {
        parts.push_back(r_path(o.z, t, o.chi.k, vars));
        continue;
      }
      std::vector<std::string> v;
      for (std::size_t j = 0; j <= rho.size(); ++j) v.push_back(vars.fresh(VarOrigin::Chain));
      std::vector<F> chain{F::eq(o.z, v[0])};
      for (std::size_t j = 0; j < rho.size(); ++j) {
        chain.push_back(F::rel(v[j], v[j + 1]));
        chain.push_back(alpha(rho[j], v[j + 1], vars));
      }
      chain.push_back(r_path(v.back(), t, o.chi.k, vars));
      parts.push_back(F::exists(v, F::conj(std::move(chain))));
    }
    return F::disj(std::move(parts));
  };
  return finish(s, alpha, order, SchemeKind::InductiveUnion);
}

F correspond_uniform(const ModalFormula& f) {
  const auto pol = polarity_map(f);
  for (const auto& [p, v] : pol)
    if (v == Polarity::Both) throw Error(ErrorKind::NotUniform, "letter " + p + " occurs with both polarities");
  return map_predicates(standard_translation("x", f), [&](const std::string& sym, const std::string& z) -> std::optional<F> {
    if (polarity_of(pol, letter_for(sym)) == Polarity::Negative) return F::eq(z, z);
    return F::negation(F::eq(z, z));
  });
}

F compose_conjunction(const std::vector<F>& parts) { return F::conj(parts); }

F compose_box(const F& alpha, std::size_t k) {
  if (k == 0) return alpha;
  auto taken = all_vars(alpha);
  taken.insert("x");
  VarSupply vars(taken);
  const auto y = vars.fresh(VarOrigin::Translation);
  auto path = r_path("x", y, k, vars);
  return F::forall(y, F::implies(std::move(path), substitute_vars(alpha, {{"x", y}})));
}

F compose_disjoint_disjunction(const std::vector<std::pair<ModalFormula, F>>& parts) {
  std::set<std::string> seen;
  std::vector<F> alphas;
  for (const auto& [m, a] : parts) {
    for (const auto& p : prop_letters(m))
      if (!seen.insert(p).second) throw Error(ErrorKind::SharedLetters, "disjuncts share the letter " + p);
    alphas.push_back(a);
  }
  return F::disj(std::move(alphas));
}

namespace {

struct Reduced {
  ModalFormula formula;
  std::map<std::string, ModalFormula> eliminated;
};

// Eliminates uniform letters and folds constants until nothing changes.
Reduced reduce(const ModalFormula& f) {
  Reduced r{f, {}};
  for (;;) {
    auto e = eliminate_uniform_variables(r.formula);
    if (e.replaced.empty()) return r;
    r.eliminated.insert(e.replaced.begin(), e.replaced.end());
    r.formula = fold_constants(e.result);
  }
}

bool supported(SyntacticClass c) {
  return c == SyntacticClass::VSSI || c == SyntacticClass::SI || c == SyntacticClass::AII ||
         c == SyntacticClass::SF || c == SyntacticClass::AIF;
}

ConjunctResult solve_conjunct(const ModalFormula& c) {
  ConjunctResult out;
  out.implication = c;
  auto red = reduce(c);
  out.reduced = red.formula;
  out.eliminated = std::move(red.eliminated);
  const auto rep = classify(out.reduced);
  out.cls = rep.cls;
  switch (rep.cls) {
    case SyntacticClass::Closed: out.strategy.raw = standard_translation("x", out.reduced); break;
    case SyntacticClass::VSSI: out.strategy = correspond_vssi(out.reduced); break;
    case SyntacticClass::SI: out.strategy = correspond_si(out.reduced); break;
    case SyntacticClass::AII: out.strategy = correspond_aii(out.reduced); break;
    case SyntacticClass::AtomicRegularImp:
      throw UnsupportedError(rep, "conjunct " + print_modal(c) + " has a cyclic dependency digraph");
    default:
      throw UnsupportedError(rep, "conjunct " + print_modal(c) + " is " + to_string(rep.cls));
  }
  out.simplified = simplify(out.strategy.raw);
  return out;
}

}  // namespace

CorrespondenceResult correspond(const ModalFormula& f) {
  CorrespondenceResult res{f, SyntacticClass::Unclassified, classify(f), {}, {}, F::truth(), F::truth(), "x"};
  res.class_used = res.report.cls;

  if (res.report.cls == SyntacticClass::Closed) {
    res.combined_raw = res.combined = standard_translation("x", f);
    return res;
  }
  if (res.report.cls == SyntacticClass::Uniform) {
    for (const auto& [p, pol] : res.report.polarity)
      res.eliminated_uniform.emplace(p, pol == Polarity::Positive ? ModalFormula::bottom() : ModalFormula::top());
    res.combined_raw = correspond_uniform(f);
    res.combined = simplify(res.combined_raw);
    return res;
  }

  ClassificationReport work = res.report;
  if (!supported(work.cls)) {
    auto red = reduce(f);
    auto again = classify(red.formula);
    if (red.eliminated.empty() || !(supported(again.cls) || again.cls == SyntacticClass::Closed))
      throw UnsupportedError(res.report, std::string("no correspondence strategy for class ") + to_string(res.report.cls));
    res.eliminated_uniform = std::move(red.eliminated);
    res.class_used = again.cls;
    if (again.cls == SyntacticClass::Closed) {
      res.combined_raw = standard_translation("x", red.formula);
      res.combined = simplify(res.combined_raw);
      return res;
    }
    work = std::move(again);
  }

  const auto imp = *work.implication();
  std::vector<F> raws, simple;
  for (const auto& c : to_definite_implications(imp)) {
    res.conjuncts.push_back(solve_conjunct(c));
    raws.push_back(res.conjuncts.back().strategy.raw);
    simple.push_back(res.conjuncts.back().simplified);
  }
  res.combined_raw = compose_conjunction(raws);
  res.combined = simplify(compose_conjunction(simple));
  return res;
}

}  // namespace sahl
