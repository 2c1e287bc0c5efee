#include "classify.hpp"

#include <algorithm>

#include "errors.hpp"
#include "normalize.hpp"

namespace sahl {

const char* to_string(Polarity p) {
  switch (p) {
    case Polarity::Absent: return "absent";
    case Polarity::Positive: return "positive";
    case Polarity::Negative: return "negative";
    case Polarity::Both: return "both";
  }
  return "?";
}

namespace {

void mark(PolarityMap& m, const std::string& letter, Polarity p) {
  auto& cur = m[letter];
  if (cur == Polarity::Absent) cur = p;
  else if (cur != p) cur = Polarity::Both;
}

void polarity_walk(const ModalFormula& f, bool positive, PolarityMap& m) {
  switch (f.kind()) {
    case ModalKind::Prop: mark(m, f.name(), positive ? Polarity::Positive : Polarity::Negative); return;
    case ModalKind::Not: polarity_walk(f.arg(), !positive, m); return;
    case ModalKind::Box:
    case ModalKind::Dia: polarity_walk(f.arg(), positive, m); return;
    case ModalKind::And:
    case ModalKind::Or:
      polarity_walk(f.lhs(), positive, m);
      polarity_walk(f.rhs(), positive, m);
      return;
    case ModalKind::Implies:
      polarity_walk(f.lhs(), !positive, m);
      polarity_walk(f.rhs(), positive, m);
      return;
    case ModalKind::Iff:
      for (const auto* side : {&f.lhs(), &f.rhs()}) {
        polarity_walk(*side, true, m);
        polarity_walk(*side, false, m);
      }
      return;
    default: return;
  }
}

}  // namespace

PolarityMap polarity_map(const ModalFormula& f) {
  PolarityMap m;
  polarity_walk(f, true, m);
  return m;
}

Polarity polarity_of(const PolarityMap& m, const std::string& letter) {
  auto it = m.find(letter);
  return it == m.end() ? Polarity::Absent : it->second;
}

bool is_positive_formula(const ModalFormula& f) {
  const auto m = polarity_map(f);
  return std::all_of(m.begin(), m.end(), [](const auto& kv) { return kv.second == Polarity::Positive; });
}

bool is_negative_formula(const ModalFormula& f) {
  const auto m = polarity_map(f);
  return std::all_of(m.begin(), m.end(), [](const auto& kv) { return kv.second == Polarity::Negative; });
}

bool is_closed(const ModalFormula& f) { return prop_letters(f).empty(); }

bool is_uniform(const ModalFormula& f) {
  const auto m = polarity_map(f);
  return std::none_of(m.begin(), m.end(), [](const auto& kv) { return kv.second == Polarity::Both; });
}

// ---------------------------------------------------------------------------

ModalFormula AtomicBoxFormula::to_formula() const {
  auto f = ModalFormula::box_power(ModalFormula::prop(head), k);
  for (auto it = rho.rbegin(); it != rho.rend(); ++it)
    f = ModalFormula::box(ModalFormula::implies(ModalFormula::prop(*it), f));
  return f;
}

std::optional<AtomicBoxFormula> decompose_atomic_box_formula(const ModalFormula& f) {
  AtomicBoxFormula out;
  ModalFormula cur = f;
  while (cur.is(ModalKind::Box) && cur.arg().is(ModalKind::Implies) && cur.arg().lhs().is(ModalKind::Prop)) {
    out.rho.push_back(cur.arg().lhs().name());
    cur = cur.arg().rhs();
  }
  while (cur.is(ModalKind::Box)) {
    ++out.k;
    cur = cur.arg();
  }
  if (!cur.is(ModalKind::Prop)) return std::nullopt;
  out.head = cur.name();
  return out;
}

std::optional<BoxedAtom> decompose_boxed_atom(const ModalFormula& f) {
  auto a = decompose_atomic_box_formula(f);
  if (!a || !a->rho.empty()) return std::nullopt;
  return BoxedAtom{a->k, a->head};
}

std::string slot_name(std::size_t i) { return "#" + std::to_string(i); }

bool AntecedentDecomposition::definite() const {
  bool has_or = false;
  auto walk = [&](auto&& self, const ModalFormula& f) -> void {
    if (f.is(ModalKind::Or)) has_or = true;
    if (f.is_unary()) self(self, f.arg());
    if (f.is_binary()) {
      self(self, f.lhs());
      self(self, f.rhs());
    }
  };
  walk(walk, skeleton);
  return !has_or;
}

ModalFormula AntecedentDecomposition::reassemble() const {
  std::map<std::string, ModalFormula> s;
  for (std::size_t i = 0; i < slots.size(); ++i) s.emplace(slot_name(i), slots[i].content);
  return substitute_prop(skeleton, s);
}

std::vector<AtomicBoxFormula> AntecedentDecomposition::chis() const {
  std::vector<AtomicBoxFormula> out;
  for (const auto& s : slots)
    if (s.kind == SlotKind::Chi) out.push_back(*s.chi);
  return out;
}

std::vector<ModalFormula> AntecedentDecomposition::gammas() const {
  std::vector<ModalFormula> out;
  for (const auto& s : slots)
    if (s.kind == SlotKind::Gamma) out.push_back(s.content);
  return out;
}

namespace {

std::optional<ModalFormula> decompose_into(const ModalFormula& f, std::vector<Slot>& slots) {
  auto placeholder = [&](Slot s) {
    slots.push_back(std::move(s));
    return ModalFormula::prop(slot_name(slots.size() - 1));
  };
  if (is_negative_formula(f)) return placeholder({SlotKind::Gamma, f, std::nullopt});
  if (auto chi = decompose_atomic_box_formula(f)) return placeholder({SlotKind::Chi, f, chi});
  switch (f.kind()) {
    case ModalKind::And:
    case ModalKind::Or: {
      auto a = decompose_into(f.lhs(), slots);
      if (!a) return std::nullopt;
      auto b = decompose_into(f.rhs(), slots);
      if (!b) return std::nullopt;
      return f.is(ModalKind::And) ? ModalFormula::conj(*a, *b) : ModalFormula::disj(*a, *b);
    }
    case ModalKind::Dia: {
      auto a = decompose_into(f.arg(), slots);
      if (!a) return std::nullopt;
      return ModalFormula::dia(*a);
    }
    default: return std::nullopt;
  }
}

}  // namespace

std::optional<AntecedentDecomposition> decompose_antecedent(const ModalFormula& f) {
  std::vector<Slot> slots;
  auto skel = decompose_into(f, slots);
  if (!skel) return std::nullopt;
  return AntecedentDecomposition{*skel, std::move(slots)};
}

DependencyDigraph digraph_of(const std::vector<AtomicBoxFormula>& chis) {
  DependencyDigraph g;
  for (const auto& c : chis) {
    g.vertices.insert(c.head);
    for (const auto& a : c.rho) {
      g.vertices.insert(a);
      g.edges.emplace(a, c.head);
    }
  }
  return g;
}

DependencyDigraph dependency_digraph(const ModalFormula& antecedent) {
  auto d = decompose_antecedent(antecedent);
  if (!d) throw Error(ErrorKind::NotRegularAntecedent, "not an atomic regular antecedent: " + print_modal(antecedent));
  return digraph_of(d->chis());
}

std::optional<std::vector<std::string>> topological_order(const DependencyDigraph& g) {
  std::map<std::string, int> indeg;
  for (const auto& v : g.vertices) indeg[v] = 0;
  for (const auto& [a, b] : g.edges) {
    indeg[a];
    ++indeg[b];
  }
  std::set<std::string> ready;
  for (const auto& [v, d] : indeg)
    if (d == 0) ready.insert(v);
  std::vector<std::string> order;
  while (!ready.empty()) {
    const auto v = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(v);
    for (const auto& [a, b] : g.edges)
      if (a == v && --indeg[b] == 0) ready.insert(b);
  }
  if (order.size() != indeg.size()) return std::nullopt;
  return order;
}

const char* to_string(SyntacticClass c) {
  switch (c) {
    case SyntacticClass::Closed: return "Closed";
    case SyntacticClass::Uniform: return "Uniform";
    case SyntacticClass::VSSI: return "VSSI";
    case SyntacticClass::SI: return "SI";
    case SyntacticClass::AII: return "AII";
    case SyntacticClass::AtomicRegularImp: return "AtomicRegularImp";
    case SyntacticClass::SF: return "SF";
    case SyntacticClass::AIF: return "AIF";
    case SyntacticClass::Unclassified: return "Unclassified";
  }
  return "?";
}

bool is_implication_class(SyntacticClass c) {
  return c == SyntacticClass::VSSI || c == SyntacticClass::SI || c == SyntacticClass::AII ||
         c == SyntacticClass::AtomicRegularImp;
}

std::optional<ModalFormula> ClassificationReport::implication() const {
  if (!antecedent || !consequent) return std::nullopt;
  return ModalFormula::implies(antecedent->reassemble(), *consequent);
}

namespace {

SyntacticClass class_of(const std::vector<AtomicBoxFormula>& chis, bool acyclic) {
  const bool boxed = std::all_of(chis.begin(), chis.end(), [](const auto& c) { return c.rho.empty(); });
  if (boxed && std::all_of(chis.begin(), chis.end(), [](const auto& c) { return c.k == 0; }))
    return SyntacticClass::VSSI;
  if (boxed) return SyntacticClass::SI;
  return acyclic ? SyntacticClass::AII : SyntacticClass::AtomicRegularImp;
}

void collect_components(const ModalFormula& f, std::vector<ModalFormula>& out) {
  if (f.is(ModalKind::Box)) {
    collect_components(f.arg(), out);
  } else if (f.is(ModalKind::And) || f.is(ModalKind::Or)) {
    collect_components(f.lhs(), out);
    collect_components(f.rhs(), out);
  } else {
    out.push_back(f);
  }
}

}  // namespace

std::optional<ClassificationReport> classify_implication(const ModalFormula& f) {
  if (!f.is(ModalKind::Implies) || !is_positive_formula(f.rhs())) return std::nullopt;
  auto d = decompose_antecedent(f.lhs());
  if (!d) return std::nullopt;
  ClassificationReport r;
  r.input = f;
  r.polarity = polarity_map(f);
  r.digraph = digraph_of(d->chis());
  r.order = topological_order(r.digraph);
  r.cls = class_of(d->chis(), r.order.has_value());
  r.definite = d->definite();
  r.antecedent = std::move(d);
  r.consequent = f.rhs();
  return r;
}

ClassificationReport classify(const ModalFormula& f) {
  ClassificationReport r;
  r.input = f;
  r.polarity = polarity_map(f);
  if (is_closed(f)) {
    r.cls = SyntacticClass::Closed;
    return r;
  }
  if (is_uniform(f)) {
    r.cls = SyntacticClass::Uniform;
    return r;
  }
  if (auto imp = classify_implication(f)) return *imp;

  std::vector<ModalFormula> leaves;
  collect_components(f, leaves);
  std::vector<Component> components;
  bool all_si = true;
  bool ok = true;
  for (const auto& leaf : leaves) {
    auto c = classify_implication(leaf);
    if (!c || !(c->cls == SyntacticClass::VSSI || c->cls == SyntacticClass::SI || c->cls == SyntacticClass::AII)) {
      ok = false;
      break;
    }
    if (c->cls == SyntacticClass::AII) all_si = false;
    components.push_back({leaf, c->cls});
  }
  if (ok) {
    auto neg = negate_to_antecedent(f);
    if (auto d = decompose_antecedent(neg)) {
      r.cls = all_si ? SyntacticClass::SF : SyntacticClass::AIF;
      r.components = std::move(components);
      r.digraph = digraph_of(d->chis());
      r.order = topological_order(r.digraph);
      r.definite = d->definite();
      r.antecedent = std::move(d);
      r.consequent = ModalFormula::bottom();
      return r;
    }
  }
  r.cls = SyntacticClass::Unclassified;
  r.note = "no elementarity claim";
  return r;
}

}  // namespace sahl
