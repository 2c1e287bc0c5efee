#include "report.hpp"

#include <cctype>
#include <sstream>

#include "json.hpp"
#include "normalize.hpp"

namespace sahl {

namespace {

const char* sign(Polarity p) {
  switch (p) {
    case Polarity::Positive: return "+";
    case Polarity::Negative: return "-";
    case Polarity::Both: return "+-";
    case Polarity::Absent: return "0";
  }
  return "?";
}

std::string join(const std::vector<std::string>& xs, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

std::string describe_chi(const AtomicBoxFormula& c) {
  std::string s = "head " + c.head + ", k " + std::to_string(c.k);
  if (!c.rho.empty()) s += ", rho (" + join(c.rho) + ")";
  return s;
}

std::string describe_eliminated(const std::map<std::string, ModalFormula>& m) {
  std::vector<std::string> parts;
  for (const auto& [p, v] : m) parts.push_back(p + " := " + print_modal(v));
  return join(parts);
}

std::string describe_entry(const SchemeEntry& e) {
  std::string s = e.z;
  if (e.k) s += " k " + std::to_string(e.k);
  if (!e.rho.empty()) s += " rho (" + join(e.rho) + ")";
  return s;
}

}  // namespace

std::string render_classification(const ClassificationReport& r) {
  std::ostringstream os;
  os << "input: " << print_modal(r.input) << "\n";
  os << "class: " << to_string(r.cls) << "\n";
  if (is_implication_class(r.cls) || r.cls == SyntacticClass::SF || r.cls == SyntacticClass::AIF)
    os << "definite: " << (r.definite ? "yes" : "no") << "\n";
  std::vector<std::string> pol;
  for (const auto& [p, v] : r.polarity) pol.push_back(p + sign(v));
  os << "polarity: " << (pol.empty() ? "none" : join(pol, " ")) << "\n";
  for (const auto& c : r.components) os << "component: " << print_modal(c.formula) << " [" << to_string(c.cls) << "]\n";
  if (r.antecedent) {
    os << "skeleton: " << print_modal(r.antecedent->skeleton) << "\n";
    for (std::size_t i = 0; i < r.antecedent->slots.size(); ++i) {
      const auto& s = r.antecedent->slots[i];
      os << "slot " << slot_name(i) << ": ";
      if (s.kind == SlotKind::Gamma) os << "gamma " << print_modal(s.content) << "\n";
      else os << "chi " << print_modal(s.content) << " [" << describe_chi(*s.chi) << "]\n";
    }
  }
  if (r.consequent) os << "consequent: " << print_modal(*r.consequent) << "\n";
  if (r.antecedent) {
    std::vector<std::string> edges;
    for (const auto& [a, b] : r.digraph.edges) edges.push_back(a + "->" + b);
    os << "digraph: vertices {" << join({r.digraph.vertices.begin(), r.digraph.vertices.end()}) << "} edges {"
       << join(edges) << "}\n";
    os << "order: " << (r.order ? "[" + join(*r.order) + "]" : std::string("none (cycle)")) << "\n";
    if (auto imp = r.implication()) {
      try {
        os << "definite conjuncts: " << to_definite_implications(*imp).size() << "\n";
      } catch (const Error& e) {
        os << "definite conjuncts: unavailable (" << e.what() << ")\n";
      }
    }
  }
  if (!r.note.empty()) os << "note: " << r.note << "\n";
  return os.str();
}

const FoFormula& selected_correspondent(const CorrespondenceResult& r, const CorrespondOptions& o) {
  return o.raw || o.no_simplify ? r.combined_raw : r.combined;
}

std::string render_correspondence(const CorrespondenceResult& r, const CorrespondOptions& o) {
  if (o.raw && !o.trace) return print_fo(r.combined_raw) + "\n";
  std::ostringstream os;
  os << "input: " << print_modal(r.input) << "\n";
  os << "class: " << to_string(r.report.cls) << "\n";
  if (r.class_used != r.report.cls) os << "class used: " << to_string(r.class_used) << "\n";
  if (!r.eliminated_uniform.empty()) os << "eliminated: " << describe_eliminated(r.eliminated_uniform) << "\n";
  if (o.trace) {
    for (std::size_t i = 0; i < r.conjuncts.size(); ++i) {
      const auto& c = r.conjuncts[i];
      os << "conjunct " << i + 1 << ": " << print_modal(c.implication) << "\n";
      if (!(c.reduced == c.implication)) os << "  reduced: " << print_modal(c.reduced) << "\n";
      if (!c.eliminated.empty()) os << "  eliminated: " << describe_eliminated(c.eliminated) << "\n";
      os << "  class: " << to_string(c.cls) << "\n";
      for (const auto& ls : c.strategy.scheme) {
        std::vector<std::string> es;
        for (const auto& e : ls.entries) es.push_back(describe_entry(e));
        os << "  scheme " << ls.letter << ": " << to_string(ls.kind) << " [" << join(es, "; ") << "]\n";
      }
      for (const auto& a : c.strategy.alpha)
        os << "  alpha " << a.letter << "(" << a.free << ") = " << print_fo(a.body) << "\n";
      os << "  raw: " << print_fo(c.strategy.raw) << "\n";
      os << "  simplified: " << print_fo(c.simplified) << "\n";
    }
  }
  os << "correspondent: " << print_fo(selected_correspondent(r, o)) << "\n";
  return os.str();
}

std::string render_verdict(const Verdict& v) {
  if (v.pass) return "PASS (" + std::to_string(v.frames_checked) + " frames)";
  return "COUNTEREXAMPLE " + describe(*v.counterexample);
}

std::string render_json(const CorrespondenceResult& r, const CorrespondOptions& o,
                        const std::vector<VerdictRecord>& verdicts) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["input"] = print_modal(r.input);
  doc["class"] = to_string(r.report.cls);
  doc["class_used"] = to_string(r.class_used);
  ordered_json elim = ordered_json::object();
  for (const auto& [p, v] : r.eliminated_uniform) elim[p] = print_modal(v);
  doc["eliminated"] = elim;
  ordered_json conj = ordered_json::array();
  for (const auto& c : r.conjuncts) {
    ordered_json j;
    j["implication"] = print_modal(c.implication);
    j["reduced"] = print_modal(c.reduced);
    j["class"] = to_string(c.cls);
    ordered_json ce = ordered_json::object();
    for (const auto& [p, v] : c.eliminated) ce[p] = print_modal(v);
    j["eliminated"] = ce;
    ordered_json scheme = ordered_json::array();
    for (const auto& ls : c.strategy.scheme) {
      ordered_json entries = ordered_json::array();
      for (const auto& e : ls.entries) entries.push_back({{"z", e.z}, {"rho", e.rho}, {"k", e.k}});
      scheme.push_back({{"letter", ls.letter}, {"kind", to_string(ls.kind)}, {"entries", entries}});
    }
    j["scheme"] = scheme;
    ordered_json alpha = ordered_json::object();
    for (const auto& a : c.strategy.alpha) alpha[a.letter] = {{"free", a.free}, {"body", print_fo(a.body)}};
    j["alpha"] = alpha;
    j["raw"] = print_fo(c.strategy.raw);
    j["simplified"] = print_fo(c.simplified);
    conj.push_back(j);
  }
  doc["conjuncts"] = conj;
  doc["combined"] = print_fo(selected_correspondent(r, o));
  doc["combined_raw"] = print_fo(r.combined_raw);
  ordered_json vs = ordered_json::array();
  for (const auto& v : verdicts) {
    ordered_json j{{"max_n", v.max_n}, {"sample4", v.sample4}, {"seed", v.seed}, {"pass", v.verdict.pass},
                   {"frames_checked", v.verdict.frames_checked}};
    if (v.verdict.counterexample) {
      const auto& c = *v.verdict.counterexample;
      j["counterexample"] = {{"frame", c.frame.literal()},
                             {"world", c.world},
                             {"direction", c.direction == Direction::ModalOnly ? "modal-only" : "fo-only"}};
    }
    vs.push_back(j);
  }
  doc["verdicts"] = vs;
  return doc.dump(2) + "\n";
}

namespace {

std::string tptp_var(const std::string& v, const std::string& free) {
  if (v == free) return v;
  std::string s = v;
  s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return s;
}

std::string tptp(const FoFormula& f, const std::string& free) {
  auto v = [&](const std::string& x) { return tptp_var(x, free); };
  auto nary = [&](const char* op) {
    std::string s = "(";
    for (std::size_t i = 0; i < f.children().size(); ++i) s += (i ? std::string(" ") + op + " " : "") + tptp(f.child(i), free);
    return s + ")";
  };
  switch (f.kind()) {
    case FoKind::True: return "$true";
    case FoKind::False: return "$false";
    case FoKind::Eq: return v(f.terms()[0]) + " = " + v(f.terms()[1]);
    case FoKind::Rel: return "r(" + v(f.terms()[0]) + "," + v(f.terms()[1]) + ")";
    case FoKind::Pred: return "p_" + letter_for(f.symbol()) + "(" + v(f.terms()[0]) + ")";
    case FoKind::Not: return "~ (" + tptp(f.body(), free) + ")";
    case FoKind::And: return nary("&");
    case FoKind::Or: return nary("|");
    case FoKind::Implies: return "(" + tptp(f.child(0), free) + " => " + tptp(f.child(1), free) + ")";
    case FoKind::Iff: return "(" + tptp(f.child(0), free) + " <=> " + tptp(f.child(1), free) + ")";
    case FoKind::Forall:
    case FoKind::Exists: {
      const char* q = f.is(FoKind::Forall) ? "!" : "?";
      std::vector<std::string> vars;
      const FoFormula* cur = &f;
      while (cur->is(f.kind())) {
        vars.push_back(v(cur->var()));
        cur = &cur->body();
      }
      return std::string(q) + " [" + join(vars, ",") + "] : (" + tptp(*cur, free) + ")";
    }
  }
  return "?";
}

}  // namespace

std::string to_tptp(const FoFormula& f, const std::string& name, const std::string& free) {
  return "fof(" + name + ", conjecture, " + tptp(f, free) + ").\n";
}

}  // namespace sahl
