#include "formula.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "errors.hpp"

namespace sahl {

// ---------------------------------------------------------------------------
// ModalFormula
// ---------------------------------------------------------------------------

struct ModalFormula::Node {
  ModalKind kind;
  std::string name;
  std::vector<ModalFormula> kids;
  std::size_t size;
};

namespace {

std::size_t kid_size(const std::vector<ModalFormula>& kids) {
  std::size_t s = 1;
  for (const auto& k : kids) s += k.size();
  return s;
}

}  // namespace

ModalFormula ModalFormula::bottom() {
  static const ModalFormula f(std::make_shared<const Node>(Node{ModalKind::Bottom, {}, {}, 1}));
  return f;
}

ModalFormula ModalFormula::top() {
  static const ModalFormula f(std::make_shared<const Node>(Node{ModalKind::Top, {}, {}, 1}));
  return f;
}

ModalFormula ModalFormula::prop(std::string name) {
  return ModalFormula(std::make_shared<const Node>(Node{ModalKind::Prop, std::move(name), {}, 1}));
}

#define SAHL_MODAL_UNARY(fn, K)                                                  \
  ModalFormula ModalFormula::fn(ModalFormula f) {                                \
    std::vector<ModalFormula> kids{std::move(f)};                                \
    const auto s = kid_size(kids);                                               \
    return ModalFormula(std::make_shared<const Node>(Node{K, {}, std::move(kids), s})); \
  }
#define SAHL_MODAL_BINARY(fn, K)                                                 \
  ModalFormula ModalFormula::fn(ModalFormula a, ModalFormula b) {                \
    std::vector<ModalFormula> kids{std::move(a), std::move(b)};                  \
    const auto s = kid_size(kids);                                               \
    return ModalFormula(std::make_shared<const Node>(Node{K, {}, std::move(kids), s})); \
  }

SAHL_MODAL_UNARY(negation, ModalKind::Not)
SAHL_MODAL_UNARY(box, ModalKind::Box)
SAHL_MODAL_UNARY(dia, ModalKind::Dia)
SAHL_MODAL_BINARY(conj, ModalKind::And)
SAHL_MODAL_BINARY(disj, ModalKind::Or)
SAHL_MODAL_BINARY(implies, ModalKind::Implies)
SAHL_MODAL_BINARY(iff, ModalKind::Iff)

#undef SAHL_MODAL_UNARY
#undef SAHL_MODAL_BINARY

ModalFormula ModalFormula::box_power(ModalFormula f, std::size_t k) {
  for (std::size_t i = 0; i < k; ++i) f = box(std::move(f));
  return f;
}

ModalKind ModalFormula::kind() const noexcept { return node_->kind; }

bool ModalFormula::is_unary() const noexcept {
  const auto k = kind();
  return k == ModalKind::Not || k == ModalKind::Box || k == ModalKind::Dia;
}

bool ModalFormula::is_binary() const noexcept {
  const auto k = kind();
  return k == ModalKind::And || k == ModalKind::Or || k == ModalKind::Implies || k == ModalKind::Iff;
}

const std::string& ModalFormula::name() const {
  if (kind() != ModalKind::Prop) throw Error(ErrorKind::InvalidArgument, "name() on non-letter");
  return node_->name;
}

const ModalFormula& ModalFormula::arg() const {
  if (!is_unary()) throw Error(ErrorKind::InvalidArgument, "arg() on non-unary node");
  return node_->kids[0];
}

const ModalFormula& ModalFormula::lhs() const {
  if (!is_binary()) throw Error(ErrorKind::InvalidArgument, "lhs() on non-binary node");
  return node_->kids[0];
}

const ModalFormula& ModalFormula::rhs() const {
  if (!is_binary()) throw Error(ErrorKind::InvalidArgument, "rhs() on non-binary node");
  return node_->kids[1];
}

std::size_t ModalFormula::size() const noexcept { return node_->size; }

bool operator==(const ModalFormula& a, const ModalFormula& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->kind != b.node_->kind || a.node_->size != b.node_->size) return false;
  if (a.node_->kind == ModalKind::Prop) return a.node_->name == b.node_->name;
  const auto& ka = a.node_->kids;
  const auto& kb = b.node_->kids;
  for (std::size_t i = 0; i < ka.size(); ++i)
    if (!(ka[i] == kb[i])) return false;
  return true;
}

namespace {

void collect_letters(const ModalFormula& f, std::vector<std::string>& out) {
  if (f.is(ModalKind::Prop)) {
    if (std::find(out.begin(), out.end(), f.name()) == out.end()) out.push_back(f.name());
  } else if (f.is_unary()) {
    collect_letters(f.arg(), out);
  } else if (f.is_binary()) {
    collect_letters(f.lhs(), out);
    collect_letters(f.rhs(), out);
  }
}

}  // namespace

std::vector<std::string> prop_letters(const ModalFormula& f) {
  std::vector<std::string> out;
  collect_letters(f, out);
  return out;
}

std::size_t modal_depth(const ModalFormula& f) {
  if (f.is(ModalKind::Box) || f.is(ModalKind::Dia)) return 1 + modal_depth(f.arg());
  if (f.is_unary()) return modal_depth(f.arg());
  if (f.is_binary()) return std::max(modal_depth(f.lhs()), modal_depth(f.rhs()));
  return 0;
}

namespace {

ModalFormula rebuild(const ModalFormula& f, std::vector<ModalFormula> kids) {
  switch (f.kind()) {
    case ModalKind::Not: return ModalFormula::negation(std::move(kids[0]));
    case ModalKind::Box: return ModalFormula::box(std::move(kids[0]));
    case ModalKind::Dia: return ModalFormula::dia(std::move(kids[0]));
    case ModalKind::And: return ModalFormula::conj(std::move(kids[0]), std::move(kids[1]));
    case ModalKind::Or: return ModalFormula::disj(std::move(kids[0]), std::move(kids[1]));
    case ModalKind::Implies: return ModalFormula::implies(std::move(kids[0]), std::move(kids[1]));
    case ModalKind::Iff: return ModalFormula::iff(std::move(kids[0]), std::move(kids[1]));
    default: return f;
  }
}

}  // namespace

ModalFormula substitute_prop(const ModalFormula& f, const std::map<std::string, ModalFormula>& s) {
  if (f.is(ModalKind::Prop)) {
    auto it = s.find(f.name());
    return it == s.end() ? f : it->second;
  }
  if (f.is_unary()) return rebuild(f, {substitute_prop(f.arg(), s)});
  if (f.is_binary()) return rebuild(f, {substitute_prop(f.lhs(), s), substitute_prop(f.rhs(), s)});
  return f;
}

ModalFormula desugar(const ModalFormula& f) {
  using M = ModalFormula;
  switch (f.kind()) {
    case ModalKind::Bottom:
    case ModalKind::Prop:
      return f;
    case ModalKind::Top:
      return M::negation(M::bottom());
    case ModalKind::Not:
      return M::negation(desugar(f.arg()));
    case ModalKind::Dia:
      return M::dia(desugar(f.arg()));
    case ModalKind::Box:
      return M::negation(M::dia(M::negation(desugar(f.arg()))));
    case ModalKind::Or:
      return M::disj(desugar(f.lhs()), desugar(f.rhs()));
    case ModalKind::And:
      return M::negation(M::disj(M::negation(desugar(f.lhs())), M::negation(desugar(f.rhs()))));
    case ModalKind::Implies:
      return M::disj(M::negation(desugar(f.lhs())), desugar(f.rhs()));
    case ModalKind::Iff: {
      auto a = desugar(f.lhs());
      auto b = desugar(f.rhs());
      auto ab = M::disj(M::negation(a), b);
      auto ba = M::disj(M::negation(b), a);
      return M::negation(M::disj(M::negation(ab), M::negation(ba)));
    }
  }
  return f;
}

bool is_valid_letter_name(std::string_view name) {
  if (name.empty() || !(name[0] >= 'a' && name[0] <= 'z')) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
  });
}

namespace {

// Binding strength: higher binds tighter.
int modal_prec(const ModalFormula& f) {
  switch (f.kind()) {
    case ModalKind::Iff: return 1;
    case ModalKind::Implies: return 2;
    case ModalKind::Or: return 3;
    case ModalKind::And: return 4;
    default: return 5;
  }
}

void print_modal_to(const ModalFormula& f, std::ostream& os);

void print_modal_wrapped(const ModalFormula& f, bool paren, std::ostream& os) {
  if (paren) os << '(';
  print_modal_to(f, os);
  if (paren) os << ')';
}

void print_modal_to(const ModalFormula& f, std::ostream& os) {
  switch (f.kind()) {
    case ModalKind::Bottom: os << "false"; return;
    case ModalKind::Top: os << "true"; return;
    case ModalKind::Prop: os << f.name(); return;
    case ModalKind::Not:
    case ModalKind::Box:
    case ModalKind::Dia:
      os << (f.is(ModalKind::Not) ? "~" : f.is(ModalKind::Box) ? "[]" : "<>");
      print_modal_wrapped(f.arg(), modal_prec(f.arg()) < 5, os);
      return;
    default: break;
  }
  const int p = modal_prec(f);
  const char* op = f.is(ModalKind::And) ? " & " : f.is(ModalKind::Or) ? " | " : f.is(ModalKind::Implies) ? " -> " : " <-> ";
  // And, Or and <-> associate to the left, -> to the right.
  const bool right_assoc = f.is(ModalKind::Implies);
  const int lp = modal_prec(f.lhs());
  const int rp = modal_prec(f.rhs());
  print_modal_wrapped(f.lhs(), right_assoc ? lp <= p : lp < p, os);
  os << op;
  print_modal_wrapped(f.rhs(), right_assoc ? rp < p : rp <= p, os);
}

}  // namespace

std::string print_modal(const ModalFormula& f) {
  std::ostringstream os;
  print_modal_to(f, os);
  return os.str();
}

// ---------------------------------------------------------------------------
// Variables
// ---------------------------------------------------------------------------

VarOrigin origin_of(std::string_view var) {
  if (var.size() >= 2 && std::isdigit(static_cast<unsigned char>(var[1]))) {
    switch (var[0]) {
      case 'y': return VarOrigin::Translation;
      case 'z': return VarOrigin::Parameter;
      case 'v': return VarOrigin::Chain;
      default: break;
    }
  }
  return VarOrigin::Source;
}

std::string VarSupply::fresh(VarOrigin origin) {
  const char prefix = origin == VarOrigin::Parameter ? 'z' : origin == VarOrigin::Chain ? 'v' : 'y';
  for (;;) {
    std::string name = prefix + std::to_string(counter_++);
    if (taken_.insert(name).second) return name;
  }
}

// ---------------------------------------------------------------------------
// FoFormula
// ---------------------------------------------------------------------------

struct FoFormula::Node {
  FoKind kind;
  std::string symbol;              // Pred symbol or bound variable
  std::vector<std::string> terms;  // Eq, Rel, Pred
  std::vector<FoFormula> kids;
  std::size_t size;
};

namespace {

std::size_t fo_kid_size(const std::vector<FoFormula>& kids) {
  std::size_t s = 1;
  for (const auto& k : kids) s += k.size();
  return s;
}

}  // namespace

FoFormula FoFormula::truth() {
  static const FoFormula f(std::make_shared<const Node>(Node{FoKind::True, {}, {}, {}, 1}));
  return f;
}

FoFormula FoFormula::falsity() {
  static const FoFormula f(std::make_shared<const Node>(Node{FoKind::False, {}, {}, {}, 1}));
  return f;
}

FoFormula FoFormula::eq(std::string a, std::string b) {
  return FoFormula(std::make_shared<const Node>(Node{FoKind::Eq, {}, {std::move(a), std::move(b)}, {}, 1}));
}

FoFormula FoFormula::rel(std::string a, std::string b) {
  return FoFormula(std::make_shared<const Node>(Node{FoKind::Rel, {}, {std::move(a), std::move(b)}, {}, 1}));
}

FoFormula FoFormula::pred(std::string symbol, std::string var) {
  return FoFormula(std::make_shared<const Node>(Node{FoKind::Pred, std::move(symbol), {std::move(var)}, {}, 1}));
}

FoFormula FoFormula::negation(FoFormula f) {
  std::vector<FoFormula> kids{std::move(f)};
  const auto s = fo_kid_size(kids);
  return FoFormula(std::make_shared<const Node>(Node{FoKind::Not, {}, {}, std::move(kids), s}));
}

FoFormula FoFormula::conj(std::vector<FoFormula> parts) {
  if (parts.empty()) return truth();
  if (parts.size() == 1) return parts.front();
  const auto s = fo_kid_size(parts);
  return FoFormula(std::make_shared<const Node>(Node{FoKind::And, {}, {}, std::move(parts), s}));
}

FoFormula FoFormula::disj(std::vector<FoFormula> parts) {
  if (parts.empty()) return falsity();
  if (parts.size() == 1) return parts.front();
  const auto s = fo_kid_size(parts);
  return FoFormula(std::make_shared<const Node>(Node{FoKind::Or, {}, {}, std::move(parts), s}));
}

FoFormula FoFormula::implies(FoFormula a, FoFormula b) {
  std::vector<FoFormula> kids{std::move(a), std::move(b)};
  const auto s = fo_kid_size(kids);
  return FoFormula(std::make_shared<const Node>(Node{FoKind::Implies, {}, {}, std::move(kids), s}));
}

FoFormula FoFormula::iff(FoFormula a, FoFormula b) {
  std::vector<FoFormula> kids{std::move(a), std::move(b)};
  const auto s = fo_kid_size(kids);
  return FoFormula(std::make_shared<const Node>(Node{FoKind::Iff, {}, {}, std::move(kids), s}));
}

FoFormula FoFormula::forall(std::string var, FoFormula body) {
  std::vector<FoFormula> kids{std::move(body)};
  const auto s = fo_kid_size(kids);
  return FoFormula(std::make_shared<const Node>(Node{FoKind::Forall, std::move(var), {}, std::move(kids), s}));
}

FoFormula FoFormula::exists(std::string var, FoFormula body) {
  std::vector<FoFormula> kids{std::move(body)};
  const auto s = fo_kid_size(kids);
  return FoFormula(std::make_shared<const Node>(Node{FoKind::Exists, std::move(var), {}, std::move(kids), s}));
}

FoFormula FoFormula::forall(const std::vector<std::string>& vars, FoFormula body) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) body = forall(*it, std::move(body));
  return body;
}

FoFormula FoFormula::exists(const std::vector<std::string>& vars, FoFormula body) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) body = exists(*it, std::move(body));
  return body;
}

FoKind FoFormula::kind() const noexcept { return node_->kind; }

bool FoFormula::is_atom() const noexcept {
  const auto k = kind();
  return k == FoKind::True || k == FoKind::False || k == FoKind::Eq || k == FoKind::Rel || k == FoKind::Pred;
}

const std::vector<std::string>& FoFormula::terms() const { return node_->terms; }

const std::string& FoFormula::symbol() const {
  if (kind() != FoKind::Pred) throw Error(ErrorKind::InvalidArgument, "symbol() on non-predicate");
  return node_->symbol;
}

const std::string& FoFormula::var() const {
  if (!is_quantifier()) throw Error(ErrorKind::InvalidArgument, "var() on non-quantifier");
  return node_->symbol;
}

const std::vector<FoFormula>& FoFormula::children() const { return node_->kids; }

std::size_t FoFormula::size() const noexcept { return node_->size; }

bool operator==(const FoFormula& a, const FoFormula& b) {
  if (a.node_ == b.node_) return true;
  const auto& na = *a.node_;
  const auto& nb = *b.node_;
  if (na.kind != nb.kind || na.size != nb.size || na.symbol != nb.symbol || na.terms != nb.terms ||
      na.kids.size() != nb.kids.size())
    return false;
  for (std::size_t i = 0; i < na.kids.size(); ++i)
    if (!(na.kids[i] == nb.kids[i])) return false;
  return true;
}

std::string predicate_for(std::string_view letter) {
  std::string s(letter);
  if (!s.empty()) s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return s;
}

std::string letter_for(std::string_view predicate) {
  std::string s(predicate);
  if (!s.empty()) s[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(s[0])));
  return s;
}

namespace {

void collect_free(const FoFormula& f, std::set<std::string>& bound, std::set<std::string>& out) {
  if (f.is_atom()) {
    for (const auto& t : f.terms())
      if (!bound.count(t)) out.insert(t);
    return;
  }
  if (f.is_quantifier()) {
    const bool fresh = bound.insert(f.var()).second;
    collect_free(f.body(), bound, out);
    if (fresh) bound.erase(f.var());
    return;
  }
  for (const auto& c : f.children()) collect_free(c, bound, out);
}

void collect_all(const FoFormula& f, std::set<std::string>& out) {
  for (const auto& t : f.terms()) out.insert(t);
  if (f.is_quantifier()) out.insert(f.var());
  for (const auto& c : f.children()) collect_all(c, out);
}

void collect_preds(const FoFormula& f, std::vector<std::string>& out) {
  if (f.is(FoKind::Pred)) {
    if (std::find(out.begin(), out.end(), f.symbol()) == out.end()) out.push_back(f.symbol());
    return;
  }
  for (const auto& c : f.children()) collect_preds(c, out);
}

}  // namespace

std::set<std::string> free_vars(const FoFormula& f) {
  std::set<std::string> bound, out;
  collect_free(f, bound, out);
  return out;
}

std::set<std::string> all_vars(const FoFormula& f) {
  std::set<std::string> out;
  collect_all(f, out);
  return out;
}

std::vector<std::string> predicates(const FoFormula& f) {
  std::vector<std::string> out;
  collect_preds(f, out);
  return out;
}

std::size_t quantifier_count(const FoFormula& f) {
  std::size_t n = f.is_quantifier() ? 1 : 0;
  for (const auto& c : f.children()) n += quantifier_count(c);
  return n;
}

namespace {

std::string fresh_like(const std::string& base, const std::set<std::string>& avoid) {
  std::string stem = base;
  while (!stem.empty() && std::isdigit(static_cast<unsigned char>(stem.back()))) stem.pop_back();
  if (stem.empty()) stem = "v";
  for (std::size_t i = 0;; ++i) {
    std::string cand = stem + std::to_string(i);
    if (!avoid.count(cand)) return cand;
  }
}

FoFormula subst(const FoFormula& f, const std::map<std::string, std::string>& s, std::set<std::string>& avoid) {
  auto term = [&](const std::string& t) {
    auto it = s.find(t);
    return it == s.end() ? t : it->second;
  };
  switch (f.kind()) {
    case FoKind::True:
    case FoKind::False:
      return f;
    case FoKind::Eq: return FoFormula::eq(term(f.terms()[0]), term(f.terms()[1]));
    case FoKind::Rel: return FoFormula::rel(term(f.terms()[0]), term(f.terms()[1]));
    case FoKind::Pred: return FoFormula::pred(f.symbol(), term(f.terms()[0]));
    case FoKind::Not: return FoFormula::negation(subst(f.body(), s, avoid));
    case FoKind::And:
    case FoKind::Or: {
      std::vector<FoFormula> parts;
      for (const auto& c : f.children()) parts.push_back(subst(c, s, avoid));
      return f.is(FoKind::And) ? FoFormula::conj(std::move(parts)) : FoFormula::disj(std::move(parts));
    }
    case FoKind::Implies:
    case FoKind::Iff: {
      auto a = subst(f.child(0), s, avoid);
      auto b = subst(f.child(1), s, avoid);
      return f.is(FoKind::Implies) ? FoFormula::implies(std::move(a), std::move(b))
                                   : FoFormula::iff(std::move(a), std::move(b));
    }
    case FoKind::Forall:
    case FoKind::Exists: {
      std::map<std::string, std::string> inner;
      const auto body_free = free_vars(f.body());
      bool captures = false;
      for (const auto& [k, v] : s) {
        if (k == f.var() || !body_free.count(k)) continue;
        inner.emplace(k, v);
        if (v == f.var()) captures = true;
      }
      std::string var = f.var();
      if (captures) {
        var = fresh_like(f.var(), avoid);
        avoid.insert(var);
        inner[f.var()] = var;
      }
      auto body = inner.empty() ? f.body() : subst(f.body(), inner, avoid);
      return f.is(FoKind::Forall) ? FoFormula::forall(var, std::move(body)) : FoFormula::exists(var, std::move(body));
    }
  }
  return f;
}

}  // namespace

FoFormula substitute_vars(const FoFormula& f, const std::map<std::string, std::string>& s) {
  if (s.empty()) return f;
  auto avoid = all_vars(f);
  for (const auto& [k, v] : s) {
    avoid.insert(k);
    avoid.insert(v);
  }
  return subst(f, s, avoid);
}

// ---------------------------------------------------------------------------
// Alpha equivalence
// ---------------------------------------------------------------------------

namespace {

void flatten_into(const FoFormula& f, FoKind k, std::vector<FoFormula>& out) {
  if (f.is(k)) {
    for (const auto& c : f.children()) flatten_into(c, k, out);
  } else {
    out.push_back(f);
  }
}

struct AlphaEnv {
  std::vector<std::pair<std::string, std::string>> bound;  // innermost last

  // -1: free; otherwise de Bruijn-style depth.
  int depth_of(const std::string& v, bool left) const {
    for (std::size_t i = bound.size(); i-- > 0;) {
      if ((left ? bound[i].first : bound[i].second) == v) return static_cast<int>(i);
    }
    return -1;
  }
  bool same(const std::string& a, const std::string& b) const {
    const int da = depth_of(a, true);
    const int db = depth_of(b, false);
    if (da != db) return false;
    return da >= 0 || a == b;
  }
};

bool alpha_eq(const FoFormula& a, const FoFormula& b, AlphaEnv& env) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case FoKind::True:
    case FoKind::False:
      return true;
    case FoKind::Eq: {
      const auto& ta = a.terms();
      const auto& tb = b.terms();
      return (env.same(ta[0], tb[0]) && env.same(ta[1], tb[1])) || (env.same(ta[0], tb[1]) && env.same(ta[1], tb[0]));
    }
    case FoKind::Rel:
      return env.same(a.terms()[0], b.terms()[0]) && env.same(a.terms()[1], b.terms()[1]);
    case FoKind::Pred:
      return a.symbol() == b.symbol() && env.same(a.terms()[0], b.terms()[0]);
    case FoKind::And:
    case FoKind::Or: {
      std::vector<FoFormula> fa, fb;
      flatten_into(a, a.kind(), fa);
      flatten_into(b, b.kind(), fb);
      if (fa.size() != fb.size()) return false;
      for (std::size_t i = 0; i < fa.size(); ++i)
        if (!alpha_eq(fa[i], fb[i], env)) return false;
      return true;
    }
    case FoKind::Forall:
    case FoKind::Exists: {
      env.bound.emplace_back(a.var(), b.var());
      const bool r = alpha_eq(a.body(), b.body(), env);
      env.bound.pop_back();
      return r;
    }
    default: {
      for (std::size_t i = 0; i < a.children().size(); ++i)
        if (!alpha_eq(a.child(i), b.child(i), env)) return false;
      return true;
    }
  }
}

}  // namespace

bool alpha_equivalent(const FoFormula& a, const FoFormula& b) {
  AlphaEnv env;
  return alpha_eq(a, b, env);
}

// ---------------------------------------------------------------------------
// FO printing
// ---------------------------------------------------------------------------

namespace {

int fo_prec(const FoFormula& f) {
  switch (f.kind()) {
    case FoKind::Iff: return 1;
    case FoKind::Implies: return 2;
    case FoKind::Or: return 3;
    case FoKind::And: return 4;
    case FoKind::Forall:
    case FoKind::Exists: return 0;
    default: return 5;
  }
}

void print_fo_to(const FoFormula& f, std::ostream& os);

void print_fo_wrapped(const FoFormula& f, bool paren, std::ostream& os) {
  if (paren) os << '(';
  print_fo_to(f, os);
  if (paren) os << ')';
}

void print_fo_to(const FoFormula& f, std::ostream& os) {
  switch (f.kind()) {
    case FoKind::True: os << "true"; return;
    case FoKind::False: os << "false"; return;
    case FoKind::Eq: os << f.terms()[0] << " = " << f.terms()[1]; return;
    case FoKind::Rel: os << "R(" << f.terms()[0] << ',' << f.terms()[1] << ')'; return;
    case FoKind::Pred: os << f.symbol() << '(' << f.terms()[0] << ')'; return;
    case FoKind::Not:
      if (f.body().is(FoKind::Eq)) {
        os << f.body().terms()[0] << " != " << f.body().terms()[1];
        return;
      }
      os << '~';
      print_fo_wrapped(f.body(), fo_prec(f.body()) < 5 || f.body().is(FoKind::Not), os);
      return;
    case FoKind::Forall:
    case FoKind::Exists:
      os << (f.is(FoKind::Forall) ? "all " : "exists ") << f.var() << ". ";
      print_fo_wrapped(f.body(), fo_prec(f.body()) >= 1 && fo_prec(f.body()) <= 4, os);
      return;
    case FoKind::And:
    case FoKind::Or: {
      const int p = fo_prec(f);
      const char* op = f.is(FoKind::And) ? " & " : " | ";
      bool first = true;
      for (const auto& c : f.children()) {
        if (!first) os << op;
        first = false;
        const int cp = fo_prec(c);
        print_fo_wrapped(c, cp <= p, os);
      }
      return;
    }
    case FoKind::Implies:
    case FoKind::Iff: {
      const int p = fo_prec(f);
      const bool right_assoc = f.is(FoKind::Implies);
      const int lp = fo_prec(f.child(0));
      const int rp = fo_prec(f.child(1));
      print_fo_wrapped(f.child(0), right_assoc ? lp <= p : lp < p, os);
      os << (f.is(FoKind::Implies) ? " -> " : " <-> ");
      print_fo_wrapped(f.child(1), right_assoc ? rp < p : rp <= p, os);
      return;
    }
  }
}

}  // namespace

std::string print_fo(const FoFormula& f) {
  std::ostringstream os;
  print_fo_to(f, os);
  return os.str();
}

std::string print_so(const SoFormula& f) {
  std::ostringstream os;
  for (const auto& p : f.prefix) os << "all " << p << ". ";
  print_fo_wrapped(f.matrix, !f.prefix.empty() && fo_prec(f.matrix) >= 1 && fo_prec(f.matrix) <= 4, os);
  return os.str();
}

}  // namespace sahl
