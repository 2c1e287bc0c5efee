#include "orderprops.hpp"

#include <algorithm>
#include <bit>
#include <memory>
#include <random>

#include "errors.hpp"

namespace sahl {

namespace {

void require(int n, int arity, int max_n, int max_bits = 20) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "empty carrier");
  if (n > max_n)
    throw Error(ErrorKind::ResourceCap, "carrier of size " + std::to_string(n) + " exceeds the cap " +
                                            std::to_string(max_n));
  if (n * arity > max_bits)
    throw Error(ErrorKind::ResourceCap, "2^" + std::to_string(n * arity) + " argument tuples exceed the cap");
}

bool subset(WorldSet a, WorldSet b) { return (a & ~b) == 0; }

std::uint64_t index_of(std::span<const WorldSet> xs, int n) {
  std::uint64_t i = 0;
  for (std::size_t h = xs.size(); h-- > 0;) i = (i << n) | xs[h];
  return i;
}

std::string format_tuple(std::span<const WorldSet> xs, int n) {
  std::string s = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + format_set(xs[i], n);
  return s + ")";
}

PropVerdict fail(std::vector<WorldSet> witness, std::string detail) {
  return {false, std::move(witness), std::move(detail)};
}

}  // namespace

std::string format_set(WorldSet s, int n) {
  std::string out = "{";
  bool first = true;
  for (int w = 0; w < n; ++w)
    if (contains(s, w)) {
      out += (first ? "" : ",") + std::to_string(w);
      first = false;
    }
  return out + "}";
}

SetFunction::SetFunction(int n, int arity, Fn fn, std::string label)
    : n_(n), arity_(arity), fn_(std::move(fn)), label_(std::move(label)) {
  if (n < 1 || n > 31 || arity < 0) throw Error(ErrorKind::InvalidArgument, "bad set function shape");
}

SetFunction SetFunction::of_formula(const Frame& F, const ModalFormula& f, std::vector<std::string> args,
                                    const Valuation& params) {
  auto letters = args;
  for (const auto& p : prop_letters(f))
    if (std::find(letters.begin(), letters.end(), p) == letters.end()) letters.push_back(p);
  auto prog = std::make_shared<ModalProgram>(f, letters);
  std::vector<WorldSet> fixed;
  for (std::size_t i = args.size(); i < letters.size(); ++i) {
    auto it = params.find(letters[i]);
    fixed.push_back(it == params.end() ? 0 : it->second);
  }
  const int arity = static_cast<int>(args.size());
  return SetFunction(
      F.n, arity,
      [prog, fixed, F](std::span<const WorldSet> xs) {
        std::vector<WorldSet> v(xs.begin(), xs.end());
        v.insert(v.end(), fixed.begin(), fixed.end());
        return prog->eval(F, v);
      },
      print_modal(f));
}

SetFunction SetFunction::table(int n, int arity, std::vector<WorldSet> values, std::string label) {
  if (values.size() != (std::uint64_t{1} << (n * arity)))
    throw Error(ErrorKind::InvalidArgument, "table size does not match 2^(n*arity)");
  auto tab = std::make_shared<std::vector<WorldSet>>(std::move(values));
  return SetFunction(
      n, arity, [tab, n](std::span<const WorldSet> xs) { return (*tab)[index_of(xs, n)]; }, std::move(label));
}

SetFunction SetFunction::unary(int n, std::function<WorldSet(WorldSet)> fn, std::string label) {
  return SetFunction(
      n, 1, [fn = std::move(fn)](std::span<const WorldSet> xs) { return fn(xs[0]); }, std::move(label));
}

std::vector<WorldSet> SetFunction::tuple(std::uint64_t index) const {
  std::vector<WorldSet> xs(arity_);
  for (int h = 0; h < arity_; ++h) xs[h] = static_cast<WorldSet>((index >> (h * n_)) & full_set(n_));
  return xs;
}

std::vector<WorldSet> SetFunction::tabulate() const {
  require(n_, arity_, 31);
  std::vector<WorldSet> out(tuple_count());
  for (std::uint64_t i = 0; i < out.size(); ++i) out[i] = (*this)(tuple(i));
  return out;
}

bool SetFunction::operator==(const SetFunction& o) const {
  return n_ == o.n_ && arity_ == o.arity_ && tabulate() == o.tabulate();
}

PropVerdict is_m_additive(const SetFunction& f, const std::vector<std::size_t>& mbar) {
  const int n = f.n(), j = f.arity();
  if (mbar.size() != static_cast<std::size_t>(j))
    throw Error(ErrorKind::InvalidArgument, "m̄ must have one entry per coordinate");
  require(n, j, 5);
  const auto tab = f.tabulate();
  // small[X] = subsets of X with at most m elements, per coordinate
  std::vector<std::vector<std::vector<WorldSet>>> small(j, std::vector<std::vector<WorldSet>>(std::size_t{1} << n));
  for (int h = 0; h < j; ++h)
    for (WorldSet X = 0; X <= f.all(); ++X)
      for (WorldSet Z = X;; Z = (Z - 1) & X) {
        if (static_cast<std::size_t>(std::popcount(Z)) <= mbar[h]) small[h][X].push_back(Z);
        if (Z == 0) break;
      }
  for (std::uint64_t i = 0; i < tab.size(); ++i) {
    const auto xs = f.tuple(i);
    WorldSet uni = 0;
    if (std::none_of(xs.begin(), xs.end(), [](WorldSet x) { return x == 0; })) {
      std::vector<std::size_t> pos(j, 0);
      std::vector<WorldSet> zs(j);
      for (;;) {
        for (int h = 0; h < j; ++h) zs[h] = small[h][xs[h]][pos[h]];
        uni |= tab[index_of(zs, n)];
        int h = 0;
        while (h < j && ++pos[h] == small[h][xs[h]].size()) pos[h++] = 0;
        if (h == j) break;
      }
    }
    if (uni != tab[i])
      return fail(xs, "f" + format_tuple(xs, n) + " = " + format_set(tab[i], n) + " but the union over σ is " +
                          format_set(uni, n));
  }
  return {};
}

PropVerdict is_complete_operator(const SetFunction& f, std::uint64_t seed) {
  std::vector<std::size_t> ones(f.arity(), 1);
  if (auto v = is_m_additive(f, ones); !v) return v;
  const int n = f.n(), j = f.arity();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<WorldSet> set(0, f.all());
  std::uniform_int_distribution<int> coord(0, std::max(j - 1, 0)), size(0, 5);
  for (int trial = 0; trial < 512 && j > 0; ++trial) {
    std::vector<WorldSet> xs(j);
    for (auto& x : xs) x = set(rng);
    const int h = coord(rng);
    std::vector<WorldSet> family(size(rng));
    for (auto& y : family) y = set(rng);
    WorldSet joined = 0, images = 0;
    for (auto y : family) {
      joined |= y;
      xs[h] = y;
      images |= f(xs);
    }
    xs[h] = joined;
    if (f(xs) != images) {
      auto witness = family;
      return fail(std::move(witness), "union of a family in coordinate " + std::to_string(h + 1) +
                                          " is not preserved at " + format_tuple(xs, n));
    }
  }
  return {};
}

namespace {

PropVerdict monotone(const SetFunction& f, bool reversing) {
  const int n = f.n(), j = f.arity();
  require(n, j, 5);
  for (std::uint64_t i = 0; i < f.tuple_count(); ++i) {
    auto xs = f.tuple(i);
    const WorldSet base = f(xs);
    for (int h = 0; h < j; ++h)
      for (int w = 0; w < n; ++w) {
        if (contains(xs[h], w)) continue;
        auto ys = xs;
        ys[h] |= singleton(w);
        const WorldSet up = f(ys);
        if (reversing ? !subset(up, base) : !subset(base, up))
          return fail(xs, std::string(reversing ? "grows" : "shrinks") + " when " + std::to_string(w) +
                              " is added to coordinate " + std::to_string(h + 1) + " at " + format_tuple(xs, n));
      }
  }
  return {};
}

}  // namespace

PropVerdict is_order_preserving(const SetFunction& f) { return monotone(f, false); }
PropVerdict is_order_reversing(const SetFunction& f) { return monotone(f, true); }

bool adjunction_holds(const SetFunction& f, const SetFunction& g) {
  if (f.arity() != 1 || g.arity() != 1 || f.n() != g.n())
    throw Error(ErrorKind::InvalidArgument, "adjunction needs two unary maps on one carrier");
  require(f.n(), 2, 5);
  const auto ft = f.tabulate(), gt = g.tabulate();
  for (WorldSet X = 0; X <= f.all(); ++X)
    for (WorldSet Y = 0; Y <= f.all(); ++Y)
      if (subset(ft[X], Y) != subset(X, gt[Y])) return false;
  return true;
}

std::optional<SetFunction> right_adjoint_of(const SetFunction& f) {
  if (f.arity() != 1) throw Error(ErrorKind::InvalidArgument, "right adjoint of a non-unary map");
  require(f.n(), 2, 5);
  const auto ft = f.tabulate();
  std::vector<WorldSet> g(ft.size(), 0);
  for (WorldSet Y = 0; Y <= f.all(); ++Y)
    for (WorldSet X = 0; X <= f.all(); ++X)
      if (subset(ft[X], Y)) g[Y] |= X;
  auto cand = SetFunction::table(f.n(), 1, std::move(g), "right adjoint of " + f.label());
  if (!adjunction_holds(f, cand)) return std::nullopt;
  return cand;
}

std::optional<SetFunction> left_adjoint_of(const SetFunction& g) {
  if (g.arity() != 1) throw Error(ErrorKind::InvalidArgument, "left adjoint of a non-unary map");
  require(g.n(), 2, 5);
  const auto gt = g.tabulate();
  std::vector<WorldSet> f(gt.size(), g.all());
  for (WorldSet X = 0; X <= g.all(); ++X)
    for (WorldSet Y = 0; Y <= g.all(); ++Y)
      if (subset(X, gt[Y])) f[X] &= Y;
  auto cand = SetFunction::table(g.n(), 1, std::move(f), "left adjoint of " + g.label());
  if (!adjunction_holds(cand, g)) return std::nullopt;
  return cand;
}

PropVerdict is_completely_meet_preserving(const SetFunction& g) {
  if (g.arity() != 1) throw Error(ErrorKind::InvalidArgument, "meet preservation of a non-unary map");
  const int n = g.n();
  require(n, 3, 4);
  const auto gt = g.tabulate();
  const WorldSet W = g.all();
  if (gt[W] != W) return fail({}, "empty meet: g(W) = " + format_set(gt[W], n));
  for (WorldSet a = 0; a <= W; ++a)
    for (WorldSet b = a; b <= W; ++b)
      for (WorldSet c = b; c <= W; ++c)
        if (gt[a & b & c] != (gt[a] & gt[b] & gt[c]))
          return fail({a, b, c}, "meet of " + format_tuple(std::vector<WorldSet>{a, b, c}, n) + " is not preserved");
  WorldSet all_meet = W;
  for (auto v : gt) all_meet &= v;
  if (gt[0] != all_meet) return fail({}, "meet of the full family is not preserved");
  return {};
}

Frame extract_relation(const SetFunction& g) {
  if (auto v = is_completely_meet_preserving(g); !v)
    throw Error(ErrorKind::NotMeetPreserving, "not completely meet-preserving: " + v.detail);
  Frame S(g.n());
  for (int z = 0; z < g.n(); ++z) {
    const WorldSet gz = g(g.all() & ~singleton(z));
    for (int x = 0; x < g.n(); ++x)
      if (!contains(gz, x)) S.add(x, z);
  }
  for (WorldSet X = 0; X <= g.all(); ++X)
    if (g(X) != l_R(S, X)) throw Error(ErrorKind::NotMeetPreserving, "extracted relation does not reproduce the map");
  return S;
}

std::optional<SetFunction> residual(const SetFunction& f, int h) {
  const int n = f.n(), j = f.arity();
  if (h < 0 || h >= j) throw Error(ErrorKind::InvalidArgument, "residual coordinate out of range");
  require(n, j + 1, 4);
  const auto ft = f.tabulate();
  std::vector<WorldSet> g(ft.size(), 0);
  for (std::uint64_t i = 0; i < ft.size(); ++i) {
    auto xs = f.tuple(i);
    const WorldSet Y = xs[h];
    for (WorldSet X = 0; X <= f.all(); ++X) {
      xs[h] = X;
      if (subset(ft[index_of(xs, n)], Y)) g[i] |= X;
    }
  }
  for (std::uint64_t i = 0; i < ft.size(); ++i) {
    auto xs = f.tuple(i);
    const WorldSet X = xs[h];
    for (WorldSet Y = 0; Y <= f.all(); ++Y) {
      xs[h] = Y;
      if (subset(ft[i], Y) != subset(X, g[index_of(xs, n)])) return std::nullopt;
    }
  }
  return SetFunction::table(n, j, std::move(g), "residual of " + f.label());
}

std::optional<SetFunction> residual_in_last(const SetFunction& f) { return residual(f, f.arity() - 1); }

WorldSet DirectImageRelation::image(std::span<const WorldSet> xs) const {
  WorldSet out = 0;
  for (const auto& t : tuples) {
    bool in = true;
    for (std::size_t h = 0; h + 1 < t.size() && in; ++h) in = contains(xs[h], t[h]);
    if (in) out |= singleton(t.back());
  }
  return out;
}

DirectImageRelation relation_of(const Frame& F) {
  DirectImageRelation S{F.n, 2, {}};
  for (int i = 0; i < F.n; ++i)
    for (int k = 0; k < F.n; ++k)
      if (F.rel(i, k)) S.tuples.insert({i, k});
  return S;
}

DirectImageRelation relation_from_residuated(const SetFunction& f) {
  const int n = f.n(), j = f.arity();
  if (j < 1) throw Error(ErrorKind::InvalidArgument, "residuation needs at least one coordinate");
  for (int h = 0; h < j; ++h)
    if (!residual(f, h)) throw Error(ErrorKind::NotResiduated, "no residual in coordinate " + std::to_string(h + 1));
  DirectImageRelation S{n, j + 1, {}};
  std::vector<int> pts(j, 0);
  std::vector<WorldSet> xs(j);
  for (;;) {
    for (int h = 0; h < j; ++h) xs[h] = singleton(pts[h]);
    const WorldSet ys = f(xs);
    for (int y = 0; y < n; ++y)
      if (contains(ys, y)) {
        auto t = pts;
        t.push_back(y);
        S.tuples.insert(std::move(t));
      }
    int h = 0;
    while (h < j && ++pts[h] == n) pts[h++] = 0;
    if (h == j) break;
  }
  for (std::uint64_t i = 0; i < f.tuple_count(); ++i) {
    const auto t = f.tuple(i);
    if (f(t) != S.image(t))
      throw Error(ErrorKind::NotResiduated, "direct image differs from the map at " + format_tuple(t, n));
  }
  return S;
}

namespace {

struct LooseSlot {
  SlotKind kind;
  ModalFormula content;
  std::optional<AtomicBoxFormula> chi;
};

// Like the antecedent decomposition, but leaves that fit neither slot kind
// become χ-candidates instead of failing.
ModalFormula loose_decompose(const ModalFormula& f, std::vector<LooseSlot>& slots) {
  auto placeholder = [&](LooseSlot s) {
    slots.push_back(std::move(s));
    return ModalFormula::prop(slot_name(slots.size() - 1));
  };
  if (is_negative_formula(f)) return placeholder({SlotKind::Gamma, f, std::nullopt});
  if (auto chi = decompose_atomic_box_formula(f)) return placeholder({SlotKind::Chi, f, chi});
  switch (f.kind()) {
    case ModalKind::And: {
      auto a = loose_decompose(f.lhs(), slots);
      return ModalFormula::conj(a, loose_decompose(f.rhs(), slots));
    }
    case ModalKind::Or: {
      auto a = loose_decompose(f.lhs(), slots);
      return ModalFormula::disj(a, loose_decompose(f.rhs(), slots));
    }
    case ModalKind::Dia: return ModalFormula::dia(loose_decompose(f.arg(), slots));
    default: return placeholder({SlotKind::Chi, f, std::nullopt});
  }
}

bool has_or(const ModalFormula& f) {
  if (f.is(ModalKind::Or)) return true;
  if (f.is_unary()) return has_or(f.arg());
  if (f.is_binary()) return has_or(f.lhs()) || has_or(f.rhs());
  return false;
}

// Calls fn on every assignment of subsets to `letters`.
template <class Fn>
bool for_each_valuation(const std::vector<std::string>& letters, int n, Fn&& fn) {
  const std::uint64_t count = std::uint64_t{1} << (n * letters.size());
  for (std::uint64_t i = 0; i < count; ++i) {
    Valuation V;
    for (std::size_t h = 0; h < letters.size(); ++h)
      V[letters[h]] = static_cast<WorldSet>((i >> (h * n)) & full_set(n));
    if (!fn(V)) return false;
  }
  return true;
}

std::string describe_valuation(const Valuation& V, int n) {
  std::string s;
  for (const auto& [p, X] : V) s += (s.empty() ? "" : ", ") + p + " = " + format_set(X, n);
  return s;
}

std::string relational_form(std::size_t h, std::size_t k) {
  std::string inner = "X";
  if (h > 0) {
    inner = "R[X]";
    for (std::size_t i = 1; i <= h; ++i) {
      inner = "U" + std::to_string(i) + " ∩ " + inner;
      if (i < h) inner = "R[" + inner + "]";
    }
  }
  if (k == 0) return "X ↦ " + inner;
  return "X ↦ R" + (k == 1 ? std::string() : "^" + std::to_string(k)) + "[" + inner + "]";
}

WorldSet relational_value(const Frame& F, std::span<const WorldSet> us, WorldSet X, std::size_t k) {
  WorldSet v = X;
  if (!us.empty()) {
    v = image(F, X, 1);
    for (std::size_t i = 0; i < us.size(); ++i) {
      v &= us[i];
      if (i + 1 < us.size()) v = image(F, v, 1);
    }
  }
  return image(F, v, k);
}

void check_chi(const Frame& F, std::size_t index, const LooseSlot& s, Checklist& out) {
  const int n = F.n;
  const std::string name = "chi " + slot_name(index);
  if (!s.chi) {
    // χ-candidate: first letter as the argument, the rest as parameters
    auto letters = prop_letters(s.content);
    if (letters.empty()) {
      out.push_back({name + " residuated", false, "closed formula " + print_modal(s.content) + " is not a right adjoint"});
    } else {
      const std::string arg = letters.front();
      letters.erase(letters.begin());
      std::string why;
      const bool ok = for_each_valuation(letters, n, [&](const Valuation& V) {
        if (left_adjoint_of(SetFunction::of_formula(F, s.content, {arg}, V))) return true;
        why = "no left adjoint of " + print_modal(s.content) + " in " + arg +
              (V.empty() ? std::string() : " at " + describe_valuation(V, n));
        return false;
      });
      out.push_back({name + " residuated", ok, ok ? "left adjoint exists" : why});
    }
    out.push_back({name + " relational form", false, print_modal(s.content) + " is not an atomic box formula"});
    return;
  }

  // positional copy: ρ letters #u1..#uh, head #x
  AtomicBoxFormula shape = *s.chi;
  for (std::size_t i = 0; i < shape.rho.size(); ++i) shape.rho[i] = "#u" + std::to_string(i + 1);
  shape.head = "#x";
  const auto chi = shape.to_formula();
  const std::size_t h = shape.rho.size();
  require(n, static_cast<int>(h) + 1, 4);

  std::vector<WorldSet> ftab(std::uint64_t{1} << (n * (h + 1)), 0);
  std::string why;
  bool adjoint = true;
  std::vector<WorldSet> us(h);
  for (std::uint64_t u = 0; u < (std::uint64_t{1} << (n * h)) && adjoint; ++u) {
    Valuation V;
    for (std::size_t i = 0; i < h; ++i) {
      us[i] = static_cast<WorldSet>((u >> (i * n)) & full_set(n));
      V[shape.rho[i]] = us[i];
    }
    auto left = left_adjoint_of(SetFunction::of_formula(F, chi, {"#x"}, V));
    if (!left) {
      adjoint = false;
      why = "no left adjoint at " + describe_valuation(V, n);
      break;
    }
    for (WorldSet X = 0; X <= F.all(); ++X) {
      std::vector<WorldSet> args(us);
      args.push_back(X);
      ftab[index_of(args, n)] = (*left)(X);
    }
  }
  if (!adjoint) {
    out.push_back({name + " residuated", false, why});
    out.push_back({name + " relational form", false, "no left adjoint"});
    return;
  }
  const auto f = SetFunction::table(n, static_cast<int>(h) + 1, ftab, "left adjoint of " + print_modal(s.content));
  bool residuated = true;
  try {
    relation_from_residuated(f);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotResiduated) throw;
    residuated = false;
    why = e.what();
  }
  const std::string form = relational_form(h, shape.k);
  out.push_back({name + " residuated", residuated, residuated ? "left adjoint " + form : why});

  bool matches = true;
  for (std::uint64_t i = 0; i < f.tuple_count() && matches; ++i) {
    const auto t = f.tuple(i);
    matches = f(t) == relational_value(F, std::span(t).first(h), t.back(), shape.k);
  }
  out.push_back({name + " relational form", matches, matches ? form : "left adjoint differs from " + form});
}

}  // namespace

Checklist validate_conditions(const ModalFormula& imp, const ClassificationReport& report, const Frame& F) {
  if (!imp.is(ModalKind::Implies)) throw Error(ErrorKind::InvalidArgument, "not an implication: " + print_modal(imp));
  require(F.n, 1, 3);
  std::vector<LooseSlot> slots;
  const auto skeleton = loose_decompose(imp.lhs(), slots);
  if (has_or(skeleton)) throw Error(ErrorKind::InvalidArgument, "not a definite implication: " + print_modal(imp));
  const int n = F.n;
  Checklist out;

  std::vector<std::string> chi_names, gamma_names;
  for (std::size_t i = 0; i < slots.size(); ++i)
    (slots[i].kind == SlotKind::Chi ? chi_names : gamma_names).push_back(slot_name(i));
  require(n, static_cast<int>(slots.size()), 3, 18);

  {
    std::string why;
    const bool ok = chi_names.empty() || for_each_valuation(gamma_names, n, [&](const Valuation& A) {
      auto v = is_m_additive(SetFunction::of_formula(F, skeleton, chi_names, A),
                             std::vector<std::size_t>(chi_names.size(), 1));
      if (!v) why = v.detail + (A.empty() ? std::string() : " with " + describe_valuation(A, n));
      return v.pass;
    });
    out.push_back({"skeleton 1-additive", ok, ok ? "skeleton " + print_modal(skeleton) : why});
  }

  const bool letters_only = !chi_names.empty() && std::all_of(slots.begin(), slots.end(), [](const LooseSlot& s) {
    return s.kind == SlotKind::Gamma || (s.chi && s.chi->rho.empty() && s.chi->k == 0);
  });
  if (letters_only || report.cls == SyntacticClass::VSSI) {
    std::map<std::string, ModalFormula> sub;
    std::map<std::string, std::size_t> m;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (slots[i].kind == SlotKind::Chi && slots[i].chi) {
        sub.emplace(slot_name(i), ModalFormula::prop(slots[i].chi->head));
        ++m[slots[i].chi->head];
      }
    const auto phi = substitute_prop(skeleton, sub);
    std::vector<std::string> args;
    std::vector<std::size_t> mbar;
    std::string mdesc;
    for (const auto& [p, c] : m) {
      args.push_back(p);
      mbar.push_back(c);
      mdesc += (mdesc.empty() ? "" : ", ") + p + ":" + std::to_string(c);
    }
    std::string why;
    const bool ok = for_each_valuation(gamma_names, n, [&](const Valuation& A) {
      auto v = is_m_additive(SetFunction::of_formula(F, phi, args, A), mbar);
      if (!v) why = v.detail;
      return v.pass;
    });
    out.push_back({"skeleton m-additive in letters", ok, "m = (" + mdesc + ")" + (ok ? "" : "; " + why)});
  }

  for (std::size_t i = 0; i < slots.size(); ++i)
    if (slots[i].kind == SlotKind::Chi) check_chi(F, i, slots[i], out);

  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (slots[i].kind != SlotKind::Gamma) continue;
    const auto letters = prop_letters(slots[i].content);
    require(n, static_cast<int>(letters.size()), 3, 16);
    auto v = is_order_reversing(SetFunction::of_formula(F, slots[i].content, letters));
    out.push_back({"gamma " + slot_name(i) + " antitone", v.pass, v.pass ? print_modal(slots[i].content) : v.detail});
  }

  const auto letters = prop_letters(imp.rhs());
  require(n, static_cast<int>(letters.size()), 3, 16);
  auto v = is_order_preserving(SetFunction::of_formula(F, imp.rhs(), letters));
  out.push_back({"consequent monotone", v.pass, v.pass ? print_modal(imp.rhs()) : v.detail});
  return out;
}

std::vector<AggregateCheck> validate_conditions_all(const ModalFormula& imp, const ClassificationReport& report,
                                                    int n) {
  require(n, 1, 3);
  std::vector<AggregateCheck> out;
  for (const auto& F : enumerate_frames(n, n)) {
    for (auto& c : validate_conditions(imp, report, F)) {
      auto it = std::find_if(out.begin(), out.end(), [&](const AggregateCheck& a) { return a.name == c.name; });
      if (it == out.end()) {
        out.push_back({c.name, 0, 0, std::nullopt, c.detail});
        it = out.end() - 1;
      }
      ++it->total;
      if (c.pass) {
        ++it->passed;
      } else if (!it->first_failure) {
        it->first_failure = F;
        it->detail = c.detail;
      }
    }
  }
  return out;
}

}  // namespace sahl
