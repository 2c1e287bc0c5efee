#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <thread>

#include "classify.hpp"
#include "correspond.hpp"
#include "fosimp.hpp"
#include "normalize.hpp"
#include "oracle.hpp"
#include "orderprops.hpp"
#include "parser.hpp"
#include "report.hpp"
#include "translate.hpp"

using namespace sahl;
using M = ModalFormula;
using F = FoFormula;

namespace {

constexpr std::uint64_t seed = 20240917;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (pass) detail << why;
    pass = false;
  }
};

int failures = 0;

void report(const char* id, const char* title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.pass) ++failures;
  std::printf("%s %s %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.str().c_str(), secs);
  std::fflush(stdout);
}

template <class Fn>
void for_frames(int max_n, Fn&& fn) {
  for (int n = 1; n <= max_n; ++n)
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << (n * n)); ++m) fn(oracle::frame_of(n, m));
}

// Criterion 1

void worked_examples(Outcome& o) {
  const std::pair<const char*, const char*> pairs[] = {
      {"p & <>p -> []p", "all z. all u. (R(x,z) & R(x,u) -> z = u)"},
      {"<>[]p & []q -> []<>(p & q)", "all y. all w. (R(x,y) & R(x,w) -> (exists s. (R(x,s) & R(y,s) & R(w,s))))"},
      {"p & [](p -> q) -> <>q", "R(x,x)"},
      {"[]false", "all y. ~R(x,y)"},
      {"[]<>p", "all y. ~R(x,y)"},
      {"p -> <>p", "R(x,x)"},
      {"[]p -> p", "R(x,x)"},
      {"<><>p -> <>p", "all y. all z. (R(x,y) & R(y,z) -> R(x,z))"},
  };
  int n = 0;
  for (const auto& [modal, hand] : pairs) {
    const auto f = parse_modal(modal);
    const auto alpha = correspond(f).combined;
    const auto target = parse_fo(hand);
    const auto v = check_local_correspondence(f, alpha, 3, 2000, seed);
    if (!v.pass) o.fail(std::string(modal) + ": verify " + describe(*v.counterexample));
    if (oracle::correspondence_failure(f, alpha, 3, 2000, seed)) o.fail(std::string(modal) + ": oracle refutes");
    if (!equivalent_on_small_frames(alpha, target, 3).pass) o.fail(std::string(modal) + ": differs from the hand-derived form");
    if (!oracle::fo_equivalent(alpha, target, 3)) o.fail(std::string(modal) + ": oracle differs from the hand-derived form");
    ++n;
  }
  if (o.pass) o.detail << n << " pairs, |W| <= 3 exhaustive plus 2000 frames at |W| = 4";
}

// Criterion 2

class CorpusGen {
 public:
  explicit CorpusGen(std::uint64_t s) : g_(s, {"p", "q"}) {}

  M positive(int depth) {
    switch (depth > 0 ? g_.pick(6) : g_.pick(2)) {
      case 0: return M::prop(g_.letter());
      case 1: return g_.pick(4) ? M::prop(g_.letter()) : M::top();
      case 2: return M::conj(positive(depth), positive(depth - 1));
      case 3: return M::disj(positive(depth - 1), positive(depth - 1));
      case 4: return M::dia(positive(depth - 1));
      default: return M::box(positive(depth - 1));
    }
  }

  M gamma() { return M::negation(positive(1)); }

  M chi(bool inductive) {
    M body = M::box_power(M::prop(g_.letter()), g_.pick(3));
    if (inductive)
      for (int i = 1 + g_.pick(2); i > 0; --i) body = M::box(M::implies(M::prop(g_.letter()), body));
    return M::box_power(body, g_.pick(2));
  }

  // Skeleton of ∧ and ◇ over leaves from `leaf`, with the odd γ.
  M skeleton(int budget, const std::function<M()>& leaf) {
    if (budget <= 1) return g_.pick(8) ? leaf() : gamma();
    switch (g_.pick(3)) {
      case 0: return leaf();
      case 1: return M::dia(skeleton(budget - 1, leaf));
      default: return M::conj(skeleton(budget / 2, leaf), skeleton(budget / 2, leaf));
    }
  }

  M vssi() {
    return M::implies(skeleton(4, [&] { return M::prop(g_.letter()); }), positive(2));
  }
  M si() {
    return M::implies(skeleton(4, [&] { return M::box_power(M::prop(g_.letter()), g_.pick(3)); }), positive(2));
  }
  M aii() {
    return M::implies(skeleton(4, [&] { return chi(g_.pick(2)); }), positive(2));
  }

 private:
  oracle::Generator g_;
};

void random_sweep(Outcome& o) {
  CorpusGen gen(seed);
  struct Target {
    SyntacticClass cls;
    std::size_t want;
    std::function<M()> make;
  };
  const Target targets[] = {
      {SyntacticClass::VSSI, 500, [&] { return gen.vssi(); }},
      {SyntacticClass::SI, 300, [&] { return gen.si(); }},
      {SyntacticClass::AII, 200, [&] { return gen.aii(); }},
  };
  std::set<std::string> seen;
  for (const auto& t : targets) {
    std::size_t got = 0, tries = 0;
    while (got < t.want && tries < 200000) {
      ++tries;
      const auto f = t.make();
      if (modal_depth(f) > 3 || prop_letters(f).size() > 2) continue;
      const auto r = classify_implication(f);
      if (!r || r->cls != t.cls || !r->definite) continue;
      if (!seen.insert(print_modal(f)).second) continue;
      ++got;
      try {
        const auto c = correspond(f);
        if (auto bad = oracle::correspondence_failure(f, c.combined, 3))
          o.fail(print_modal(f) + ": refuted on " + bad->frame.literal() + " at " + std::to_string(bad->world));
      } catch (const std::exception& e) {
        o.fail(print_modal(f) + ": " + e.what());
      }
    }
    if (got < t.want) o.fail(std::string("only ") + std::to_string(got) + " " + to_string(t.cls) + " formulas");
    if (o.pass) o.detail << got << " " << to_string(t.cls) << ", ";
  }
  if (o.pass) o.detail << "all sound at |W| <= 3";
}

// Criterion 3

SetFunction image_k(const Frame& F, std::size_t k) {
  return SetFunction::unary(F.n, [F, k](WorldSet X) {
    for (std::size_t i = 0; i < k; ++i) X = oracle::forward(F, X);
    return X;
  });
}

Frame converse(const Frame& F) {
  Frame C(F.n);
  for (int i = 0; i < F.n; ++i)
    for (int j = 0; j < F.n; ++j)
      if (oracle::edge(F, i, j)) C.add(j, i);
  return C;
}

void order_suite(Outcome& o) {
  int frames = 0, one_additive_failures = 0, literal_matches = 0;
  bool witness_seen = false;
  for (std::uint64_t m = 0; m < 512; ++m) {
    const auto F = oracle::frame_of(3, m);
    ++frames;
    const auto lit = F.literal();
    const auto box = SetFunction::unary(3, [F](WorldSet X) { return oracle::box(F, X); });
    if (!adjunction_holds(image_k(F, 1), box)) o.fail("(i) adjunction fails on " + lit);
    const auto g = right_adjoint_of(image_k(F, 1));
    if (!g || !(*g == box)) o.fail("(i) computed right adjoint differs on " + lit);
    if (!is_m_additive(SetFunction::of_formula(F, parse_modal("p & <>p"), {"p"}), {2}).pass)
      o.fail("(ii) p & <>p not 2-additive on " + lit);
    if (!is_m_additive(SetFunction::of_formula(F, parse_modal("<>p & <><>p"), {"p"}), {1}).pass) {
      ++one_additive_failures;
      witness_seen = witness_seen || lit == "3;0->1,1->2";
    }
    for (std::size_t k = 0; k <= 2; ++k) {
      const auto r = right_adjoint_of(image_k(F, k));
      if (!r || !(*r == SetFunction::of_formula(F, M::box_power(M::prop("p"), k), {"p"})))
        o.fail("(iii) k = " + std::to_string(k) + " on " + lit);
    }
    const auto diamond = SetFunction::of_formula(F, parse_modal("<>p"), {"p"});
    if (!(relation_from_residuated(diamond) == relation_of(converse(F))))
      o.fail("(iv) m_R does not give the converse on " + lit);
    if (!(relation_from_residuated(image_k(F, 1)) == relation_of(F))) o.fail("(iv) R[-] does not give R on " + lit);
    if (relation_from_residuated(diamond) == relation_of(F)) ++literal_matches;
  }
  if (!witness_seen) o.fail("(ii) no 1-additivity failure on 3;0->1,1->2");
  if (o.pass)
    o.detail << frames << " frames; <>p & <><>p fails 1-additivity on " << one_additive_failures
             << " frames incl. 3;0->1,1->2; S(m_R) = converse of R, S(X -> R[X]) = R";
  std::printf("NOTE 3(iv) literal reading relation_from_residuated(m_R) == R holds on %d/512 frames (the symmetric "
              "ones); the direct-image definition yields the converse\n",
              literal_matches);
}

// Criterion 4

void goldens(Outcome& o) {
  const std::pair<const char*, const char*> cases[] = {
      {"p & [](p -> []q) -> <>[][]q",
       "input: p & [](p -> []q) -> <>[][]q\n"
       "class: AII\n"
       "definite: yes\n"
       "polarity: p+- q+-\n"
       "skeleton: #0 & #1\n"
       "slot #0: chi p [head p, k 0]\n"
       "slot #1: chi [](p -> []q) [head q, k 1, rho (p)]\n"
       "consequent: <>[][]q\n"
       "digraph: vertices {p, q} edges {p->q}\n"
       "order: [p, q]\n"
       "definite conjuncts: 1\n"},
      {"<>[]p & <>([](p -> q) | [](p -> [][]r)) -> <>[](q | <>r)",
       "input: <>[]p & <>([](p -> q) | [](p -> [][]r)) -> <>[](q | <>r)\n"
       "class: AII\n"
       "definite: no\n"
       "polarity: p+- q+- r+-\n"
       "skeleton: <>#0 & <>(#1 | #2)\n"
       "slot #0: chi []p [head p, k 1]\n"
       "slot #1: chi [](p -> q) [head q, k 0, rho (p)]\n"
       "slot #2: chi [](p -> [][]r) [head r, k 2, rho (p)]\n"
       "consequent: <>[](q | <>r)\n"
       "digraph: vertices {p, q, r} edges {p->q, p->r}\n"
       "order: [p, q, r]\n"
       "definite conjuncts: 2\n"},
      {"<>([](p -> [][]q) | [](q -> []p)) -> <>[]p",
       "input: <>([](p -> [][]q) | [](q -> []p)) -> <>[]p\n"
       "class: AtomicRegularImp\n"
       "definite: no\n"
       "polarity: p+- q+-\n"
       "skeleton: <>(#0 | #1)\n"
       "slot #0: chi [](p -> [][]q) [head q, k 2, rho (p)]\n"
       "slot #1: chi [](q -> []p) [head p, k 1, rho (q)]\n"
       "consequent: <>[]p\n"
       "digraph: vertices {p, q} edges {p->q, q->p}\n"
       "order: none (cycle)\n"
       "definite conjuncts: 2\n"},
      {"[]<>p -> <>[]p",
       "input: []<>p -> <>[]p\n"
       "class: Unclassified\n"
       "polarity: p+-\n"
       "note: no elementarity claim\n"},
      {"[](p->q) & []p -> []q",
       "input: [](p -> q) & []p -> []q\n"
       "class: AII\n"
       "definite: yes\n"
       "polarity: p+- q+-\n"
       "skeleton: #0 & #1\n"
       "slot #0: chi [](p -> q) [head q, k 0, rho (p)]\n"
       "slot #1: chi []p [head p, k 1]\n"
       "consequent: []q\n"
       "digraph: vertices {p, q} edges {p->q}\n"
       "order: [p, q]\n"
       "definite conjuncts: 1\n"},
  };
  for (const auto& [text, golden] : cases) {
    const auto got = render_classification(classify(parse_modal(text)));
    if (got != golden) o.fail(std::string(text) + ": report differs:\n" + got);
  }
  const auto phi1 = classify(parse_modal(cases[0].first));
  if (phi1.cls != SyntacticClass::AII) o.fail("phi1 is not strictly AII");
  const auto k = correspond(parse_modal("[](p->q) & []p -> []q"));
  if (!oracle::fo_equivalent(k.combined, F::truth(), 3)) o.fail("K correspondent is not valid");
  if (!check_local_correspondence(k.input, F::truth(), 3, 2000, seed).pass) o.fail("K is not valid");
  if (o.pass) o.detail << "5 reports exact; K correspondent equivalent to true";
}

// Criterion 5

bool same_extension(const M& a, const M& b) {
  const auto letters = prop_letters(M::conj(a, b));
  bool ok = true;
  for_frames(3, [&](const Frame& F) {
    if (!ok) return;
    oracle::for_each_val(F.n, letters, [&](const oracle::Val& V) {
      ok = oracle::ext(F, V, a) == oracle::ext(F, V, b);
      return ok;
    });
  });
  return ok;
}

void metamorphic(Outcome& o) {
  oracle::Generator g(seed);
  for (int i = 0; i < 10000; ++i) {
    const auto f = g.any(4, 16);
    if (!(parse_modal(print_modal(f)) == f)) o.fail("modal round trip: " + print_modal(f));
    std::vector<std::string> scope{"x"};
    const auto a = oracle::random_fo(g, scope, 14);
    if (!(parse_fo(print_fo(a)) == a)) o.fail("first-order round trip: " + print_fo(a));
  }
  int nnf_checked = 0, split_checked = 0, rule_hits = 0, simplified = 0;
  for (int i = 0; i < 300; ++i) {
    const auto f = g.any(2, 10);
    ++nnf_checked;
    if (!same_extension(f, nnf(f))) o.fail("nnf: " + print_modal(f));
  }
  for (int i = 0; i < 100000 && split_checked < 150; ++i) {
    const auto f = M::implies(g.any(2, 10), g.any(1, 4));
    const auto r = classify_implication(f);
    if (!r || r->definite) continue;
    ++split_checked;
    M conj = M::top();
    for (const auto& p : to_definite_implications(f)) conj = M::conj(conj, p);
    if (!same_extension(conj, f)) o.fail("to_definite_implications: " + print_modal(f));
  }
  std::function<void(const F&)> visit = [&](const F& s) {
    for (const auto& r : simplification_rules())
      if (auto out = r.apply(s)) {
        ++rule_hits;
        if (!oracle::open_equivalent(s, *out, 3)) o.fail(r.name + ": " + print_fo(s) + " => " + print_fo(*out));
      }
    switch (s.kind()) {
      case FoKind::Not:
      case FoKind::Forall:
      case FoKind::Exists: visit(s.body()); break;
      case FoKind::And:
      case FoKind::Or:
      case FoKind::Implies:
      case FoKind::Iff:
        for (const auto& c : s.children()) visit(c);
        break;
      default: break;
    }
  };
  for (int i = 0; i < 300; ++i) {
    std::vector<std::string> scope{"x"};
    const auto f = oracle::random_fo(g, scope, 12, true);
    visit(f);
    const auto s = simplify(f);
    ++simplified;
    if (!(simplify(s) == s)) o.fail("simplify not idempotent on " + print_fo(f));
  }
  if (o.pass)
    o.detail << "20000 round trips; nnf on " << nnf_checked << ", definite split on " << split_checked << ", "
             << rule_hits << " rule applications, " << simplified << " idempotence checks";
}

// Criterion 6

std::vector<M> all_formulas(int max_size, int max_depth) {
  // by[s][d]: formulas of exactly s nodes and depth at most d
  std::vector<std::vector<std::vector<M>>> by(max_size + 1, std::vector<std::vector<M>>(max_depth + 1));
  for (int s = 1; s <= max_size; ++s)
    for (int d = 0; d <= max_depth; ++d) {
      auto& out = by[s][d];
      if (s == 1) {
        out = {M::prop("p"), M::top(), M::bottom()};
        continue;
      }
      for (const auto& a : by[s - 1][d]) out.push_back(M::negation(a));
      if (d > 0)
        for (const auto& a : by[s - 1][d - 1]) {
          out.push_back(M::box(a));
          out.push_back(M::dia(a));
        }
      for (int l = 1; l < s - 1; ++l)
        for (const auto& a : by[l][d])
          for (const auto& b : by[s - 1 - l][d]) {
            out.push_back(M::conj(a, b));
            out.push_back(M::disj(a, b));
            out.push_back(M::implies(a, b));
            out.push_back(M::iff(a, b));
          }
    }
  std::vector<M> all;
  for (int s = 1; s <= max_size; ++s) all.insert(all.end(), by[s][max_depth].begin(), by[s][max_depth].end());
  return all;
}

std::string adequacy_failure(const M& f) {
  const auto st = standard_translation("x", f);
  const auto so = second_order_translation(f);
  std::string why;
  for_frames(3, [&](const Frame& F) {
    if (!why.empty()) return;
    bool ok = true;
    oracle::for_each_val(F.n, {"p"}, [&](const oracle::Val& V) {
      const oracle::Val I{{"P", V.at("p")}};
      const auto e = oracle::ext(F, V, f);
      for (int w = 0; w < F.n && ok; ++w) ok = bool((e >> w) & 1U) == oracle::fo_at(F, w, st, I);
      return ok;
    });
    if (!ok) {
      why = "ST: " + print_modal(f) + " on " + F.literal();
      return;
    }
    const auto valid = oracle::valid_worlds(F, f);
    for (int w = 0; w < F.n && ok; ++w) ok = eval_so(F, {{"x", w}}, so) == bool((valid >> w) & 1U);
    if (!ok) why = "SO: " + print_modal(f) + " on " + F.literal();
  });
  return why;
}

void adequacy(Outcome& o) {
  const int max_size = 6;
  const auto corpus = all_formulas(max_size, 2);
  std::vector<std::string> why(corpus.size());
  const unsigned workers = std::max(1U, std::thread::hardware_concurrency());
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < corpus.size();) why[i] = adequacy_failure(corpus[i]);
    });
  for (auto& t : pool) t.join();
  for (const auto& w : why)
    if (!w.empty()) o.fail(w);
  if (o.pass) o.detail << corpus.size() << " formulas (all with <= " << max_size << " nodes, depth <= 2, letter p)";
}

}  // namespace

int main() {
  report("1", "worked example reproduction", worked_examples);
  report("2", "randomized soundness sweep", random_sweep);
  report("3", "order-theoretic property suite", order_suite);
  report("4", "classification goldens", goldens);
  report("5", "metamorphic and structural suite", metamorphic);
  report("6", "translation adequacy", adequacy);
  return failures == 0 ? 0 : 1;
}
