#include "classify.hpp"
#include "correspond.hpp"
#include "doctest.h"
#include "errors.hpp"
#include "oracle.hpp"
#include "parser.hpp"

using namespace sahl;

namespace {

const char* phi1 = "p & [](p -> []q) -> <>[][]q";
const char* phi2 = "<>[]p & <>([](p -> q) | [](p -> [][]r)) -> <>[](q | <>r)";
const char* phi3 = "<>([](p -> [][]q) | [](q -> []p)) -> <>[]p";

ModalFormula antecedent(const char* s) { return parse_modal(s).lhs(); }

}  // namespace

TEST_CASE("polarity_map") {
  CHECK(polarity_map(parse_modal("[]<>p")) == PolarityMap{{"p", Polarity::Positive}});
  CHECK(polarity_map(parse_modal("p -> <>p")) == PolarityMap{{"p", Polarity::Both}});
  CHECK(polarity_map(parse_modal("~p")) == PolarityMap{{"p", Polarity::Negative}});
  CHECK(polarity_map(parse_modal("p <-> q")) == PolarityMap{{"p", Polarity::Both}, {"q", Polarity::Both}});
  CHECK(polarity_map(parse_modal("~(p -> ~q)")) == PolarityMap{{"p", Polarity::Positive}, {"q", Polarity::Positive}});
  CHECK(polarity_of(polarity_map(parse_modal("p")), "q") == Polarity::Absent);
}

TEST_CASE("polarity duality") {
  oracle::Generator g(73);
  for (int i = 0; i < 500; ++i) {
    const auto f = g.any(3, 12);
    const auto a = polarity_map(f), b = polarity_map(ModalFormula::negation(f));
    for (const auto& [p, v] : a) {
      const auto w = b.at(p);
      if (v == Polarity::Positive) CHECK(w == Polarity::Negative);
      if (v == Polarity::Negative) CHECK(w == Polarity::Positive);
      if (v == Polarity::Both) CHECK(w == Polarity::Both);
    }
  }
}

TEST_CASE("positive and negative formulas") {
  CHECK(is_negative_formula(parse_modal("~p | ~<>q")));
  CHECK(is_positive_formula(parse_modal("[]<>(p & q)")));
  CHECK_FALSE(is_positive_formula(parse_modal("p -> q")));
  CHECK_FALSE(is_negative_formula(parse_modal("p -> q")));
  CHECK(is_positive_formula(parse_modal("[]false")));
  CHECK(is_negative_formula(parse_modal("[]false")));
  CHECK(is_closed(parse_modal("<>true -> []false")));
  CHECK(is_uniform(parse_modal("[]<>p & ~q")));
  CHECK_FALSE(is_uniform(parse_modal("p -> <>p")));
}

TEST_CASE("atomic box-formula decomposition") {
  auto a = decompose_atomic_box_formula(parse_modal("[](p -> [][]q)"));
  REQUIRE(a);
  CHECK(a->rho == std::vector<std::string>{"p"});
  CHECK(a->k == 2);
  CHECK(a->head == "q");
  auto b = decompose_atomic_box_formula(parse_modal("[][]q"));
  REQUIRE(b);
  CHECK(b->rho.empty());
  CHECK(b->k == 2);
  CHECK_FALSE(decompose_atomic_box_formula(parse_modal("[](p & q)")));
  auto c = decompose_atomic_box_formula(parse_modal("p"));
  REQUIRE(c);
  CHECK((c->k == 0 && c->rho.empty() && c->head == "p"));
  auto d = decompose_atomic_box_formula(parse_modal("[](p -> [](p -> q))"));
  REQUIRE(d);
  CHECK(d->rho == std::vector<std::string>{"p", "p"});
  CHECK(d->k == 0);
  CHECK(d->to_formula() == parse_modal("[](p -> [](p -> q))"));
  CHECK(decompose_boxed_atom(parse_modal("[][][]r"))->k == 3);
  CHECK_FALSE(decompose_boxed_atom(parse_modal("[](p -> q)")));
}

TEST_CASE("dependency digraphs") {
  const auto g1 = dependency_digraph(antecedent(phi1));
  CHECK(g1.vertices == std::set<std::string>{"p", "q"});
  CHECK(g1.edges == std::set<std::pair<std::string, std::string>>{{"p", "q"}});
  const auto g2 = dependency_digraph(antecedent(phi2));
  CHECK(g2.vertices == std::set<std::string>{"p", "q", "r"});
  CHECK(g2.edges == std::set<std::pair<std::string, std::string>>{{"p", "q"}, {"p", "r"}});
  const auto g3 = dependency_digraph(antecedent(phi3));
  CHECK(g3.edges.count({"p", "q"}));
  CHECK(g3.edges.count({"q", "p"}));
  try {
    dependency_digraph(parse_modal("[]<>p"));
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotRegularAntecedent);
  }
}

TEST_CASE("topological order") {
  CHECK(topological_order({{"p", "q"}, {{"p", "q"}}}) == std::vector<std::string>{"p", "q"});
  CHECK(topological_order({{"p"}, {}}) == std::vector<std::string>{"p"});
  CHECK_FALSE(topological_order({{"p", "q"}, {{"p", "q"}, {"q", "p"}}}));
  CHECK(topological_order({{"a", "b", "c"}, {{"c", "a"}}}) == std::vector<std::string>{"b", "c", "a"});
}

TEST_CASE("classify the worked examples") {
  auto r1 = classify(parse_modal(phi1));
  CHECK(r1.cls == SyntacticClass::AII);
  CHECK(r1.definite);
  CHECK(r1.order == std::vector<std::string>{"p", "q"});
  auto r2 = classify(parse_modal("<>[]p & []q -> []<>(p & q)"));
  CHECK(r2.cls == SyntacticClass::SI);
  CHECK(r2.definite);
  auto r3 = classify(parse_modal("[]<>p -> <>[]p"));
  CHECK(r3.cls == SyntacticClass::Unclassified);
  CHECK(r3.note == "no elementarity claim");
  CHECK(classify(parse_modal(phi3)).cls == SyntacticClass::AtomicRegularImp);
  auto r4 = classify(parse_modal(phi2));
  CHECK(r4.cls == SyntacticClass::AII);
  CHECK_FALSE(r4.definite);
  CHECK(classify(parse_modal("[]false")).cls == SyntacticClass::Closed);
  CHECK(classify(parse_modal("[]<>p")).cls == SyntacticClass::Uniform);
  CHECK(classify(parse_modal("p & <>p -> []p")).cls == SyntacticClass::VSSI);
  CHECK(classify(parse_modal("[]([]p -> p)")).cls == SyntacticClass::SF);
  CHECK(classify(parse_modal("[](p & [](p -> q) -> <>q) & ([]p -> p)")).cls == SyntacticClass::AIF);
  CHECK(classify(parse_modal("[](p->q) & []p -> []q")).cls == SyntacticClass::AII);
}

TEST_CASE("antecedent decomposition") {
  const auto r = classify(parse_modal("~q & <>(p & [](p -> []q)) & []~p -> <>q"));
  REQUIRE(r.antecedent);
  const auto& d = *r.antecedent;
  CHECK(d.chis().size() == 2);
  CHECK(d.gammas().size() == 2);
  CHECK(d.reassemble() == parse_modal("~q & <>(p & [](p -> []q)) & []~p"));
  CHECK(print_modal(d.skeleton) == "#0 & <>(#1 & #2) & #3");
  CHECK(slot_name(3) == "#3");
}

TEST_CASE("skeleton reassembly and digraph soundness on a corpus") {
  oracle::Generator g(79);
  int seen = 0;
  for (int i = 0; i < 20000 && seen < 150; ++i) {
    const auto f = ModalFormula::implies(g.any(3, 10), g.any(2, 6));
    const auto r = classify_implication(f);
    if (!r) continue;
    ++seen;
    const auto& d = *r->antecedent;
    CHECK(d.reassemble() == f.lhs());
    std::set<std::pair<std::string, std::string>> edges;
    for (const auto& s : d.slots)
      if (s.kind == SlotKind::Chi)
        for (const auto& a : s.chi->rho) edges.emplace(a, s.chi->head);
    CHECK(edges == r->digraph.edges);
  }
  CHECK(seen == 150);
}

TEST_CASE("class inclusion: each label admits the weaker strategies") {
  oracle::Generator g(83);
  int vssi = 0, si = 0;
  for (int i = 0; i < 40000 && (vssi < 25 || si < 25); ++i) {
    const auto f = ModalFormula::implies(g.any(2, 8), g.any(2, 6));
    const auto r = classify_implication(f);
    if (!r || !r->definite) continue;
    const auto letters = prop_letters(f);
    bool every_head = true;
    for (const auto& p : letters) {
      bool found = false;
      for (const auto& c : r->antecedent->chis()) found = found || c.head == p;
      every_head = every_head && found;
    }
    if (!every_head) continue;
    if (r->cls == SyntacticClass::VSSI && vssi < 25) {
      ++vssi;
      const auto a = correspond_si(f), b = correspond_aii(f);
      CHECK_FALSE(oracle::correspondence_failure(f, a.raw, 2));
      CHECK_FALSE(oracle::correspondence_failure(f, b.raw, 2));
    } else if (r->cls == SyntacticClass::SI && si < 25) {
      ++si;
      CHECK_FALSE(oracle::correspondence_failure(f, correspond_aii(f).raw, 2));
      CHECK_THROWS_AS(correspond_vssi(f), Error);
    }
  }
  CHECK(vssi == 25);
  CHECK(si == 25);
}
