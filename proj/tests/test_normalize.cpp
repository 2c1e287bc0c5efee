#include "classify.hpp"
#include "doctest.h"
#include "errors.hpp"
#include "normalize.hpp"
#include "oracle.hpp"
#include "parser.hpp"

using namespace sahl;
using M = ModalFormula;

namespace {

// Same extension on every model up to size 3.
bool same_extension(const M& a, const M& b) {
  auto letters = prop_letters(M::conj(a, b));
  for (int n = 1; n <= 3; ++n)
    for (std::uint64_t m = 0; m < (1ULL << (n * n)); ++m) {
      const auto F = oracle::frame_of(n, m);
      bool ok = true;
      oracle::for_each_val(n, letters, [&](const oracle::Val& V) {
        ok = oracle::ext(F, V, a) == oracle::ext(F, V, b);
        return ok;
      });
      if (!ok) return false;
    }
  return true;
}

bool in_nnf(const M& f) {
  switch (f.kind()) {
    case ModalKind::Implies:
    case ModalKind::Iff: return false;
    case ModalKind::Not: return f.arg().is(ModalKind::Prop);
    case ModalKind::And:
    case ModalKind::Or: return in_nnf(f.lhs()) && in_nnf(f.rhs());
    case ModalKind::Box:
    case ModalKind::Dia: return in_nnf(f.arg());
    default: return true;
  }
}

}  // namespace

TEST_CASE("nnf examples") {
  CHECK(nnf(parse_modal("~(p | q)")) == parse_modal("~p & ~q"));
  CHECK(nnf(parse_modal("~[]p")) == parse_modal("<>~p"));
  CHECK(nnf(parse_modal("~(p & q -> <>q)")) == parse_modal("p & q & []~q"));
  CHECK(nnf(parse_modal("~~p")) == parse_modal("p"));
  CHECK(nnf(parse_modal("~true")) == parse_modal("false"));
}

TEST_CASE("nnf preserves extensions") {
  oracle::Generator g(89);
  for (int i = 0; i < 80; ++i) {
    const auto f = g.any(2, 12);
    const auto n = nnf(f);
    CHECK(in_nnf(n));
    CHECK(same_extension(f, n));
  }
}

TEST_CASE("negate_to_antecedent") {
  const auto a = negate_to_antecedent(parse_modal("p & <>p -> []p"));
  CHECK(a == parse_modal("p & <>p & <>~p"));
  const auto b = negate_to_antecedent(parse_modal("[](p & <>p -> []p)"));
  CHECK(b == parse_modal("<>(p & <>p & <>~p)"));
  const auto c = negate_to_antecedent(parse_modal("(p -> false) & ([]q -> false)"));
  CHECK(same_extension(c, parse_modal("p | []q")));
  for (const char* s : {"[]([]p -> p)", "([]p -> p) | [](<>[]q -> []<>q)", "[](p & [](p -> q) -> <>q) & ([]p -> p)"}) {
    const auto f = parse_modal(s);
    const auto n = negate_to_antecedent(f);
    CHECK(same_extension(M::implies(n, M::bottom()), f));
    CHECK(classify_implication(M::implies(n, M::bottom())));
  }
  try {
    negate_to_antecedent(parse_modal("[]<>p -> <>[]p"));
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotInClass);
  }
}

TEST_CASE("to_definite_implications") {
  const auto a = to_definite_implications(parse_modal("(p | []q) -> <>q"));
  CHECK(a == std::vector<M>{parse_modal("p -> <>q"), parse_modal("[]q -> <>q")});
  const auto b = to_definite_implications(parse_modal("<>(p | []q) -> <>q"));
  CHECK(b == std::vector<M>{parse_modal("<>p -> <>q"), parse_modal("<>[]q -> <>q")});
  const auto c = to_definite_implications(parse_modal("p & <>p -> []p"));
  CHECK(c == std::vector<M>{parse_modal("p & <>p -> []p")});
  const auto d = to_definite_implications(parse_modal("(~p | ~q) & p -> <>p"));
  CHECK(d.size() == 1);
  CHECK(to_definite_implications(parse_modal("(p | p) -> p")).size() == 1);
  try {
    to_definite_implications(parse_modal("(p | q) & (p | q) -> p"), 3);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ConjunctCap);
  }
  CHECK_THROWS_AS(to_definite_implications(parse_modal("[]<>p -> p")), Error);
}

TEST_CASE("definite splitting preserves extensions") {
  oracle::Generator g(97);
  int seen = 0;
  for (int i = 0; i < 40000 && seen < 60; ++i) {
    const auto f = M::implies(g.any(2, 10), g.any(1, 4));
    const auto r = classify_implication(f);
    if (!r || r->definite) continue;
    ++seen;
    const auto parts = to_definite_implications(f);
    M conj = M::top();
    for (const auto& p : parts) {
      CHECK(classify_implication(p)->definite);
      conj = M::conj(conj, p);
    }
    CHECK(same_extension(conj, f));
  }
  CHECK(seen == 60);
}

TEST_CASE("eliminate_uniform_variables") {
  auto a = eliminate_uniform_variables(parse_modal("[]<>p"));
  CHECK(a.result == parse_modal("[]<>false"));
  CHECK(a.replaced == std::map<std::string, M>{{"p", M::bottom()}});
  auto b = eliminate_uniform_variables(parse_modal("p -> <>p"));
  CHECK(b.result == parse_modal("p -> <>p"));
  CHECK(b.replaced.empty());
  auto c = eliminate_uniform_variables(parse_modal("~q & p -> <>p"));
  CHECK(c.result == parse_modal("~false & p -> <>p"));
  CHECK(c.replaced == std::map<std::string, M>{{"q", M::bottom()}});
  auto d = eliminate_uniform_variables(parse_modal("<>q -> p"));
  CHECK(d.replaced == std::map<std::string, M>{{"p", M::bottom()}, {"q", M::top()}});
}

TEST_CASE("uniform elimination preserves frame validity") {
  oracle::Generator g(101);
  int changed = 0;
  for (int i = 0; i < 150; ++i) {
    const auto f = g.any(2, 10);
    const auto e = eliminate_uniform_variables(f);
    if (e.replaced.empty()) continue;
    ++changed;
    for (int n = 1; n <= 3; ++n)
      for (std::uint64_t m = 0; m < (1ULL << (n * n)); ++m) {
        const auto F = oracle::frame_of(n, m);
        REQUIRE(oracle::valid_worlds(F, f) == oracle::valid_worlds(F, e.result));
      }
  }
  CHECK(changed > 20);
}

TEST_CASE("constant folding") {
  CHECK(fold_constants(parse_modal("~false & p -> <>p")) == parse_modal("p -> <>p"));
  CHECK(fold_constants(parse_modal("[]true | p")) == parse_modal("true"));
  CHECK(fold_constants(parse_modal("<>false -> q")) == parse_modal("true"));
  CHECK(fold_constants(parse_modal("p -> false")) == parse_modal("p -> false"));
  oracle::Generator g(103);
  for (int i = 0; i < 80; ++i) {
    const auto f = g.any(2, 10);
    CHECK(same_extension(f, fold_constants(f)));
  }
}
