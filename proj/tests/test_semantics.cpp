#include "doctest.h"
#include "classify.hpp"
#include "errors.hpp"
#include "oracle.hpp"
#include "parser.hpp"
#include "semantics.hpp"
#include "translate.hpp"

using namespace sahl;

TEST_CASE("frame literals") {
  const auto F = Frame::parse("3;0->1,1->2");
  CHECK(F.n == 3);
  CHECK(F.rel(0, 1));
  CHECK(F.rel(1, 2));
  CHECK_FALSE(F.rel(0, 2));
  CHECK(F.literal() == "3;0->1,1->2");
  CHECK(Frame::parse("1;").literal() == "1;");
  CHECK(Frame::parse(" 2 ; 1->0 ").rel(1, 0));
  CHECK_THROWS_AS(Frame::parse("2;0->2"), Error);
  CHECK_THROWS_AS(Frame::parse("x"), Error);
  for (std::uint64_t m = 0; m < 512; ++m) CHECK(Frame::parse(Frame::from_mask(3, m).literal()).mask() == m);
}

TEST_CASE("m_R and l_R") {
  const auto chain = Frame::parse("2;0->1");
  CHECK(m_R(chain, 0b10) == 0b01);
  oracle::Generator g(3);
  for (int i = 0; i < 50; ++i) {
    const auto F = oracle::frame_of(3, g.rng()() & 511);
    CHECK(l_R(F, F.all()) == F.all());
    for (WorldSet X = 0; X < 8; ++X) {
      CHECK(m_R(F, X) == oracle::dia(F, X));
      CHECK(l_R(F, X) == oracle::box(F, X));
      CHECK(image(F, X) == oracle::forward(F, X));
      CHECK(image(F, X, 0) == X);
      CHECK(image(F, X, 2) == oracle::forward(F, oracle::forward(F, X)));
    }
  }
  const Frame empty(3);
  for (WorldSet X = 0; X < 8; ++X) {
    CHECK(m_R(empty, X) == 0);
    CHECK(l_R(empty, X) == 7);
  }
}

TEST_CASE("extension follows the meaning-function table") {
  const auto F = Frame::parse("3;0->1,1->2,2->2");
  const Valuation V{{"p", 0b011}};
  CHECK(extension(parse_modal("false"), F, V) == 0);
  CHECK(extension(parse_modal("p"), F, V) == 0b011);
  CHECK(extension(parse_modal("~p"), F, V) == 0b100);
  oracle::Generator g(17);
  for (int i = 0; i < 200; ++i) {
    const auto f = g.any(3, 12);
    const auto Fr = oracle::frame_of(3, g.rng()() & 511);
    const Valuation W{{"p", static_cast<WorldSet>(g.pick(8))}, {"q", static_cast<WorldSet>(g.pick(8))}};
    CHECK(extension(f, Fr, W) == oracle::ext(Fr, W, f));
  }
}

TEST_CASE("frame validity") {
  const auto refl = Frame::parse("1;0->0");
  const auto irr = Frame::parse("1;");
  CHECK(frame_valid_at(refl, 0, parse_modal("p -> <>p")));
  CHECK_FALSE(frame_valid_at(irr, 0, parse_modal("p -> <>p")));
  CHECK(frame_valid_at(Frame::parse("3;0->1"), 2, parse_modal("true")));
  oracle::Generator g(23);
  for (int i = 0; i < 100; ++i) {
    const auto f = g.any(2, 10);
    const auto Fr = oracle::frame_of(3, g.rng()() & 511);
    const auto ok = oracle::valid_worlds(Fr, f);
    for (int w = 0; w < 3; ++w) CHECK(frame_valid_at(Fr, w, f) == bool((ok >> w) & 1U));
    CHECK(frame_valid(Fr, f) == (ok == 7));
  }
}

TEST_CASE("valuation cap") {
  const auto f = parse_modal("a & b & c & d & e");
  CHECK_THROWS_AS(ModalProgram(f).valid_worlds(Frame(4)), Error);
  try {
    ModalProgram(f).valid_worlds(Frame(4));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ResourceCap);
  }
  CHECK_NOTHROW(ModalProgram(f).valid_worlds(Frame(3)));
}

TEST_CASE("eval_fo") {
  CHECK(eval_fo(Frame::parse("1;0->0"), {{"x", 0}}, parse_fo("R(x,x)")));
  CHECK(eval_fo(Frame::parse("2;"), {{"x", 1}}, parse_fo("x = x")));
  CHECK_FALSE(eval_fo(Frame::parse("2;0->1"), {{"x", 0}}, parse_fo("all y. (R(x,y) -> y != y)")));
  try {
    eval_fo(Frame(2), {}, parse_fo("R(x,x)"));
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnboundVariable);
  }
  CHECK(eval_fo(Frame::parse("2;0->1"), {{"x", 0}}, parse_fo("exists y. (R(x,y) & P(y))"), {{"P", 0b10}}));
}

TEST_CASE("eval_fo agrees with the reference evaluator") {
  oracle::Generator g(31);
  for (int i = 0; i < 200; ++i) {
    const auto f = standard_translation("x", g.any(3, 12));
    const auto Fr = oracle::frame_of(3, g.rng()() & 511);
    const Interpretation I{{"P", static_cast<WorldSet>(g.pick(8))}, {"Q", static_cast<WorldSet>(g.pick(8))}};
    for (int w = 0; w < 3; ++w) {
      CHECK(eval_fo(Fr, {{"x", w}}, f, I) == oracle::fo_at(Fr, w, f, I));
      CHECK(FoProgram(f).eval_at(Fr, w, std::vector<WorldSet>{}) == oracle::fo_at(Fr, w, f, {}));
    }
  }
}

TEST_CASE("eval_so") {
  const auto so = second_order_translation(parse_modal("p -> <>p"));
  CHECK(eval_so(Frame::parse("1;0->0"), {{"x", 0}}, so));
  CHECK_FALSE(eval_so(Frame::parse("1;"), {{"x", 0}}, so));
  const auto closed = second_order_translation(parse_modal("[]false"));
  CHECK(closed.prefix.empty());
  for (std::uint64_t m = 0; m < 16; ++m) {
    const auto F = Frame::from_mask(2, m);
    for (int w = 0; w < 2; ++w) CHECK(eval_so(F, {{"x", w}}, closed) == eval_fo(F, {{"x", w}}, closed.matrix));
  }
}

TEST_CASE("enumerate_frames") {
  CHECK(enumerate_frames(1).size() == 2);
  CHECK(enumerate_frames(2).size() == 16);
  CHECK(enumerate_frames(3).size() == 512);
  std::uint64_t i = 0;
  for (const auto& F : enumerate_frames(2)) CHECK(F.mask() == i++);
  CHECK(Frame::from_mask(2, 0b0010).rel(0, 1));
  CHECK_THROWS_AS(enumerate_frames(5, 4), Error);
}

TEST_CASE("sampled frames are reproducible") {
  CHECK(sample_frames(4, 50) == sample_frames(4, 50));
  CHECK(sample_frames(4, 50, 1) != sample_frames(4, 50, 2));
  for (const auto& F : sample_frames(4, 20)) CHECK(F.n == 4);
}

TEST_CASE("check_local_correspondence") {
  CHECK(check_local_correspondence(parse_modal("[]false"), parse_fo("all y. ~R(x,y)"), 3).pass);
  CHECK(check_local_correspondence(parse_modal("p -> <>p"), parse_fo("R(x,x)"), 3).pass);
  const auto v = check_local_correspondence(parse_modal("p -> <>p"), parse_fo("true"), 2);
  REQUIRE_FALSE(v.pass);
  CHECK(v.counterexample->frame.literal() == "1;");
  CHECK(v.counterexample->direction == Direction::FoOnly);
  CHECK_THROWS_AS(check_local_correspondence(parse_modal("p"), parse_fo("R(x,y)"), 2), Error);
}

TEST_CASE("reported counterexample is the least one") {
  oracle::Generator g(41, {"p"});
  int failures = 0;
  for (int i = 0; i < 60; ++i) {
    const auto f = g.any(2, 8);
    const auto alpha = parse_fo(g.pick(2) ? "R(x,x)" : "all y. (R(x,y) -> R(y,x))");
    const auto v = check_local_correspondence(f, alpha, 3, 100, 77);
    const auto ref = oracle::correspondence_failure(f, alpha, 3);
    if (ref) {
      ++failures;
      REQUIRE_FALSE(v.pass);
      CHECK(v.counterexample->frame == ref->frame);
      CHECK(v.counterexample->world == ref->world);
    } else if (!v.pass) {
      CHECK(v.counterexample->frame.n == 4);
    }
  }
  CHECK(failures > 10);
}

TEST_CASE("monotonicity in positive letters") {
  oracle::Generator g(53, {"p"});
  int tested = 0;
  for (int i = 0; i < 2000 && tested < 40; ++i) {
    const auto f = g.any(2, 10);
    if (prop_letters(f).empty() || !is_positive_formula(f)) continue;
    ++tested;
    for (const auto& F : enumerate_frames(3))
      for (WorldSet a = 0; a < 8; ++a)
        for (int w = 0; w < 3; ++w) {
          const WorldSet b = a | singleton(w);
          REQUIRE((extension(f, F, {{"p", a}}) & ~extension(f, F, {{"p", b}})) == 0);
        }
  }
  CHECK(tested == 40);
}

TEST_CASE("frame size cap follows the environment") {
  CHECK(frame_size_cap() >= 1);
}
