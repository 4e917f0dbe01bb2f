#include <doctest.h>

#include "schreier/graph.hpp"
#include "schreier/substitution.hpp"
#include "schreier/universe.hpp"

using namespace schreier;

TEST_CASE("the generator action on a linear segment") {
  auto g = make_grigorchuk();
  Segment i2 = g.segment("I", 2);  // [a][b,c][a]
  auto const& alphabet = *g.alphabet();
  int a = alphabet.index_checked("a");
  int c = alphabet.index_checked("c");
  int d = alphabet.index_checked("d");

  CHECK(act(i2, a, 0) == 1);
  CHECK(act(i2, d, 1) == 1);  // d touches neither incident set
  CHECK(act(i2, c, 2) == 1);

  // At the truncation boundary only decidable moves are allowed.
  CHECK_THROWS_AS(act(i2, d, 0), BoundaryUndecidable);
  CHECK_THROWS_AS(act(i2, d, 3), BoundaryUndecidable);
}

TEST_CASE("words act right to left") {
  auto g = make_grigorchuk();
  Segment i3 = g.segment("I", 3);
  auto const& alphabet = *g.alphabet();
  Word ab = parse_word(alphabet, "ab");
  // ab(v) = a(b(v)).
  int v = 3;
  int manual = act(i3, alphabet.index_checked("a"),
                   act(i3, alphabet.index_checked("b"), v));
  CHECK(apply_word_at(i3, ab, v) == manual);
}

TEST_CASE("word parsing tokenizes multi-character symbols") {
  auto ghat = make_ghat();
  auto const& a = *ghat.alphabet();
  CHECK(parse_word(a, "a2b") == Word{2, 3});
  CHECK(parse_word(a, "a0 b") == Word{0, 3});
  CHECK(word_str(a, Word{2, 3}) == "a2 b");
  CHECK(word_str(a, {}) == "1");
  CHECK_THROWS_AS(parse_word(a, "qa"), Error);
}

TEST_CASE("word algebra uses involutive inverses") {
  auto g = make_grigorchuk();
  auto const& a = *g.alphabet();
  Word a0 = parse_word(a, "a");
  Word b = parse_word(a, "b");
  CHECK(word_str(a, commutator(a0, b)) == "a b a b");
  CHECK(word_str(a, conjugate(a0, b)) == "b a b");
  CHECK(word_str(a, power(parse_word(a, "ad"), 2)) == "a d a d");
  CHECK(reversed_word(parse_word(a, "abc")) == parse_word(a, "cba"));
}

TEST_CASE("windows apply words without leaving their sets") {
  auto g = make_grigorchuk();
  auto const& alphabet = *g.alphabet();

  // Radius-1 window [a][b,c]: center vertex between the two sets.
  Window w(Segment::parse(g.alphabet(), "[a][b,c]"));
  CHECK(w.radius() == 1);
  CHECK(w.apply({}) == 0);
  CHECK(w.apply(parse_word(alphabet, "a")) == -1);
  CHECK(w.apply(parse_word(alphabet, "b")) == +1);
  CHECK(w.apply(parse_word(alphabet, "d")) == 0);
  CHECK_THROWS_AS(w.apply(parse_word(alphabet, "ab")), WordTooLong);
}

TEST_CASE("bc and d act identically on every radius-2 window") {
  auto g = make_grigorchuk();
  auto u = window_universe(g, 2);
  auto const& alphabet = *g.alphabet();
  Word bc = parse_word(alphabet, "bc");
  Word d = parse_word(alphabet, "d");
  for (auto const& sets : u.windows) {
    Window w(sets);
    CHECK(w.apply(bc) == w.apply(d));
  }
}

TEST_CASE("every generator is an involution on every window") {
  for (auto const& sys : {make_grigorchuk(), make_ghat()}) {
    auto u = window_universe(sys, 3);
    for (auto const& sets : u.windows) {
      Window w(sets);
      for (int s = 0; s < sys.alphabet()->size(); ++s) {
        CHECK(w.apply(Word{s, s}) == 0);
      }
    }
  }
}

TEST_CASE("loops at interior vertices complete the perfect labeling") {
  auto g = make_grigorchuk();
  LinearGraph graph(g.segment("I", 3));
  // Vertex 1 sits between [a] and [b,c]: loops are exactly {d}.
  CHECK(graph.loops_at(1) == std::vector<int>{3});
  CHECK_THROWS_AS(graph.loops_at(0), BoundaryUndecidable);
}
