#include <doctest.h>

#include "schreier/segment.hpp"
#include "schreier/substitution.hpp"

using namespace schreier;

TEST_CASE("label sets are nonempty subsets in alphabet order") {
  auto a = make_alphabet({"a0", "a1", "a2", "b", "c", "d"});
  CHECK_THROWS_AS(LabelSet(0), Error);
  auto s = LabelSet::of(*a, {"d", "b"});
  CHECK(s.count() == 2);
  CHECK(s.members() == std::vector<int>{3, 5});
  CHECK(Segment(a, {s}).str() == "[b,d]");
}

TEST_CASE("segment admissibility is checked at construction") {
  auto a = make_alphabet({"a", "b", "c", "d"});
  CHECK_NOTHROW(Segment(a, {LabelSet::of(*a, {"a"}), LabelSet::of(*a, {"b", "c"})}));
  CHECK_THROWS_AS(
      Segment(a, {LabelSet::of(*a, {"b", "c"}), LabelSet::of(*a, {"c", "d"})}),
      AdmissibilityViolation);
}

TEST_CASE("concat joins segments through a connector") {
  auto a = make_alphabet({"a", "b", "c", "d"});
  Segment atom(a, {LabelSet::of(*a, {"a"})});
  Segment bc(a, {LabelSet::of(*a, {"b", "c"})});

  CHECK(concat(atom, bc, atom).str() == "[a][b,c][a]");
  CHECK_THROWS_AS(concat(atom, bc, bc), AdmissibilityViolation);

  auto ghat = make_ghat();
  Segment j1 = ghat.segment("J", 1);
  Segment e1(ghat.alphabet(), {LabelSet::of(*ghat.alphabet(), {"b", "c"})});
  CHECK(concat(j1, e1, j1.reversed()).str() == "[a2][b,c][a1][b,c][a1][b,c][a2]");
}

TEST_CASE("reverse is an involution and respects the paper's example") {
  auto a = make_alphabet({"a0", "a1", "a2", "b", "c", "d"});
  Segment s = Segment::parse(a, "[a2][b,c][a0]");
  CHECK(s.reversed().str() == "[a0][b,c][a2]");
  CHECK(s.reversed().reversed() == s);

  Segment point(a);
  CHECK(point.reversed() == point);
  CHECK(point.str() == "[]");
}

TEST_CASE("segment text round-trips") {
  auto a = make_alphabet({"a0", "a1", "a2", "b", "c", "d"});
  for (auto const* text : {"[a2][b,c][a1][b,d][a1][b,c][a2]", "[a0]", "[]"}) {
    CHECK(Segment::parse(a, text).str() == text);
  }
  CHECK_THROWS_AS(Segment::parse(a, "[a2][zz]"), Error);
  CHECK_THROWS_AS(Segment::parse(a, "[a2"), ParseError);
}

TEST_CASE("find_copies locates forward and reversed occurrences") {
  auto ghat = make_ghat();
  Segment j2 = ghat.segment("J", 2);
  Segment i3 = ghat.segment("I", 3);
  // I_3 = J_2 e_2 J_2^-1.
  auto copies = find_copies(i3, j2);
  REQUIRE(copies.size() == 2);
  CHECK(copies[0].offset == 0);
  CHECK_FALSE(copies[0].reversed);
  CHECK(copies[1].offset == 8);
  CHECK(copies[1].reversed);
}

TEST_CASE("ghat decomposes uniquely into level-1 copies and connectors") {
  auto ghat = make_ghat();
  Segment deep = ghat.segment("J", 6);
  auto i1 = find_copies(deep, ghat.segment("I", 1));
  auto j1 = find_copies(deep, ghat.segment("J", 1));
  // Copies of length 3 tile the segment with single-set connectors between:
  // offsets 0, 4, 8, ... and nothing else.
  std::vector<bool> covered(deep.length(), false);
  std::size_t count = 0;
  for (auto const* matches : {&i1, &j1}) {
    for (auto const& m : *matches) {
      CHECK(m.offset % 4 == 0);
      for (std::size_t k = 0; k < m.length; ++k) {
        CHECK_FALSE(covered[m.offset + k]);
        covered[m.offset + k] = true;
      }
      ++count;
    }
  }
  CHECK(count == (deep.length() + 1) / 4);
  for (std::size_t p = 0; p < deep.length(); ++p) {
    CHECK(covered[p] == (p % 4 != 3));
  }
}
