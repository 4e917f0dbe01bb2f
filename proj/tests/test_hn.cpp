#include <doctest.h>

#include "schreier/hn_verify.hpp"
#include "schreier/phi_suite.hpp"

using namespace schreier;

TEST_CASE("certification accepts block elements and rejects raw generators") {
  auto g = make_ghat();
  auto const& a = *g.alphabet();
  HnSession session(g, 2);

  auto a0 = session.certify(parse_word(a, "a0"));
  REQUIRE(a0.has_value());
  // a0 swaps the endpoints of its single edge in J2 and misses I2 entirely.
  CHECK(a0->first.str() == "(4 5)");
  CHECK(a0->second.is_identity());

  auto a1 = session.certify(parse_word(a, "a1"));
  REQUIRE(a1.has_value());
  CHECK(a1->first.str() == "(2 3)");
  CHECK(a1->second.str() == "(2 3)");

  // b itself crosses copy boundaries.
  CHECK_FALSE(session.certify(parse_word(a, "b")).has_value());

  auto comm = session.certify(commutator(parse_word(a, "c"), parse_word(a, "a0")));
  REQUIRE(comm.has_value());
  CHECK(comm->first.str() == "(4 5 6)");
}

TEST_CASE("ghat H2 projections are the full symmetric groups") {
  auto g = make_ghat();
  auto report = verify_Hn(g, 2);
  CHECK(report.jn_vertices == 8);
  CHECK(report.jprev_vertices == 4);
  CHECK(report.jn_class.cls == GroupClass::Symmetric);
  CHECK(report.jn_class.order == 40320);
  CHECK(report.jprev_class.cls == GroupClass::Symmetric);
  CHECK(report.jprev_class.order == 24);
  CHECK(report.pass);
}

TEST_CASE("ghat H3 reaches the symmetric groups too") {
  auto g = make_ghat();
  auto report = verify_Hn(g, 3);
  CHECK(report.jn_vertices == 16);
  CHECK(report.jn_class.cls == GroupClass::Symmetric);
  CHECK(report.jprev_class.cls == GroupClass::Symmetric);
  CHECK(report.pass);
}

TEST_CASE("galpha H1 is alternating or better on both supports") {
  auto g = make_galpha(AlphaSequence::all_sigma());
  auto report = verify_Hn(g, 1);
  CHECK(report.jn_vertices == 12);
  CHECK(report.jprev_vertices == 3);
  bool jn_ok = report.jn_class.cls == GroupClass::Alternating
               || report.jn_class.cls == GroupClass::Symmetric;
  bool jp_ok = report.jprev_class.cls == GroupClass::Alternating
               || report.jprev_class.cls == GroupClass::Symmetric;
  CHECK(jn_ok);
  CHECK(jp_ok);
  CHECK(report.pass);
}

TEST_CASE("phi kills every certified block element") {
  auto g = make_ghat();
  auto const& a = *g.alphabet();
  HnSession session(g, 2);
  std::vector<Word> words = {
      parse_word(a, "a0"),
      parse_word(a, "a1"),
      commutator(parse_word(a, "b"), parse_word(a, "a0")),
      commutator(parse_word(a, "c"), parse_word(a, "a0")),
      commutator(parse_word(a, "d"), parse_word(a, "a0")),
      commutator(parse_word(a, "c"), parse_word(a, "a1")),
  };
  for (auto const& w : words) {
    REQUIRE(session.certify(w).has_value());
    CHECK(phi(g, w).trivial());
  }
}

TEST_CASE("parity transition (k1, k2) -> (k1, k1)") {
  auto g = make_ghat();
  auto report = parity_embedding_check(g, 2);
  CHECK(report.pass);
  CHECK(report.rows.size() >= 3);
  bool saw_identity = false, saw_a2 = false;
  for (auto const& row : report.rows) {
    CHECK(row.ok);
    if (row.word == "1") {
      saw_identity = true;
      CHECK(row.k1 == 0);
      CHECK(row.k2 == 0);
    }
    if (row.word == "a2") {
      saw_a2 = true;
      // a2 has one edge in each half of I2 and two edges in J2.
      CHECK(row.k1 == 0);
      CHECK(row.k2 == 1);
      CHECK(row.k1n == 0);
      CHECK(row.k2n == 0);
    }
  }
  CHECK(saw_identity);
  CHECK(saw_a2);
}
