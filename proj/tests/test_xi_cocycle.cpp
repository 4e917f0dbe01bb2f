#include <doctest.h>

#include <random>

#include "schreier/phi_suite.hpp"

using namespace schreier;

TEST_CASE("xi glues four ray copies by the Klein Cayley graph") {
  auto g = make_ghat();
  auto xi = build_xi(g, 2);
  // J2 has 7 sets, 8 vertices; four copies.
  CHECK(xi.vertices_per_copy() == 8);
  CHECK(4 * xi.vertices_per_copy() == 32);

  auto const& a = *g.alphabet();
  // Glue edge b at the glue vertex of copy 1 lands at the glue vertex of
  // copy b; the glue edges pair the copies by the Klein multiplication.
  for (Klein k = 1; k <= 3; ++k) {
    XiVertex v = xi.act(xi.glue_symbol(k), {0, 0});
    CHECK(v.copy == k);
    CHECK(v.pos == 0);
    for (Klein from = 0; from <= 3; ++from) {
      XiVertex w = xi.act(xi.glue_symbol(k), {from, 0});
      CHECK(w.copy == (from ^ k));
      CHECK(w.pos == 0);
    }
  }

  // a2 labels the first ray edge: it stays inside the copy.
  XiVertex v = xi.act(a.index_checked("a2"), {0, 0});
  CHECK(v.copy == 0);
  CHECK(v.pos == 1);

  // Interior vertices never change copy: removing the glue leaves four
  // disjoint rays.
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    XiVertex u{static_cast<Klein>(rng() % 4),
               1 + static_cast<int>(rng() % (xi.ray().length() - 2))};
    for (int s = 0; s < a.size(); ++s) {
      CHECK(xi.act(s, u).copy == u.copy);
    }
  }

  CHECK(xi.apply({}, {2, 5}) == XiVertex{2, 5});
  CHECK_THROWS_AS(xi.apply(parse_word(a, "b"), {0, 7}), BoundaryUndecidable);
}

TEST_CASE("a glue label colliding with the first ray edge is rejected") {
  std::string config = R"(
alphabet a b c d
start 1
init J [b][a]
connector e [c,d]
rule J : J @e J
)";
  auto sys = parse_system_config(config);
  CHECK_THROWS_AS(XiGraph(sys.segment("J", 1), 1), PerfectLabelingViolation);
}

TEST_CASE("phi fixes the Klein generators of ghat") {
  auto g = make_ghat();
  auto const& a = *g.alphabet();
  CHECK(phi(g, parse_word(a, "b")).str() == "b");
  CHECK(phi(g, parse_word(a, "c")).str() == "c");
  CHECK(phi(g, parse_word(a, "d")).str() == "d");
  for (auto const* s : {"a0", "a1", "a2"}) {
    CHECK(phi(g, parse_word(a, s)).trivial());
  }
}

TEST_CASE("tau of the identity word is trivial everywhere") {
  auto g = make_ghat();
  auto ev = tau(g, {}, JunctionKind::Xi);
  CHECK(ev.support.empty());
  CHECK(ev.product.trivial());
  CHECK(ev.fringe_clear);
}

TEST_CASE("tau of b crosses the glue at the glue vertex only") {
  auto g = make_ghat();
  auto ev = tau(g, parse_word(*g.alphabet(), "b"), JunctionKind::Xi);
  REQUIRE(ev.support.size() == 1);
  CHECK(ev.support[0].first == 0);
  CHECK(ev.support[0].second.str() == "b");
}

TEST_CASE("tau of [a2, b] is supported on exactly two vertices with value b") {
  auto g = make_ghat();
  auto const& a = *g.alphabet();
  Word comm = commutator(parse_word(a, "a2"), parse_word(a, "b"));
  auto ev = tau(g, comm, JunctionKind::Xi);
  REQUIRE(ev.support.size() == 2);
  CHECK(ev.support[0].first == 0);  // the glue vertex itself
  CHECK(ev.support[1].first == 2);  // its image under b a2
  for (auto const& [pos, val] : ev.support) CHECK(val.str() == "b");
  CHECK(ev.product.trivial());
  CHECK(ev.fringe_clear);
}

TEST_CASE("phi is a homomorphism on random pairs") {
  auto g = make_ghat();
  auto report = phi_suite(g, 200, 42);
  CHECK(report.hom_ok);
  CHECK(report.surjective);
  CHECK(report.image_group_order == 4);
  CHECK(report.tau_ok);
  CHECK(report.pass);
}

TEST_CASE("galpha phi gives the rank-four target") {
  auto g = make_galpha(AlphaSequence::all_sigma());
  auto const& a = *g.alphabet();
  CHECK(phi(g, parse_word(a, "x")).str() == "x");
  CHECK(phi(g, parse_word(a, "y")).str() == "y");
  CHECK(phi(g, parse_word(a, "b")).str() == "b");
  for (auto const* s : {"a0", "a1", "a2"}) {
    CHECK(phi(g, parse_word(a, s)).trivial());
  }
  auto report = phi_suite(g, 120, 7);
  CHECK(report.image_group_order == 16);
  CHECK(report.surjective);
  CHECK(report.hom_ok);
  CHECK(report.pass);
}

TEST_CASE("xi ray chains are prefix-nested") {
  for (int n : {2, 3, 5}) {
    CHECK_NOTHROW(build_xi(make_ghat(), n));
    CHECK_NOTHROW(build_xi(make_galpha(AlphaSequence::all_sigma()), n));
  }
  CHECK_THROWS_AS(build_xi(make_ghat(), 1), Error);
}
