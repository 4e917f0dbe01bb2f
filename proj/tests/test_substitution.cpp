#include <doctest.h>

#include "schreier/minimality.hpp"
#include "schreier/substitution.hpp"

using namespace schreier;

TEST_CASE("ghat generations match the worked values") {
  auto ghat = make_ghat();
  CHECK(ghat.segment("I", 1).str() == "[a2][b,c][a0]");
  CHECK(ghat.segment("J", 1).str() == "[a2][b,c][a1]");
  CHECK(ghat.segment("I", 2).str() == "[a2][b,c][a1][b,d][a1][b,c][a2]");
  CHECK(ghat.segment("J", 2).str() == "[a2][b,c][a1][b,d][a0][b,c][a2]");
}

TEST_CASE("grigorchuk generations double with cycling connectors") {
  auto g = make_grigorchuk();
  CHECK(g.segment("I", 1).str() == "[a]");
  CHECK(g.segment("I", 2).str() == "[a][b,c][a]");
  CHECK(g.segment("I", 3).str() == "[a][b,c][a][b,d][a][b,c][a]");
  CHECK(g.segment("I", 3).length() == 7);
  for (int n = 1; n <= 10; ++n) {
    CHECK(g.segment("I", n).length() == (std::size_t{1} << n) - 1);
  }
}

TEST_CASE("ghat I_n is symmetric for n >= 2") {
  auto ghat = make_ghat();
  CHECK(ghat.segment("I", 1) != ghat.segment("I", 1).reversed());
  for (int n = 2; n <= 8; ++n) {
    CHECK(ghat.segment("I", n) == ghat.segment("I", n).reversed());
  }
}

TEST_CASE("galpha sigma rules") {
  auto g = make_galpha(AlphaSequence::all_sigma());
  CHECK(g.segment("I", 0).str() == "[a0][a1]");
  CHECK(g.segment("J", 0).str() == "[a0][a2]");
  CHECK(g.segment("I", 1).str() == "[a0][a2][b,c][a2][a0]");
  CHECK(g.segment("J", 1).str() == "[a0][a2][x][a0][a1][y][a0][a1][y][a2][a0]");
}

TEST_CASE("galpha word rules") {
  auto g = make_galpha(AlphaSequence::parse("xy"));
  CHECK(g.segment("J", 1).str() == "[a0][a2][b,c][a0][a1][x][a0][a1][y][a2][a0]");
  // The I rule does not depend on the entry kind.
  CHECK(g.segment("I", 1).str() == "[a0][a2][b,c][a2][a0]");
}

TEST_CASE("alpha validation") {
  CHECK_THROWS_AS(AlphaSequence::parse("xz"), InvalidAlpha);
  CHECK_THROWS_AS(builtin("galpha"), InvalidAlpha);
  CHECK_THROWS_AS(builtin("nosuch"), UnknownSystem);
  auto a = AlphaSequence::parse("s,xy,s");
  CHECK(a.entries.size() == 3);
  CHECK(a.at(0).sigma);
  CHECK(a.at(1).word == "xy");
  CHECK(a.at(100).sigma);  // sigma tail
  auto c = AlphaSequence::parse("xy", AlphaSequence::Tail::Cycle);
  CHECK(c.at(7).word == "xy");
}

TEST_CASE("fibonacci generations follow the two-back recursion") {
  auto f = make_fibonacci();
  CHECK(f.segment("I", 1).str() == "[]");
  CHECK(f.segment("I", 2).str() == "[a0,b0,c0]");
  CHECK(f.segment("I", 3).str() == "[a1,b1,c1][a0,b0,c0]");
  CHECK(f.segment("I", 4).str() == "[a0,b0,c0][a2,b2,c2][a0,b0,c0][a1,b1,c1]");
  // The pair state mirrors the recursion.
  for (int n = 2; n <= 9; ++n) {
    CHECK(f.segment("Iprev", n) == f.segment("I", n - 1));
  }
}

TEST_CASE("every built-in system stays admissible through generation 8") {
  std::vector<SubstitutionSystem> systems;
  systems.push_back(make_grigorchuk());
  systems.push_back(make_dihedral());
  systems.push_back(make_ghat());
  systems.push_back(make_fibonacci());
  systems.push_back(make_galpha(AlphaSequence::all_sigma()));
  systems.push_back(make_galpha(AlphaSequence::parse("xy,s,yx")));
  for (auto const& s : systems) {
    // Segment construction re-checks admissibility on every application.
    CHECK_NOTHROW(s.generate(s.first_generation() + 7));
  }
}

TEST_CASE("each generation factors over the previous one as its rule states") {
  std::vector<SubstitutionSystem> systems;
  systems.push_back(make_grigorchuk());
  systems.push_back(make_dihedral());
  systems.push_back(make_ghat());
  systems.push_back(make_fibonacci());
  systems.push_back(make_galpha(AlphaSequence::parse("s,xy")));
  for (auto const& sys : systems) {
    for (int g = sys.first_generation() + 1; g <= 8; ++g) {
      auto const& prev = sys.generation(g - 1);
      for (auto const& rule : sys.rules_for(g)) {
        Segment expected(sys.alphabet());
        for (auto const& atom : rule.atoms) {
          Segment part(sys.alphabet());
          switch (atom.kind) {
            case AtomTemplate::Kind::Seg:
              part = prev.at(atom.name_id);
              if (atom.reversed) part = part.reversed();
              break;
            case AtomTemplate::Kind::FixedConn:
              part = sys.connector(atom.conn_id);
              break;
            case AtomTemplate::Kind::CycleConn: {
              int m = static_cast<int>(atom.cycle_ids.size());
              part = sys.connector(atom.cycle_ids[((g + atom.cycle_offset) % m + m) % m]);
              break;
            }
          }
          expected = concat(expected, part);
        }
        CHECK(expected == sys.generation(g).at(rule.output_name_id));
      }
    }
  }
}

TEST_CASE("markov segments are admissible, seeded, and reproducible") {
  auto a = make_alphabet({"a", "b", "c"});
  auto one = random_markov_segment(a, 1, 7);
  CHECK(one.length() == 1);
  CHECK(one.set(0).count() == 1);

  auto s1 = random_markov_segment(a, 10000, 1);
  auto s2 = random_markov_segment(a, 10000, 1);
  CHECK(s1 == s2);
  for (std::size_t i = 0; i + 1 < s1.length(); ++i) {
    CHECK(s1.set(i).count() == 1);
    CHECK_FALSE(s1.set(i).intersects(s1.set(i + 1)));
  }
  auto s3 = random_markov_segment(a, 10000, 2);
  CHECK(s1 != s3);
}

TEST_CASE("config text systems load and generate") {
  std::string config = R"(
# the doubling line system
alphabet a b c d
start 1
init I [a]
connector e1 [b,c]
connector e2 [b,d]
connector e3 [c,d]
rule I : I @cycle(e1,e2,e3)+1 I
)";
  auto sys = parse_system_config(config);
  auto grig = make_grigorchuk();
  for (int n = 1; n <= 8; ++n) {
    CHECK(sys.segment("I", n) == grig.segment("I", n));
  }
}

TEST_CASE("generation memoization returns stable references") {
  auto g = make_ghat();
  auto const& a = g.generation(3);
  g.generation(9);
  CHECK(a == g.generation(3));  // deque storage keeps earlier entries valid
}
