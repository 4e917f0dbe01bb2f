#include <doctest.h>

#include "schreier/separation.hpp"

using namespace schreier;

TEST_CASE("separation with the empty prefix at N = 2") {
  auto report = separation_experiment(AlphaSequence{}, 2);
  CHECK(report.k == 0);
  CHECK(report.M == 3);  // I_0 = [a0][a1]
  CHECK(report.element_count == 6);
  CHECK(report.distinct);
  CHECK(report.pass);
  REQUIRE(report.bounds.size() == 2);
  CHECK(report.bounds[0] == std::pair<int, uint64_t>{3, 2});
  CHECK(report.bounds[1] == std::pair<int, uint64_t>{6, 4});
}

TEST_CASE("separation at N = 1 splits x from y") {
  auto report = separation_experiment(AlphaSequence{}, 1);
  CHECK(report.element_count == 2);
  CHECK(report.distinct);
  CHECK(report.bounds.front() == std::pair<int, uint64_t>{3, 2});
}

TEST_CASE("ball agreement of an alpha pair differing deep enough") {
  auto all_sigma = AlphaSequence::all_sigma();
  // Divergence at entry 2 changes generations 3 and up; every segment of
  // generation >= 2 is longer than the radius.
  auto primed = AlphaSequence::parse("s,s,xy");
  auto report = ball_agreement(all_sigma, primed, 6);
  CHECK(report.universes_equal);
  CHECK(report.automata_equal);
  CHECK(report.agree);
  CHECK(report.first_disagreement == -1);
  CHECK(report.gamma1 == report.gamma2);
}

TEST_CASE("ball agreement detects an early divergence") {
  auto report = ball_agreement(AlphaSequence::all_sigma(), AlphaSequence::parse("x"), 4);
  CHECK_FALSE(report.agree);
  CHECK(report.first_disagreement >= 1);
  CHECK(report.first_disagreement <= 4);
}

TEST_CASE("agreement with itself is exact") {
  auto a = AlphaSequence::parse("s,xy");
  auto report = ball_agreement(a, a, 4);
  CHECK(report.agree);
}
