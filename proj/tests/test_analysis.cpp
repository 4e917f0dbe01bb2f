#include <doctest.h>

#include <set>

#include "schreier/linrep.hpp"
#include "schreier/minimality.hpp"
#include "schreier/repetitivity.hpp"

using namespace schreier;

TEST_CASE("minimality witnesses") {
  auto grig = make_grigorchuk();
  for (int n = 1; n <= 6; ++n) {
    CHECK(minimality_witness(grig, n, 24) == n);  // single nested chain
  }
  auto ghat = make_ghat();
  for (int n = 1; n <= 5; ++n) {
    CHECK(minimality_witness(ghat, n, 24) == n + 2);
  }
  auto galpha = make_galpha(AlphaSequence::all_sigma());
  CHECK(minimality_witness(galpha, 0, 24) == 2);

  // A cap below the witness reports nothing.
  CHECK_FALSE(minimality_witness(ghat, 3, 4).has_value());
}

TEST_CASE("the three symmetric-center windows exist at radius 8") {
  for (auto const& sys : {make_grigorchuk(), make_ghat()}) {
    auto report = theorem_hypothesis_check(sys, 8);
    CHECK(report.pass);
    REQUIRE(report.centers.size() == 3);
    for (auto const& [token, found] : report.centers) CHECK(found);
  }
  auto galpha = make_galpha(AlphaSequence::all_sigma());
  CHECK(theorem_hypothesis_check(galpha, 6).pass);
}

TEST_CASE("systems without b, c, d fail the precondition") {
  CHECK_THROWS_AS(theorem_hypothesis_check(make_dihedral(), 4), Error);
}

TEST_CASE("dihedral gaps are the period") {
  auto d = make_dihedral();
  auto report = repetitivity(d, 6, 9);
  CHECK(report.pass);
  for (int n = 1; n <= 6; ++n) {
    CHECK(report.max_gap[n - 1] == 2);
  }
  CHECK(report.fitted_L == 2.0);
}

TEST_CASE("grigorchuk gap report is linear on window lengths up to 8") {
  auto g = make_grigorchuk();
  auto report = repetitivity(g, 8, 12);
  CHECK(report.pass);
  CHECK(report.monotone);
  CHECK(report.unbounded.empty());
  CHECK(report.fitted_L > 0);
  for (int n = 1; n <= 8; ++n) {
    CHECK(report.max_gap[n - 1] <= report.fitted_L * n);
    CHECK(report.min_occurrences[n - 1] >= 3);
  }
}

TEST_CASE("ghat gap report is linear on window lengths up to 8") {
  auto g = make_ghat();
  auto report = repetitivity(g, 8, 9);
  CHECK(report.pass);
  for (int n = 1; n <= 8; ++n) {
    CHECK(report.max_gap[n - 1] <= report.fitted_L * n);
  }
}

TEST_CASE("a single defect is flagged as an unbounded gap") {
  auto a = make_alphabet({"a", "b", "c", "d"});
  std::vector<LabelSet> sets;
  for (int i = 0; i < 400; ++i) {
    sets.push_back(i % 2 ? LabelSet::of(*a, {"b"}) : LabelSet::of(*a, {"a"}));
  }
  sets[201] = LabelSet::of(*a, {"c", "d"});  // odd position keeps admissibility
  Segment ambient(a, sets);

  std::vector<std::vector<Segment>> required;
  std::set<Segment> len2;
  for (std::size_t off = 0; off + 2 <= ambient.length(); ++off) {
    len2.insert(ambient.subsegment(off, 2));
  }
  required.push_back({Segment::parse(a, "[a]"), Segment::parse(a, "[b]"),
                      Segment::parse(a, "[c,d]")});
  required.emplace_back(len2.begin(), len2.end());

  auto report = repetitivity_scan(ambient, required, 2, 0, /*strict=*/false, "defect");
  CHECK_FALSE(report.pass);
  REQUIRE(!report.unbounded.empty());
  CHECK(report.unbounded.front() == "[c,d]");

  CHECK_THROWS_AS(
      repetitivity_scan(ambient, required, 2, 0, /*strict=*/true, "defect"),
      InsufficientAmbient);
}

TEST_CASE("ambient too small for the occurrence floor") {
  auto g = make_grigorchuk();
  CHECK_THROWS_AS(repetitivity(g, 8, 5), InsufficientAmbient);
}

TEST_CASE("linear repetitivity hypotheses hold for the built-ins") {
  auto grig = check_linrep_hypotheses(make_grigorchuk(), 2, 8);
  CHECK(grig.pass);
  CHECK(grig.max_x_factors == 2);
  CHECK(grig.named_count == 1);
  CHECK(grig.witness_k >= 1);
  CHECK(grig.witness_k <= 3);

  auto ghat = check_linrep_hypotheses(make_ghat(), 2, 8);
  CHECK(ghat.pass);
  CHECK(ghat.max_x_factors == 2);
  CHECK(ghat.max_parts <= 3);
  CHECK(ghat.named_count == 2);

  auto fib = check_linrep_hypotheses(make_fibonacci(), 2, 8);
  CHECK(fib.pass);  // the pair state makes every rule one-generation

  auto galpha = check_linrep_hypotheses(make_galpha(AlphaSequence::all_sigma()), 1, 6);
  CHECK(galpha.pass);
}

TEST_CASE("a rule skipping the previous generation fails condition (1)") {
  std::string config = R"(
alphabet a b c d
start 0
init P [a]
connector e1 [b,c]
connector e2 [c,d]
rule P : P^2 @e1 P^2
)";
  auto sys = parse_system_config(config);
  auto report = check_linrep_hypotheses(sys, 2, 5);
  CHECK_FALSE(report.pass);
  CHECK(report.failed_condition == 1);
}
