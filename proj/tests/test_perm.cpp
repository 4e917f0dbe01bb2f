#include <doctest.h>

#include <set>

#include "schreier/perm_group.hpp"

using namespace schreier;

namespace {

// Independent oracle: full closure by multiplication.
std::size_t closure_size(std::vector<Perm> const& gens, int degree,
                         std::size_t cap = 200000) {
  std::set<Perm> seen;
  std::vector<Perm> frontier{Perm(degree)};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (auto const& p : frontier) {
      for (auto const& g : gens) {
        Perm q = g * p;
        if (seen.insert(q).second) {
          next.push_back(q);
          if (seen.size() > cap) throw Error("closure cap");
        }
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

Perm cycle(int degree, std::vector<int> const& points) {
  std::vector<int> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = i;
  for (std::size_t i = 0; i < points.size(); ++i) {
    img[points[i]] = points[(i + 1) % points.size()];
  }
  return Perm(img);
}

}  // namespace

TEST_CASE("permutation basics") {
  Perm p = cycle(4, {0, 1});
  CHECK(p.parity() == 1);
  CHECK(p.str() == "(0 1)");
  CHECK((p * p).is_identity());
  Perm q = cycle(4, {1, 2, 3});
  CHECK(q.parity() == 0);
  CHECK(q.inverse() * q == Perm(4));
  // (p*q)(x) = p(q(x)).
  CHECK((p * q)[1] == p[q[1]]);
  CHECK_THROWS_AS(Perm(std::vector<int>{0, 0}), Error);
}

TEST_CASE("stabilizer chain orders match closure on small groups") {
  CHECK(group_order({cycle(2, {0, 1})}, 2) == 2);
  CHECK(group_order({cycle(3, {0, 1}), cycle(3, {0, 1, 2})}, 3) == 6);
  CHECK(group_order({cycle(4, {0, 1, 2}), cycle(4, {0, 1, 3})}, 4) == 12);
  CHECK(group_order({}, 5) == 1);

  std::vector<Perm> s8 = {cycle(8, {0, 1}), cycle(8, {0, 1, 2, 3, 4, 5, 6, 7})};
  CHECK(group_order(s8, 8) == 40320);
  CHECK(closure_size(s8, 8) == 40320);

  std::vector<Perm> a12 = {cycle(12, {0, 1, 2}),
                           cycle(12, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}) *
                               cycle(12, {0, 1})};
  // <3-cycle, even 11-support> generates a subgroup of A12; spot value.
  BigInt ord = group_order(a12, 12);
  CHECK(ord > 1);
  CHECK(factorial(12) % ord == 0);
}

TEST_CASE("alternating groups come out exactly") {
  std::vector<Perm> gens;
  for (int i = 0; i + 2 < 12; ++i) gens.push_back(cycle(12, {i, i + 1, i + 2}));
  CHECK(group_order(gens, 12) == factorial(12) / 2);
}

TEST_CASE("membership through the chain") {
  StabilizerChain chain(4);
  chain.extend(cycle(4, {0, 1, 2}));
  chain.extend(cycle(4, {0, 1, 3}));
  CHECK(chain.order() == 12);
  CHECK(chain.contains(cycle(4, {0, 1, 2})));
  CHECK_FALSE(chain.contains(cycle(4, {0, 1})));  // odd
}

TEST_CASE("classification compares against the full and half factorials") {
  CHECK(classify_on_support({cycle(2, {0, 1})}, 2).cls == GroupClass::Symmetric);
  CHECK(classify_on_support({}, 3).cls == GroupClass::Trivial);
  std::vector<Perm> threes;
  for (int i = 0; i + 2 < 4; ++i) threes.push_back(cycle(4, {i, i + 1, i + 2}));
  auto c = classify_on_support(threes, 4);
  CHECK(c.cls == GroupClass::Alternating);
  CHECK(c.order == 12);
  auto other = classify_on_support({cycle(4, {0, 1}), cycle(4, {2, 3})}, 4);
  CHECK(other.cls == GroupClass::Other);
  CHECK(other.order == 4);
}
