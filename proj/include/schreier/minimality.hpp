#ifndef SCHREIER_MINIMALITY_HPP_
#define SCHREIER_MINIMALITY_HPP_

#include <optional>

#include "universe.hpp"

namespace schreier {

// True when `needle` (or its reversal) occurs contiguously in `hay`.
bool contains_copy(Segment const& hay, Segment const& needle);

// Least m in [n, m_cap] such that every generation-m named segment contains
// a copy of every generation-n named segment; empty when the cap is hit.
std::optional<int> minimality_witness(SubstitutionSystem const& system, int n,
                                      int m_cap);

struct SymmetricCenterReport {
  std::string system_id;
  int radius = 0;
  int universe_generation = -1;
  std::string ray_name;
  // center set token -> found in the universe
  std::vector<std::pair<std::string, bool>> centers;
  bool pass = false;
};

// Finite-radius certificate for the three mirror-symmetric sequences with
// centers {c,d}, {b,d}, {b,c}: the universe must contain the palindromic
// window  rev(P_R) e P_{R-1}  built from the common prefix P of the
// system's one-sided limit ray. Requires b, c, d in the alphabet.
SymmetricCenterReport theorem_hypothesis_check(SubstitutionSystem const& system,
                                               int radius);

}  // namespace schreier

#endif
