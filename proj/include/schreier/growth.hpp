#ifndef SCHREIER_GROWTH_HPP_
#define SCHREIER_GROWTH_HPP_

#include "signature.hpp"

namespace schreier {

struct GrowthTable {
  std::string system_id;
  int radius = 0;
  int universe_generation = -1;
  std::vector<uint64_t> values;  // values[n] = gamma(n), elements of length <= n
  bool capped = false;
  uint64_t element_cap = 0;

  // "n<TAB>gamma" lines.
  std::string tsv() const;
};

// The canonical ball automaton: element classes numbered in breadth-first
// discovery order (layer by layer, parents in id order, generators in
// alphabet order), with the generator transition table. Two systems whose
// universes induce the same quotient produce identical automata.
struct BallAutomaton {
  int radius = 0;
  std::vector<int> first_length;           // class -> discovery length
  std::vector<std::vector<int32_t>> next;  // class -> per-generator class, -1 unknown
  std::vector<uint64_t> gamma;             // cumulative counts per length
  bool capped = false;

  bool operator==(BallAutomaton const& o) const {
    return radius == o.radius && first_length == o.first_length && next == o.next
           && gamma == o.gamma;
  }
};

BallAutomaton ball_automaton(WindowUniverse const& universe, int n_max,
                             uint64_t element_cap = 4'000'000);

GrowthTable growth_on_universe(WindowUniverse const& universe, int n_max,
                               uint64_t element_cap = 4'000'000);

// Breadth-first enumeration of words deduplicated by signature at one
// universe of radius max(n_max, radius).
GrowthTable growth(SubstitutionSystem const& system, int n_max, int radius = -1,
                   uint64_t element_cap = 4'000'000);

}  // namespace schreier

#endif
