#ifndef SCHREIER_RESTRICT_HPP_
#define SCHREIER_RESTRICT_HPP_

#include "graph.hpp"
#include "perm.hpp"

namespace schreier {

struct Restriction {
  bool invariant = false;
  Perm perm;          // induced permutation of the span, relative indices
  long witness = -1;  // ambient vertex moved out of the span, when not invariant
};

// Action of a word on the vertex range [first_vertex, last_vertex] of a
// finite segment. The span must sit further than |word| from the truncation
// boundary (BoundaryTooClose otherwise).
Restriction restrict_word(Segment const& ambient, Word const& word,
                          std::size_t first_vertex, std::size_t last_vertex);

}  // namespace schreier

#endif
