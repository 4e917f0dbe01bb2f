#include "schreier/restrict.hpp"

namespace schreier {

Restriction restrict_word(Segment const& ambient, Word const& word,
                          std::size_t first_vertex, std::size_t last_vertex) {
  if (first_vertex > last_vertex || last_vertex > ambient.length()) {
    throw Error("bad span");
  }
  std::size_t const n = last_vertex - first_vertex + 1;
  Restriction r;
  if (word.empty()) {
    r.invariant = true;
    r.perm = Perm(static_cast<int>(n));
    return r;
  }
  if (first_vertex <= word.size() || last_vertex + word.size() >= ambient.length()) {
    throw BoundaryTooClose("span within " + std::to_string(word.size())
                           + " of the truncation boundary");
  }
  std::vector<int> images(n);
  for (std::size_t v = first_vertex; v <= last_vertex; ++v) {
    int img = apply_word_at(ambient, word, static_cast<int>(v));
    if (img < static_cast<int>(first_vertex) || img > static_cast<int>(last_vertex)) {
      r.invariant = false;
      r.witness = static_cast<long>(v);
      return r;
    }
    images[v - first_vertex] = img - static_cast<int>(first_vertex);
  }
  r.invariant = true;
  r.perm = Perm(std::move(images));
  return r;
}

}  // namespace schreier
