#ifndef SCHREIER_GRAPH_HPP_
#define SCHREIER_GRAPH_HPP_

#include <string>
#include <vector>

#include "segment.hpp"

namespace schreier {

// Words over the alphabet, stored as symbol indices. Every generator is an
// involution, so a word's inverse is its reversal.
using Word = std::vector<int>;

// Splits on whitespace when present, otherwise greedy longest-match
// tokenization against the alphabet's symbol names.
Word parse_word(Alphabet const& a, std::string const& text);

std::string word_str(Alphabet const& a, Word const& w);

Word reversed_word(Word w);
Word concat_words(Word const& u, Word const& v);
// u v u^-1 v^-1 written with involutive inverses.
Word commutator(Word const& u, Word const& v);
// v u v^-1: u conjugated by v.
Word conjugate(Word const& u, Word const& v);
Word power(Word const& u, int k);

// Action of one symbol at a vertex of the linear graph of a finite segment.
// Vertices are 0..length(); vertex p sits between set p-1 and set p. Throws
// BoundaryUndecidable when the needed set lies outside the truncation.
int act(Segment const& s, int symbol, int pos);

// Left action of a word: letters applied right to left. May throw
// BoundaryUndecidable.
int apply_word_at(Segment const& s, Word const& w, int pos);

// A finite truncation of a subshift element, with a marked origin vertex.
class LinearGraph {
 public:
  explicit LinearGraph(Segment backing, long origin_offset = 0)
      : backing_(std::move(backing)), origin_(origin_offset) {}

  Segment const& backing() const { return backing_; }
  long origin_offset() const { return origin_; }
  std::size_t vertex_count() const { return backing_.vertex_count(); }

  int act(int symbol, int pos) const { return schreier::act(backing_, symbol, pos); }
  int apply(Word const& w, int pos) const { return apply_word_at(backing_, w, pos); }

  // Symbols absent from both incident sets; interior vertices only.
  std::vector<int> loops_at(int pos) const;

 private:
  Segment backing_;
  long origin_;
};

// A rooted radius-R ball in a linear graph: exactly 2R consecutive label
// sets with the center vertex between set R-1 and set R. Rooted-ball
// isomorphism of linear graphs reduces to equality of the set lists.
class Window {
 public:
  explicit Window(Segment sets);

  int radius() const { return static_cast<int>(sets_.length()) / 2; }
  Segment const& sets() const { return sets_; }
  int center() const { return radius(); }

  // Signed offset of the center's image under the word. A word of length
  // <= R never consults sets outside the window. Throws WordTooLong.
  int apply(Word const& w) const;

  Window reversed() const { return Window(sets_.reversed()); }

  bool operator==(Window const& o) const { return sets_ == o.sets_; }
  bool operator<(Window const& o) const { return sets_ < o.sets_; }

 private:
  Segment sets_;
};

}  // namespace schreier

#endif
