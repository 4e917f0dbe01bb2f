#ifndef SCHREIER_SEGMENT_HPP_
#define SCHREIER_SEGMENT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "alphabet.hpp"

namespace schreier {

// A finite admissible sequence of label sets over one alphabet: consecutive
// sets are disjoint. A segment of length L is a linear graph on L+1 vertices;
// a single-vertex segment has an empty set list.
class Segment {
 public:
  explicit Segment(AlphabetPtr alphabet, std::vector<LabelSet> sets = {});

  AlphabetPtr const& alphabet() const { return alphabet_; }

  // Number of label sets (edges along the line). Vertices = length() + 1.
  std::size_t length() const { return sets_.size(); }
  std::size_t vertex_count() const { return sets_.size() + 1; }
  bool empty() const { return sets_.empty(); }

  LabelSet const& set(std::size_t i) const { return sets_.at(i); }
  std::vector<LabelSet> const& sets() const { return sets_; }

  Segment reversed() const;

  Segment subsegment(std::size_t from, std::size_t count) const;

  // One bracketed token per set, members sorted by alphabet order,
  // e.g. "[a2][b,c][a0]". The empty segment serializes as "[]".
  std::string str() const;

  static Segment parse(AlphabetPtr const& alphabet, std::string const& text);

  bool operator==(Segment const& o) const { return sets_ == o.sets_; }
  bool operator!=(Segment const& o) const { return !(*this == o); }
  bool operator<(Segment const& o) const { return sets_ < o.sets_; }

 private:
  AlphabetPtr alphabet_;
  std::vector<LabelSet> sets_;
};

// left ++ connector ++ right, admissibility verified at both junctions.
Segment concat(Segment const& left, Segment const& connector, Segment const& right);

// Plain two-part concatenation.
Segment concat(Segment const& left, Segment const& right);

Segment reverse(Segment const& s);

// Occurrence of a pattern segment inside an ambient one.
struct CopyMatch {
  std::size_t offset;   // index of the first set of the copy
  bool reversed;        // matched against the reversed pattern
  std::size_t length;   // pattern length in sets
  std::size_t first_vertex() const { return offset; }
  std::size_t last_vertex() const { return offset + length; }
};

// All occurrences of `pattern` (and of its reversal) in `ambient`.
// Matches of the two orientations at the same offset are merged. Asserts
// that distinct matches do not overlap: the substitution systems here have
// unique factorizations and an overlap signals a mis-specified pattern.
std::vector<CopyMatch> find_copies(Segment const& ambient, Segment const& pattern);

}  // namespace schreier

#endif
