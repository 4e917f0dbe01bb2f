#ifndef SCHREIER_UNIVERSE_HPP_
#define SCHREIER_UNIVERSE_HPP_

#include <map>
#include <string>
#include <vector>

#include "graph.hpp"
#include "substitution.hpp"

namespace schreier {

// The finite set of radius-R rooted windows occurring in a subshift: the
// ground set of the element-equality oracle.
struct WindowUniverse {
  std::string system_id;
  AlphabetPtr alphabet;
  int radius = 0;
  std::vector<Segment> windows;  // sorted set lists of length 2R, deduplicated
  int stabilized_at = -1;        // generation where extraction stabilized
  int span = 0;                  // consecutive agreeing generations required
  // Whether the raw subword set already equaled its reversal closure.
  bool reversal_closed_naturally = false;

  std::size_t size() const { return windows.size(); }

  // Index of a window in the sorted list, or -1.
  int index_of(Segment const& w) const;

  // One window per line, sorted; "radius R" header line first.
  std::string export_text() const;
  static WindowUniverse import_text(AlphabetPtr const& alphabet, std::string const& text);
};

// Enumerates length-2R subwords of successive generations until the set is
// identical for `span` consecutive generations; records the stabilization
// generation. The K-fold agreement is a finite certificate, backed for the
// built-in systems by the repetitivity checks in the analysis module.
// Throws NoStabilization when the generation cap (or an internal segment
// length budget) is hit.
WindowUniverse window_universe(SubstitutionSystem const& system, int radius,
                               int span = 2, int generation_cap = 24);

// Universe read off one explicit long segment (random Markov lines,
// hand-built examples). No stabilization claim is made.
WindowUniverse universe_from_segment(Segment const& ambient, int radius,
                                     std::string id);

// Central restriction to a smaller radius.
WindowUniverse restrict_universe(WindowUniverse const& u, int radius);

// Memoizes universes of one system keyed by radius.
class UniverseCache {
 public:
  explicit UniverseCache(SubstitutionSystem const& system) : system_(&system) {}

  WindowUniverse const& at_radius(int radius, int span = 2, int generation_cap = 24);

  SubstitutionSystem const& system() const { return *system_; }

 private:
  SubstitutionSystem const* system_;
  std::map<int, WindowUniverse> memo_;
};

}  // namespace schreier

#endif
