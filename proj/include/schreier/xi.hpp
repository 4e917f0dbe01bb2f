#ifndef SCHREIER_XI_HPP_
#define SCHREIER_XI_HPP_

#include "graph.hpp"
#include "substitution.hpp"

namespace schreier {

// Klein four-group element as two bits: 0 = 1, 1 = b, 2 = c, 3 = d;
// the product is xor.
using Klein = int;

struct XiVertex {
  Klein copy = 0;
  int pos = 0;
  bool operator==(XiVertex const& o) const { return copy == o.copy && pos == o.pos; }
};

// Four truncated copies of the right-infinite chain J_N glued at the end
// shared by all J_n (the left end under the prefix embedding J_n into
// J_{n+1}), with glue edges labeled b, c, d forming the Klein Cayley graph
// on the four glue vertices.
class XiGraph {
 public:
  XiGraph(Segment ray, int truncation_generation);

  Segment const& ray() const { return ray_; }
  int truncation_generation() const { return truncation_generation_; }
  std::size_t vertices_per_copy() const { return ray_.vertex_count(); }

  // Symbol ids of b, c, d in the ray's alphabet, indexed by Klein element.
  int glue_symbol(Klein k) const { return glue_[k]; }
  Klein klein_of_symbol(int symbol) const;  // 0 when not a glue label

  XiVertex act(int symbol, XiVertex v) const;
  // Letters applied right to left; the vertex must be further than |word|
  // from the truncation boundary.
  XiVertex apply(Word const& word, XiVertex v) const;

  // Every symbol exactly once per vertex, checked everywhere but the four
  // truncated ends. Throws PerfectLabelingViolation.
  void verify_perfect_labeling() const;

 private:
  Segment ray_;
  int truncation_generation_;
  int glue_[4];  // glue_[0] unused
};

// N >= 2; the system must expose a J-chain whose generations are prefixes
// of one another (asserted).
XiGraph build_xi(SubstitutionSystem const& system, int N);

}  // namespace schreier

#endif
