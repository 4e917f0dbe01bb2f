#include "schreier/xi.hpp"

namespace schreier {

XiGraph::XiGraph(Segment ray, int truncation_generation)
    : ray_(std::move(ray)), truncation_generation_(truncation_generation) {
  auto const& a = *ray_.alphabet();
  glue_[0] = -1;
  glue_[1] = a.index_checked("b");
  glue_[2] = a.index_checked("c");
  glue_[3] = a.index_checked("d");
  verify_perfect_labeling();
}

Klein XiGraph::klein_of_symbol(int symbol) const {
  for (Klein k = 1; k <= 3; ++k) {
    if (glue_[k] == symbol) return k;
  }
  return 0;
}

XiVertex XiGraph::act(int symbol, XiVertex v) const {
  if (v.pos == 0) {
    if (ray_.length() > 0 && ray_.set(0).contains(symbol)) return {v.copy, 1};
    Klein k = klein_of_symbol(symbol);
    if (k != 0) return {v.copy ^ k, 0};
    return v;  // loop
  }
  return {v.copy, schreier::act(ray_, symbol, v.pos)};
}

XiVertex XiGraph::apply(Word const& word, XiVertex v) const {
  if (v.pos + static_cast<int>(word.size()) >= static_cast<int>(ray_.length())) {
    throw BoundaryUndecidable("vertex within word length of the xi truncation");
  }
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    v = act(*it, v);
  }
  return v;
}

void XiGraph::verify_perfect_labeling() const {
  auto const& a = *ray_.alphabet();
  // Glue vertex: the first ray set, three glue edges, loops for the rest.
  for (Klein k = 1; k <= 3; ++k) {
    if (ray_.length() > 0 && ray_.set(0).contains(glue_[k])) {
      throw PerfectLabelingViolation(
          "glue label " + a.name(glue_[k]) + " also labels the first ray edge", 0);
    }
  }
  // Interior ray vertices are perfectly labeled by admissibility; walk them
  // anyway and count incidences.
  for (std::size_t p = 0; p + 1 < ray_.vertex_count() - 1; ++p) {
    for (int s = 0; s < a.size(); ++s) {
      int incidences = 0;
      if (p > 0 && ray_.set(p - 1).contains(s)) ++incidences;
      if (ray_.set(p).contains(s)) ++incidences;
      if (p == 0 && klein_of_symbol(s) != 0) ++incidences;
      if (incidences > 1) {
        throw PerfectLabelingViolation(
            "symbol " + a.name(s) + " doubled at vertex " + std::to_string(p),
            static_cast<int>(p));
      }
    }
  }
}

XiGraph build_xi(SubstitutionSystem const& system, int N) {
  if (N < 2) throw Error("build_xi wants N >= 2");
  Segment jn = system.segment("J", N);
  Segment jn1 = system.segment("J", N + 1);
  for (std::size_t i = 0; i < jn.length(); ++i) {
    if (jn1.set(i) != jn.set(i)) {
      throw Error("J chain is not prefix-nested; xi gluing undefined");
    }
  }
  return XiGraph(std::move(jn), N);
}

}  // namespace schreier
