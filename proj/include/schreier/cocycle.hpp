#ifndef SCHREIER_COCYCLE_HPP_
#define SCHREIER_COCYCLE_HPP_

#include "xi.hpp"

namespace schreier {

// Element of the junction-crossing target group. Bit 0 records an
// x-junction crossing, bit 1 a y-junction crossing, bits 2-3 the Klein
// branch element: rank four over Z/2 in total. The Klein-only systems use
// just the upper two bits.
struct K4 {
  uint8_t v = 0;

  K4 operator*(K4 o) const { return K4{static_cast<uint8_t>(v ^ o.v)}; }
  bool trivial() const { return v == 0; }
  bool operator==(K4 const& o) const { return v == o.v; }
  bool operator!=(K4 const& o) const { return v != o.v; }

  static K4 x() { return K4{1}; }
  static K4 y() { return K4{2}; }
  static K4 klein(Klein k) { return K4{static_cast<uint8_t>(k << 2)}; }

  std::string str() const;
};

enum class JunctionKind { Xi, XJunction, YJunction };

// Junction-crossing record of a word near one junction: values for every
// ray vertex within the working radius, the fringe beyond spot-checked
// trivial.
struct CocycleEvaluation {
  JunctionKind kind = JunctionKind::Xi;
  int working_radius = 0;
  int truncation_generation = 0;
  std::vector<std::pair<int, K4>> support;  // ray position -> nontrivial value
  K4 product;
  bool fringe_clear = false;
  int fringe_depth = 0;
};

// working_radius < 0 picks |word| + 8.
CocycleEvaluation tau(SubstitutionSystem const& system, Word const& word,
                      JunctionKind kind, int working_radius = -1);

// Vertexwise product of the junction records. Klein component for the
// b,c,d systems; the full rank-four value when x and y exist.
K4 phi(SubstitutionSystem const& system, Word const& word);

bool system_has_xy(SubstitutionSystem const& system);

}  // namespace schreier

#endif
