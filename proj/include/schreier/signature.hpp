#ifndef SCHREIER_SIGNATURE_HPP_
#define SCHREIER_SIGNATURE_HPP_

#include <cstdint>
#include <vector>

#include "universe.hpp"

namespace schreier {

// The action signature of a word across a window universe: the signed offset
// of each window's center image. Two words of length <= R have equal
// signatures exactly when they define the same element of the group defined
// by the subshift.
struct ElementSignature {
  int radius = 0;
  std::vector<int16_t> offsets;  // aligned with the universe's window order

  bool operator==(ElementSignature const& o) const {
    return radius == o.radius && offsets == o.offsets;
  }
  bool is_identity() const {
    for (auto v : offsets) {
      if (v != 0) return false;
    }
    return true;
  }
};

// Throws WordTooLong when |word| > universe radius.
ElementSignature signature(Word const& word, WindowUniverse const& universe);

bool equal_words(Word const& w1, Word const& w2, WindowUniverse const& universe);

// 128-bit digest used for BFS deduplication; full vectors confirm on
// collision.
struct Digest128 {
  uint64_t a = 0, b = 0;
  bool operator==(Digest128 const& o) const { return a == o.a && b == o.b; }
  bool operator<(Digest128 const& o) const { return a != o.a ? a < o.a : b < o.b; }
};

Digest128 digest_positions(std::vector<uint16_t> const& positions);

}  // namespace schreier

#endif
