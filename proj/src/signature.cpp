#include "schreier/signature.hpp"

namespace schreier {

ElementSignature signature(Word const& word, WindowUniverse const& universe) {
  if (static_cast<int>(word.size()) > universe.radius) {
    throw WordTooLong(word.size(), universe.radius);
  }
  ElementSignature sig;
  sig.radius = universe.radius;
  sig.offsets.reserve(universe.windows.size());
  int const center = universe.radius;
  for (auto const& w : universe.windows) {
    sig.offsets.push_back(
        static_cast<int16_t>(apply_word_at(w, word, center) - center));
  }
  return sig;
}

bool equal_words(Word const& w1, Word const& w2, WindowUniverse const& universe) {
  return signature(w1, universe) == signature(w2, universe);
}

Digest128 digest_positions(std::vector<uint16_t> const& positions) {
  // Two independent FNV-1a streams with distinct offsets.
  uint64_t a = 0xcbf29ce484222325ull;
  uint64_t b = 0x9e3779b97f4a7c15ull;
  for (uint16_t p : positions) {
    a = (a ^ p) * 0x100000001b3ull;
    b = (b ^ (p + 0x9e37u)) * 0xc2b2ae3d27d4eb4full;
    b ^= b >> 29;
  }
  return {a, b};
}

}  // namespace schreier
