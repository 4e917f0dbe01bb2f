#include "schreier/orders.hpp"

#include <numeric>

namespace schreier {

OrderResult element_order(UniverseCache& cache, Word const& word, uint64_t order_cap,
                          int radius_budget) {
  if (word.empty()) throw Error("element order of the empty word is 1; pass a word");
  int const wlen = static_cast<int>(word.size());
  int radius = 8;
  while (radius < 4 * wlen) radius *= 2;

  OrderResult result;
  result.order_cap = order_cap;
  for (;; radius *= 2) {
    if (radius > radius_budget) {
      result.radius_used = radius / 2;
      return result;  // undetermined
    }
    auto const& u = cache.at_radius(radius);
    int const center = radius;
    uint64_t const t_budget =
        std::min<uint64_t>(order_cap, static_cast<uint64_t>(radius / wlen));
    uint64_t lcm = 1;
    bool all_returned = true;
    for (auto const& w : u.windows) {
      int pos = center;
      uint64_t ret = 0;
      for (uint64_t t = 1; t <= t_budget; ++t) {
        pos = apply_word_at(w, word, pos);
        if (pos == center) {
          ret = t;
          break;
        }
      }
      if (ret == 0) {
        all_returned = false;
        break;
      }
      lcm = std::lcm(lcm, ret);
      if (lcm > order_cap) {
        result.radius_used = radius;
        return result;  // beyond the order cap
      }
    }
    if (all_returned) {
      result.determined = true;
      result.order = lcm;
      result.radius_used = radius;
      return result;
    }
  }
}

}  // namespace schreier
