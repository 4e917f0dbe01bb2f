#ifndef SCHREIER_ORDERS_HPP_
#define SCHREIER_ORDERS_HPP_

#include "signature.hpp"

namespace schreier {

struct OrderResult {
  bool determined = false;
  uint64_t order = 0;      // when determined
  uint64_t order_cap = 0;
  int radius_used = 0;

  std::string str() const {
    return determined ? std::to_string(order)
                      : "undetermined(cap=" + std::to_string(order_cap) + ")";
  }
};

// Smallest t with word^t trivial, found by walking each window center's
// trajectory and taking the lcm of the return times; the universe radius
// doubles until every trajectory closes or a budget is hit. Radii are in
// label sets.
OrderResult element_order(UniverseCache& cache, Word const& word,
                          uint64_t order_cap = uint64_t{1} << 16,
                          int radius_budget = 4096);

}  // namespace schreier

#endif
