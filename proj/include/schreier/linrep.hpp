#ifndef SCHREIER_LINREP_HPP_
#define SCHREIER_LINREP_HPP_

#include "substitution.hpp"

namespace schreier {

// Hypothesis report for the linear-repetitivity criterion, with connectors
// folded into the generation sets. Condition (1): every next-generation
// segment is a concatenation of current-generation segments and connectors
// (one-generation lookback only). Condition (2): every adjacent factor pair
// occurring in the subshift recurs inside a segment k generations up, k
// found by search. Condition (3): the factor counts and set sizes on the
// tested range, reported.
struct LinrepReport {
  std::string system_id;
  int n_from = 0, n_to = 0;
  bool pass = false;
  int failed_condition = 0;  // 1 or 2 when failing
  std::string witness;
  int max_x_factors = 0;  // segment factors per rule, connectors excluded
  int max_parts = 0;      // connectors included
  int named_count = 0;
  int connector_count = 0;  // distinct connector segments used on the range
  int witness_k = 0;        // condition (2)
  int pair_count = 0;
};

LinrepReport check_linrep_hypotheses(SubstitutionSystem const& system, int n_from,
                                     int n_to, int k_cap = 6, int expand_depth = 4);

}  // namespace schreier

#endif
