#ifndef SCHREIER_REPETITIVITY_HPP_
#define SCHREIER_REPETITIVITY_HPP_

#include "universe.hpp"

namespace schreier {

// All distinct length-L subwords of the subshift, found by the same
// stabilization loop the window universe uses.
struct SubwordSet {
  std::vector<Segment> items;  // sorted
  int stabilized_at = -1;
  bool reversal_closed_naturally = false;
};

SubwordSet stable_subwords(SubstitutionSystem const& system, std::size_t length,
                           int span = 2, int generation_cap = 24);

struct GapReport {
  std::string system_id;
  int max_window_length = 0;
  int ambient_generation = -1;  // -1 for raw-segment scans
  std::size_t ambient_length = 0;
  // Index n-1 holds the data for window length n.
  std::vector<long> max_gap;
  std::vector<int> min_occurrences;
  double fitted_L = 0;  // max over n of C_n / n
  double bound = 0;     // supplied; <= 0 means "report only"
  std::vector<std::string> unbounded;  // windows with too few occurrences
  bool monotone = true;                // C_n non-decreasing sanity
  bool pass = false;
};

// Gap statistics of every required window against one ambient segment.
// strict: any required window with fewer than 3 occurrences (in either
// orientation) raises InsufficientAmbient; otherwise such windows are
// flagged as unbounded and fail the report.
GapReport repetitivity_scan(Segment const& ambient,
                            std::vector<std::vector<Segment>> const& required_per_length,
                            int max_window_length, double bound, bool strict,
                            std::string id);

// System mode: required windows are the stabilized subword sets, the
// ambient is the longest named segment of the given generation.
GapReport repetitivity(SubstitutionSystem const& system, int max_window_length,
                       int ambient_generation, double bound = 0);

}  // namespace schreier

#endif
