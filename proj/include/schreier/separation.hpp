#ifndef SCHREIER_SEPARATION_HPP_
#define SCHREIER_SEPARATION_HPP_

#include "growth.hpp"

namespace schreier {

// Exponential lower-bound certificate: a word placed in the alpha sequence
// makes the level-(k+1) segment contain the chained copies Z_v, and the
// products g_v = t_n g ... t_1 g are pairwise distinct. M = |I_k| + 1, so
// the certified bound is gamma(n M) >= 2^n for n <= N.
struct SeparationReport {
  std::string system_id;
  int k = 0;     // length of the alpha prefix
  int M = 0;     // |I_k| + 1
  int N = 0;
  std::string superword;
  int element_count = 0;
  int signature_radius = 0;
  bool distinct = false;
  std::string failure;  // first colliding pair, when any
  std::vector<std::pair<int, uint64_t>> bounds;  // (n*M, 2^n) certified lines
  bool pass = false;
};

SeparationReport separation_experiment(AlphaSequence const& prefix, int N);

// Radius-R agreement of two alpha systems: window universes compared as
// sets, then the canonical ball automata. The first disagreement radius is
// the smallest R' where the universes already differ.
struct BallAgreementReport {
  std::string id1, id2;
  int radius = 0;
  bool universes_equal = false;
  bool automata_equal = false;
  bool agree = false;
  int first_disagreement = -1;  // -1 when agreeing everywhere up to radius
  std::vector<uint64_t> gamma1, gamma2;
};

BallAgreementReport ball_agreement(AlphaSequence const& a1, AlphaSequence const& a2,
                                   int radius);

}  // namespace schreier

#endif
