#ifndef SCHREIER_GRIG_TREE_HPP_
#define SCHREIER_GRIG_TREE_HPP_

#include "perm.hpp"
#include "segment.hpp"

namespace schreier {

// The recursive action of a, b, c, d on finite binary words. Every
// generator fixes the empty word; that is the unique convention under which
// the recursion is well defined on finite words. Used as an independent
// oracle against the window-signature engine.
std::string tree_act(char gen, std::string const& w);

// Left action of a word over {a,b,c,d}: letters applied right to left.
std::string tree_act_word(std::string const& word, std::string const& w);

// The permutation induced on {0,1}^k; leaves indexed with the first letter
// as the most significant bit.
Perm tree_level_perm(std::string const& word, int k);

// Order of the induced permutation on level k (lcm of cycle lengths).
uint64_t tree_level_order(std::string const& word, int k);

// Element order read off deep levels: levels level_lo..level_hi must agree
// on the lcm, else 0 (not stabilized).
uint64_t tree_order(std::string const& word, int level_lo, int level_hi);

// The generation-n segment with every vertex labeled by a binary word of
// length n; left endpoint 1^n, right endpoint 1^(n-1)0.
struct LabeledSegment {
  Segment segment;
  std::vector<std::string> labels;  // one per vertex
};

LabeledSegment label_segment(int n);

struct CrossCheckReport {
  int n = 0;
  bool pass = false;
  long edge_checks = 0;
  long loop_checks = 0;
  std::string mismatch;  // first failing edge/generator, when any
};

// Replays every edge and loop of the labeled segment through the tree
// action: an edge u -s- v demands tree_act(s, label(u)) == label(v).
CrossCheckReport grig_cross_check(int n);

}  // namespace schreier

#endif
