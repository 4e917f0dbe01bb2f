#include "schreier/grig_tree.hpp"

#include <numeric>

#include "schreier/substitution.hpp"

namespace schreier {

std::string tree_act(char gen, std::string const& w) {
  if (w.empty()) return w;
  switch (gen) {
    case 'a':
      return (w[0] == '0' ? "1" : "0") + w.substr(1);
    case 'b':
      if (w[0] == '0') return "0" + tree_act('a', w.substr(1));
      return "1" + tree_act('c', w.substr(1));
    case 'c':
      if (w[0] == '0') return "0" + tree_act('a', w.substr(1));
      return "1" + tree_act('d', w.substr(1));
    case 'd':
      if (w[0] == '0') return w;
      return "1" + tree_act('b', w.substr(1));
    default:
      throw Error(std::string("unknown generator: ") + gen);
  }
}

std::string tree_act_word(std::string const& word, std::string const& w) {
  std::string out = w;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    out = tree_act(*it, out);
  }
  return out;
}

namespace {

std::string leaf_to_word(int leaf, int k) {
  std::string w(k, '0');
  for (int i = 0; i < k; ++i) {
    if ((leaf >> (k - 1 - i)) & 1) w[i] = '1';
  }
  return w;
}

int word_to_leaf(std::string const& w) {
  int v = 0;
  for (char c : w) v = (v << 1) | (c == '1');
  return v;
}

}  // namespace

Perm tree_level_perm(std::string const& word, int k) {
  std::vector<int> images(std::size_t{1} << k);
  for (int leaf = 0; leaf < (1 << k); ++leaf) {
    images[leaf] = word_to_leaf(tree_act_word(word, leaf_to_word(leaf, k)));
  }
  return Perm(std::move(images));
}

uint64_t tree_level_order(std::string const& word, int k) {
  Perm p = tree_level_perm(word, k);
  uint64_t out = 1;
  for (auto const& c : p.cycles()) {
    out = std::lcm<uint64_t>(out, c.size());
  }
  return out;
}

uint64_t tree_order(std::string const& word, int level_lo, int level_hi) {
  uint64_t ord = tree_level_order(word, level_lo);
  for (int k = level_lo + 1; k <= level_hi; ++k) {
    if (tree_level_order(word, k) != ord) return 0;
  }
  return ord;
}

LabeledSegment label_segment(int n) {
  if (n < 1) throw Error("label_segment wants n >= 1");
  auto system = make_grigorchuk();
  auto const& alphabet = system.alphabet();
  LabeledSegment cur{Segment(alphabet, {LabelSet::of(*alphabet, {"a"})}), {"1", "0"}};
  for (int g = 2; g <= n; ++g) {
    // I_g = (I_{g-1} with 1 appended) e_{g-1} (I_{g-1} with 0 appended)^-1
    Segment e = system.connector(((g + 1) % 3 + 3) % 3);
    LabeledSegment next{concat(cur.segment, e, cur.segment.reversed()), {}};
    next.labels.reserve(2 * cur.labels.size());
    for (auto const& l : cur.labels) next.labels.push_back(l + "1");
    for (auto it = cur.labels.rbegin(); it != cur.labels.rend(); ++it) {
      next.labels.push_back(*it + "0");
    }
    cur = std::move(next);
  }
  return cur;
}

CrossCheckReport grig_cross_check(int n) {
  CrossCheckReport report;
  report.n = n;
  auto ls = label_segment(n);
  auto const& alphabet = *ls.segment.alphabet();
  auto fail = [&](std::string msg) {
    report.pass = false;
    report.mismatch = std::move(msg);
    return report;
  };
  for (std::size_t i = 0; i < ls.segment.length(); ++i) {
    for (int s : ls.segment.set(i).members()) {
      char g = alphabet.name(s)[0];
      if (tree_act(g, ls.labels[i]) != ls.labels[i + 1]
          || tree_act(g, ls.labels[i + 1]) != ls.labels[i]) {
        return fail("edge " + std::to_string(i) + " generator " + alphabet.name(s));
      }
      report.edge_checks += 2;
    }
  }
  for (std::size_t v = 0; v <= ls.segment.length(); ++v) {
    for (int s = 0; s < alphabet.size(); ++s) {
      bool incident = (v > 0 && ls.segment.set(v - 1).contains(s))
                      || (v < ls.segment.length() && ls.segment.set(v).contains(s));
      if (incident) continue;
      char g = alphabet.name(s)[0];
      if (tree_act(g, ls.labels[v]) != ls.labels[v]) {
        return fail("loop at vertex " + std::to_string(v) + " generator "
                    + alphabet.name(s));
      }
      ++report.loop_checks;
    }
  }
  report.pass = true;
  return report;
}

}  // namespace schreier
