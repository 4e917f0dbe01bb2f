#ifndef SCHREIER_HN_VERIFY_HPP_
#define SCHREIER_HN_VERIFY_HPP_

#include <optional>

#include "perm_group.hpp"
#include "restrict.hpp"
#include "substitution.hpp"

namespace schreier {

// Desk-scale membership certification for the level-n block subgroup: a word
// certifies when it leaves every located copy of J_n invariant, leaves both
// halves of every copy of I_n invariant, and induces the same permutation on
// all copies under the canonical copy isomorphisms. Certified words yield a
// pair (action on J_n, action on the J_{n-1} half of I_n).
class HnSession {
 public:
  // ambient_generation < 0 picks the smallest workable generation.
  HnSession(SubstitutionSystem const& system, int n, int ambient_generation = -1);

  std::optional<std::pair<Perm, Perm>> certify(Word const& word) const;

  int level() const { return n_; }
  int ambient_generation() const { return ambient_generation_; }
  int jn_vertices() const { return static_cast<int>(jn_.vertex_count()); }
  int jprev_vertices() const { return static_cast<int>(jprev_.vertex_count()); }
  std::size_t margin() const { return margin_; }
  int j_copy_count() const { return static_cast<int>(jcopies_.size()); }
  int i_copy_count() const { return static_cast<int>(icopies_.size()); }

 private:
  SubstitutionSystem const* system_;
  int n_;
  int ambient_generation_;
  Segment ambient_;
  Segment jn_, in_, jprev_;
  std::size_t half_len_;
  std::vector<CopyMatch> jcopies_, icopies_;
  std::size_t margin_;
};

struct HnReport {
  std::string system_id;
  int n = 0;
  int ambient_generation = 0;
  int jn_vertices = 0, jprev_vertices = 0;
  Classification jn_class, jprev_class;
  int certified = 0;
  int candidates = 0;
  int rounds = 0;
  bool expect_full_symmetric = true;
  bool pass = false;
  std::vector<std::string> witnesses;  // sample certified words
  // word -> induced J_n permutation in cycle notation
  std::vector<std::pair<std::string, std::string>> witness_perms;
};

// Builds the witness words of the block-subgroup argument (base generators,
// their commutators with the spreading generators, conjugates, products),
// certifies each, and classifies the two projection groups.
HnReport verify_Hn(SubstitutionSystem const& system, int n,
                   int ambient_generation = -1, int round_cap = 5);

struct ParityRow {
  std::string word;
  int k1 = 0, k2 = 0;    // parities at level n
  int k1n = 0, k2n = 0;  // parities at level n+1
  bool ok = false;       // (k1n, k2n) == (k1, k1)
};

struct ParityReport {
  std::string system_id;
  int n = 0;
  bool pass = false;
  std::vector<ParityRow> rows;
};

// Re-embeds level-n certified elements at level n+1 and checks the parity
// transition (k1, k2) -> (k1, k1): the half-copy action is duplicated, so
// only the first coordinate survives.
ParityReport parity_embedding_check(SubstitutionSystem const& system, int n,
                                    int sample_cap = 10);

}  // namespace schreier

#endif
