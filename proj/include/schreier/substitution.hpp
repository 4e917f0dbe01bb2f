#ifndef SCHREIER_SUBSTITUTION_HPP_
#define SCHREIER_SUBSTITUTION_HPP_

#include <deque>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "segment.hpp"

namespace schreier {

// One atom of a production formula: either a named segment of an earlier
// generation (possibly reversed), or a connector. Connectors may be fixed or
// chosen by cycling over a list indexed by the generation being produced.
struct AtomTemplate {
  enum class Kind { Seg, FixedConn, CycleConn };
  Kind kind;
  // Seg
  int name_id = -1;
  bool reversed = false;
  int lookback = 1;  // 1 = previous generation, 2 = two back
  // FixedConn
  int conn_id = -1;
  // CycleConn: connector list[(g + offset) mod size] when producing generation g
  std::vector<int> cycle_ids;
  int cycle_offset = 0;

  static AtomTemplate seg(int name, bool rev = false, int back = 1) {
    AtomTemplate a;
    a.kind = Kind::Seg;
    a.name_id = name;
    a.reversed = rev;
    a.lookback = back;
    return a;
  }
  static AtomTemplate conn(int id) {
    AtomTemplate a;
    a.kind = Kind::FixedConn;
    a.conn_id = id;
    return a;
  }
  static AtomTemplate cycle(std::vector<int> ids, int offset) {
    AtomTemplate a;
    a.kind = Kind::CycleConn;
    a.cycle_ids = std::move(ids);
    a.cycle_offset = offset;
    return a;
  }
};

struct RuleTemplate {
  int output_name_id;
  std::vector<AtomTemplate> atoms;
};

// Entries are either the stationary marker or a nonempty word over {x, y}.
// The tail policy extends the finite entry list to an infinite sequence and
// is part of the value.
struct AlphaSequence {
  struct Entry {
    bool sigma = true;
    std::string word;  // nonempty, over {x, y}, when !sigma
  };
  enum class Tail { Sigma, Cycle };

  std::vector<Entry> entries;
  Tail tail = Tail::Sigma;

  Entry at(std::size_t k) const;
  std::string str() const;

  // "s,s,xy" with 's' (or "sigma") for the marker. Throws InvalidAlpha.
  static AlphaSequence parse(std::string const& text, Tail tail = Tail::Sigma);
  static AlphaSequence all_sigma() { return AlphaSequence{}; }

  void validate() const;
};

// A substitution system: named initial segments, a connector family, and
// per-generation production formulas. Values are immutable after
// construction; generation lists are memoized and safe for concurrent reads.
class SubstitutionSystem {
 public:
  SubstitutionSystem(std::string id, AlphabetPtr alphabet, int first_gen,
                     std::vector<std::string> names, std::vector<Segment> initial,
                     std::vector<std::pair<std::string, Segment>> connectors,
                     std::function<std::vector<RuleTemplate>(int)> rules_for,
                     std::function<Segment(int)> connector_fn = nullptr);

  std::string const& id() const { return id_; }
  AlphabetPtr const& alphabet() const { return alphabet_; }
  int first_generation() const { return first_gen_; }
  std::vector<std::string> const& names() const { return names_; }

  int name_id(std::string const& name) const;

  Segment connector(int id) const;
  std::vector<std::pair<std::string, Segment>> const& named_connectors() const {
    return connectors_;
  }
  int connector_id(std::string const& name) const;

  std::vector<RuleTemplate> rules_for(int g) const { return rules_for_(g); }

  // Named segments of generation g, aligned with names().
  std::vector<Segment> const& generation(int g) const;

  // Generations first_generation()..n inclusive.
  std::vector<std::vector<Segment>> generate(int n) const;

  Segment const& segment(std::string const& name, int g) const;

  // Longest named segment of generation g; ambient of choice for scans.
  Segment const& longest_of(int g) const;

  bool uses_lookback2() const { return uses_lookback2_; }

 private:
  struct GenerationCache {
    std::mutex mutex;
    std::deque<std::vector<Segment>> memo;  // [g - first_gen]
  };

  std::vector<Segment> build_generation(int g) const;

  std::string id_;
  AlphabetPtr alphabet_;
  int first_gen_;
  std::vector<std::string> names_;
  std::vector<Segment> initial_;
  std::vector<std::pair<std::string, Segment>> connectors_;
  std::function<std::vector<RuleTemplate>(int)> rules_for_;
  std::function<Segment(int)> connector_fn_;
  bool uses_lookback2_ = false;

  // Copies of a system share one memo; generations are value-immutable.
  std::shared_ptr<GenerationCache> cache_ = std::make_shared<GenerationCache>();
};

SubstitutionSystem make_grigorchuk();
SubstitutionSystem make_dihedral();
SubstitutionSystem make_ghat();
SubstitutionSystem make_fibonacci();
SubstitutionSystem make_galpha(AlphaSequence alpha);

// name in {grigorchuk, dihedral, ghat, fibonacci, galpha}; galpha requires
// alpha. Throws UnknownSystem / InvalidAlpha.
SubstitutionSystem builtin(std::string const& name,
                           std::optional<AlphaSequence> alpha = std::nullopt);

// Key-value text schema for user-defined systems; see README for the format.
SubstitutionSystem parse_system_config(std::string const& text);

// Example 2.5-style random singleton sequence over a 3-symbol alphabet:
// each set differs from its predecessor, driven by a fixed-algorithm seeded
// generator so runs are reproducible bit-for-bit.
Segment random_markov_segment(AlphabetPtr const& alphabet, std::size_t length,
                              uint64_t seed);

}  // namespace schreier

#endif
