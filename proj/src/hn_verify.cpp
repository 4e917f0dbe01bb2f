#include "schreier/hn_verify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "schreier/cocycle.hpp"
#include "schreier/graph.hpp"

namespace schreier {

namespace {

Perm flip_conj(Perm const& p) {
  int const m = p.degree() - 1;
  std::vector<int> img(p.degree());
  for (int i = 0; i <= m; ++i) img[i] = m - p[m - i];
  return Perm(std::move(img));
}

std::vector<CopyMatch> pick_interior(std::vector<CopyMatch> matches,
                                     std::size_t ambient_len, std::size_t min_margin,
                                     std::size_t max_copies) {
  std::vector<std::pair<std::size_t, CopyMatch>> scored;
  for (auto const& m : matches) {
    std::size_t margin = std::min(m.first_vertex(), ambient_len - m.last_vertex());
    if (margin >= min_margin) scored.emplace_back(margin, m);
  }
  std::sort(scored.begin(), scored.end(), [](auto const& a, auto const& b) {
    return a.first != b.first ? a.first > b.first : a.second.offset < b.second.offset;
  });
  if (scored.size() > max_copies) scored.resize(max_copies);
  std::sort(scored.begin(), scored.end(), [](auto const& a, auto const& b) {
    return a.second.offset < b.second.offset;
  });
  std::vector<CopyMatch> out;
  for (auto& [margin, m] : scored) out.push_back(m);
  return out;
}

}  // namespace

HnSession::HnSession(SubstitutionSystem const& system, int n, int ambient_generation)
    : system_(&system),
      n_(n),
      ambient_(system.segment("J", n)),  // placeholder until a generation is picked
      jn_(system.segment("J", n)),
      in_(system.segment("I", n)),
      jprev_(system.segment("J", n - 1)) {
  half_len_ = jprev_.length();
  if (in_.length() != 2 * half_len_ + 1) {
    throw Error("I_n is not of the J e J^-1 shape; no half decomposition");
  }
  for (std::size_t i = 0; i < half_len_; ++i) {
    if (!(in_.set(i) == jprev_.set(i))
        || !(in_.set(in_.length() - 1 - i) == jprev_.set(i))) {
      throw Error("I_n halves do not match J_{n-1}");
    }
  }

  std::size_t const want_margin = 120;
  int g_lo = ambient_generation > 0 ? ambient_generation : n + 5;
  int g_hi = ambient_generation > 0 ? ambient_generation : n + 9;
  for (int g = g_lo; g <= g_hi; ++g) {
    ambient_ = system.segment("J", g);
    std::size_t margin_floor =
        ambient_generation > 0 ? 16 : std::min(want_margin, ambient_.length() / 4);
    jcopies_ = pick_interior(find_copies(ambient_, jn_), ambient_.length(),
                             margin_floor, 6);
    icopies_ = pick_interior(find_copies(ambient_, in_), ambient_.length(),
                             margin_floor, 6);
    if (jcopies_.size() >= 2 && icopies_.size() >= 2) {
      ambient_generation_ = g;
      margin_ = ambient_.length();
      for (auto const& m : jcopies_) {
        margin_ = std::min({margin_, m.first_vertex(),
                            ambient_.length() - m.last_vertex()});
      }
      for (auto const& m : icopies_) {
        margin_ = std::min({margin_, m.first_vertex(),
                            ambient_.length() - m.last_vertex()});
      }
      return;
    }
  }
  throw Error("no ambient generation with two interior copies of I_n and J_n");
}

std::optional<std::pair<Perm, Perm>> HnSession::certify(Word const& word) const {
  if (word.size() + 2 > margin_) return std::nullopt;
  std::optional<Perm> pi_j;
  for (auto const& c : jcopies_) {
    auto r = restrict_word(ambient_, word, c.first_vertex(), c.last_vertex());
    if (!r.invariant) return std::nullopt;
    Perm canon = c.reversed ? flip_conj(r.perm) : r.perm;
    if (!pi_j) {
      pi_j = std::move(canon);
    } else if (!(*pi_j == canon)) {
      return std::nullopt;
    }
  }
  std::optional<Perm> pi_prev;
  for (auto const& c : icopies_) {
    auto h1 = restrict_word(ambient_, word, c.offset, c.offset + half_len_);
    if (!h1.invariant) return std::nullopt;
    auto h2 = restrict_word(ambient_, word, c.offset + half_len_ + 1,
                            c.offset + in_.length());
    if (!h2.invariant) return std::nullopt;
    // Both halves carry the same permutation through the mid-flip.
    Perm canon2 = flip_conj(h2.perm);
    if (!(h1.perm == canon2)) return std::nullopt;
    if (!pi_prev) {
      pi_prev = h1.perm;
    } else if (!(*pi_prev == h1.perm)) {
      return std::nullopt;
    }
  }
  return std::make_pair(std::move(*pi_j), std::move(*pi_prev));
}

namespace {

struct SeedSet {
  std::vector<Word> seeds;
  std::vector<Word> conjugators;  // single-letter words
};

SeedSet seed_words(SubstitutionSystem const& system) {
  auto const& a = *system.alphabet();
  auto w = [&](char const* name) { return Word{a.index_checked(name)}; };
  SeedSet out;
  if (system_has_xy(system)) {
    out.seeds = {w("a0"), w("a1"), w("a2"), commutator(w("a0"), w("a1")),
                 commutator(w("a0"), w("a2"))};
    for (auto const* g : {"x", "y", "b", "c", "d", "a0", "a1", "a2"}) {
      out.conjugators.push_back(w(g));
    }
  } else {
    out.seeds = {w("a0"), w("a1"), w("a2"), commutator(w("b"), w("a0")),
                 commutator(w("c"), w("a0")), commutator(w("d"), w("a0"))};
    for (auto const* g : {"b", "c", "d", "a0", "a1", "a2"}) {
      out.conjugators.push_back(w(g));
    }
  }
  return out;
}

struct Certified {
  std::vector<Word> words;
  std::vector<Perm> pj, pi;
};

uint64_t pack_images(Perm const& p) {
  // Degrees stay <= 16 at the desk scales this search runs at.
  uint64_t out = 0;
  for (int i = 0; i < p.degree(); ++i) out |= uint64_t(p[i]) << (4 * i);
  return out;
}

// Breadth-first search over the certified (J, half) permutation pairs,
// words tracked through parent links, hunting elements trivial on the J
// copies but moving the half. [x, h] for such h is the junction-crossing
// commutator of the inductive argument.
std::vector<Word> synthesize_j_trivial(Certified const& c, int deg_j, int deg_i,
                                       std::size_t gen_cap, std::size_t len_cap,
                                       int state_cap, int want) {
  if (deg_j > 16 || deg_i > 16) return {};
  std::vector<std::size_t> gens;
  for (std::size_t i = 0; i < c.words.size() && gens.size() < gen_cap; ++i) {
    gens.push_back(i);
  }
  struct Node {
    Perm j, i;
    int parent;
    int gen;
    std::size_t len;
  };
  std::vector<Node> nodes;
  std::set<std::pair<uint64_t, uint64_t>> seen;
  nodes.push_back({Perm(deg_j), Perm(deg_i), -1, -1, 0});
  seen.insert({pack_images(nodes[0].j), pack_images(nodes[0].i)});

  std::vector<Word> movers, fixers;
  std::set<uint64_t> found_halves;
  auto word_of = [&](int idx) {
    std::vector<int> chain;
    for (int k = idx; k > 0; k = nodes[k].parent) chain.push_back(nodes[k].gen);
    Word w;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      w = concat_words(w, c.words[gens[*it]]);
    }
    return w;
  };
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    if (static_cast<int>(nodes.size()) > state_cap) break;
    if (movers.size() >= 2 && movers.size() + fixers.size() >= std::size_t(want)) break;
    Node cur = nodes[head];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      std::size_t len = cur.len + c.words[gens[k]].size();
      if (len > len_cap) continue;
      Perm nj = cur.j * c.pj[gens[k]];
      Perm ni = cur.i * c.pi[gens[k]];
      auto key = std::make_pair(pack_images(nj), pack_images(ni));
      if (!seen.insert(key).second) continue;
      nodes.push_back({nj, ni, static_cast<int>(head), static_cast<int>(k), len});
      if (nj.is_identity() && !ni.is_identity()
          && found_halves.insert(key.second).second) {
        // Halves moving the end vertex commutate across the junction.
        if (ni[0] != 0) {
          movers.push_back(word_of(static_cast<int>(nodes.size()) - 1));
        } else if (fixers.size() < std::size_t(want)) {
          fixers.push_back(word_of(static_cast<int>(nodes.size()) - 1));
        }
      }
    }
  }
  std::vector<Word> found = std::move(movers);
  for (auto& w : fixers) {
    if (static_cast<int>(found.size()) >= want) break;
    found.push_back(std::move(w));
  }
  return found;
}

struct SearchResult {
  Certified certified;
  int candidates = 0;
  int rounds = 0;
  BigInt order_j, order_i;
};

SearchResult block_search(HnSession const& session, SubstitutionSystem const& system,
                          std::vector<Word> extra_seeds, int round_cap) {
  auto const& alphabet = *system.alphabet();
  auto [seeds, conjugators] = seed_words(system);
  seeds.insert(seeds.end(), extra_seeds.begin(), extra_seeds.end());

  StabilizerChain chain_j(session.jn_vertices());
  StabilizerChain chain_prev(session.jprev_vertices());
  BigInt const fact_j = factorial(session.jn_vertices());
  BigInt const fact_prev = factorial(session.jprev_vertices());
  bool const full = !system_has_xy(system);

  SearchResult result;
  std::set<std::string> seen;
  std::set<std::pair<std::vector<int>, std::vector<int>>> seen_pairs;

  auto targets_met = [&] {
    if (full) return chain_j.order() == fact_j && chain_prev.order() == fact_prev;
    return 2 * chain_j.order() >= fact_j && 2 * chain_prev.order() >= fact_prev;
  };

  std::vector<Word> pool = seeds;
  for (int round = 0; round <= round_cap; ++round) {
    result.rounds = round;
    for (auto const& w : pool) {
      auto key = word_str(alphabet, w);
      if (!seen.insert(key).second) continue;
      ++result.candidates;
      auto cert = session.certify(w);
      if (!cert) continue;
      auto pair_key = std::make_pair(cert->first.images(), cert->second.images());
      if (!seen_pairs.insert(pair_key).second) continue;
      result.certified.words.push_back(w);
      result.certified.pj.push_back(cert->first);
      result.certified.pi.push_back(cert->second);
      chain_j.extend(cert->first);
      chain_prev.extend(cert->second);
    }
    if (targets_met() || round == round_cap) break;

    auto const& c = result.certified;
    std::vector<Word> next;
    std::size_t const keep = std::min<std::size_t>(c.words.size(), 80);
    for (auto const& g : conjugators) {
      for (std::size_t i = 0; i < keep; ++i) {
        next.push_back(conjugate(c.words[i], g));
        next.push_back(commutator(g, c.words[i]));
      }
    }
    std::size_t const pk = std::min<std::size_t>(c.words.size(), 30);
    for (std::size_t i = 0; i < pk; ++i) {
      next.push_back(reversed_word(c.words[i]));
      for (std::size_t j = 0; j < pk; ++j) {
        if (i == j) continue;
        if (c.words[i].size() + c.words[j].size() + 2 < session.margin()) {
          next.push_back(concat_words(c.words[i], c.words[j]));
        }
      }
    }
    pool = std::move(next);
  }
  result.order_j = chain_j.order();
  result.order_i = chain_prev.order();
  return result;
}

// Lower-level block elements acting only inside the half copies, plus their
// junction commutators: the inductive step's raw material.
std::vector<Word> lifted_seeds(SubstitutionSystem const& system, int n, int round_cap) {
  int const base = system.first_generation() + 1;
  if (n <= base) return {};
  HnSession lower(system, n - 1);
  std::vector<Word> carried;
  if (n - 1 > base) carried = lifted_seeds(system, n - 1, round_cap);
  auto lower_result = block_search(lower, system, carried, round_cap);

  auto [seeds, conjugators] = seed_words(system);
  std::vector<Word> out = std::move(carried);
  std::size_t const len_cap = std::min<std::size_t>(lower.margin() - 4, 72);
  auto synthesized =
      synthesize_j_trivial(lower_result.certified, lower.jn_vertices(),
                           lower.jprev_vertices(), 40, len_cap, 250000, 8);
  for (auto& h : synthesized) {
    for (auto const& g : conjugators) out.push_back(commutator(g, h));
    out.push_back(std::move(h));
  }
  std::size_t const keep = std::min<std::size_t>(lower_result.certified.words.size(), 20);
  for (std::size_t i = 0; i < keep; ++i) {
    out.push_back(lower_result.certified.words[i]);
  }
  return out;
}

}  // namespace

HnReport verify_Hn(SubstitutionSystem const& system, int n, int ambient_generation,
                   int round_cap) {
  HnSession session(system, n, ambient_generation);
  HnReport report;
  report.system_id = system.id();
  report.n = n;
  report.ambient_generation = session.ambient_generation();
  report.jn_vertices = session.jn_vertices();
  report.jprev_vertices = session.jprev_vertices();
  report.expect_full_symmetric = !system_has_xy(system);

  auto result = block_search(session, system, lifted_seeds(system, n, round_cap),
                             round_cap);
  report.certified = static_cast<int>(result.certified.words.size());
  report.candidates = result.candidates;
  report.rounds = result.rounds;
  for (std::size_t i = 0; i < result.certified.words.size() && i < 8; ++i) {
    auto text = word_str(*system.alphabet(), result.certified.words[i]);
    report.witnesses.push_back(text);
    report.witness_perms.emplace_back(std::move(text), result.certified.pj[i].str());
  }

  BigInt const fact_j = factorial(session.jn_vertices());
  BigInt const fact_prev = factorial(session.jprev_vertices());
  auto classify = [](BigInt const& ord, BigInt const& fact) {
    Classification c;
    c.order = ord;
    c.cls = ord == 1          ? GroupClass::Trivial
            : ord == fact     ? GroupClass::Symmetric
            : 2 * ord == fact ? GroupClass::Alternating
                              : GroupClass::Other;
    return c;
  };
  report.jn_class = classify(result.order_j, fact_j);
  report.jprev_class = classify(result.order_i, fact_prev);
  if (report.expect_full_symmetric) {
    report.pass = result.order_j == fact_j && result.order_i == fact_prev;
  } else {
    report.pass = 2 * result.order_j >= fact_j && 2 * result.order_i >= fact_prev;
  }
  return report;
}

ParityReport parity_embedding_check(SubstitutionSystem const& system, int n,
                                    int sample_cap) {
  ParityReport report;
  report.system_id = system.id();
  report.n = n;
  HnSession at_n(system, n);
  HnSession above(system, n + 1);

  auto const& alphabet = *system.alphabet();
  auto [seeds, conjugators] = seed_words(system);
  std::vector<Word> pool;
  pool.push_back({});  // identity row
  pool.insert(pool.end(), seeds.begin(), seeds.end());
  for (auto const& g : conjugators) {
    for (auto const& s : seeds) {
      pool.push_back(commutator(g, s));
      pool.push_back(conjugate(s, g));
    }
  }

  report.pass = true;
  std::set<std::string> seen;
  for (auto const& w : pool) {
    if (static_cast<int>(report.rows.size()) >= sample_cap) break;
    auto key = word_str(alphabet, w);
    if (!seen.insert(key).second) continue;
    auto low = at_n.certify(w);
    if (!low) continue;
    auto high = above.certify(w);
    if (!high) continue;
    ParityRow row;
    row.word = key;
    row.k1 = low->first.parity();
    row.k2 = low->second.parity();
    row.k1n = high->first.parity();
    row.k2n = high->second.parity();
    row.ok = row.k1n == row.k1 && row.k2n == row.k1;
    if (!row.ok) report.pass = false;
    report.rows.push_back(std::move(row));
  }
  if (report.rows.size() < 3) report.pass = false;
  return report;
}

}  // namespace schreier
