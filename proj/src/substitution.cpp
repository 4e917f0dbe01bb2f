#include "schreier/substitution.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace schreier {

AlphaSequence::Entry AlphaSequence::at(std::size_t k) const {
  if (k < entries.size()) return entries[k];
  if (tail == Tail::Sigma || entries.empty()) return Entry{};
  return entries[k % entries.size()];
}

std::string AlphaSequence::str() const {
  std::string out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ',';
    out += entries[i].sigma ? "s" : entries[i].word;
  }
  out += tail == Tail::Sigma ? ";tail=sigma" : ";tail=cycle";
  return out;
}

void AlphaSequence::validate() const {
  for (auto const& e : entries) {
    if (e.sigma) continue;
    if (e.word.empty()) throw InvalidAlpha("empty word entry in alpha sequence");
    for (char c : e.word) {
      if (c != 'x' && c != 'y') {
        throw InvalidAlpha("alpha word entries may only use x and y: " + e.word);
      }
    }
  }
  if (tail == Tail::Cycle && entries.empty()) {
    throw InvalidAlpha("cycle tail needs at least one entry");
  }
}

AlphaSequence AlphaSequence::parse(std::string const& text, Tail tail) {
  AlphaSequence a;
  a.tail = tail;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    if (cur == "s" || cur == "sigma") {
      a.entries.push_back(Entry{});
    } else {
      a.entries.push_back(Entry{false, cur});
    }
    cur.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ') {
      flush();
    } else {
      cur += c;
    }
  }
  flush();
  a.validate();
  return a;
}

SubstitutionSystem::SubstitutionSystem(
    std::string id, AlphabetPtr alphabet, int first_gen, std::vector<std::string> names,
    std::vector<Segment> initial, std::vector<std::pair<std::string, Segment>> connectors,
    std::function<std::vector<RuleTemplate>(int)> rules_for,
    std::function<Segment(int)> connector_fn)
    : id_(std::move(id)),
      alphabet_(std::move(alphabet)),
      first_gen_(first_gen),
      names_(std::move(names)),
      initial_(std::move(initial)),
      connectors_(std::move(connectors)),
      rules_for_(std::move(rules_for)),
      connector_fn_(std::move(connector_fn)) {
  if (names_.empty() || names_.size() != initial_.size()) {
    throw Error("system needs one initial segment per name");
  }
  // Probe a few productions to record whether two-generation lookback occurs.
  for (int g = first_gen_ + 1; g <= first_gen_ + 3; ++g) {
    for (auto const& r : rules_for_(g)) {
      for (auto const& a : r.atoms) {
        if (a.kind == AtomTemplate::Kind::Seg && a.lookback > 1) uses_lookback2_ = true;
      }
    }
  }
}

int SubstitutionSystem::name_id(std::string const& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<int>(i);
  }
  throw RuleReferenceError("unknown segment name: " + name);
}

Segment SubstitutionSystem::connector(int id) const {
  if (id >= 0 && id < static_cast<int>(connectors_.size())) {
    return connectors_[id].second;
  }
  if (connector_fn_) return connector_fn_(id);
  throw RuleReferenceError("unknown connector index: " + std::to_string(id));
}

int SubstitutionSystem::connector_id(std::string const& name) const {
  for (std::size_t i = 0; i < connectors_.size(); ++i) {
    if (connectors_[i].first == name) return static_cast<int>(i);
  }
  throw RuleReferenceError("unknown connector name: " + name);
}

std::vector<Segment> SubstitutionSystem::build_generation(int g) const {
  // Caller holds the memo mutex and has filled everything below g.
  auto const& memo = cache_->memo;
  auto const& prev = memo[g - 1 - first_gen_];
  auto const* prev2 = g - 2 >= first_gen_ ? &memo[g - 2 - first_gen_] : nullptr;
  std::vector<Segment> out;
  auto rules = rules_for_(g);
  for (auto const& name : names_) {
    auto it = std::find_if(rules.begin(), rules.end(), [&](RuleTemplate const& r) {
      return names_.at(r.output_name_id) == name;
    });
    if (it == rules.end()) {
      throw RuleReferenceError("generation " + std::to_string(g) + " has no rule for "
                               + name);
    }
    std::vector<LabelSet> acc;
    auto append = [&](Segment const& s) {
      for (auto const& x : s.sets()) {
        if (!acc.empty() && acc.back().intersects(x)) {
          throw AdmissibilityViolation(acc.size() - 1);
        }
        acc.push_back(x);
      }
    };
    for (auto const& atom : it->atoms) {
      switch (atom.kind) {
        case AtomTemplate::Kind::Seg: {
          if (atom.lookback == 2 && prev2 == nullptr) {
            throw RuleReferenceError("lookback below first generation at g="
                                     + std::to_string(g));
          }
          auto const& src = atom.lookback == 2 ? (*prev2) : prev;
          Segment const& s = src.at(atom.name_id);
          append(atom.reversed ? s.reversed() : s);
          break;
        }
        case AtomTemplate::Kind::FixedConn:
          append(connector(atom.conn_id));
          break;
        case AtomTemplate::Kind::CycleConn: {
          int n = static_cast<int>(atom.cycle_ids.size());
          int slot = ((g + atom.cycle_offset) % n + n) % n;
          append(connector(atom.cycle_ids[slot]));
          break;
        }
      }
    }
    out.emplace_back(alphabet_, std::move(acc));
  }
  return out;
}

std::vector<Segment> const& SubstitutionSystem::generation(int g) const {
  if (g < first_gen_) {
    throw Error("generation " + std::to_string(g) + " precedes first generation "
                + std::to_string(first_gen_));
  }
  std::lock_guard<std::mutex> lock(cache_->mutex);
  auto& memo = cache_->memo;
  if (memo.empty()) memo.push_back(initial_);
  while (static_cast<int>(memo.size()) <= g - first_gen_) {
    memo.push_back(build_generation(first_gen_ + static_cast<int>(memo.size())));
  }
  return memo[g - first_gen_];
}

std::vector<std::vector<Segment>> SubstitutionSystem::generate(int n) const {
  std::vector<std::vector<Segment>> out;
  for (int g = first_gen_; g <= n; ++g) out.push_back(generation(g));
  return out;
}

Segment const& SubstitutionSystem::segment(std::string const& name, int g) const {
  return generation(g).at(name_id(name));
}

Segment const& SubstitutionSystem::longest_of(int g) const {
  auto const& gen = generation(g);
  std::size_t best = 0;
  for (std::size_t i = 1; i < gen.size(); ++i) {
    if (gen[i].length() > gen[best].length()) best = i;
  }
  return gen[best];
}

namespace {

std::vector<int> cycle3() { return {0, 1, 2}; }

}  // namespace

SubstitutionSystem make_grigorchuk() {
  auto a = make_alphabet({"a", "b", "c", "d"});
  Segment i1(a, {LabelSet::of(*a, {"a"})});
  std::vector<std::pair<std::string, Segment>> conns = {
      {"e1", Segment(a, {LabelSet::of(*a, {"b", "c"})})},
      {"e2", Segment(a, {LabelSet::of(*a, {"d", "b"})})},
      {"e3", Segment(a, {LabelSet::of(*a, {"c", "d"})})},
  };
  // I_{g} = I_{g-1} e_{g-1} I_{g-1}; e_m is {b,c}, {d,b}, {c,d} for
  // m = 1, 2, 0 mod 3.
  auto rules = [](int) {
    return std::vector<RuleTemplate>{
        {0,
         {AtomTemplate::seg(0), AtomTemplate::cycle(cycle3(), 1), AtomTemplate::seg(0)}}};
  };
  return SubstitutionSystem("grigorchuk", a, 1, {"I"}, {i1}, std::move(conns), rules);
}

SubstitutionSystem make_dihedral() {
  auto a = make_alphabet({"a", "b"});
  Segment i1(a, {LabelSet::of(*a, {"a"})});
  std::vector<std::pair<std::string, Segment>> conns = {
      {"eb", Segment(a, {LabelSet::of(*a, {"b"})})}};
  auto rules = [](int) {
    return std::vector<RuleTemplate>{
        {0, {AtomTemplate::seg(0), AtomTemplate::conn(0), AtomTemplate::seg(0)}}};
  };
  return SubstitutionSystem("dihedral", a, 1, {"I"}, {i1}, std::move(conns), rules);
}

SubstitutionSystem make_ghat() {
  auto a = make_alphabet({"a0", "a1", "a2", "b", "c", "d"});
  auto set = [&](std::initializer_list<char const*> names) {
    return LabelSet::of(*a, names);
  };
  Segment i1(a, {set({"a2"}), set({"b", "c"}), set({"a0"})});
  Segment j1(a, {set({"a2"}), set({"b", "c"}), set({"a1"})});
  std::vector<std::pair<std::string, Segment>> conns = {
      {"e1", Segment(a, {set({"b", "c"})})},
      {"e2", Segment(a, {set({"d", "b"})})},
      {"e3", Segment(a, {set({"c", "d"})})},
  };
  // I_g = J e J^-1, J_g = J e I^-1 with e = e_{g-1}; here e_m is {b,c},
  // {d,b}, {c,d} for m = 0, 1, 2 mod 3.
  auto rules = [](int) {
    return std::vector<RuleTemplate>{
        {0,
         {AtomTemplate::seg(1), AtomTemplate::cycle(cycle3(), 2),
          AtomTemplate::seg(1, true)}},
        {1,
         {AtomTemplate::seg(1), AtomTemplate::cycle(cycle3(), 2),
          AtomTemplate::seg(0, true)}},
    };
  };
  return SubstitutionSystem("ghat", a, 1, {"I", "J"}, {i1, j1}, std::move(conns), rules);
}

SubstitutionSystem make_fibonacci() {
  std::vector<std::string> syms;
  for (char c : std::string("abcd")) {
    for (int i = 0; i <= 3; ++i) syms.push_back(std::string(1, c) + std::to_string(i));
  }
  auto a = make_alphabet(syms);
  auto idx = [a](char c, int i) {
    return a->index_checked(std::string(1, c) + std::to_string(i));
  };
  // e_0, e_1, e_2 are the triples {a_i, b_i, c_i}; for m = 3k+i with k >= 1
  // the connector is a pair of {b_i, c_i, d_i} chosen by k mod 3.
  auto conn_fn = [a, idx](int m) {
    if (m < 0) throw RuleReferenceError("negative connector index");
    if (m <= 2) {
      uint32_t bits = (1u << idx('a', m)) | (1u << idx('b', m)) | (1u << idx('c', m));
      return Segment(a, {LabelSet(bits)});
    }
    int k = m / 3, i = m % 3;
    char u, v;
    switch (k % 3) {
      case 0: u = 'b'; v = 'c'; break;
      case 1: u = 'b'; v = 'd'; break;
      default: u = 'c'; v = 'd'; break;
    }
    uint32_t bits = (1u << idx(u, i)) | (1u << idx(v, i));
    return Segment(a, {LabelSet(bits)});
  };
  // State carries the pair (I_{g-1}, I_g); the paper's recursion
  // I_n = I_{n-2}^-1 e_{n-2} I_{n-1}^-1 then only looks one generation back.
  auto rules = [](int g) {
    return std::vector<RuleTemplate>{
        {0, {AtomTemplate::seg(1)}},
        {1,
         {AtomTemplate::seg(0, true), AtomTemplate::conn(g - 2),
          AtomTemplate::seg(1, true)}},
    };
  };
  Segment empty(a);
  return SubstitutionSystem("fibonacci", a, 1, {"Iprev", "I"}, {empty, empty}, {},
                            rules, conn_fn);
}

SubstitutionSystem make_galpha(AlphaSequence alpha) {
  alpha.validate();
  auto a = make_alphabet({"a0", "a1", "a2", "x", "y", "b", "c", "d"});
  auto set = [&](std::initializer_list<char const*> names) {
    return LabelSet::of(*a, names);
  };
  Segment i0(a, {set({"a0"}), set({"a1"})});
  Segment j0(a, {set({"a0"}), set({"a2"})});
  std::vector<std::pair<std::string, Segment>> conns = {
      {"e1", Segment(a, {set({"b", "c"})})},
      {"e2", Segment(a, {set({"d", "b"})})},
      {"e3", Segment(a, {set({"c", "d"})})},
      {"x", Segment(a, {set({"x"})})},
      {"y", Segment(a, {set({"y"})})},
  };
  int const CX = 3, CY = 4;
  auto xy_id = [&](char t) { return t == 'x' ? CX : CY; };
  // Producing generation g consumes alpha entry g-1. The I-rule connector
  // cycles e1, e2, e3 starting with e1 at g = 1.
  auto rules = [alpha, xy_id](int g) {
    std::vector<RuleTemplate> out;
    out.push_back(
        {0,
         {AtomTemplate::seg(1), AtomTemplate::cycle(cycle3(), 2),
          AtomTemplate::seg(1, true)}});
    auto entry = alpha.at(static_cast<std::size_t>(g - 1));
    std::vector<AtomTemplate> j;
    j.push_back(AtomTemplate::seg(1));
    if (entry.sigma) {
      j.push_back(AtomTemplate::conn(CX));
      j.push_back(AtomTemplate::seg(0));
      j.push_back(AtomTemplate::conn(CY));
      j.push_back(AtomTemplate::seg(0));
      j.push_back(AtomTemplate::conn(CY));
    } else {
      j.push_back(AtomTemplate::conn(0));  // e1
      for (char t : entry.word) {
        j.push_back(AtomTemplate::seg(0));
        j.push_back(AtomTemplate::conn(xy_id(t)));
      }
    }
    j.push_back(AtomTemplate::seg(1, true));
    out.push_back({1, std::move(j)});
    return out;
  };
  return SubstitutionSystem("galpha[" + alpha.str() + "]", a, 0, {"I", "J"}, {i0, j0},
                            std::move(conns), rules);
}

SubstitutionSystem builtin(std::string const& name, std::optional<AlphaSequence> alpha) {
  if (name == "grigorchuk") return make_grigorchuk();
  if (name == "dihedral") return make_dihedral();
  if (name == "ghat") return make_ghat();
  if (name == "fibonacci") return make_fibonacci();
  if (name == "galpha") {
    if (!alpha) throw InvalidAlpha("galpha requires an alpha sequence");
    return make_galpha(*alpha);
  }
  throw UnknownSystem(name);
}

namespace {

std::vector<std::string> split_ws(std::string const& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace

SubstitutionSystem parse_system_config(std::string const& text) {
  AlphabetPtr alphabet;
  int start = 0;
  bool have_start = false;
  std::vector<std::string> names;
  std::vector<Segment> initial;
  std::vector<std::pair<std::string, Segment>> connectors;
  // (output name, atom tokens) pairs, resolved after all declarations.
  std::vector<std::pair<std::string, std::vector<std::string>>> raw_rules;

  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    auto const& kw = toks[0];
    if (kw == "alphabet") {
      alphabet = make_alphabet({toks.begin() + 1, toks.end()});
    } else if (kw == "start") {
      if (toks.size() != 2) throw ParseError("start wants one integer");
      start = std::stoi(toks[1]);
      have_start = true;
    } else if (kw == "init") {
      if (!alphabet) throw ParseError("init before alphabet");
      if (toks.size() != 3) throw ParseError("init wants: init NAME [tokens]");
      names.push_back(toks[1]);
      initial.push_back(Segment::parse(alphabet, toks[2]));
    } else if (kw == "connector") {
      if (!alphabet) throw ParseError("connector before alphabet");
      if (toks.size() != 3) throw ParseError("connector wants: connector NAME [tokens]");
      connectors.emplace_back(toks[1], Segment::parse(alphabet, toks[2]));
    } else if (kw == "rule") {
      if (toks.size() < 4 || toks[2] != ":") {
        throw ParseError("rule wants: rule NAME : atoms...");
      }
      raw_rules.emplace_back(toks[1], std::vector<std::string>(toks.begin() + 3, toks.end()));
    } else {
      throw ParseError("unknown config keyword: " + kw);
    }
  }
  if (!alphabet) throw ParseError("config needs an alphabet");
  if (names.empty()) throw ParseError("config needs at least one init segment");
  if (!have_start) start = 0;

  auto name_index = [names](std::string const& n) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == n) return static_cast<int>(i);
    }
    throw ParseError("rule references unknown name: " + n);
  };
  auto conn_index = [connectors](std::string const& n) {
    for (std::size_t i = 0; i < connectors.size(); ++i) {
      if (connectors[i].first == n) return static_cast<int>(i);
    }
    throw ParseError("rule references unknown connector: " + n);
  };

  std::vector<RuleTemplate> templates;
  for (auto const& [out_name, atoms] : raw_rules) {
    RuleTemplate rt;
    rt.output_name_id = name_index(out_name);
    for (auto tok : atoms) {
      if (tok[0] == '@') {
        std::string body = tok.substr(1);
        if (body.rfind("cycle(", 0) == 0) {
          // @cycle(e1,e2,e3)+k
          auto close = body.find(')');
          if (close == std::string::npos) throw ParseError("bad cycle atom: " + tok);
          std::string list = body.substr(6, close - 6);
          int offset = 0;
          if (close + 1 < body.size()) {
            if (body[close + 1] != '+' && body[close + 1] != '-') {
              throw ParseError("bad cycle offset: " + tok);
            }
            offset = std::stoi(body.substr(close + 1));
          }
          std::vector<int> ids;
          std::size_t p = 0;
          while (p <= list.size()) {
            auto comma = list.find(',', p);
            ids.push_back(conn_index(
                list.substr(p, comma == std::string::npos ? std::string::npos : comma - p)));
            if (comma == std::string::npos) break;
            p = comma + 1;
          }
          rt.atoms.push_back(AtomTemplate::cycle(std::move(ids), offset));
        } else {
          rt.atoms.push_back(AtomTemplate::conn(conn_index(body)));
        }
      } else {
        bool rev = false;
        int back = 1;
        if (tok[0] == '~') {
          rev = true;
          tok = tok.substr(1);
        }
        auto caret = tok.find('^');
        if (caret != std::string::npos) {
          back = std::stoi(tok.substr(caret + 1));
          if (back != 1 && back != 2) throw ParseError("lookback must be 1 or 2");
          tok = tok.substr(0, caret);
        }
        rt.atoms.push_back(AtomTemplate::seg(name_index(tok), rev, back));
      }
    }
    templates.push_back(std::move(rt));
  }
  auto rules = [templates](int) { return templates; };
  return SubstitutionSystem("config", alphabet, start, std::move(names),
                            std::move(initial), std::move(connectors), rules);
}

Segment random_markov_segment(AlphabetPtr const& alphabet, std::size_t length,
                              uint64_t seed) {
  if (alphabet->size() != 3) throw Error("markov segment wants a 3-symbol alphabet");
  if (length < 1) throw Error("markov segment wants length >= 1");
  std::mt19937_64 rng(seed);
  std::vector<LabelSet> sets;
  sets.reserve(length);
  int prev = static_cast<int>(rng() % 3);
  sets.emplace_back(uint32_t{1} << prev);
  for (std::size_t i = 1; i < length; ++i) {
    // The two candidates differing from the predecessor, in alphabet order;
    // one raw generator bit picks between them (keeps output portable).
    int low = prev == 0 ? 1 : 0;
    int high = prev == 2 ? 1 : 2;
    int next = (rng() & 1) ? high : low;
    sets.emplace_back(uint32_t{1} << next);
    prev = next;
  }
  return Segment(alphabet, std::move(sets));
}

}  // namespace schreier
