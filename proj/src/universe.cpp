#include "schreier/universe.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace schreier {

int WindowUniverse::index_of(Segment const& w) const {
  auto it = std::lower_bound(windows.begin(), windows.end(), w);
  if (it == windows.end() || !(*it == w)) return -1;
  return static_cast<int>(it - windows.begin());
}

std::string WindowUniverse::export_text() const {
  std::string out = "radius " + std::to_string(radius) + "\n";
  for (auto const& w : windows) {
    out += w.str();
    out += '\n';
  }
  return out;
}

WindowUniverse WindowUniverse::import_text(AlphabetPtr const& alphabet,
                                           std::string const& text) {
  WindowUniverse u;
  u.alphabet = alphabet;
  u.system_id = "imported";
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.rfind("radius ", 0) != 0) {
    throw ParseError("universe text must start with a 'radius R' line");
  }
  u.radius = std::stoi(line.substr(7));
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Segment w = Segment::parse(alphabet, line);
    if (w.length() != static_cast<std::size_t>(2 * u.radius)) {
      throw ParseError("window of wrong length: " + line);
    }
    u.windows.push_back(std::move(w));
  }
  std::sort(u.windows.begin(), u.windows.end());
  u.windows.erase(std::unique(u.windows.begin(), u.windows.end()), u.windows.end());
  return u;
}

namespace {

void insert_subwords(std::set<Segment>& acc, Segment const& s, std::size_t L,
                     bool add_reversals) {
  if (s.length() < L) return;
  for (std::size_t off = 0; off + L <= s.length(); ++off) {
    Segment w = s.subsegment(off, L);
    if (add_reversals) acc.insert(w.reversed());
    acc.insert(std::move(w));
  }
}

std::set<Segment> subword_set(SubstitutionSystem const& system, int g, std::size_t L,
                              bool add_reversals) {
  std::set<Segment> acc;
  for (auto const& s : system.generation(g)) {
    insert_subwords(acc, s, L, add_reversals);
  }
  return acc;
}

// Keeps runaway systems from materializing astronomically long segments
// while the stabilization loop is still hunting.
constexpr std::size_t kSegmentLengthBudget = std::size_t{1} << 22;

}  // namespace

WindowUniverse window_universe(SubstitutionSystem const& system, int radius, int span,
                               int generation_cap) {
  if (radius < 1) throw Error("universe radius must be >= 1");
  if (span < 2) throw Error("stability span must be >= 2");
  std::size_t const L = 2 * static_cast<std::size_t>(radius);

  std::set<Segment> current;
  int stable_since = -1;
  int agree = 0;
  for (int g = system.first_generation(); g <= generation_cap; ++g) {
    for (auto const& s : system.generation(g)) {
      if (s.length() > kSegmentLengthBudget) throw NoStabilization(g);
    }
    auto next = subword_set(system, g, L, true);
    if (!next.empty() && next == current) {
      ++agree;
      if (agree >= span) {
        WindowUniverse u;
        u.system_id = system.id();
        u.alphabet = system.alphabet();
        u.radius = radius;
        u.stabilized_at = stable_since;
        u.span = span;
        u.windows.assign(current.begin(), current.end());
        auto raw = subword_set(system, stable_since, L, false);
        u.reversal_closed_naturally = raw == current;
        return u;
      }
    } else {
      current = std::move(next);
      stable_since = g;
      agree = 0;
    }
  }
  throw NoStabilization(generation_cap);
}

WindowUniverse universe_from_segment(Segment const& ambient, int radius,
                                     std::string id) {
  if (radius < 1) throw Error("universe radius must be >= 1");
  std::set<Segment> acc;
  insert_subwords(acc, ambient, 2 * static_cast<std::size_t>(radius), true);
  if (acc.empty()) throw Error("segment shorter than one window");
  WindowUniverse u;
  u.system_id = std::move(id);
  u.alphabet = ambient.alphabet();
  u.radius = radius;
  u.windows.assign(acc.begin(), acc.end());
  std::set<Segment> raw;
  insert_subwords(raw, ambient, 2 * static_cast<std::size_t>(radius), false);
  u.reversal_closed_naturally = raw == acc;
  return u;
}

WindowUniverse restrict_universe(WindowUniverse const& u, int radius) {
  if (radius < 1 || radius > u.radius) throw Error("bad restriction radius");
  std::set<Segment> acc;
  std::size_t off = static_cast<std::size_t>(u.radius - radius);
  for (auto const& w : u.windows) {
    acc.insert(w.subsegment(off, 2 * static_cast<std::size_t>(radius)));
  }
  WindowUniverse out;
  out.system_id = u.system_id;
  out.alphabet = u.alphabet;
  out.radius = radius;
  out.stabilized_at = u.stabilized_at;
  out.span = u.span;
  out.reversal_closed_naturally = u.reversal_closed_naturally;
  out.windows.assign(acc.begin(), acc.end());
  return out;
}

WindowUniverse const& UniverseCache::at_radius(int radius, int span, int generation_cap) {
  auto it = memo_.find(radius);
  if (it != memo_.end()) return it->second;
  auto [pos, _] = memo_.emplace(radius,
                                window_universe(*system_, radius, span, generation_cap));
  return pos->second;
}

}  // namespace schreier
