#include "schreier/minimality.hpp"

#include <algorithm>

namespace schreier {

bool contains_copy(Segment const& hay, Segment const& needle) {
  if (needle.empty()) return true;
  auto const& h = hay.sets();
  auto const& n = needle.sets();
  if (std::search(h.begin(), h.end(), n.begin(), n.end()) != h.end()) return true;
  auto r = needle.reversed();
  return std::search(h.begin(), h.end(), r.sets().begin(), r.sets().end()) != h.end();
}

std::optional<int> minimality_witness(SubstitutionSystem const& system, int n,
                                      int m_cap) {
  if (n < system.first_generation()) n = system.first_generation();
  auto const& needles = system.generation(n);
  for (int m = n; m <= m_cap; ++m) {
    bool all = true;
    for (auto const& hay : system.generation(m)) {
      for (auto const& needle : needles) {
        if (!contains_copy(hay, needle)) {
          all = false;
          break;
        }
      }
      if (!all) break;
    }
    if (all) return m;
  }
  return std::nullopt;
}

namespace {

// Name of a segment family whose generations are prefix-nested; the
// one-sided limit ray all three mirror sequences share.
std::string prefix_chain_name(SubstitutionSystem const& system) {
  int g0 = system.first_generation();
  for (auto const& name : system.names()) {
    bool nested = true;
    for (int g = g0; g < g0 + 4; ++g) {
      auto const& a = system.segment(name, g);
      auto const& b = system.segment(name, g + 1);
      if (a.length() > b.length()) {
        nested = false;
        break;
      }
      for (std::size_t i = 0; i < a.length(); ++i) {
        if (!(a.set(i) == b.set(i))) {
          nested = false;
          break;
        }
      }
      if (!nested) break;
    }
    if (nested) return name;
  }
  throw Error("no prefix-nested segment family in system " + system.id());
}

}  // namespace

SymmetricCenterReport theorem_hypothesis_check(SubstitutionSystem const& system,
                                               int radius) {
  auto const& a = *system.alphabet();
  for (auto const* s : {"b", "c", "d"}) {
    if (!a.contains(s)) {
      throw Error("theorem hypothesis check needs symbols b, c, d; missing "
                  + std::string(s));
    }
  }
  SymmetricCenterReport report;
  report.system_id = system.id();
  report.radius = radius;
  report.ray_name = prefix_chain_name(system);

  int g = system.first_generation();
  while (system.segment(report.ray_name, g).length()
         < static_cast<std::size_t>(radius) + 1) {
    ++g;
    if (g > 40) throw Error("ray never reaches the requested radius");
  }
  Segment prefix = system.segment(report.ray_name, g).subsegment(0, radius);
  auto universe = window_universe(system, radius);
  report.universe_generation = universe.stabilized_at;

  report.pass = true;
  for (auto names : {std::pair{"c", "d"}, std::pair{"b", "d"}, std::pair{"b", "c"}}) {
    LabelSet center = LabelSet::of(a, {names.first, names.second});
    bool found = false;
    try {
      std::vector<LabelSet> sets;
      auto rev = prefix.reversed();
      sets.insert(sets.end(), rev.sets().begin(), rev.sets().end());
      sets.push_back(center);
      for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(radius); ++i) {
        sets.push_back(prefix.set(i));
      }
      Segment window(system.alphabet(), std::move(sets));
      found = universe.index_of(window) >= 0;
    } catch (AdmissibilityViolation const&) {
      found = false;  // the mirrored window cannot even be formed
    }
    report.centers.emplace_back(Segment(system.alphabet(), {center}).str(), found);
    if (!found) report.pass = false;
  }
  return report;
}

}  // namespace schreier
