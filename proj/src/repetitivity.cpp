#include "schreier/repetitivity.hpp"

#include <algorithm>
#include <set>

namespace schreier {

SubwordSet stable_subwords(SubstitutionSystem const& system, std::size_t length,
                           int span, int generation_cap) {
  std::set<Segment> current;
  int stable_since = -1;
  int agree = 0;
  auto collect = [&](int g) {
    std::set<Segment> acc;
    for (auto const& s : system.generation(g)) {
      if (s.length() < length) continue;
      for (std::size_t off = 0; off + length <= s.length(); ++off) {
        Segment w = s.subsegment(off, length);
        acc.insert(w.reversed());
        acc.insert(std::move(w));
      }
    }
    return acc;
  };
  for (int g = system.first_generation(); g <= generation_cap; ++g) {
    auto next = collect(g);
    if (!next.empty() && next == current) {
      ++agree;
      if (agree >= span) {
        SubwordSet out;
        out.stabilized_at = stable_since;
        out.items.assign(current.begin(), current.end());
        return out;
      }
    } else {
      current = std::move(next);
      stable_since = g;
      agree = 0;
    }
  }
  throw NoStabilization(generation_cap);
}

namespace {

std::vector<std::size_t> occurrence_starts(Segment const& ambient, Segment const& w) {
  std::vector<std::size_t> out;
  auto const& hay = ambient.sets();
  auto const& pat = w.sets();
  if (pat.empty() || pat.size() > hay.size()) return out;
  for (std::size_t off = 0; off + pat.size() <= hay.size(); ++off) {
    bool ok = true;
    for (std::size_t k = 0; k < pat.size(); ++k) {
      if (!(hay[off + k] == pat[k])) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(off);
  }
  return out;
}

}  // namespace

GapReport repetitivity_scan(Segment const& ambient,
                            std::vector<std::vector<Segment>> const& required_per_length,
                            int max_window_length, double bound, bool strict,
                            std::string id) {
  GapReport report;
  report.system_id = std::move(id);
  report.max_window_length = max_window_length;
  report.ambient_length = ambient.length();
  report.bound = bound;
  report.max_gap.assign(max_window_length, 0);
  report.min_occurrences.assign(max_window_length, 0);

  for (int n = 1; n <= max_window_length; ++n) {
    long worst_gap = 0;
    int fewest = -1;
    for (auto const& w : required_per_length.at(n - 1)) {
      auto starts = occurrence_starts(ambient, w);
      if (starts.size() < 3) {
        // The reversed orientation belongs to the mirror sequence; a window
        // absent in this orientation must occur reversed.
        auto rev_starts = occurrence_starts(ambient, w.reversed());
        if (starts.empty() && rev_starts.size() >= 3) continue;
        if (strict) {
          throw InsufficientAmbient("window " + w.str() + " occurs "
                                    + std::to_string(starts.size())
                                    + " times in the ambient segment");
        }
        report.unbounded.push_back(w.str());
        continue;
      }
      long gap = 0;
      for (std::size_t i = 1; i < starts.size(); ++i) {
        gap = std::max(gap, static_cast<long>(starts[i] - starts[i - 1]));
      }
      worst_gap = std::max(worst_gap, gap);
      int occ = static_cast<int>(starts.size());
      fewest = fewest < 0 ? occ : std::min(fewest, occ);
    }
    report.max_gap[n - 1] = worst_gap;
    report.min_occurrences[n - 1] = fewest < 0 ? 0 : fewest;
    if (worst_gap > 0) {
      report.fitted_L = std::max(report.fitted_L, double(worst_gap) / n);
    }
  }
  for (int n = 2; n <= max_window_length; ++n) {
    if (report.max_gap[n - 1] < report.max_gap[n - 2]) report.monotone = false;
  }
  report.pass = report.unbounded.empty() && report.monotone;
  if (bound > 0) {
    for (int n = 1; n <= max_window_length; ++n) {
      if (report.max_gap[n - 1] > bound * n) report.pass = false;
    }
  }
  return report;
}

GapReport repetitivity(SubstitutionSystem const& system, int max_window_length,
                       int ambient_generation, double bound) {
  std::vector<std::vector<Segment>> required;
  for (int n = 1; n <= max_window_length; ++n) {
    required.push_back(stable_subwords(system, n).items);
  }
  Segment const& ambient = system.longest_of(ambient_generation);
  auto report = repetitivity_scan(ambient, required, max_window_length, bound,
                                  /*strict=*/true, system.id());
  report.ambient_generation = ambient_generation;
  return report;
}

}  // namespace schreier
