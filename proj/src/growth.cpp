#include "schreier/growth.hpp"

#include <map>

namespace schreier {

std::string GrowthTable::tsv() const {
  std::string out;
  for (std::size_t n = 0; n < values.size(); ++n) {
    out += std::to_string(n);
    out += '\t';
    out += std::to_string(values[n]);
    out += '\n';
  }
  return out;
}

BallAutomaton ball_automaton(WindowUniverse const& universe, int n_max,
                             uint64_t element_cap) {
  if (n_max > universe.radius) {
    throw Error("growth horizon exceeds universe radius");
  }
  int const n_sym = universe.alphabet->size();
  std::size_t const n_win = universe.windows.size();
  uint16_t const center = static_cast<uint16_t>(universe.radius);

  BallAutomaton out;
  out.radius = universe.radius;

  // Class id -> the image of every window center under the element.
  std::vector<std::vector<uint16_t>> positions;
  std::map<Digest128, std::vector<int32_t>> index;

  auto intern = [&](std::vector<uint16_t>&& pos) -> std::pair<int32_t, bool> {
    Digest128 d = digest_positions(pos);
    auto& bucket = index[d];
    for (int32_t id : bucket) {
      if (positions[id] == pos) return {id, false};
    }
    int32_t id = static_cast<int32_t>(positions.size());
    positions.push_back(std::move(pos));
    bucket.push_back(id);
    return {id, true};
  };

  std::vector<uint16_t> id_pos(n_win, center);
  intern(std::move(id_pos));
  out.first_length.push_back(0);
  out.next.emplace_back(n_sym, -1);
  out.gamma.push_back(1);

  std::vector<int32_t> frontier{0};
  for (int len = 1; len <= n_max; ++len) {
    std::vector<int32_t> next_frontier;
    for (int32_t cls : frontier) {
      for (int s = 0; s < n_sym; ++s) {
        std::vector<uint16_t> pos(n_win);
        auto const& src = positions[cls];
        for (std::size_t w = 0; w < n_win; ++w) {
          pos[w] = static_cast<uint16_t>(act(universe.windows[w], s, src[w]));
        }
        auto [id, fresh] = intern(std::move(pos));
        out.next[cls][s] = id;
        if (fresh) {
          out.first_length.push_back(len);
          out.next.emplace_back(n_sym, -1);
          next_frontier.push_back(id);
          if (positions.size() > element_cap) {
            out.capped = true;
            return out;
          }
        }
      }
    }
    out.gamma.push_back(positions.size());
    frontier = std::move(next_frontier);
    if (frontier.empty()) break;  // the whole finite group enumerated
  }
  while (out.gamma.size() <= static_cast<std::size_t>(n_max)) {
    out.gamma.push_back(positions.size());
  }
  return out;
}

GrowthTable growth_on_universe(WindowUniverse const& universe, int n_max,
                               uint64_t element_cap) {
  auto aut = ball_automaton(universe, n_max, element_cap);
  GrowthTable t;
  t.system_id = universe.system_id;
  t.radius = universe.radius;
  t.universe_generation = universe.stabilized_at;
  t.values = std::move(aut.gamma);
  t.capped = aut.capped;
  t.element_cap = element_cap;
  return t;
}

GrowthTable growth(SubstitutionSystem const& system, int n_max, int radius,
                   uint64_t element_cap) {
  if (radius < 0) radius = n_max;
  if (radius < n_max) throw Error("growth needs radius >= n_max");
  auto universe = window_universe(system, radius);
  return growth_on_universe(universe, n_max, element_cap);
}

}  // namespace schreier
