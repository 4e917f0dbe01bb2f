#include "schreier/linrep.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "schreier/minimality.hpp"

namespace schreier {

namespace {

// A level-n factor of a deeper segment: a named generation-n segment
// (possibly reversed) or a connector occurrence.
struct Factor {
  bool is_conn;
  int id;  // name id, or resolved connector id
  bool reversed;
  Segment value;
};

void expand(SubstitutionSystem const& system, int g, int base, int name_id,
            bool reversed, std::vector<Factor>& out) {
  if (g == base) {
    Segment const& v = system.generation(g).at(name_id);
    out.push_back({false, name_id, reversed, reversed ? v.reversed() : v});
    return;
  }
  auto rules = system.rules_for(g);
  auto it = std::find_if(rules.begin(), rules.end(),
                         [&](RuleTemplate const& r) { return r.output_name_id == name_id; });
  if (it == rules.end()) throw RuleReferenceError("no rule for name in expansion");
  auto atoms = it->atoms;
  if (reversed) std::reverse(atoms.begin(), atoms.end());
  for (auto const& atom : atoms) {
    switch (atom.kind) {
      case AtomTemplate::Kind::Seg:
        if (atom.lookback != 1) {
          throw RuleReferenceError("expansion hit a two-generation reference");
        }
        expand(system, g - 1, base, atom.name_id, reversed ^ atom.reversed, out);
        break;
      case AtomTemplate::Kind::FixedConn:
        out.push_back({true, atom.conn_id, false, system.connector(atom.conn_id)});
        break;
      case AtomTemplate::Kind::CycleConn: {
        int m = static_cast<int>(atom.cycle_ids.size());
        int slot = ((g + atom.cycle_offset) % m + m) % m;
        int id = atom.cycle_ids[slot];
        out.push_back({true, id, false, system.connector(id)});
        break;
      }
    }
  }
}

}  // namespace

LinrepReport check_linrep_hypotheses(SubstitutionSystem const& system, int n_from,
                                     int n_to, int k_cap, int expand_depth) {
  LinrepReport report;
  report.system_id = system.id();
  report.n_from = n_from;
  report.n_to = n_to;
  report.named_count = static_cast<int>(system.names().size());

  std::set<std::string> conns_seen;

  // Condition (1) and the part counts of condition (3), structurally.
  for (int g = n_from + 1; g <= n_to + 1; ++g) {
    for (auto const& rule : system.rules_for(g)) {
      int x_factors = 0, parts = 0;
      for (auto const& atom : rule.atoms) {
        ++parts;
        if (atom.kind == AtomTemplate::Kind::Seg) {
          ++x_factors;
          if (atom.lookback != 1) {
            report.failed_condition = 1;
            report.witness = "generation " + std::to_string(g) + " output "
                             + system.names().at(rule.output_name_id)
                             + " skips the previous generation";
            return report;
          }
        } else if (atom.kind == AtomTemplate::Kind::FixedConn) {
          conns_seen.insert(system.connector(atom.conn_id).str());
        } else {
          for (int id : atom.cycle_ids) conns_seen.insert(system.connector(id).str());
        }
      }
      report.max_x_factors = std::max(report.max_x_factors, x_factors);
      report.max_parts = std::max(report.max_parts, parts);
    }
  }
  report.connector_count = static_cast<int>(conns_seen.size());

  // Condition (2): adjacent factor pairs of a deep segment, searched for in
  // segments k generations above the base level.
  int const base = n_from;
  int const deep = n_from + expand_depth;
  std::map<std::string, Segment> pairs;
  for (std::size_t nm = 0; nm < system.names().size(); ++nm) {
    std::vector<Factor> factors;
    expand(system, deep, base, static_cast<int>(nm), false, factors);
    for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
      if (factors[i].value.empty() && factors[i + 1].value.empty()) continue;
      Segment pair = concat(factors[i].value, factors[i + 1].value);
      pairs.emplace(pair.str(), pair);
    }
  }
  report.pair_count = static_cast<int>(pairs.size());
  for (auto const& [token, pair] : pairs) {
    int found = 0;
    for (int k = 1; k <= k_cap; ++k) {
      for (auto const& z : system.generation(base + k)) {
        if (contains_copy(z, pair)) {
          found = k;
          break;
        }
      }
      if (found) break;
    }
    if (!found) {
      report.failed_condition = 2;
      report.witness = "factor pair " + token + " not found within "
                       + std::to_string(k_cap) + " generations";
      return report;
    }
    report.witness_k = std::max(report.witness_k, found);
  }

  report.pass = true;
  return report;
}

}  // namespace schreier
