#include "schreier/report.hpp"

namespace schreier {

Json to_json(GrowthTable const& t) {
  Json j;
  j["system"] = t.system_id;
  j["radius"] = t.radius;
  j["universe_generation"] = t.universe_generation;
  j["gamma"] = t.values;
  j["capped"] = t.capped;
  return j;
}

Json to_json(GapReport const& r) {
  Json j;
  j["system"] = r.system_id;
  j["check"] = "repetitivity";
  j["max_window_length"] = r.max_window_length;
  j["ambient_generation"] = r.ambient_generation;
  j["ambient_length"] = r.ambient_length;
  j["max_gap"] = r.max_gap;
  j["min_occurrences"] = r.min_occurrences;
  j["fitted_L"] = r.fitted_L;
  j["bound"] = r.bound;
  j["unbounded_windows"] = r.unbounded;
  j["monotone"] = r.monotone;
  j["pass"] = r.pass;
  return j;
}

Json to_json(LinrepReport const& r) {
  Json j;
  j["system"] = r.system_id;
  j["check"] = "linrep_hypotheses";
  j["n_from"] = r.n_from;
  j["n_to"] = r.n_to;
  j["max_x_factors"] = r.max_x_factors;
  j["max_parts"] = r.max_parts;
  j["named_count"] = r.named_count;
  j["connector_count"] = r.connector_count;
  j["witness_k"] = r.witness_k;
  j["pair_count"] = r.pair_count;
  j["failed_condition"] = r.failed_condition;
  j["witness"] = r.witness;
  j["pass"] = r.pass;
  return j;
}

Json to_json(SymmetricCenterReport const& r) {
  Json j;
  j["system"] = r.system_id;
  j["check"] = "symmetric_centers";
  j["radius"] = r.radius;
  j["universe_generation"] = r.universe_generation;
  j["ray"] = r.ray_name;
  Json centers = Json::array();
  for (auto const& [token, found] : r.centers) {
    centers.push_back(Json{{"center", token}, {"found", found}});
  }
  j["centers"] = centers;
  j["pass"] = r.pass;
  return j;
}

Json to_json(HnReport const& r) {
  Json j;
  j["system"] = r.system_id;
  j["check"] = "hn_structure";
  j["n"] = r.n;
  j["ambient_generation"] = r.ambient_generation;
  j["jn_vertices"] = r.jn_vertices;
  j["jprev_vertices"] = r.jprev_vertices;
  j["jn_class"] = r.jn_class.str();
  j["jn_order"] = r.jn_class.order.str();
  j["jprev_class"] = r.jprev_class.str();
  j["jprev_order"] = r.jprev_class.order.str();
  j["certified_words"] = r.certified;
  j["candidates"] = r.candidates;
  j["rounds"] = r.rounds;
  j["expect_full_symmetric"] = r.expect_full_symmetric;
  j["witnesses"] = r.witnesses;
  Json perms = Json::array();
  for (auto const& [word, cycles] : r.witness_perms) {
    perms.push_back(Json{{"word", word}, {"jn_action", cycles}});
  }
  j["witness_actions"] = perms;
  j["pass"] = r.pass;
  return j;
}

Json to_json(ParityReport const& r) {
  Json j;
  j["system"] = r.system_id;
  j["check"] = "parity_embedding";
  j["n"] = r.n;
  Json rows = Json::array();
  for (auto const& row : r.rows) {
    rows.push_back(Json{{"word", row.word},
                        {"k1", row.k1},
                        {"k2", row.k2},
                        {"k1_next", row.k1n},
                        {"k2_next", row.k2n},
                        {"ok", row.ok}});
  }
  j["rows"] = rows;
  j["pass"] = r.pass;
  return j;
}

Json to_json(SeparationReport const& r) {
  Json j;
  j["system"] = r.system_id;
  j["check"] = "separation";
  j["k"] = r.k;
  j["M"] = r.M;
  j["N"] = r.N;
  j["superword"] = r.superword;
  j["element_count"] = r.element_count;
  j["signature_radius"] = r.signature_radius;
  j["distinct"] = r.distinct;
  j["failure"] = r.failure;
  Json bounds = Json::array();
  for (auto const& [len, count] : r.bounds) {
    bounds.push_back(Json{{"length", len}, {"distinct_elements", count}});
  }
  j["bounds"] = bounds;
  j["pass"] = r.pass;
  return j;
}

Json to_json(BallAgreementReport const& r) {
  Json j;
  j["check"] = "ball_agreement";
  j["system1"] = r.id1;
  j["system2"] = r.id2;
  j["radius"] = r.radius;
  j["universes_equal"] = r.universes_equal;
  j["automata_equal"] = r.automata_equal;
  j["agree"] = r.agree;
  j["first_disagreement"] = r.first_disagreement;
  j["gamma1"] = r.gamma1;
  j["gamma2"] = r.gamma2;
  return j;
}

}  // namespace schreier
