#include "schreier/phi_suite.hpp"

#include <random>

namespace schreier {

namespace {

int span_order(std::vector<K4> const& values) {
  // Rank over Z/2 of 4-bit vectors.
  uint8_t basis[4] = {0, 0, 0, 0};
  int rank = 0;
  for (auto v : values) {
    uint8_t x = v.v;
    for (int bit = 3; bit >= 0 && x; --bit) {
      if (!((x >> bit) & 1)) continue;
      if (basis[bit]) {
        x ^= basis[bit];
      } else {
        basis[bit] = x;
        ++rank;
        x = 0;
      }
    }
  }
  return 1 << rank;
}

}  // namespace

PhiReport phi_suite(SubstitutionSystem const& system, int random_pairs, uint64_t seed) {
  PhiReport report;
  report.system_id = system.id();
  auto const& a = *system.alphabet();
  bool const xy = system_has_xy(system);
  report.expected_order = xy ? 16 : 4;

  std::vector<K4> images;
  report.fringe_ok = true;
  for (int s = 0; s < a.size(); ++s) {
    Word w{s};
    K4 img = phi(system, w);
    images.push_back(img);
    report.generator_images.emplace_back(a.name(s), img.str());
    auto ev = tau(system, w, JunctionKind::Xi);
    if (!ev.fringe_clear) report.fringe_ok = false;
  }
  report.image_group_order = span_order(images);
  report.surjective = report.image_group_order == report.expected_order;

  std::mt19937_64 rng(seed);
  auto random_word = [&](std::size_t len) {
    Word w;
    for (std::size_t i = 0; i < len; ++i) {
      w.push_back(static_cast<int>(rng() % a.size()));
    }
    return w;
  };
  report.hom_ok = true;
  for (int i = 0; i < random_pairs; ++i) {
    Word u = random_word(1 + rng() % 6);
    Word v = random_word(1 + rng() % 6);
    K4 lhs = phi(system, concat_words(u, v));
    K4 rhs = phi(system, u) * phi(system, v);
    if (!(lhs == rhs)) {
      report.hom_ok = false;
      break;
    }
  }
  report.hom_pairs_checked = random_pairs;

  if (!xy && a.contains("a2") && a.contains("b")) {
    Word comm = commutator(Word{a.index_checked("a2")}, Word{a.index_checked("b")});
    auto ev = tau(system, comm, JunctionKind::Xi);
    report.tau_support = static_cast<int>(ev.support.size());
    K4 expect = K4::klein(1);  // b
    bool values_ok = true;
    for (auto const& [pos, val] : ev.support) {
      if (!(val == expect)) values_ok = false;
    }
    report.tau_value = ev.support.empty() ? "" : ev.support.front().second.str();
    report.tau_ok = report.tau_support == 2 && values_ok && ev.fringe_clear
                    && ev.product.trivial();
  } else {
    report.tau_ok = true;
  }

  report.pass = report.surjective && report.hom_ok && report.tau_ok && report.fringe_ok;
  return report;
}

Json to_json(PhiReport const& r) {
  Json j;
  j["system"] = r.system_id;
  j["check"] = "phi";
  Json images = Json::array();
  for (auto const& [gen, img] : r.generator_images) {
    images.push_back(Json{{"generator", gen}, {"phi", img}});
  }
  j["generator_images"] = images;
  j["image_group_order"] = r.image_group_order;
  j["expected_order"] = r.expected_order;
  j["surjective"] = r.surjective;
  j["hom_pairs_checked"] = r.hom_pairs_checked;
  j["hom_ok"] = r.hom_ok;
  j["tau_support"] = r.tau_support;
  j["tau_value"] = r.tau_value;
  j["tau_ok"] = r.tau_ok;
  j["fringe_ok"] = r.fringe_ok;
  j["pass"] = r.pass;
  return j;
}

}  // namespace schreier
