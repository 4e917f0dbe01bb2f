#ifndef SCHREIER_PHI_SUITE_HPP_
#define SCHREIER_PHI_SUITE_HPP_

#include "cocycle.hpp"
#include "report.hpp"

namespace schreier {

// The quotient-map certificate bundle: generator images, surjectivity onto
// the junction target group, the homomorphism identity on random pairs, and
// (for the Klein-only systems) the two-point support of the [a2, b] record.
struct PhiReport {
  std::string system_id;
  std::vector<std::pair<std::string, std::string>> generator_images;
  int image_group_order = 0;
  int expected_order = 0;
  bool surjective = false;
  int hom_pairs_checked = 0;
  bool hom_ok = false;
  int tau_support = -1;  // -1 when the check does not apply
  std::string tau_value;
  bool tau_ok = false;
  bool fringe_ok = false;
  bool pass = false;
};

PhiReport phi_suite(SubstitutionSystem const& system, int random_pairs = 200,
                    uint64_t seed = 12345);

Json to_json(PhiReport const& r);

}  // namespace schreier

#endif
