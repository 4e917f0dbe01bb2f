#ifndef SCHREIER_PERM_GROUP_HPP_
#define SCHREIER_PERM_GROUP_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include "perm.hpp"

namespace schreier {

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(int n);

// Deterministic Schreier-Sims stabilizer chain; exact orders for the
// moderate degrees this project works at.
class StabilizerChain {
 public:
  explicit StabilizerChain(int degree) : degree_(degree) {}

  void extend(Perm const& g);

  BigInt order() const;

  bool contains(Perm const& g) const;

  int degree() const { return degree_; }

 private:
  struct Level {
    int base_point;
    std::vector<Perm> gens;         // strong generators stored at this level
    std::vector<int> orbit;         // discovery order
    std::vector<int> where;         // point -> transversal index or -1
    std::vector<Perm> transversal;  // rep u with u(base_point) = point
  };

  std::vector<Perm> acting_gens(std::size_t level) const;
  void rebuild_orbit(std::size_t level);
  std::pair<Perm, std::size_t> strip(Perm g) const;
  bool close_once();  // one Schreier-condition pass; true if anything changed

  int degree_;
  std::vector<Level> levels_;
};

BigInt group_order(std::vector<Perm> const& gens, int degree);

enum class GroupClass { Trivial, Symmetric, Alternating, Other };

struct Classification {
  GroupClass cls;
  BigInt order;
  std::string str() const;
};

// Compares the generated group's order against degree! and degree!/2.
Classification classify_on_support(std::vector<Perm> const& gens, int degree);

}  // namespace schreier

#endif
