#ifndef SCHREIER_PERM_HPP_
#define SCHREIER_PERM_HPP_

#include <string>
#include <vector>

#include "errors.hpp"

namespace schreier {

// A permutation of 0..degree-1 as an image table.
class Perm {
 public:
  Perm() = default;
  explicit Perm(int degree) : img_(degree) {
    for (int i = 0; i < degree; ++i) img_[i] = i;
  }
  explicit Perm(std::vector<int> images);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator[](int i) const { return img_[i]; }
  std::vector<int> const& images() const { return img_; }

  bool is_identity() const;

  // (p * q)(x) = p(q(x)).
  Perm operator*(Perm const& q) const;
  Perm inverse() const;

  // 0 for even, 1 for odd.
  int parity() const;

  std::vector<std::vector<int>> cycles(bool include_fixed = false) const;
  // Cycle notation, e.g. "(0 1)(3 4 5)"; "()" for the identity.
  std::string str() const;

  bool operator==(Perm const& o) const { return img_ == o.img_; }
  bool operator!=(Perm const& o) const { return img_ != o.img_; }
  bool operator<(Perm const& o) const { return img_ < o.img_; }

 private:
  std::vector<int> img_;
};

}  // namespace schreier

#endif
