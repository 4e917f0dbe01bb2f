#include "schreier/perm.hpp"

namespace schreier {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (int v : img_) {
    if (v < 0 || v >= degree() || seen[v]) throw Error("not a permutation");
    seen[v] = true;
  }
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i) {
    if (img_[i] != i) return false;
  }
  return true;
}

Perm Perm::operator*(Perm const& q) const {
  if (degree() != q.degree()) throw Error("degree mismatch");
  std::vector<int> out(img_.size());
  for (int i = 0; i < degree(); ++i) out[i] = img_[q.img_[i]];
  Perm p;
  p.img_ = std::move(out);
  return p;
}

Perm Perm::inverse() const {
  std::vector<int> out(img_.size());
  for (int i = 0; i < degree(); ++i) out[img_[i]] = i;
  Perm p;
  p.img_ = std::move(out);
  return p;
}

int Perm::parity() const {
  std::vector<bool> seen(img_.size(), false);
  int transpositions = 0;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions & 1;
}

std::vector<std::vector<int>> Perm::cycles(bool include_fixed) const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(img_.size(), false);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::vector<int> cyc;
    for (int j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      cyc.push_back(j);
    }
    if (cyc.size() > 1 || include_fixed) out.push_back(std::move(cyc));
  }
  return out;
}

std::string Perm::str() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::string out;
  for (auto const& c : cs) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(c[i]);
    }
    out += ')';
  }
  return out;
}

}  // namespace schreier
