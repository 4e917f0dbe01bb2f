#include "schreier/perm_group.hpp"

namespace schreier {

BigInt factorial(int n) {
  BigInt out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

std::vector<Perm> StabilizerChain::acting_gens(std::size_t level) const {
  // S_i is generated by everything stored at this level or deeper.
  std::vector<Perm> out;
  for (std::size_t j = level; j < levels_.size(); ++j) {
    out.insert(out.end(), levels_[j].gens.begin(), levels_[j].gens.end());
  }
  return out;
}

void StabilizerChain::rebuild_orbit(std::size_t level) {
  auto& lv = levels_[level];
  auto gens = acting_gens(level);
  lv.orbit.assign(1, lv.base_point);
  lv.where.assign(degree_, -1);
  lv.where[lv.base_point] = 0;
  lv.transversal.assign(1, Perm(degree_));
  for (std::size_t i = 0; i < lv.orbit.size(); ++i) {
    int p = lv.orbit[i];
    for (auto const& s : gens) {
      int q = s[p];
      if (lv.where[q] == -1) {
        lv.where[q] = static_cast<int>(lv.orbit.size());
        lv.orbit.push_back(q);
        lv.transversal.push_back(s * lv.transversal[i]);
      }
    }
  }
}

std::pair<Perm, std::size_t> StabilizerChain::strip(Perm g) const {
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    int x = g[levels_[i].base_point];
    int w = levels_[i].where.empty() ? -1 : levels_[i].where[x];
    if (w == -1) return {std::move(g), i};
    g = levels_[i].transversal[w].inverse() * g;
  }
  return {std::move(g), levels_.size()};
}

void StabilizerChain::extend(Perm const& g) {
  if (g.degree() != degree_) throw Error("degree mismatch");
  auto [res, lvl] = strip(g);
  if (res.is_identity()) return;
  if (lvl == levels_.size()) {
    int moved = -1;
    for (int i = 0; i < degree_; ++i) {
      if (res[i] != i) {
        moved = i;
        break;
      }
    }
    levels_.push_back(Level{moved, {}, {}, {}, {}});
  }
  levels_[lvl].gens.push_back(std::move(res));
  for (std::size_t i = 0; i <= lvl; ++i) rebuild_orbit(lvl - i);
  while (close_once()) {
  }
}

bool StabilizerChain::close_once() {
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    auto gens = acting_gens(i);
    auto const& lv = levels_[i];
    for (std::size_t pi = 0; pi < lv.orbit.size(); ++pi) {
      for (auto const& s : gens) {
        int q = s[lv.orbit[pi]];
        Perm schreier_gen =
            lv.transversal[lv.where[q]].inverse() * (s * lv.transversal[pi]);
        auto [res, lvl] = strip(std::move(schreier_gen));
        if (res.is_identity()) continue;
        if (lvl == levels_.size()) {
          int moved = -1;
          for (int v = 0; v < degree_; ++v) {
            if (res[v] != v) {
              moved = v;
              break;
            }
          }
          levels_.push_back(Level{moved, {}, {}, {}, {}});
        }
        levels_[lvl].gens.push_back(std::move(res));
        for (std::size_t j = 0; j <= lvl; ++j) rebuild_orbit(lvl - j);
        return true;
      }
    }
  }
  return false;
}

BigInt StabilizerChain::order() const {
  BigInt out = 1;
  for (auto const& lv : levels_) out *= static_cast<int>(lv.orbit.size());
  return out;
}

bool StabilizerChain::contains(Perm const& g) const {
  auto [res, lvl] = strip(g);
  return lvl == levels_.size() && res.is_identity();
}

BigInt group_order(std::vector<Perm> const& gens, int degree) {
  StabilizerChain chain(degree);
  for (auto const& g : gens) chain.extend(g);
  return chain.order();
}

std::string Classification::str() const {
  switch (cls) {
    case GroupClass::Trivial: return "trivial";
    case GroupClass::Symmetric: return "symmetric";
    case GroupClass::Alternating: return "alternating";
    default: return "other(" + order.str() + ")";
  }
}

Classification classify_on_support(std::vector<Perm> const& gens, int degree) {
  if (degree < 1) throw Error("degree must be >= 1");
  BigInt ord = group_order(gens, degree);
  if (ord == 1) return {GroupClass::Trivial, ord};
  if (ord == factorial(degree)) return {GroupClass::Symmetric, ord};
  if (degree >= 3 && 2 * ord == factorial(degree)) {
    return {GroupClass::Alternating, ord};
  }
  return {GroupClass::Other, ord};
}

}  // namespace schreier
