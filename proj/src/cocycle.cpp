#include "schreier/cocycle.hpp"

namespace schreier {

std::string K4::str() const {
  if (v == 0) return "1";
  std::string out;
  if (v & 1) out += 'x';
  if (v & 2) out += 'y';
  switch (v >> 2) {
    case 1: out += 'b'; break;
    case 2: out += 'c'; break;
    case 3: out += 'd'; break;
    default: break;
  }
  return out;
}

bool system_has_xy(SubstitutionSystem const& system) {
  return system.alphabet()->contains("x") && system.alphabet()->contains("y");
}

namespace {

// Smallest generation whose J segment is long enough for the scan.
int pick_truncation(SubstitutionSystem const& system, std::size_t needed) {
  for (int g = std::max(2, system.first_generation() + 1); g <= 40; ++g) {
    if (system.segment("J", g).length() >= needed) return g;
  }
  throw Error("no J generation long enough");
}

CocycleEvaluation tau_xi(SubstitutionSystem const& system, Word const& word,
                         int working_radius) {
  int const fringe = 8;
  std::size_t needed = working_radius + fringe + word.size() + 2;
  int N = pick_truncation(system, needed);
  XiGraph xi = build_xi(system, N);
  CocycleEvaluation ev;
  ev.kind = JunctionKind::Xi;
  ev.working_radius = working_radius;
  ev.truncation_generation = N;
  ev.fringe_depth = fringe;
  for (int p = 0; p <= working_radius; ++p) {
    XiVertex img = xi.apply(word, {0, p});
    if (img.copy != 0) {
      K4 val = K4::klein(img.copy);
      ev.support.emplace_back(p, val);
      ev.product = ev.product * val;
    }
  }
  ev.fringe_clear = true;
  for (int p = working_radius + 1; p <= working_radius + fringe; ++p) {
    if (xi.apply(word, {0, p}).copy != 0) {
      ev.fringe_clear = false;
      break;
    }
  }
  return ev;
}

// The two-ray graph J^-1 z J; ray position p lives at ambient vertex
// L + 1 + p, and a crossing lands at an ambient vertex <= L.
CocycleEvaluation tau_mirror(SubstitutionSystem const& system, Word const& word,
                             char z, int working_radius) {
  int const fringe = 8;
  std::size_t needed = working_radius + fringe + word.size() + 2;
  int N = pick_truncation(system, needed);
  Segment j = system.segment("J", N);
  Segment zseg(j.alphabet(),
               {LabelSet(uint32_t{1} << j.alphabet()->index_checked(std::string(1, z)))});
  Segment mirror = concat(j.reversed(), zseg, j);
  long const L = static_cast<long>(j.length());
  K4 const val = z == 'x' ? K4::x() : K4::y();

  CocycleEvaluation ev;
  ev.kind = z == 'x' ? JunctionKind::XJunction : JunctionKind::YJunction;
  ev.working_radius = working_radius;
  ev.truncation_generation = N;
  ev.fringe_depth = fringe;
  auto crossed = [&](int p) {
    long v = L + 1 + p;
    return apply_word_at(mirror, word, static_cast<int>(v)) <= L;
  };
  for (int p = 0; p <= working_radius; ++p) {
    if (crossed(p)) {
      ev.support.emplace_back(p, val);
      ev.product = ev.product * val;
    }
  }
  ev.fringe_clear = true;
  for (int p = working_radius + 1; p <= working_radius + fringe; ++p) {
    if (crossed(p)) {
      ev.fringe_clear = false;
      break;
    }
  }
  return ev;
}

}  // namespace

CocycleEvaluation tau(SubstitutionSystem const& system, Word const& word,
                      JunctionKind kind, int working_radius) {
  if (working_radius < 0) working_radius = static_cast<int>(word.size()) + 8;
  if (working_radius < static_cast<int>(word.size())) {
    throw Error("working radius below word length");
  }
  switch (kind) {
    case JunctionKind::Xi:
      return tau_xi(system, word, working_radius);
    case JunctionKind::XJunction:
      if (!system_has_xy(system)) throw Error("system has no x junction");
      return tau_mirror(system, word, 'x', working_radius);
    default:
      if (!system_has_xy(system)) throw Error("system has no y junction");
      return tau_mirror(system, word, 'y', working_radius);
  }
}

K4 phi(SubstitutionSystem const& system, Word const& word) {
  K4 out = tau(system, word, JunctionKind::Xi).product;
  if (system_has_xy(system)) {
    out = out * tau(system, word, JunctionKind::XJunction).product;
    out = out * tau(system, word, JunctionKind::YJunction).product;
  }
  return out;
}

}  // namespace schreier
