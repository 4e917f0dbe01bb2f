#include "schreier/separation.hpp"

#include <algorithm>
#include <map>

namespace schreier {

namespace {

// All words over {x, y} of length exactly N, lexicographic with x < y,
// concatenated. Every shorter word is a prefix of one of them.
std::string superword_xy(int N) {
  std::string out;
  for (int m = 0; m < (1 << N); ++m) {
    for (int i = N - 1; i >= 0; --i) {
      out += ((m >> i) & 1) ? 'y' : 'x';
    }
  }
  return out;
}

// The label word moving the left endpoint of a segment to its right
// endpoint; one letter per set, smallest member of each, written so that
// the first crossing is applied first (rightmost).
Word path_word(Segment const& s) {
  Word out;
  for (std::size_t i = s.length(); i-- > 0;) {
    out.push_back(s.set(i).members().front());
  }
  return out;
}

}  // namespace

SeparationReport separation_experiment(AlphaSequence const& prefix, int N) {
  if (N < 1) throw Error("separation wants N >= 1");
  SeparationReport report;
  report.k = static_cast<int>(prefix.entries.size());
  report.N = N;
  report.superword = superword_xy(N);

  AlphaSequence alpha;
  alpha.entries = prefix.entries;
  alpha.entries.push_back(AlphaSequence::Entry{false, report.superword});
  alpha.tail = AlphaSequence::Tail::Sigma;
  auto system = make_galpha(alpha);
  report.system_id = system.id();

  Segment const& ik = system.segment("I", report.k);
  report.M = static_cast<int>(ik.length()) + 1;
  Word g = path_word(ik);

  auto const& a = *system.alphabet();
  int const xi = a.index_checked("x");
  int const yi = a.index_checked("y");

  // g_v = t_n g . t_{n-1} g ... t_1 g for every v = t_1..t_n, n <= N.
  std::vector<std::pair<std::string, Word>> elements;
  for (int n = 1; n <= N; ++n) {
    for (int m = 0; m < (1 << n); ++m) {
      std::string v;
      Word w;
      for (int i = 0; i < n; ++i) v += ((m >> i) & 1) ? 'y' : 'x';
      for (int i = n - 1; i >= 0; --i) {
        w.push_back(v[i] == 'y' ? yi : xi);
        w.insert(w.end(), g.begin(), g.end());
      }
      if (w.size() != static_cast<std::size_t>(n) * report.M) {
        throw Error("separation element has wrong length");
      }
      elements.emplace_back(v, std::move(w));
    }
  }
  report.element_count = static_cast<int>(elements.size());

  report.signature_radius = N * report.M;
  auto universe = window_universe(system, report.signature_radius);
  std::map<std::vector<int16_t>, std::string> seen;
  report.distinct = true;
  for (auto const& [v, w] : elements) {
    auto sig = signature(w, universe);
    auto [it, fresh] = seen.emplace(sig.offsets, v);
    if (!fresh) {
      report.distinct = false;
      report.failure = it->second + " vs " + v;
      break;
    }
  }
  if (report.distinct) {
    for (int n = 1; n <= N; ++n) {
      report.bounds.emplace_back(n * report.M, uint64_t{1} << n);
    }
  }
  report.pass = report.distinct;
  return report;
}

BallAgreementReport ball_agreement(AlphaSequence const& a1, AlphaSequence const& a2,
                                   int radius) {
  BallAgreementReport report;
  report.radius = radius;
  auto s1 = make_galpha(a1);
  auto s2 = make_galpha(a2);
  report.id1 = s1.id();
  report.id2 = s2.id();

  auto u1 = window_universe(s1, radius);
  auto u2 = window_universe(s2, radius);
  report.universes_equal = u1.windows == u2.windows;
  if (!report.universes_equal) {
    for (int r = 1; r <= radius; ++r) {
      auto v1 = window_universe(s1, r);
      auto v2 = window_universe(s2, r);
      if (!(v1.windows == v2.windows)) {
        report.first_disagreement = r;
        break;
      }
    }
    report.agree = false;
    return report;
  }
  auto b1 = ball_automaton(u1, radius);
  auto b2 = ball_automaton(u2, radius);
  report.automata_equal = b1 == b2;
  report.gamma1 = b1.gamma;
  report.gamma2 = b2.gamma;
  report.agree = report.automata_equal;
  if (!report.agree) {
    for (std::size_t i = 0; i < std::min(b1.gamma.size(), b2.gamma.size()); ++i) {
      if (b1.gamma[i] != b2.gamma[i]) {
        report.first_disagreement = static_cast<int>(i);
        break;
      }
    }
  }
  return report;
}

}  // namespace schreier
