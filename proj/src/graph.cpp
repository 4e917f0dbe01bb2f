#include "schreier/graph.hpp"

#include <algorithm>

namespace schreier {

Word parse_word(Alphabet const& a, std::string const& text) {
  Word out;
  if (text.find_first_of(" \t") != std::string::npos) {
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
      if (i >= text.size()) break;
      std::size_t j = text.find_first_of(" \t", i);
      if (j == std::string::npos) j = text.size();
      out.push_back(a.index_checked(text.substr(i, j - i)));
      i = j;
    }
    return out;
  }
  std::size_t i = 0;
  while (i < text.size()) {
    int best = -1;
    std::size_t best_len = 0;
    for (int s = 0; s < a.size(); ++s) {
      auto const& name = a.name(s);
      if (name.size() > best_len && text.compare(i, name.size(), name) == 0) {
        best = s;
        best_len = name.size();
      }
    }
    if (best < 0) throw Error("cannot tokenize word at '" + text.substr(i) + "'");
    out.push_back(best);
    i += best_len;
  }
  return out;
}

std::string word_str(Alphabet const& a, Word const& w) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += a.name(w[i]);
  }
  return out;
}

Word reversed_word(Word w) {
  std::reverse(w.begin(), w.end());
  return w;
}

Word concat_words(Word const& u, Word const& v) {
  Word out = u;
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

Word commutator(Word const& u, Word const& v) {
  return concat_words(concat_words(u, v), concat_words(reversed_word(u), reversed_word(v)));
}

Word conjugate(Word const& u, Word const& v) {
  return concat_words(concat_words(v, u), reversed_word(v));
}

Word power(Word const& u, int k) {
  Word out;
  for (int i = 0; i < k; ++i) out.insert(out.end(), u.begin(), u.end());
  return out;
}

int act(Segment const& s, int symbol, int pos) {
  int const len = static_cast<int>(s.length());
  if (pos < 0 || pos > len) throw Error("vertex out of range");
  bool has_right = pos < len;
  bool has_left = pos > 0;
  if (has_right && s.set(pos).contains(symbol)) return pos + 1;
  if (has_left && s.set(pos - 1).contains(symbol)) return pos - 1;
  if (has_left && has_right) return pos;
  throw BoundaryUndecidable("action of symbol at truncation boundary vertex "
                            + std::to_string(pos));
}

int apply_word_at(Segment const& s, Word const& w, int pos) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    pos = act(s, *it, pos);
  }
  return pos;
}

std::vector<int> LinearGraph::loops_at(int pos) const {
  int const len = static_cast<int>(backing_.length());
  if (pos <= 0 || pos >= len) {
    throw BoundaryUndecidable("loops undetermined at boundary vertex");
  }
  std::vector<int> out;
  for (int s = 0; s < backing_.alphabet()->size(); ++s) {
    if (!backing_.set(pos).contains(s) && !backing_.set(pos - 1).contains(s)) {
      out.push_back(s);
    }
  }
  return out;
}

Window::Window(Segment sets) : sets_(std::move(sets)) {
  if (sets_.length() == 0 || sets_.length() % 2 != 0) {
    throw Error("window wants a positive even number of sets");
  }
}

int Window::apply(Word const& w) const {
  if (static_cast<int>(w.size()) > radius()) {
    throw WordTooLong(w.size(), radius());
  }
  return apply_word_at(sets_, w, center()) - center();
}

}  // namespace schreier
