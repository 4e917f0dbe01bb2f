#include "schreier/segment.hpp"

#include <algorithm>

namespace schreier {

Segment::Segment(AlphabetPtr alphabet, std::vector<LabelSet> sets)
    : alphabet_(std::move(alphabet)), sets_(std::move(sets)) {
  if (!alphabet_) throw Error("segment needs an alphabet");
  for (std::size_t i = 0; i + 1 < sets_.size(); ++i) {
    if (sets_[i].intersects(sets_[i + 1])) {
      throw AdmissibilityViolation(i);
    }
  }
}

Segment Segment::reversed() const {
  std::vector<LabelSet> r(sets_.rbegin(), sets_.rend());
  return Segment(alphabet_, std::move(r));
}

Segment Segment::subsegment(std::size_t from, std::size_t count) const {
  if (from + count > sets_.size()) throw Error("subsegment out of range");
  return Segment(alphabet_,
                 std::vector<LabelSet>(sets_.begin() + from, sets_.begin() + from + count));
}

std::string Segment::str() const {
  if (sets_.empty()) return "[]";
  std::string out;
  for (auto const& s : sets_) {
    out += '[';
    bool first = true;
    for (int m : s.members()) {
      if (!first) out += ',';
      out += alphabet_->name(m);
      first = false;
    }
    out += ']';
  }
  return out;
}

Segment Segment::parse(AlphabetPtr const& alphabet, std::string const& text) {
  std::vector<LabelSet> sets;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '[') throw ParseError("expected '[' in segment: " + text);
    std::size_t close = text.find(']', i);
    if (close == std::string::npos) throw ParseError("unterminated '[' in segment: " + text);
    std::string body = text.substr(i + 1, close - i - 1);
    i = close + 1;
    skip_ws();
    if (body.empty()) {
      // "[]" is the empty (single-vertex) segment and must stand alone.
      if (!sets.empty() || i < text.size()) {
        throw ParseError("empty set token in segment: " + text);
      }
      return Segment(alphabet);
    }
    uint32_t bits = 0;
    std::size_t p = 0;
    while (p <= body.size()) {
      std::size_t comma = body.find(',', p);
      std::string name = body.substr(p, comma == std::string::npos ? std::string::npos
                                                                   : comma - p);
      while (!name.empty() && name.front() == ' ') name.erase(name.begin());
      while (!name.empty() && name.back() == ' ') name.pop_back();
      bits |= uint32_t{1} << alphabet->index_checked(name);
      if (comma == std::string::npos) break;
      p = comma + 1;
    }
    sets.emplace_back(bits);
  }
  return Segment(alphabet, std::move(sets));
}

namespace {

void check_junction(std::vector<LabelSet> const& acc, LabelSet const& next) {
  if (!acc.empty() && acc.back().intersects(next)) {
    throw AdmissibilityViolation(acc.size() - 1);
  }
}

void append_all(std::vector<LabelSet>& acc, Segment const& s) {
  for (auto const& x : s.sets()) {
    check_junction(acc, x);
    acc.push_back(x);
  }
}

}  // namespace

Segment concat(Segment const& left, Segment const& connector, Segment const& right) {
  std::vector<LabelSet> acc;
  acc.reserve(left.length() + connector.length() + right.length());
  append_all(acc, left);
  append_all(acc, connector);
  append_all(acc, right);
  return Segment(left.alphabet(), std::move(acc));
}

Segment concat(Segment const& left, Segment const& right) {
  std::vector<LabelSet> acc;
  acc.reserve(left.length() + right.length());
  append_all(acc, left);
  append_all(acc, right);
  return Segment(left.alphabet(), std::move(acc));
}

Segment reverse(Segment const& s) { return s.reversed(); }

std::vector<CopyMatch> find_copies(Segment const& ambient, Segment const& pattern) {
  std::vector<CopyMatch> out;
  std::size_t const n = pattern.length();
  if (n == 0 || n > ambient.length()) return out;
  Segment rev = pattern.reversed();
  bool symmetric = rev == pattern;
  auto const& hay = ambient.sets();
  auto matches_at = [&](std::vector<LabelSet> const& pat, std::size_t off) {
    for (std::size_t k = 0; k < n; ++k) {
      if (!(hay[off + k] == pat[k])) return false;
    }
    return true;
  };
  for (std::size_t off = 0; off + n <= hay.size(); ++off) {
    if (matches_at(pattern.sets(), off)) {
      out.push_back({off, false, n});
    } else if (!symmetric && matches_at(rev.sets(), off)) {
      out.push_back({off, true, n});
    }
  }
  for (std::size_t i = 0; i + 1 < out.size(); ++i) {
    if (out[i].offset + n > out[i + 1].offset) {
      throw Error("overlapping copies of pattern " + pattern.str()
                  + " at offsets " + std::to_string(out[i].offset) + ", "
                  + std::to_string(out[i + 1].offset));
    }
  }
  return out;
}

}  // namespace schreier
