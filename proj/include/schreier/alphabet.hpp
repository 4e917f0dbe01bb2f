#ifndef SCHREIER_ALPHABET_HPP_
#define SCHREIER_ALPHABET_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "errors.hpp"

namespace schreier {

// A finite ordered set of generator names. The order is fixed at creation
// and defines the canonical serialization of label sets. All generators are
// involutions, so no inverse decoration exists anywhere downstream.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty()) {
      throw Error("alphabet must be nonempty");
    }
    if (symbols_.size() > 32) {
      throw Error("alphabet limited to 32 symbols");
    }
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      for (std::size_t j = i + 1; j < symbols_.size(); ++j) {
        if (symbols_[i] == symbols_[j]) {
          throw Error("duplicate symbol: " + symbols_[i]);
        }
      }
    }
  }

  int size() const { return static_cast<int>(symbols_.size()); }

  std::string const& name(int i) const { return symbols_.at(i); }

  // Index of a symbol name, or -1.
  int index(std::string const& s) const {
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      if (symbols_[i] == s) return static_cast<int>(i);
    }
    return -1;
  }

  int index_checked(std::string const& s) const {
    int i = index(s);
    if (i < 0) throw Error("symbol not in alphabet: " + s);
    return i;
  }

  bool contains(std::string const& s) const { return index(s) >= 0; }

  std::vector<std::string> const& symbols() const { return symbols_; }

  bool operator==(Alphabet const& other) const { return symbols_ == other.symbols_; }

 private:
  std::vector<std::string> symbols_;
};

using AlphabetPtr = std::shared_ptr<Alphabet const>;

inline AlphabetPtr make_alphabet(std::vector<std::string> symbols) {
  return std::make_shared<Alphabet const>(std::move(symbols));
}

// A nonempty subset of an alphabet, stored as a bitmask over symbol indices.
class LabelSet {
 public:
  LabelSet() : bits_(0) {}

  explicit LabelSet(uint32_t bits) : bits_(bits) {
    if (bits_ == 0) throw Error("label set must be nonempty");
  }

  static LabelSet of(Alphabet const& a, std::initializer_list<char const*> names) {
    uint32_t b = 0;
    for (auto* n : names) b |= uint32_t{1} << a.index_checked(n);
    return LabelSet(b);
  }

  uint32_t bits() const { return bits_; }

  bool contains(int symbol) const { return (bits_ >> symbol) & 1u; }

  bool intersects(LabelSet const& other) const { return (bits_ & other.bits_) != 0; }

  int count() const { return __builtin_popcount(bits_); }

  // Members ascending by alphabet index: the canonical order.
  std::vector<int> members() const {
    std::vector<int> out;
    for (uint32_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(__builtin_ctz(b));
    }
    return out;
  }

  bool operator==(LabelSet const& o) const { return bits_ == o.bits_; }
  bool operator!=(LabelSet const& o) const { return bits_ != o.bits_; }
  bool operator<(LabelSet const& o) const { return bits_ < o.bits_; }

 private:
  uint32_t bits_;
};

}  // namespace schreier

#endif
