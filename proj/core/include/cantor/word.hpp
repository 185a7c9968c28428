#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace cantor {

/// Finite bit string z_0 … z_{d-1}, naming the basic cylinder of sequences with that prefix.
///
/// Stored as the integer whose binary expansion (most significant bit first) is the word,
/// so numeric order within a depth is lexicographic order. The empty word denotes the
/// whole space and is written `-` in text form.
class Word {
 public:
  static constexpr int kMaxDepth = 62;

  Word() = default;
  Word(std::uint64_t index, int depth);

  static Word parse(std::string_view text);

  int depth() const { return depth_; }
  std::uint64_t index() const { return index_; }
  bool empty() const { return depth_ == 0; }

  /// Bit at position i (0-based, i < depth).
  int bit(int i) const { return static_cast<int>((index_ >> (depth_ - 1 - i)) & 1U); }

  Word prefix(int k) const;
  Word append(int b) const;
  bool is_prefix_of(const Word& other) const;

  std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;
  /// Canonical order: shorter words first, then lexicographic.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.depth_ <=> b.depth_; c != 0) return c;
    return a.index_ <=> b.index_;
  }

 private:
  std::uint64_t index_ = 0;
  int depth_ = 0;
};

}  // namespace cantor
