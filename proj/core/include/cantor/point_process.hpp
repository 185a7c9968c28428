#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cantor/cylinder.hpp"
#include "cantor/rational.hpp"
#include "cantor/word.hpp"

namespace cantor {

/// An ℕ-valued measure of total mass n at depth d, stored as the sorted multiset of its n leaves.
class PointConfig {
 public:
  PointConfig() = default;
  PointConfig(int depth, std::vector<std::uint64_t> leaves);
  static PointConfig from_words(int depth, std::span<const Word> words);

  int depth() const { return depth_; }
  std::size_t n() const { return points_.size(); }
  const std::vector<std::uint64_t>& points() const { return points_; }
  std::vector<Word> words() const;

  friend bool operator==(const PointConfig&, const PointConfig&) = default;
  friend auto operator<=>(const PointConfig&, const PointConfig&) = default;

 private:
  int depth_ = 0;
  std::vector<std::uint64_t> points_;
};

/// Points of p (with multiplicity) lying in s.
std::uint64_t pp_count(const PointConfig& p, const CylinderSet& s);

/// Σ_{k=1}^{K} 2^{-k} |p(C_k) - q(C_k)|.
Rational rho_pp(const PointConfig& p, const PointConfig& q, std::uint64_t terms);

/// A map from depth-`from` words to depth-`to` words; entries may be missing.
class WordMap {
 public:
  WordMap(int from, int to, std::vector<std::optional<std::uint64_t>> table);

  static WordMap identity(int depth);
  /// Odd-bit extraction, depth d → floor(d/2).
  static WordMap delta(int depth);
  static WordMap constant(int depth, const Word& target);

  int from() const { return from_; }
  int to() const { return to_; }
  const std::vector<std::optional<std::uint64_t>>& table() const { return table_; }
  bool total() const;
  Word operator()(const Word& w) const;

  friend bool operator==(const WordMap&, const WordMap&) = default;

 private:
  int from_;
  int to_;
  std::vector<std::optional<std::uint64_t>> table_;
};

/// g ∘ f; undefined wherever either side is.
WordMap compose(const WordMap& g, const WordMap& f);

/// pp(f)(p) = p f^{-1}: the multiset of images.
PointConfig pp_pushforward(const PointConfig& p, const WordMap& f);

struct PointExtraction {
  std::vector<std::size_t> indices;
  PointConfig limit;
};

/// The most frequent configuration (earliest first occurrence on ties) and where it occurs.
PointExtraction pp_extract(std::span<const PointConfig> seq);

}  // namespace cantor
