#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "cantor/rational.hpp"
#include "cantor/word.hpp"

namespace cantor {

/// A finite union of basic cylinders, stored canonically as the set of depth-d leaf words it
/// contains. Two CylinderSets at different depths may denote the same subset of M; use
/// `same_subset` to compare denotations and `==` for representation equality.
class CylinderSet {
 public:
  /// Sets wider than this are refused by operations that enumerate all 2^d leaves.
  static constexpr int kMaxEnumerableDepth = 30;

  CylinderSet() = default;
  explicit CylinderSet(int depth);
  CylinderSet(int depth, std::vector<std::uint64_t> leaf_indices);

  static CylinderSet from_words(int depth, std::span<const Word> words);
  static CylinderSet full(int depth);
  static CylinderSet empty(int depth) { return CylinderSet(depth); }
  /// The basic cylinder M(w), at depth w.depth().
  static CylinderSet basic(const Word& w);

  int depth() const { return depth_; }
  const std::vector<std::uint64_t>& leaves() const { return leaves_; }
  std::vector<Word> words() const;
  std::size_t size() const { return leaves_.size(); }
  bool is_empty() const { return leaves_.empty(); }

  bool contains_leaf(std::uint64_t index) const;
  /// True when the basic cylinder M(w) lies inside this set (w of any depth).
  bool contains(const Word& w) const;

  /// Smallest-depth representation of the same subset.
  CylinderSet coarsen() const;

  friend bool operator==(const CylinderSet&, const CylinderSet&) = default;

 private:
  int depth_ = 0;
  std::vector<std::uint64_t> leaves_;
};

enum class BoolOp { Union, Intersect, Complement, Difference };

/// Rewrites `s` at depth d ≥ s.depth() by replacing each word with all of its extensions.
CylinderSet refine(const CylinderSet& s, int d);

/// Set algebra after refining both operands to the larger depth; Complement ignores `b`.
CylinderSet boolean_op(const CylinderSet& a, const CylinderSet& b, BoolOp op);
CylinderSet unite(const CylinderSet& a, const CylinderSet& b);
CylinderSet intersect(const CylinderSet& a, const CylinderSet& b);
CylinderSet complement(const CylinderSet& a);
CylinderSet difference(const CylinderSet& a, const CylinderSet& b);

bool same_subset(const CylinderSet& a, const CylinderSet& b);
bool is_subset(const CylinderSet& a, const CylinderSet& b);

/// Odd-indexed bits z_1 z_3 … of w: the word-level Δ (depth floor(d/2)).
Word delta_word(const Word& w);
/// Even-indexed bits z_0 z_2 … of w, truncated to depth floor(d/2).
Word even_word(const Word& w);

/// Δ^{-1}(s) at depth 2·s.depth().
CylinderSet delta_preimage(const CylinderSet& s);

/// Θ on words: even positions from `a`, odd positions from `b`.
Word theta_interleave(const Word& a, const Word& b);

struct DyadicInterval {
  Rational lo;
  Rational hi;
  friend bool operator==(const DyadicInterval&, const DyadicInterval&) = default;
};

/// Closure of b(M(c)) where b(z) = Σ 2^{-n-1} z_n.
DyadicInterval binary_interval(const Word& c);

/// k-th nonempty basic cylinder (k ≥ 1), ordered by depth then lexicographically.
Word enumerate_basis(std::uint64_t k);
/// Inverse of enumerate_basis.
std::uint64_t basis_position(const Word& w);
/// Number of basic cylinders of depth 1..d, i.e. 2^{d+1} - 2.
std::uint64_t basis_count_through(int d);

/// (component, bit position) targeted by each output bit.
using Pairing = std::vector<std::pair<std::size_t, int>>;

/// The pairing n ↦ (n mod s, n / s) over the first `length` output positions.
Pairing round_robin_pairing(std::size_t components, int length);

/// Output bit n = bit k of words[s] where (s, k) = pairing[n]; output depth = |S| · depth.
Word interleave_map(std::span<const Word> words, const Pairing& pairing);

}  // namespace cantor
