#pragma once

#include <vector>

#include "cantor/error.hpp"
#include "cantor/measure.hpp"

namespace cantor {

/// Raised when one level of a tower disagrees with the marginal of the next.
///
/// `level` is the coarser level n, `word` the first leaf (lexicographic) at which the marginal
/// of level n+1 exceeds ν_n, `lhs` = ν_n(M(word)) and `rhs` the marginal's value there.
class ConsistencyViolationError : public Error {
 public:
  ConsistencyViolationError(std::size_t level, Word word, Rational lhs, Rational rhs);
  std::size_t level() const { return level_; }
  const Word& word() const { return word_; }
  const Rational& lhs() const { return lhs_; }
  const Rational& rhs() const { return rhs_; }

 private:
  std::size_t level_;
  Word word_;
  Rational lhs_;
  Rational rhs_;
};

/// Probability measures ν_0 … ν_N with depths d_n = floor(d_{n+1}/2) and ν_n = Δ(ν_{n+1}).
class ConsistentTower {
 public:
  const std::vector<DyadicMeasure>& levels() const { return levels_; }
  std::size_t size() const { return levels_.size(); }
  const DyadicMeasure& operator[](std::size_t n) const { return levels_[n]; }

  friend bool operator==(const ConsistentTower&, const ConsistentTower&) = default;

 private:
  friend ConsistentTower check_tower_consistency(std::vector<DyadicMeasure> levels);
  std::vector<DyadicMeasure> levels_;
};

ConsistentTower check_tower_consistency(std::vector<DyadicMeasure> levels);

/// Finite shadow of the joint measure on M_Δ: mass(n, w) is the value on θ_n^{-1}(M(w)) for
/// every word w of depth ≤ d_n.
class DeltaTowerJoint {
 public:
  std::size_t levels() const { return tables_.size(); }
  int depth(std::size_t n) const { return depths_.at(n); }
  const Rational& mass(std::size_t n, const Word& w) const;
  /// The leaf table at level n as a measure (the pushforward through θ_n).
  DyadicMeasure read_level(std::size_t n) const;

 private:
  friend DeltaTowerJoint extend_tower(const ConsistentTower& t);
  std::vector<int> depths_;
  std::vector<std::vector<Rational>> tables_;  // slot 2^k - 1 + index for a depth-k word
};

DeltaTowerJoint extend_tower(const ConsistentTower& t);

/// Words z_0 … z_N with z_n = Δ(z_{n+1}), every z_m a leaf of positive mass at level m, and
/// z_level extending `w`: a finite witness of a point of M_Δ through θ_level^{-1}(M(w)).
/// Requires mass(level, w) > 0.
std::vector<Word> witness_chain(const DeltaTowerJoint& joint, std::size_t level, const Word& w);

/// Validates μ_1 … μ_N (μ_n of depth n, probability, μ_n the prefix marginal of μ_{n+1}) and
/// returns μ_N. Violations report the 1-based level n.
DyadicMeasure kolmogorov_extend_prefix(const std::vector<DyadicMeasure>& marginals);

}  // namespace cantor
