#include "cantor/extension.hpp"

namespace cantor {

namespace {

std::size_t slot(const Word& w) { return (std::size_t{1} << w.depth()) - 1 + w.index(); }

// Both measures are probabilities of equal depth, so if they differ some leaf of `rhs` is
// strictly larger; that leaf is the reported one.
void compare_levels(std::size_t n, const DyadicMeasure& lhs, const DyadicMeasure& rhs) {
  if (lhs == rhs) return;
  for (std::uint64_t i = 0; i < lhs.leaves().size(); ++i) {
    if (rhs.leaf(i) > lhs.leaf(i)) throw ConsistencyViolationError(n, Word(i, lhs.depth()), lhs.leaf(i), rhs.leaf(i));
  }
  for (std::uint64_t i = 0; i < lhs.leaves().size(); ++i) {
    if (rhs.leaf(i) != lhs.leaf(i)) throw ConsistencyViolationError(n, Word(i, lhs.depth()), lhs.leaf(i), rhs.leaf(i));
  }
}

}  // namespace

ConsistencyViolationError::ConsistencyViolationError(std::size_t level, Word word, Rational lhs, Rational rhs)
    : Error(Errc::ConsistencyViolation, "level " + std::to_string(level) + " word " + word.str() + ": " +
                                            lhs.str() + " != " + rhs.str()),
      level_(level),
      word_(word),
      lhs_(std::move(lhs)),
      rhs_(std::move(rhs)) {}

ConsistentTower check_tower_consistency(std::vector<DyadicMeasure> levels) {
  if (levels.empty()) throw Error(Errc::EmptySequence, "tower has no levels");
  for (std::size_t n = 0; n < levels.size(); ++n) {
    if (!levels[n].is_probability()) {
      throw Error(Errc::NotProbability, "level " + std::to_string(n) + " has mass " + levels[n].mass().str());
    }
  }
  for (std::size_t n = 0; n + 1 < levels.size(); ++n) {
    if (levels[n].depth() != levels[n + 1].depth() / 2) {
      throw Error(Errc::DepthLadderBroken, "level " + std::to_string(n) + " has depth " +
                                               std::to_string(levels[n].depth()) + ", expected " +
                                               std::to_string(levels[n + 1].depth() / 2));
    }
  }
  for (std::size_t n = 0; n + 1 < levels.size(); ++n) compare_levels(n, levels[n], delta_image(levels[n + 1]));
  ConsistentTower t;
  t.levels_ = std::move(levels);
  return t;
}

const Rational& DeltaTowerJoint::mass(std::size_t n, const Word& w) const {
  if (n >= tables_.size()) throw Error(Errc::LevelExceeded, "joint has no level " + std::to_string(n));
  if (w.depth() > depths_[n]) throw Error(Errc::DepthExceeded, "word " + w.str() + " deeper than level depth");
  return tables_[n][slot(w)];
}

DyadicMeasure DeltaTowerJoint::read_level(std::size_t n) const {
  const int d = depth(n);
  const std::size_t first = (std::size_t{1} << d) - 1;
  std::vector<Rational> leaves(tables_[n].begin() + static_cast<std::ptrdiff_t>(first), tables_[n].end());
  return DyadicMeasure::from_leaves(d, std::move(leaves), Word::kMaxDepth);
}

DeltaTowerJoint extend_tower(const ConsistentTower& t) {
  DeltaTowerJoint j;
  for (const auto& nu : t.levels()) {
    const int d = nu.depth();
    std::vector<Rational> table((std::size_t{2} << d) - 1);
    // Fill leaves, then sum children upward.
    for (std::uint64_t i = 0; i < nu.leaves().size(); ++i) table[slot(Word(i, d))] = nu.leaf(i);
    for (int k = d - 1; k >= 0; --k) {
      for (std::uint64_t i = 0; i < (std::uint64_t{1} << k); ++i) {
        table[slot(Word(i, k))] = table[slot(Word(2 * i, k + 1))] + table[slot(Word(2 * i + 1, k + 1))];
      }
    }
    j.depths_.push_back(d);
    j.tables_.push_back(std::move(table));
  }
  return j;
}

std::vector<Word> witness_chain(const DeltaTowerJoint& joint, std::size_t level, const Word& w) {
  if (joint.mass(level, w).is_zero()) throw Error(Errc::InvalidArgument, "no chain through a null cylinder");
  std::vector<Word> chain(joint.levels());

  const int d = joint.depth(level);
  const int gap = d - w.depth();
  for (std::uint64_t i = w.index() << gap; i < (w.index() + 1) << gap; ++i) {
    if (!joint.mass(level, Word(i, d)).is_zero()) {
      chain[level] = Word(i, d);
      break;
    }
  }
  for (std::size_t m = level; m > 0; --m) chain[m - 1] = delta_word(chain[m]);
  for (std::size_t m = level + 1; m < joint.levels(); ++m) {
    const int dm = joint.depth(m);
    const CylinderSet pre = refine(delta_preimage(CylinderSet::basic(chain[m - 1])), dm);
    bool found = false;
    for (auto leaf : pre.leaves()) {
      if (!joint.mass(m, Word(leaf, dm)).is_zero()) {
        chain[m] = Word(leaf, dm);
        found = true;
        break;
      }
    }
    if (!found) throw Error(Errc::ConsistencyViolation, "joint is not Δ-coherent at level " + std::to_string(m));
  }
  return chain;
}

DyadicMeasure kolmogorov_extend_prefix(const std::vector<DyadicMeasure>& marginals) {
  if (marginals.empty()) throw Error(Errc::EmptySequence, "no marginals");
  for (std::size_t n = 0; n < marginals.size(); ++n) {
    if (marginals[n].depth() != static_cast<int>(n) + 1) {
      throw Error(Errc::DepthLadderBroken, "marginal " + std::to_string(n + 1) + " has depth " +
                                               std::to_string(marginals[n].depth()));
    }
    if (!marginals[n].is_probability()) {
      throw Error(Errc::NotProbability, "marginal " + std::to_string(n + 1) + " has mass " + marginals[n].mass().str());
    }
  }
  for (std::size_t n = 0; n + 1 < marginals.size(); ++n) {
    compare_levels(n + 1, marginals[n], prefix_marginal(marginals[n + 1], static_cast<int>(n) + 1));
  }
  return marginals.back();
}

}  // namespace cantor
