#include "cantor/measure.hpp"

#include <algorithm>
#include <map>

namespace cantor {

namespace {

void check_depth(int depth, int cap) {
  if (depth < 0 || depth > cap || depth > CylinderSet::kMaxEnumerableDepth) {
    throw Error(Errc::DepthCapExceeded,
                "measure depth " + std::to_string(depth) + " exceeds cap " + std::to_string(cap));
  }
}

std::uint64_t leaf_count(int depth) { return std::uint64_t{1} << depth; }

}  // namespace

DyadicMeasure DyadicMeasure::from_leaf_weights(int depth, std::vector<Rational> weights, const Rational& declared_mass,
                                               int depth_cap) {
  DyadicMeasure m = from_leaves(depth, std::move(weights), depth_cap);
  if (m.mass_ != declared_mass) {
    throw Error(Errc::MassMismatch, "leaf weights sum to " + m.mass_.str() + ", declared " + declared_mass.str());
  }
  return m;
}

DyadicMeasure DyadicMeasure::from_leaves(int depth, std::vector<Rational> weights, int depth_cap) {
  check_depth(depth, depth_cap);
  if (weights.size() != leaf_count(depth)) {
    throw Error(Errc::InvalidArgument, "depth " + std::to_string(depth) + " needs " +
                                           std::to_string(leaf_count(depth)) + " weights, got " +
                                           std::to_string(weights.size()));
  }
  DyadicMeasure m;
  m.depth_ = depth;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i].sign() < 0) {
      throw Error(Errc::NegativeWeight,
                  "leaf " + Word(i, depth).str() + " has negative weight " + weights[i].str());
    }
    m.mass_ += weights[i];
  }
  m.leaves_ = std::move(weights);
  return m;
}

DyadicMeasure DyadicMeasure::point_mass(const Word& w) {
  std::vector<Rational> weights(leaf_count(w.depth()));
  weights[w.index()] = Rational(1);
  return from_leaves(w.depth(), std::move(weights), Word::kMaxDepth);
}

DyadicMeasure DyadicMeasure::uniform(int depth) {
  check_depth(depth, Word::kMaxDepth);
  return from_leaves(depth, std::vector<Rational>(leaf_count(depth), Rational::pow2_inverse(depth)), depth);
}

DyadicMeasure DyadicMeasure::zero(int depth) {
  check_depth(depth, Word::kMaxDepth);
  return from_leaves(depth, std::vector<Rational>(leaf_count(depth)), depth);
}

const Rational& DyadicMeasure::leaf(const Word& w) const {
  if (w.depth() != depth_) throw Error(Errc::DepthMismatch, "leaf lookup needs a word of the measure's depth");
  return leaves_[w.index()];
}

Rational DyadicMeasure::mass_of(const Word& w) const {
  if (w.depth() > depth_) {
    throw Error(Errc::DepthExceeded, "cylinder " + w.str() + " is deeper than the measure");
  }
  const int gap = depth_ - w.depth();
  const std::uint64_t lo = w.index() << gap;
  Rational acc;
  for (std::uint64_t i = lo; i < lo + (std::uint64_t{1} << gap); ++i) acc += leaves_[i];
  return acc;
}

MeasureSeq::MeasureSeq(std::vector<DyadicMeasure> items) : items_(std::move(items)) {
  if (items_.empty()) throw Error(Errc::EmptySequence, "measure sequence is empty");
  for (const auto& m : items_) {
    if (m.depth() != items_.front().depth()) throw Error(Errc::DepthMismatch, "sequence measures differ in depth");
    if (m.mass() != items_.front().mass()) throw Error(Errc::MassMismatch, "sequence measures differ in mass");
  }
}

Rational cylinder_mass(const DyadicMeasure& m, const CylinderSet& s) {
  if (s.depth() > m.depth()) {
    throw Error(Errc::DepthExceeded, "cylinder set depth " + std::to_string(s.depth()) + " exceeds measure depth " +
                                         std::to_string(m.depth()));
  }
  Rational acc;
  for (auto i : s.leaves()) acc += m.mass_of(Word(i, s.depth()));
  return acc;
}

namespace {

DyadicMeasure select_bits(const DyadicMeasure& m, Parity parity) {
  const int h = m.depth() / 2;
  std::vector<Rational> out(leaf_count(h));
  for (std::uint64_t i = 0; i < m.leaves().size(); ++i) {
    const Word w(i, m.depth());
    const Word img = parity == Parity::Odd ? delta_word(w) : even_word(w);
    out[img.index()] += m.leaf(i);
  }
  return DyadicMeasure::from_leaves(h, std::move(out), Word::kMaxDepth);
}

}  // namespace

DyadicMeasure bit_marginal(const DyadicMeasure& m, Parity parity) {
  if (m.depth() < 2) throw Error(Errc::DepthTooSmall, "bit marginals need depth >= 2");
  return select_bits(m, parity);
}

DyadicMeasure delta_image(const DyadicMeasure& m) { return select_bits(m, Parity::Odd); }

DyadicMeasure prefix_marginal(const DyadicMeasure& m, int k) {
  if (k < 0 || k > m.depth()) throw Error(Errc::DepthExceeded, "prefix marginal deeper than the measure");
  std::vector<Rational> out(leaf_count(k));
  const int gap = m.depth() - k;
  for (std::uint64_t i = 0; i < m.leaves().size(); ++i) out[i >> gap] += m.leaf(i);
  return DyadicMeasure::from_leaves(k, std::move(out), Word::kMaxDepth);
}

DyadicMeasure product_interleaved(const DyadicMeasure& a, const DyadicMeasure& b) {
  if (a.depth() != b.depth()) throw Error(Errc::DepthMismatch, "product needs equal depths");
  if (!a.is_probability() || !b.is_probability()) throw Error(Errc::NotProbability, "product needs probability measures");
  const int d = a.depth();
  if (2 * d > CylinderSet::kMaxEnumerableDepth) throw Error(Errc::DepthCapExceeded, "product too deep");
  std::vector<Rational> out(leaf_count(2 * d));
  for (std::uint64_t u = 0; u < a.leaves().size(); ++u) {
    if (a.leaf(u).is_zero()) continue;
    for (std::uint64_t v = 0; v < b.leaves().size(); ++v) {
      out[theta_interleave(Word(u, d), Word(v, d)).index()] = a.leaf(u) * b.leaf(v);
    }
  }
  return DyadicMeasure::from_leaves(2 * d, std::move(out), Word::kMaxDepth);
}

Rational rho_distance(const DyadicMeasure& a, const DyadicMeasure& b, std::uint64_t terms) {
  if (a.depth() != b.depth()) throw Error(Errc::DepthMismatch, "rho needs equal depths");
  if (terms > basis_count_through(a.depth())) {
    throw Error(Errc::DepthExceeded, "term " + std::to_string(terms) + " enumerates a cylinder deeper than depth " +
                                         std::to_string(a.depth()));
  }
  Rational acc;
  for (std::uint64_t k = 1; k <= terms; ++k) {
    const Word c = enumerate_basis(k);
    const Rational diff = (a.mass_of(c) - b.mass_of(c)).abs();
    if (!diff.is_zero()) acc += diff * Rational::pow2_inverse(static_cast<unsigned>(k));
  }
  return acc;
}

namespace {

/// Longest subsequence of `values` (restricted to positions `idx`) that is monotone in the
/// direction `cmp`; ties go to the earliest ending position and earliest predecessors.
std::vector<std::size_t> longest_monotone(const std::vector<std::size_t>& idx, const std::vector<Rational>& values,
                                          bool non_decreasing) {
  const std::size_t n = idx.size();
  std::vector<std::size_t> len(n, 1);
  std::vector<std::size_t> prev(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const bool ok = non_decreasing ? values[j] <= values[i] : values[j] >= values[i];
      if (ok && len[j] + 1 > len[i]) {
        len[i] = len[j] + 1;
        prev[i] = j;
      }
    }
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (len[i] > len[best]) best = i;
  }
  std::vector<std::size_t> out;
  for (std::size_t i = best; i != n; i = prev[i]) out.push_back(idx[i]);
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

Extraction diagonal_extract(const MeasureSeq& seq) {
  const auto& items = seq.items();

  // Value-stable case: some measure recurs, so keep every occurrence of the most frequent one.
  std::size_t best_first = 0;
  std::size_t best_count = 0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    std::size_t seen_before = 0;
    for (std::size_t j = 0; j < i && seen_before == 0; ++j) seen_before = items[j] == items[i] ? 1 : 0;
    if (seen_before) continue;
    const auto count = static_cast<std::size_t>(std::count(items.begin() + static_cast<std::ptrdiff_t>(i), items.end(), items[i]));
    if (count > best_count) {
      best_count = count;
      best_first = i;
    }
  }
  if (best_count >= 2) {
    Extraction out{{}, items[best_first]};
    for (std::size_t i = best_first; i < items.size(); ++i) {
      if (items[i] == items[best_first]) out.indices.push_back(i);
    }
    return out;
  }

  std::vector<std::size_t> alive(items.size());
  for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;

  const std::uint64_t cylinders = basis_count_through(seq.depth());
  for (std::uint64_t k = 1; k <= cylinders && alive.size() > 1; ++k) {
    const Word c = enumerate_basis(k);
    std::vector<Rational> values;
    values.reserve(alive.size());
    for (auto i : alive) values.push_back(items[i].mass_of(c));

    // Most frequent value, earliest first occurrence on ties.
    std::map<Rational, std::pair<std::size_t, std::size_t>> freq;  // value -> (count, first position)
    for (std::size_t p = 0; p < values.size(); ++p) {
      auto [it, fresh] = freq.try_emplace(values[p], 0, p);
      ++it->second.first;
    }
    const Rational* mode = nullptr;
    std::pair<std::size_t, std::size_t> best{0, 0};
    for (const auto& [v, cf] : freq) {
      if (cf.first > best.first || (cf.first == best.first && cf.second < best.second)) {
        best = cf;
        mode = &v;
      }
    }

    std::vector<std::size_t> next;
    if (best.first >= 2) {
      for (std::size_t p = 0; p < values.size(); ++p) {
        if (values[p] == *mode) next.push_back(alive[p]);
      }
    } else {
      auto up = longest_monotone(alive, values, true);
      auto down = longest_monotone(alive, values, false);
      next = up.size() >= down.size() ? std::move(up) : std::move(down);
    }
    alive = std::move(next);
  }
  return {alive, items[alive.back()]};
}

NotThickError::NotThickError(Word word, Rational mass)
    : Error(Errc::NotThick, "leaf " + word.str() + " outside the support carries mass " + mass.str()),
      word_(word),
      mass_(std::move(mass)) {}

DyadicMeasure pullback_exact(const DyadicMeasure& nu, const CylinderSet& support) {
  if (support.depth() > nu.depth()) throw Error(Errc::DepthExceeded, "support deeper than the measure");
  const CylinderSet fine = refine(support, nu.depth());
  for (std::uint64_t i = 0; i < nu.leaves().size(); ++i) {
    if (!nu.leaf(i).is_zero() && !fine.contains_leaf(i)) throw NotThickError(Word(i, nu.depth()), nu.leaf(i));
  }
  return nu;
}

InnerOuter inner_outer(const DyadicMeasure& m, int level, const CylinderSet& target) {
  if (level < 0 || level > m.depth()) {
    throw Error(Errc::LevelExceeded, "level " + std::to_string(level) + " exceeds measure depth " +
                                         std::to_string(m.depth()));
  }
  if (target.depth() > m.depth()) throw Error(Errc::DepthExceeded, "target deeper than the measure");
  const CylinderSet fine = refine(target, m.depth());
  const int gap = m.depth() - level;
  InnerOuter out;
  // Level-n sets are unions of level-n atoms; the largest one inside the target collects the
  // atoms wholly contained in it, the smallest cover collects the atoms meeting it.
  for (std::uint64_t a = 0; a < leaf_count(level); ++a) {
    std::uint64_t hits = 0;
    Rational atom_mass;
    for (std::uint64_t i = a << gap; i < (a + 1) << gap; ++i) {
      atom_mass += m.leaf(i);
      if (fine.contains_leaf(i)) ++hits;
    }
    if (hits == (std::uint64_t{1} << gap)) out.inner += atom_mass;
    if (hits > 0) out.outer += atom_mass;
  }
  return out;
}

}  // namespace cantor
