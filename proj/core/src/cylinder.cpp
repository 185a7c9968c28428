#include "cantor/cylinder.hpp"

#include <algorithm>
#include <iterator>
#include <set>

#include "cantor/error.hpp"

namespace cantor {

namespace {

void check_enumerable(int depth) {
  if (depth > CylinderSet::kMaxEnumerableDepth) {
    throw Error(Errc::DepthCapExceeded, "depth " + std::to_string(depth) + " too large to enumerate");
  }
}

std::uint64_t leaf_count(int depth) { return std::uint64_t{1} << depth; }

}  // namespace

CylinderSet::CylinderSet(int depth) : depth_(depth) {
  if (depth < 0 || depth > Word::kMaxDepth) throw Error(Errc::DepthCapExceeded, "cylinder depth out of range");
}

CylinderSet::CylinderSet(int depth, std::vector<std::uint64_t> leaf_indices)
    : CylinderSet(depth) {
  std::sort(leaf_indices.begin(), leaf_indices.end());
  leaf_indices.erase(std::unique(leaf_indices.begin(), leaf_indices.end()), leaf_indices.end());
  if (!leaf_indices.empty() && depth < 64 && (leaf_indices.back() >> depth) != 0) {
    throw Error(Errc::InvalidArgument, "leaf index exceeds depth");
  }
  leaves_ = std::move(leaf_indices);
}

CylinderSet CylinderSet::from_words(int depth, std::span<const Word> words) {
  std::vector<std::uint64_t> idx;
  idx.reserve(words.size());
  for (const Word& w : words) {
    if (w.depth() != depth) {
      throw Error(Errc::DepthMismatch, "word " + w.str() + " is not of depth " + std::to_string(depth));
    }
    idx.push_back(w.index());
  }
  return CylinderSet(depth, std::move(idx));
}

CylinderSet CylinderSet::full(int depth) {
  check_enumerable(depth);
  std::vector<std::uint64_t> idx(leaf_count(depth));
  for (std::uint64_t i = 0; i < idx.size(); ++i) idx[i] = i;
  CylinderSet s(depth);
  s.leaves_ = std::move(idx);
  return s;
}

CylinderSet CylinderSet::basic(const Word& w) {
  CylinderSet s(w.depth());
  s.leaves_.push_back(w.index());
  return s;
}

std::vector<Word> CylinderSet::words() const {
  std::vector<Word> out;
  out.reserve(leaves_.size());
  for (auto i : leaves_) out.emplace_back(i, depth_);
  return out;
}

bool CylinderSet::contains_leaf(std::uint64_t index) const {
  return std::binary_search(leaves_.begin(), leaves_.end(), index);
}

bool CylinderSet::contains(const Word& w) const {
  if (w.depth() >= depth_) return contains_leaf(w.index() >> (w.depth() - depth_));
  // M(w) is the union of its depth_ extensions, which form a contiguous index range.
  const int gap = depth_ - w.depth();
  const std::uint64_t lo = w.index() << gap;
  const std::uint64_t hi = lo + (std::uint64_t{1} << gap);
  auto first = std::lower_bound(leaves_.begin(), leaves_.end(), lo);
  auto last = std::lower_bound(leaves_.begin(), leaves_.end(), hi);
  return static_cast<std::uint64_t>(last - first) == hi - lo;
}

CylinderSet CylinderSet::coarsen() const {
  CylinderSet cur = *this;
  while (cur.depth_ > 0) {
    std::vector<std::uint64_t> parents;
    parents.reserve(cur.leaves_.size() / 2);
    bool ok = true;
    for (std::size_t i = 0; i < cur.leaves_.size(); i += 2) {
      if (i + 1 >= cur.leaves_.size() || (cur.leaves_[i] & 1U) != 0 || cur.leaves_[i + 1] != cur.leaves_[i] + 1) {
        ok = false;
        break;
      }
      parents.push_back(cur.leaves_[i] >> 1);
    }
    if (!ok) break;
    CylinderSet up(cur.depth_ - 1);
    up.leaves_ = std::move(parents);
    cur = std::move(up);
  }
  return cur;
}

CylinderSet refine(const CylinderSet& s, int d) {
  if (d < s.depth()) {
    throw Error(Errc::TargetDepthTooSmall,
                "cannot refine depth " + std::to_string(s.depth()) + " set to depth " + std::to_string(d));
  }
  if (d == s.depth()) return s;
  if (d > Word::kMaxDepth) throw Error(Errc::DepthCapExceeded, "refinement depth out of range");
  const int gap = d - s.depth();
  if (!s.is_empty()) check_enumerable(gap);
  std::vector<std::uint64_t> out;
  out.reserve(s.size() << gap);
  for (auto i : s.leaves()) {
    const std::uint64_t lo = i << gap;
    for (std::uint64_t j = 0; j < (std::uint64_t{1} << gap); ++j) out.push_back(lo + j);
  }
  return CylinderSet(d, std::move(out));
}

CylinderSet boolean_op(const CylinderSet& a, const CylinderSet& b, BoolOp op) {
  if (op == BoolOp::Complement) {
    check_enumerable(a.depth());
    std::vector<std::uint64_t> out;
    const std::uint64_t n = leaf_count(a.depth());
    out.reserve(n - a.size());
    std::size_t j = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
      if (j < a.size() && a.leaves()[j] == i) {
        ++j;
      } else {
        out.push_back(i);
      }
    }
    return CylinderSet(a.depth(), std::move(out));
  }
  const int d = std::max(a.depth(), b.depth());
  const CylinderSet ra = refine(a, d);
  const CylinderSet rb = refine(b, d);
  std::vector<std::uint64_t> out;
  const auto& x = ra.leaves();
  const auto& y = rb.leaves();
  switch (op) {
    case BoolOp::Union:
      std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
      break;
    case BoolOp::Intersect:
      std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
      break;
    case BoolOp::Difference:
      std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
      break;
    case BoolOp::Complement:
      break;
  }
  return CylinderSet(d, std::move(out));
}

CylinderSet unite(const CylinderSet& a, const CylinderSet& b) { return boolean_op(a, b, BoolOp::Union); }
CylinderSet intersect(const CylinderSet& a, const CylinderSet& b) { return boolean_op(a, b, BoolOp::Intersect); }
CylinderSet complement(const CylinderSet& a) { return boolean_op(a, a, BoolOp::Complement); }
CylinderSet difference(const CylinderSet& a, const CylinderSet& b) { return boolean_op(a, b, BoolOp::Difference); }

bool same_subset(const CylinderSet& a, const CylinderSet& b) {
  const int d = std::max(a.depth(), b.depth());
  return refine(a, d) == refine(b, d);
}

bool is_subset(const CylinderSet& a, const CylinderSet& b) {
  const int d = std::max(a.depth(), b.depth());
  const CylinderSet ra = refine(a, d);
  const CylinderSet rb = refine(b, d);
  return std::includes(rb.leaves().begin(), rb.leaves().end(), ra.leaves().begin(), ra.leaves().end());
}

Word delta_word(const Word& w) {
  const int h = w.depth() / 2;
  std::uint64_t idx = 0;
  for (int n = 0; n < h; ++n) idx = (idx << 1) | static_cast<std::uint64_t>(w.bit(2 * n + 1));
  return Word(idx, h);
}

Word even_word(const Word& w) {
  const int h = w.depth() / 2;
  std::uint64_t idx = 0;
  for (int n = 0; n < h; ++n) idx = (idx << 1) | static_cast<std::uint64_t>(w.bit(2 * n));
  return Word(idx, h);
}

Word theta_interleave(const Word& a, const Word& b) {
  if (a.depth() != b.depth()) {
    throw Error(Errc::DepthMismatch, "theta_interleave needs equal depths, got " + std::to_string(a.depth()) +
                                         " and " + std::to_string(b.depth()));
  }
  if (2 * a.depth() > Word::kMaxDepth) throw Error(Errc::DepthCapExceeded, "interleaved word too deep");
  std::uint64_t idx = 0;
  for (int n = 0; n < a.depth(); ++n) {
    idx = (idx << 1) | static_cast<std::uint64_t>(a.bit(n));
    idx = (idx << 1) | static_cast<std::uint64_t>(b.bit(n));
  }
  return Word(idx, 2 * a.depth());
}

CylinderSet delta_preimage(const CylinderSet& s) {
  const int d = s.depth();
  if (2 * d > Word::kMaxDepth) throw Error(Errc::DepthCapExceeded, "preimage depth out of range");
  if (!s.is_empty()) check_enumerable(d);
  std::vector<std::uint64_t> out;
  out.reserve(s.size() << d);
  const std::uint64_t n = leaf_count(d);
  for (auto v : s.leaves()) {
    const Word odd(v, d);
    for (std::uint64_t e = 0; e < n; ++e) out.push_back(theta_interleave(Word(e, d), odd).index());
  }
  return CylinderSet(2 * d, std::move(out));
}

DyadicInterval binary_interval(const Word& c) {
  if (c.empty()) throw Error(Errc::EmptyWord, "binary_interval needs a word of depth >= 1");
  const Rational width = Rational::pow2_inverse(static_cast<unsigned>(c.depth()));
  const Rational lo = Rational(static_cast<long>(c.index())) * width;
  return {lo, lo + width};
}

std::uint64_t basis_count_through(int d) {
  if (d <= 0) return 0;
  return (std::uint64_t{1} << (d + 1)) - 2;
}

Word enumerate_basis(std::uint64_t k) {
  if (k == 0) throw Error(Errc::InvalidArgument, "basis enumeration starts at k = 1");
  int d = 1;
  while (basis_count_through(d) < k) ++d;
  return Word(k - basis_count_through(d - 1) - 1, d);
}

std::uint64_t basis_position(const Word& w) {
  if (w.empty()) throw Error(Errc::EmptyWord, "the empty word is not enumerated");
  return basis_count_through(w.depth() - 1) + w.index() + 1;
}

Pairing round_robin_pairing(std::size_t components, int length) {
  Pairing p;
  if (components == 0) return p;
  p.reserve(static_cast<std::size_t>(length));
  for (int n = 0; n < length; ++n) {
    p.emplace_back(static_cast<std::size_t>(n) % components, n / static_cast<int>(components));
  }
  return p;
}

Word interleave_map(std::span<const Word> words, const Pairing& pairing) {
  if (words.empty()) throw Error(Errc::InvalidArgument, "interleave_map needs at least one component");
  const int d = words.front().depth();
  for (const Word& w : words) {
    if (w.depth() != d) throw Error(Errc::DepthMismatch, "interleave_map components must share a depth");
  }
  const std::size_t total = words.size() * static_cast<std::size_t>(d);
  if (total > static_cast<std::size_t>(Word::kMaxDepth)) throw Error(Errc::DepthCapExceeded, "interleaved word too deep");
  if (pairing.size() < total) {
    throw Error(Errc::PairingIncomplete, "pairing defines " + std::to_string(pairing.size()) + " positions, need " +
                                             std::to_string(total));
  }
  std::set<std::pair<std::size_t, int>> seen;
  std::uint64_t idx = 0;
  for (std::size_t n = 0; n < total; ++n) {
    const auto [s, k] = pairing[n];
    if (s >= words.size() || k < 0 || k >= d || !seen.insert(pairing[n]).second) {
      throw Error(Errc::PairingIncomplete,
                  "pairing entry " + std::to_string(n) + " does not place a fresh available bit");
    }
    idx = (idx << 1) | static_cast<std::uint64_t>(words[s].bit(k));
  }
  return Word(idx, static_cast<int>(total));
}

}  // namespace cantor
