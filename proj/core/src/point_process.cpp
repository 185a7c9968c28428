#include "cantor/point_process.hpp"

#include <algorithm>
#include <map>

#include "cantor/error.hpp"

namespace cantor {

PointConfig::PointConfig(int depth, std::vector<std::uint64_t> leaves) : depth_(depth), points_(std::move(leaves)) {
  if (depth < 0 || depth > CylinderSet::kMaxEnumerableDepth) {
    throw Error(Errc::DepthCapExceeded, "configuration depth " + std::to_string(depth) + " out of range");
  }
  for (auto i : points_) {
    if (i >> depth) throw Error(Errc::InvalidArgument, "leaf index out of range for depth " + std::to_string(depth));
  }
  std::sort(points_.begin(), points_.end());
}

PointConfig PointConfig::from_words(int depth, std::span<const Word> words) {
  std::vector<std::uint64_t> leaves;
  for (const auto& w : words) {
    if (w.depth() != depth) throw Error(Errc::DepthMismatch, "point " + w.str() + " is not at depth " + std::to_string(depth));
    leaves.push_back(w.index());
  }
  return PointConfig(depth, std::move(leaves));
}

std::vector<Word> PointConfig::words() const {
  std::vector<Word> out;
  for (auto i : points_) out.emplace_back(i, depth_);
  return out;
}

std::uint64_t pp_count(const PointConfig& p, const CylinderSet& s) {
  if (s.depth() > p.depth()) throw Error(Errc::DepthExceeded, "cylinder set deeper than the configuration");
  const int gap = p.depth() - s.depth();
  return static_cast<std::uint64_t>(
      std::count_if(p.points().begin(), p.points().end(), [&](auto i) { return s.contains_leaf(i >> gap); }));
}

namespace {

std::uint64_t count_in(const PointConfig& p, const Word& c) {
  const int gap = p.depth() - c.depth();
  return static_cast<std::uint64_t>(
      std::count_if(p.points().begin(), p.points().end(), [&](auto i) { return (i >> gap) == c.index(); }));
}

}  // namespace

Rational rho_pp(const PointConfig& p, const PointConfig& q, std::uint64_t terms) {
  if (p.depth() != q.depth()) throw Error(Errc::DepthMismatch, "configurations differ in depth");
  if (terms > basis_count_through(p.depth())) {
    throw Error(Errc::DepthExceeded, "term " + std::to_string(terms) + " enumerates a cylinder deeper than depth " +
                                         std::to_string(p.depth()));
  }
  Rational acc;
  for (std::uint64_t k = 1; k <= terms; ++k) {
    const Word c = enumerate_basis(k);
    const auto a = count_in(p, c);
    const auto b = count_in(q, c);
    if (a != b) acc += Rational(a > b ? a - b : b - a) * Rational::pow2_inverse(static_cast<unsigned>(k));
  }
  return acc;
}

WordMap::WordMap(int from, int to, std::vector<std::optional<std::uint64_t>> table)
    : from_(from), to_(to), table_(std::move(table)) {
  if (from < 0 || to < 0 || from > CylinderSet::kMaxEnumerableDepth || to > Word::kMaxDepth) {
    throw Error(Errc::DepthCapExceeded, "word map depths out of range");
  }
  if (table_.size() != (std::size_t{1} << from)) throw Error(Errc::InvalidArgument, "word map table has wrong size");
  for (const auto& e : table_) {
    if (e && (*e >> to)) throw Error(Errc::InvalidArgument, "word map target out of range");
  }
}

WordMap WordMap::identity(int depth) {
  std::vector<std::optional<std::uint64_t>> t(std::size_t{1} << depth);
  for (std::uint64_t i = 0; i < t.size(); ++i) t[i] = i;
  return WordMap(depth, depth, std::move(t));
}

WordMap WordMap::delta(int depth) {
  std::vector<std::optional<std::uint64_t>> t(std::size_t{1} << depth);
  for (std::uint64_t i = 0; i < t.size(); ++i) t[i] = delta_word(Word(i, depth)).index();
  return WordMap(depth, depth / 2, std::move(t));
}

WordMap WordMap::constant(int depth, const Word& target) {
  return WordMap(depth, target.depth(),
                 std::vector<std::optional<std::uint64_t>>(std::size_t{1} << depth, target.index()));
}

bool WordMap::total() const {
  return std::all_of(table_.begin(), table_.end(), [](const auto& e) { return e.has_value(); });
}

Word WordMap::operator()(const Word& w) const {
  if (w.depth() != from_) throw Error(Errc::DepthMismatch, "word " + w.str() + " is not in the map's domain");
  const auto& e = table_[w.index()];
  if (!e) throw Error(Errc::PartialMap, "map undefined at " + w.str());
  return Word(*e, to_);
}

WordMap compose(const WordMap& g, const WordMap& f) {
  if (f.to() != g.from()) throw Error(Errc::DepthMismatch, "composition depths do not chain");
  std::vector<std::optional<std::uint64_t>> t(f.table().size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (f.table()[i]) t[i] = g.table()[*f.table()[i]];
  }
  return WordMap(f.from(), g.to(), std::move(t));
}

PointConfig pp_pushforward(const PointConfig& p, const WordMap& f) {
  if (p.depth() != f.from()) throw Error(Errc::DepthMismatch, "configuration depth differs from the map's domain");
  if (!f.total()) {
    const auto it = std::find(f.table().begin(), f.table().end(), std::nullopt);
    throw Error(Errc::PartialMap,
                "map undefined at " + Word(static_cast<std::uint64_t>(it - f.table().begin()), f.from()).str());
  }
  std::vector<std::uint64_t> out;
  out.reserve(p.n());
  for (auto i : p.points()) out.push_back(*f.table()[i]);
  return PointConfig(f.to(), std::move(out));
}

PointExtraction pp_extract(std::span<const PointConfig> seq) {
  if (seq.empty()) throw Error(Errc::EmptySequence, "configuration sequence is empty");
  for (const auto& p : seq) {
    if (p.depth() != seq.front().depth()) throw Error(Errc::DepthMismatch, "configurations differ in depth");
    if (p.n() != seq.front().n()) throw Error(Errc::MixedTotals, "configurations differ in total count");
  }
  std::map<PointConfig, std::pair<std::size_t, std::size_t>> freq;  // config -> (count, first index)
  for (std::size_t i = 0; i < seq.size(); ++i) {
    auto [it, fresh] = freq.try_emplace(seq[i], 0, i);
    ++it->second.first;
  }
  std::size_t best = 0;
  std::size_t best_count = 0;
  for (const auto& [cfg, cf] : freq) {
    if (cf.first > best_count || (cf.first == best_count && cf.second < best)) {
      best_count = cf.first;
      best = cf.second;
    }
  }
  PointExtraction out{{}, seq[best]};
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] == seq[best]) out.indices.push_back(i);
  }
  return out;
}

}  // namespace cantor
