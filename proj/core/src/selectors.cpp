#include "cantor/selectors.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "cantor/error.hpp"

namespace cantor {

std::string nat_word_str(const NatWord& w) {
  if (w.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(w[i]);
  }
  return out;
}

NatWord parse_nat_word(const std::string& text) {
  if (text == "-") return {};
  NatWord w;
  std::size_t pos = 0;
  while (true) {
    const std::size_t dot = text.find('.', pos);
    const std::string part = text.substr(pos, dot == std::string::npos ? std::string::npos : dot - pos);
    unsigned v = 0;
    const auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc() || end != part.data() + part.size()) {
      throw Error(Errc::Parse, "bad label '" + part + "' in '" + text + "'");
    }
    w.push_back(v);
    if (dot == std::string::npos) break;
    pos = dot + 1;
  }
  return w;
}

ClosedTree ClosedTree::from_nodes(int depth, const std::vector<NatWord>& nodes,
                                  std::optional<std::vector<unsigned>> bounds) {
  if (depth < 0) throw Error(Errc::InvalidArgument, "negative tree depth");
  if (bounds && bounds->size() < static_cast<std::size_t>(depth)) {
    throw Error(Errc::InvalidArgument, "bounds list shorter than the tree depth");
  }
  std::set<NatWord> all(nodes.begin(), nodes.end());
  all.insert(NatWord{});
  for (const auto& w : all) {
    if (w.size() > static_cast<std::size_t>(depth)) {
      throw Error(Errc::LengthExceeded, "node " + nat_word_str(w) + " is longer than depth " + std::to_string(depth));
    }
    if (!w.empty() && !all.contains(NatWord(w.begin(), w.end() - 1))) {
      throw Error(Errc::NotPrefixClosed, "parent of " + nat_word_str(w) + " is missing");
    }
    if (bounds) {
      for (std::size_t j = 0; j < w.size(); ++j) {
        if (w[j] > (*bounds)[j]) {
          throw Error(Errc::BoundViolated, "node " + nat_word_str(w) + " exceeds bound " +
                                               std::to_string((*bounds)[j]) + " at level " + std::to_string(j));
        }
      }
    }
  }
  // Keep nodes with a length-depth descendant: walk longest first so children are settled.
  std::vector<NatWord> order(all.begin(), all.end());
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
  ClosedTree t;
  t.depth_ = depth;
  t.bounds_ = std::move(bounds);
  for (const auto& w : order) {
    if (w.size() == static_cast<std::size_t>(depth) || t.children_.contains(w)) {
      t.children_.try_emplace(w);
      if (!w.empty()) t.children_[NatWord(w.begin(), w.end() - 1)].push_back(w.back());
    }
  }
  for (auto& [w, kids] : t.children_) std::sort(kids.begin(), kids.end());
  return t;
}

const std::vector<unsigned>& ClosedTree::children(const NatWord& w) const {
  const auto it = children_.find(w);
  if (it == children_.end()) throw Error(Errc::InvalidArgument, "no node " + nat_word_str(w));
  return it->second;
}

std::vector<NatWord> ClosedTree::nodes() const {
  std::vector<NatWord> out;
  for (const auto& [w, kids] : children_) {
    if (!w.empty()) out.push_back(w);
  }
  return out;
}

std::vector<NatWord> ClosedTree::branches(int length) const {
  std::vector<NatWord> out;
  for (const auto& [w, kids] : children_) {
    if (w.size() == static_cast<std::size_t>(length)) out.push_back(w);
  }
  return out;
}

namespace {

void check_length(const ClosedTree& t, std::size_t length) {
  if (t.empty()) throw Error(Errc::EmptyTree, "tree has no branch of full depth");
  if (length > static_cast<std::size_t>(t.depth())) {
    throw Error(Errc::LengthExceeded, "length " + std::to_string(length) + " exceeds tree depth " +
                                          std::to_string(t.depth()));
  }
}

NatWord continue_least(const ClosedTree& t, NatWord w, std::size_t length) {
  while (w.size() < length) w.push_back(t.children(w).front());
  return w;
}

}  // namespace

NatWord least_branch(const ClosedTree& t, int length) {
  if (length < 0) throw Error(Errc::InvalidArgument, "negative length");
  check_length(t, static_cast<std::size_t>(length));
  return continue_least(t, {}, static_cast<std::size_t>(length));
}

NatWord retract(const ClosedTree& t, const NatWord& w) {
  check_length(t, w.size());
  NatWord prefix;
  while (prefix.size() < w.size()) {
    prefix.push_back(w[prefix.size()]);
    if (!t.contains(prefix)) {
      prefix.pop_back();
      break;
    }
  }
  return continue_least(t, std::move(prefix), w.size());
}

}  // namespace cantor
