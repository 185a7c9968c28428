#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cantor {

/// A finite ℕ-word (sequence of natural-number labels).
using NatWord = std::vector<unsigned>;

std::string nat_word_str(const NatWord& w);  // dot-separated, "-" for the empty word
NatWord parse_nat_word(const std::string& text);

/// Depth-D truncation of a closed subset of ℕ^ℕ, given by its node words.
///
/// Nodes that cannot be continued to length D are pruned on construction, so every node left
/// lies on some length-D branch. A tree may end up empty.
class ClosedTree {
 public:
  /// `nodes` need not list the root. Every proper prefix of a node must also be listed.
  static ClosedTree from_nodes(int depth, const std::vector<NatWord>& nodes,
                               std::optional<std::vector<unsigned>> bounds = std::nullopt);

  int depth() const { return depth_; }
  const std::optional<std::vector<unsigned>>& bounds() const { return bounds_; }
  bool empty() const { return children_.empty(); }
  bool contains(const NatWord& w) const { return children_.contains(w); }
  /// Sorted child labels of a live node.
  const std::vector<unsigned>& children(const NatWord& w) const;
  /// Live nodes other than the root, in lexicographic order.
  std::vector<NatWord> nodes() const;
  /// All live nodes of length L.
  std::vector<NatWord> branches(int length) const;

  friend bool operator==(const ClosedTree&, const ClosedTree&) = default;

 private:
  int depth_ = 0;
  std::optional<std::vector<unsigned>> bounds_;
  std::map<NatWord, std::vector<unsigned>> children_;  // live nodes, root included
};

/// Length-L prefix of the lexicographically least branch.
NatWord least_branch(const ClosedTree& t, int length);

/// Identity on node paths; otherwise the longest node prefix of w continued by its least branch.
NatWord retract(const ClosedTree& t, const NatWord& w);

}  // namespace cantor
