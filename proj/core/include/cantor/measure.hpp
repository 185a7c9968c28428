#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cantor/cylinder.hpp"
#include "cantor/error.hpp"
#include "cantor/rational.hpp"
#include "cantor/word.hpp"

namespace cantor {

constexpr int kDefaultDepthCap = 12;

/// A Borel measure on Cantor space known through its values on the 2^d cylinders of depth d.
///
/// Leaf weights are indexed by word index (lexicographic order). Values on coarser cylinders
/// are sums of leaves, so finite additivity holds by construction. A depth-d table carries no
/// information about deeper cylinders; nothing in this library splits leaves.
class DyadicMeasure {
 public:
  DyadicMeasure() : leaves_(1) {}

  /// Validates nonnegativity and that the weights sum exactly to `declared_mass`.
  static DyadicMeasure from_leaf_weights(int depth, std::vector<Rational> weights, const Rational& declared_mass,
                                         int depth_cap = kDefaultDepthCap);
  /// As above with the mass taken to be the sum of the weights.
  static DyadicMeasure from_leaves(int depth, std::vector<Rational> weights, int depth_cap = kDefaultDepthCap);

  static DyadicMeasure point_mass(const Word& w);
  static DyadicMeasure uniform(int depth);
  static DyadicMeasure zero(int depth);

  int depth() const { return depth_; }
  const std::vector<Rational>& leaves() const { return leaves_; }
  const Rational& leaf(std::uint64_t index) const { return leaves_[index]; }
  const Rational& leaf(const Word& w) const;
  const Rational& mass() const { return mass_; }
  bool is_probability() const { return mass_ == Rational(1); }

  /// Mass of the basic cylinder M(w), w.depth() ≤ depth().
  Rational mass_of(const Word& w) const;

  friend bool operator==(const DyadicMeasure&, const DyadicMeasure&) = default;

 private:
  int depth_ = 0;
  std::vector<Rational> leaves_;
  Rational mass_;
};

/// A nonempty list of measures sharing depth and total mass.
class MeasureSeq {
 public:
  explicit MeasureSeq(std::vector<DyadicMeasure> items);

  const std::vector<DyadicMeasure>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  int depth() const { return items_.front().depth(); }

 private:
  std::vector<DyadicMeasure> items_;
};

enum class Parity { Even, Odd };

Rational cylinder_mass(const DyadicMeasure& m, const CylinderSet& s);

/// Image under the map keeping the even (first Θ-component) or odd (Δ) bits; depth floor(d/2).
DyadicMeasure bit_marginal(const DyadicMeasure& m, Parity parity);

/// Image under Δ at any depth, including depths 0 and 1 where the result is the trivial measure.
DyadicMeasure delta_image(const DyadicMeasure& m);

/// Marginal on the first k bits.
DyadicMeasure prefix_marginal(const DyadicMeasure& m, int k);

/// Θ-transport of the product a ⊗ b: leaf Θ(u, v) carries a(u)·b(v).
DyadicMeasure product_interleaved(const DyadicMeasure& a, const DyadicMeasure& b);

/// Σ_{k=1}^{K} 2^{-k} |a(C_k) - b(C_k)| over the canonical basic-cylinder enumeration.
Rational rho_distance(const DyadicMeasure& a, const DyadicMeasure& b, std::uint64_t terms);

struct Extraction {
  std::vector<std::size_t> indices;
  DyadicMeasure limit;
};

/// Finite shadow of the diagonal extraction of a weakly convergent subsequence.
///
/// When some measure occurs more than once, the result is every occurrence of the most
/// frequent one (earliest first occurrence wins ties), which is constant in every coordinate.
/// Otherwise the basic cylinders C_1, C_2, … of depth ≤ d are walked in canonical order and the
/// surviving indices narrowed at each one: to the holders of the most frequent value of μ(C_k)
/// when a value repeats, else to the longest monotone subsequence of μ(C_k). The limit is the
/// last surviving element.
Extraction diagonal_extract(const MeasureSeq& seq);

/// Thrown by pullback_exact when the support misses positive mass.
class NotThickError : public Error {
 public:
  NotThickError(Word word, Rational mass);
  const Word& word() const { return word_; }
  const Rational& mass() const { return mass_; }

 private:
  Word word_;
  Rational mass_;
};

/// Returns ν when it puts no mass outside `support`; otherwise throws NotThickError naming the
/// first excluded leaf with positive mass.
DyadicMeasure pullback_exact(const DyadicMeasure& nu, const CylinderSet& support);

struct InnerOuter {
  Rational inner;
  Rational outer;
  bool equal() const { return inner == outer; }
};

/// Best level-n measurable approximations of `target` from inside and outside.
InnerOuter inner_outer(const DyadicMeasure& m, int level, const CylinderSet& target);

}  // namespace cantor
