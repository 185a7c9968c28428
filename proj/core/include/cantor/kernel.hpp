#pragma once

#include <optional>
#include <vector>

#include "cantor/cylinder.hpp"
#include "cantor/measure.hpp"

namespace cantor {

/// A (quasi) probability kernel whose rows are indexed by the 2^level atoms M(a), |a| = level,
/// and are measures of a common depth ≥ level. Row masses are 0 or 1; all 1 unless quasi.
class FiniteKernel {
 public:
  static FiniteKernel make(int level, std::vector<DyadicMeasure> rows, bool quasi);
  /// Row a is the uniform probability on M(a), at the given row depth.
  static FiniteKernel identity(int level, int depth);

  int level() const { return level_; }
  int depth() const { return depth_; }
  bool quasi() const { return quasi_; }
  std::size_t atoms() const { return rows_.size(); }
  const std::vector<DyadicMeasure>& rows() const { return rows_; }
  const DyadicMeasure& row(std::size_t atom) const { return rows_.at(atom); }

  friend bool operator==(const FiniteKernel&, const FiniteKernel&) = default;

 private:
  int level_ = 0;
  int depth_ = 0;
  bool quasi_ = false;
  std::vector<DyadicMeasure> rows_;
};

/// γ_n(a, ·) = μ(first ∈ M(a), second ∈ ·) / μ_1(M(a)), with 0/0 = 0.
///
/// `mu` has even depth 2d and is read through Θ: even bits are the first component, odd bits
/// the second. Rows have depth d.
FiniteKernel disintegrate(const DyadicMeasure& mu, int level);

struct DisintegrationTower {
  DyadicMeasure base;                 // μ_1, first-component marginal
  std::vector<FiniteKernel> kernels;  // γ_1 … γ_{n_max}
  /// diagnostics[k] bounds the change from γ_k to γ_{k+1}: the largest ρ-distance between a
  /// positive-mass row and its parent row (all basic cylinders of the row depth).
  std::vector<Rational> diagnostics;
};

DisintegrationTower kernel_tower(const DyadicMeasure& mu, int n_max);

/// Checks that for every positive-mass level-k atom, the μ_1-weighted average of the level-(k+1)
/// rows of its children equals its level-k row.
bool martingale_coherent(const DisintegrationTower& t);

/// μπ = Σ_a μ(M(a)) · π(a, ·). Requires mu.depth() == k.depth().
DyadicMeasure apply_kernel(const DyadicMeasure& mu, const FiniteKernel& k);

struct FixedPoints {
  /// Extreme points of { v ≥ 0 over atoms : Σ v = 1, vP = v } with P[a][b] = π(a, M(b)).
  std::vector<std::vector<Rational>> vertices;
  /// Σ_a v_a π(a, ·) for each vertex: fixed measures at the row depth.
  std::vector<DyadicMeasure> induced;
};

FixedPoints fixed_points(const FiniteKernel& k);

/// The atom-level matrix P[a][b] = π(a, M(b)).
std::vector<std::vector<Rational>> atom_matrix(const FiniteKernel& k);

struct StrictWitness {
  std::size_t atom;
  CylinderSet escape;  // complement of M(atom) at depth level
  Rational mass;       // row mass on the escape set
};

/// Empty when every row is supported in its own atom.
std::optional<StrictWitness> strictness_witness(const FiniteKernel& k);
inline bool is_strict(const FiniteKernel& k) { return !strictness_witness(k).has_value(); }

/// Zeroes every row that is not a mass-one row fixed by all kernels in `with` and carried by
/// the union of atoms sharing that row.
FiniteKernel dynkin_refine(const FiniteKernel& k, const std::vector<FiniteKernel>& with);

/// (1) every row takes values in {0, 1} on unions of Δ-classes and (2) every row vanishes
/// outside its own Δ-class, where Δ-classes group atoms with identical rows.
bool dynkin_conditions_hold(const FiniteKernel& k);

/// μ(M(a) ∩ E) = μ(M(a)) · π(a, E) for every atom a and every depth-d leaf E: the
/// conditional-expectation description of membership in G(π).
bool satisfies_conditional_form(const DyadicMeasure& mu, const FiniteKernel& k);

}  // namespace cantor
