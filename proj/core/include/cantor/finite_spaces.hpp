#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace cantor {

/// Subset of a finite ground set {0, …, n-1} (n ≤ 64) as a bitmask: bit x set iff x ∈ subset.
using Subset = std::uint64_t;

constexpr Subset full_subset(int n) { return n >= 64 ? ~Subset{0} : (Subset{1} << n) - 1; }

/// A σ-algebra on a subset `universe` of {0, …, size-1}, held as its atom partition.
///
/// On a finite set every σ-algebra is the family of unions of its atoms, so the partition is
/// a canonical form: two FinSigma values are equal iff they contain the same sets.
class FinSigma {
 public:
  static constexpr int kMaxGround = 8;
  static constexpr int kMaxProductGround = 64;
  /// `sets()` refuses algebras with more atoms than this.
  static constexpr std::size_t kMaxListedAtoms = 20;

  static FinSigma from_partition(int size, Subset universe, std::vector<Subset> atoms);
  static FinSigma power(int size);
  static FinSigma trivial(int size);

  int size() const { return size_; }
  Subset universe() const { return universe_; }
  const std::vector<Subset>& atoms() const { return atoms_; }

  bool contains(Subset s) const;
  Subset atom_of(int x) const;
  /// Every member set in increasing numeric order.
  std::vector<Subset> sets() const;
  bool separated() const { return atoms_.size() == static_cast<std::size_t>(std::popcount(universe_)); }

  friend bool operator==(const FinSigma&, const FinSigma&) = default;

 private:
  int size_ = 0;
  Subset universe_ = 0;
  std::vector<Subset> atoms_;
};

/// Total function {0, …, domain_size-1} → {0, …, codomain_size-1}.
class FinMap {
 public:
  FinMap(int codomain_size, std::vector<int> table);

  int domain_size() const { return static_cast<int>(table_.size()); }
  int codomain_size() const { return codomain_size_; }
  int operator()(int x) const { return table_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& table() const { return table_; }

  Subset image(Subset s) const;
  Subset preimage(Subset s) const;
  bool injective() const;
  bool surjective() const;

  friend bool operator==(const FinMap&, const FinMap&) = default;

 private:
  int codomain_size_;
  std::vector<int> table_;
};

/// g ∘ f.
FinMap compose(const FinMap& g, const FinMap& f);

/// σ(family) on {0, …, ground_size-1}; ground_size ≤ 8.
FinSigma sigma_generate(int ground_size, std::span<const Subset> family);
/// σ(family) as an algebra on `universe` ⊆ {0, …, size-1}; size ≤ 64.
FinSigma sigma_generate_on(int size, Subset universe, std::span<const Subset> family);

std::vector<Subset> atoms(const FinSigma& e);

/// E_{|A}: the algebra { E ∩ A : E ∈ e } on A.
FinSigma trace_sigma(const FinSigma& e, Subset a);

/// f^{-1}(fsig) as an algebra on the domain.
FinSigma preimage_sigma(const FinMap& f, const FinSigma& fsig);

enum class Measurability { Exact, MeasurableOnly, NotMeasurable };

Measurability is_exactly_measurable(const FinMap& f, const FinSigma& e, const FinSigma& fsig);

struct AtomFlags {
  bool injective_on_atoms = false;
  bool respects_atoms = false;
  friend bool operator==(const AtomFlags&, const AtomFlags&) = default;
};

AtomFlags atom_map_checks(const FinMap& f, const FinSigma& e, const FinSigma& fsig);

/// E × F on the product ground set, point (x, y) numbered x · f.size() + y.
FinSigma product_sigma(const FinSigma& e, const FinSigma& f);
Subset product_subset(Subset a, Subset b, int b_size);

/// x ↦ (I_{G_0}(x), …, I_{G_{k-1}}(x)) as a map into the 2^k words of depth k.
FinMap indicator_embedding(int ground_size, std::span<const Subset> generators);

}  // namespace cantor
