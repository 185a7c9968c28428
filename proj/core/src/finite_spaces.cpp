#include "cantor/finite_spaces.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "cantor/error.hpp"

namespace cantor {

namespace {

int lowest(Subset s) { return std::countr_zero(s); }

void sort_atoms(std::vector<Subset>& atoms) {
  std::sort(atoms.begin(), atoms.end(), [](Subset a, Subset b) { return lowest(a) < lowest(b); });
}

void check_size(int size, int cap) {
  if (size < 0 || size > cap) {
    throw Error(Errc::GroundTooLarge, "ground size " + std::to_string(size) + " exceeds " + std::to_string(cap));
  }
}

}  // namespace

FinSigma FinSigma::from_partition(int size, Subset universe, std::vector<Subset> atoms) {
  check_size(size, kMaxProductGround);
  if ((universe & ~full_subset(size)) != 0) throw Error(Errc::SubsetOutOfRange, "universe exceeds ground set");
  Subset seen = 0;
  for (Subset a : atoms) {
    if (a == 0) throw Error(Errc::InvalidArgument, "atoms must be nonempty");
    if ((a & seen) != 0) throw Error(Errc::InvalidArgument, "atoms must be disjoint");
    seen |= a;
  }
  if (seen != universe) throw Error(Errc::InvalidArgument, "atoms must cover the universe");
  sort_atoms(atoms);
  FinSigma e;
  e.size_ = size;
  e.universe_ = universe;
  e.atoms_ = std::move(atoms);
  return e;
}

FinSigma FinSigma::power(int size) {
  check_size(size, kMaxProductGround);
  std::vector<Subset> a;
  for (int x = 0; x < size; ++x) a.push_back(Subset{1} << x);
  return from_partition(size, full_subset(size), std::move(a));
}

FinSigma FinSigma::trivial(int size) {
  check_size(size, kMaxProductGround);
  std::vector<Subset> a;
  if (size > 0) a.push_back(full_subset(size));
  return from_partition(size, full_subset(size), std::move(a));
}

bool FinSigma::contains(Subset s) const {
  if ((s & ~universe_) != 0) return false;
  return std::all_of(atoms_.begin(), atoms_.end(), [s](Subset a) { return (a & s) == 0 || (a & s) == a; });
}

Subset FinSigma::atom_of(int x) const {
  const Subset bit = Subset{1} << x;
  for (Subset a : atoms_) {
    if ((a & bit) != 0) return a;
  }
  throw Error(Errc::SubsetOutOfRange, "point " + std::to_string(x) + " outside the universe");
}

std::vector<Subset> FinSigma::sets() const {
  if (atoms_.size() > kMaxListedAtoms) {
    throw Error(Errc::GroundTooLarge, "too many atoms to list every set");
  }
  const std::size_t k = atoms_.size();
  std::vector<Subset> out;
  out.reserve(std::size_t{1} << k);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    Subset s = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if ((mask >> i) & 1U) s |= atoms_[i];
    }
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

FinMap::FinMap(int codomain_size, std::vector<int> table) : codomain_size_(codomain_size), table_(std::move(table)) {
  check_size(codomain_size, FinSigma::kMaxProductGround);
  check_size(static_cast<int>(table_.size()), FinSigma::kMaxProductGround);
  for (int v : table_) {
    if (v < 0 || v >= codomain_size) throw Error(Errc::DimensionMismatch, "map value outside the codomain");
  }
}

Subset FinMap::image(Subset s) const {
  Subset out = 0;
  for (std::size_t x = 0; x < table_.size(); ++x) {
    if ((s >> x) & 1U) out |= Subset{1} << table_[x];
  }
  return out;
}

Subset FinMap::preimage(Subset s) const {
  Subset out = 0;
  for (std::size_t x = 0; x < table_.size(); ++x) {
    if ((s >> table_[x]) & 1U) out |= Subset{1} << x;
  }
  return out;
}

bool FinMap::injective() const { return std::popcount(image(full_subset(domain_size()))) == domain_size(); }

bool FinMap::surjective() const { return image(full_subset(domain_size())) == full_subset(codomain_size_); }

FinMap compose(const FinMap& g, const FinMap& f) {
  if (f.codomain_size() != g.domain_size()) throw Error(Errc::DimensionMismatch, "maps do not compose");
  std::vector<int> t(static_cast<std::size_t>(f.domain_size()));
  for (int x = 0; x < f.domain_size(); ++x) t[static_cast<std::size_t>(x)] = g(f(x));
  return FinMap(g.codomain_size(), std::move(t));
}

FinSigma sigma_generate_on(int size, Subset universe, std::span<const Subset> family) {
  check_size(size, FinSigma::kMaxProductGround);
  if ((universe & ~full_subset(size)) != 0) throw Error(Errc::SubsetOutOfRange, "universe exceeds ground set");
  for (Subset s : family) {
    if ((s & ~universe) != 0) throw Error(Errc::SubsetOutOfRange, "generator not contained in the ground set");
  }
  // Points with the same membership pattern across all generators share an atom.
  std::map<std::vector<bool>, Subset> classes;
  for (int x = 0; x < size; ++x) {
    if (((universe >> x) & 1U) == 0) continue;
    std::vector<bool> signature;
    signature.reserve(family.size());
    for (Subset s : family) signature.push_back(((s >> x) & 1U) != 0);
    classes[signature] |= Subset{1} << x;
  }
  std::vector<Subset> at;
  at.reserve(classes.size());
  for (const auto& [sig, a] : classes) at.push_back(a);
  return FinSigma::from_partition(size, universe, std::move(at));
}

FinSigma sigma_generate(int ground_size, std::span<const Subset> family) {
  check_size(ground_size, FinSigma::kMaxGround);
  return sigma_generate_on(ground_size, full_subset(ground_size), family);
}

std::vector<Subset> atoms(const FinSigma& e) { return e.atoms(); }

FinSigma trace_sigma(const FinSigma& e, Subset a) {
  if (a == 0) throw Error(Errc::EmptySubset, "trace needs a nonempty subset");
  if ((a & ~e.universe()) != 0) throw Error(Errc::SubsetOutOfRange, "trace subset leaves the universe");
  std::vector<Subset> at;
  for (Subset atom : e.atoms()) {
    if ((atom & a) != 0) at.push_back(atom & a);
  }
  return FinSigma::from_partition(e.size(), a, std::move(at));
}

namespace {

void check_map_dims(const FinMap& f, const FinSigma& e, const FinSigma& fsig) {
  if (f.domain_size() != e.size() || f.codomain_size() != fsig.size() || e.universe() != full_subset(e.size()) ||
      fsig.universe() != full_subset(fsig.size())) {
    throw Error(Errc::DimensionMismatch, "map dimensions do not match the measurable spaces");
  }
}

}  // namespace

FinSigma preimage_sigma(const FinMap& f, const FinSigma& fsig) {
  if (f.codomain_size() != fsig.size() || fsig.universe() != full_subset(fsig.size())) {
    throw Error(Errc::DimensionMismatch, "codomain does not match the algebra");
  }
  std::vector<Subset> at;
  for (Subset b : fsig.atoms()) {
    const Subset p = f.preimage(b);
    if (p != 0) at.push_back(p);
  }
  return FinSigma::from_partition(f.domain_size(), full_subset(f.domain_size()), std::move(at));
}

Measurability is_exactly_measurable(const FinMap& f, const FinSigma& e, const FinSigma& fsig) {
  check_map_dims(f, e, fsig);
  const FinSigma pre = preimage_sigma(f, fsig);
  if (pre == e) return Measurability::Exact;
  // f^{-1}(fsig) ⊆ e iff every preimage atom is a union of e-atoms.
  const bool measurable =
      std::all_of(pre.atoms().begin(), pre.atoms().end(), [&](Subset s) { return e.contains(s); });
  return measurable ? Measurability::MeasurableOnly : Measurability::NotMeasurable;
}

AtomFlags atom_map_checks(const FinMap& f, const FinSigma& e, const FinSigma& fsig) {
  check_map_dims(f, e, fsig);
  AtomFlags flags;
  flags.respects_atoms = std::all_of(e.atoms().begin(), e.atoms().end(), [&](Subset a) {
    const Subset img = f.image(a);
    return std::find(fsig.atoms().begin(), fsig.atoms().end(), img) != fsig.atoms().end();
  });
  flags.injective_on_atoms = std::all_of(fsig.atoms().begin(), fsig.atoms().end(), [&](Subset b) {
    const Subset pre = f.preimage(b);
    return pre == 0 || std::find(e.atoms().begin(), e.atoms().end(), pre) != e.atoms().end();
  });
  return flags;
}

Subset product_subset(Subset a, Subset b, int b_size) {
  if (b_size <= 0) return 0;
  if (a != 0 && (64 - std::countl_zero(a)) * b_size > 64) {
    throw Error(Errc::GroundTooLarge, "product ground set exceeds 64 points");
  }
  Subset out = 0;
  for (int x = 0; x < 64 && (a >> x) != 0; ++x) {
    if (((a >> x) & 1U) == 0) continue;
    out |= b << (x * b_size);
  }
  return out;
}

FinSigma product_sigma(const FinSigma& e, const FinSigma& f) {
  const int size = e.size() * f.size();
  check_size(size, FinSigma::kMaxProductGround);
  std::vector<Subset> at;
  at.reserve(e.atoms().size() * f.atoms().size());
  for (Subset a : e.atoms()) {
    for (Subset b : f.atoms()) at.push_back(product_subset(a, b, f.size()));
  }
  return FinSigma::from_partition(size, product_subset(e.universe(), f.universe(), f.size()), std::move(at));
}

FinMap indicator_embedding(int ground_size, std::span<const Subset> generators) {
  check_size(ground_size, FinSigma::kMaxProductGround);
  if (generators.size() > 6) throw Error(Errc::GroundTooLarge, "too many generators for an explicit codomain");
  const int k = static_cast<int>(generators.size());
  std::vector<int> table(static_cast<std::size_t>(ground_size));
  for (int x = 0; x < ground_size; ++x) {
    int word = 0;
    for (Subset g : generators) word = (word << 1) | static_cast<int>((g >> x) & 1U);
    table[static_cast<std::size_t>(x)] = word;
  }
  return FinMap(1 << k, std::move(table));
}

}  // namespace cantor
