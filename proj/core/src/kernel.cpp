#include "cantor/kernel.hpp"

#include <algorithm>
#include <functional>

namespace cantor {

namespace {

std::size_t atom_count(int level) { return std::size_t{1} << level; }

// Mass of `row` on the atom M(b) at the given level.
Rational atom_mass(const DyadicMeasure& row, int level, std::size_t b) { return row.mass_of(Word(b, level)); }

}  // namespace

FiniteKernel FiniteKernel::make(int level, std::vector<DyadicMeasure> rows, bool quasi) {
  if (level < 0 || rows.size() != atom_count(level)) {
    throw Error(Errc::InvalidArgument, "level " + std::to_string(level) + " needs " +
                                           std::to_string(atom_count(std::max(level, 0))) + " rows");
  }
  const int depth = rows.front().depth();
  if (depth < level) throw Error(Errc::LevelExceeded, "row depth is below the kernel level");
  for (std::size_t a = 0; a < rows.size(); ++a) {
    if (rows[a].depth() != depth) throw Error(Errc::DepthMismatch, "rows differ in depth");
    const Rational& m = rows[a].mass();
    const bool zero = m.is_zero();
    if (!(zero || m == Rational(1)) || (zero && !quasi)) {
      throw Error(Errc::RowMassInvalid, "row " + Word(a, level).str() + " has mass " + m.str());
    }
  }
  FiniteKernel k;
  k.level_ = level;
  k.depth_ = depth;
  k.quasi_ = quasi;
  k.rows_ = std::move(rows);
  return k;
}

FiniteKernel FiniteKernel::identity(int level, int depth) {
  if (depth < level) throw Error(Errc::LevelExceeded, "row depth is below the kernel level");
  const int gap = depth - level;
  std::vector<DyadicMeasure> rows;
  for (std::uint64_t a = 0; a < atom_count(level); ++a) {
    std::vector<Rational> w(std::size_t{1} << depth);
    for (std::uint64_t i = a << gap; i < (a + 1) << gap; ++i) w[i] = Rational::pow2_inverse(gap);
    rows.push_back(DyadicMeasure::from_leaves(depth, std::move(w), Word::kMaxDepth));
  }
  return make(level, std::move(rows), false);
}

FiniteKernel disintegrate(const DyadicMeasure& mu, int level) {
  if (mu.depth() % 2 != 0) throw Error(Errc::OddDepth, "disintegration needs an even depth");
  if (!mu.is_probability()) throw Error(Errc::NotProbability, "disintegration needs a probability measure");
  const int d = mu.depth() / 2;
  if (level < 0 || level > d) {
    throw Error(Errc::LevelTooDeep, "level " + std::to_string(level) + " exceeds component depth " + std::to_string(d));
  }
  const int gap = d - level;
  const std::size_t width = std::size_t{1} << d;
  std::vector<DyadicMeasure> rows;
  bool quasi = false;
  for (std::uint64_t a = 0; a < atom_count(level); ++a) {
    std::vector<Rational> joint(width);
    Rational base;
    for (std::uint64_t u = a << gap; u < (a + 1) << gap; ++u) {
      for (std::uint64_t v = 0; v < width; ++v) {
        const Rational& x = mu.leaf(theta_interleave(Word(u, d), Word(v, d)).index());
        joint[v] += x;
        base += x;
      }
    }
    if (base.is_zero()) {
      quasi = true;
    } else {
      for (auto& x : joint) x /= base;
    }
    rows.push_back(DyadicMeasure::from_leaves(d, std::move(joint), Word::kMaxDepth));
  }
  return FiniteKernel::make(level, std::move(rows), quasi);
}

DisintegrationTower kernel_tower(const DyadicMeasure& mu, int n_max) {
  if (n_max < 1) throw Error(Errc::InvalidArgument, "kernel tower needs at least one level");
  DisintegrationTower t;
  for (int n = 1; n <= n_max; ++n) t.kernels.push_back(disintegrate(mu, n));
  t.base = bit_marginal(mu, Parity::Even);
  const std::uint64_t terms = basis_count_through(t.base.depth());
  for (std::size_t k = 0; k + 1 < t.kernels.size(); ++k) {
    const auto& coarse = t.kernels[k];
    const auto& fine = t.kernels[k + 1];
    Rational worst;
    for (std::size_t c = 0; c < fine.atoms(); ++c) {
      if (fine.row(c).mass().is_zero()) continue;
      worst = std::max(worst, rho_distance(fine.row(c), coarse.row(c / 2), terms));
    }
    t.diagnostics.push_back(worst);
  }
  if (!martingale_coherent(t)) throw Error(Errc::ConsistencyViolation, "disintegration tower is not coherent");
  return t;
}

bool martingale_coherent(const DisintegrationTower& t) {
  for (std::size_t k = 0; k + 1 < t.kernels.size(); ++k) {
    const auto& coarse = t.kernels[k];
    const auto& fine = t.kernels[k + 1];
    for (std::size_t a = 0; a < coarse.atoms(); ++a) {
      const Rational pa = t.base.mass_of(Word(a, coarse.level()));
      if (pa.is_zero()) continue;
      const Rational p0 = t.base.mass_of(Word(2 * a, fine.level()));
      const Rational p1 = t.base.mass_of(Word(2 * a + 1, fine.level()));
      for (std::size_t v = 0; v < coarse.row(a).leaves().size(); ++v) {
        const Rational avg = (p0 * fine.row(2 * a).leaf(v) + p1 * fine.row(2 * a + 1).leaf(v)) / pa;
        if (avg != coarse.row(a).leaf(v)) return false;
      }
    }
  }
  return true;
}

DyadicMeasure apply_kernel(const DyadicMeasure& mu, const FiniteKernel& k) {
  if (mu.depth() != k.depth()) {
    throw Error(Errc::LevelMismatch, "measure depth " + std::to_string(mu.depth()) + " differs from row depth " +
                                         std::to_string(k.depth()));
  }
  std::vector<Rational> out(mu.leaves().size());
  for (std::size_t a = 0; a < k.atoms(); ++a) {
    const Rational w = atom_mass(mu, k.level(), a);
    if (w.is_zero()) continue;
    for (std::size_t v = 0; v < out.size(); ++v) out[v] += w * k.row(a).leaf(v);
  }
  return DyadicMeasure::from_leaves(mu.depth(), std::move(out), Word::kMaxDepth);
}

std::vector<std::vector<Rational>> atom_matrix(const FiniteKernel& k) {
  std::vector<std::vector<Rational>> p(k.atoms(), std::vector<Rational>(k.atoms()));
  for (std::size_t a = 0; a < k.atoms(); ++a) {
    for (std::size_t b = 0; b < k.atoms(); ++b) p[a][b] = atom_mass(k.row(a), k.level(), b);
  }
  return p;
}

namespace {

// Tarjan's algorithm over the support graph a → b iff P[a][b] > 0.
std::vector<std::vector<std::size_t>> strongly_connected(const std::vector<std::vector<Rational>>& p) {
  const std::size_t n = p.size();
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> out;
  int counter = 0;
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (std::size_t w = 0; w < n; ++w) {
      if (p[v][w].is_zero()) continue;
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<std::size_t> comp;
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp.push_back(w);
      } while (w != v);
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (index[v] < 0) visit(v);
  }
  return out;
}

// Unique stationary distribution of the irreducible stochastic block P restricted to `cls`.
std::vector<Rational> stationary(const std::vector<std::vector<Rational>>& p, const std::vector<std::size_t>& cls) {
  const std::size_t m = cls.size();
  // Unknowns v_0..v_{m-1}; rows: (P^T - I) v = 0 for all but the last, then Σ v = 1.
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m + 1));
  for (std::size_t r = 0; r + 1 < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) a[r][c] = p[cls[c]][cls[r]] - Rational(r == c ? 1 : 0);
  }
  for (std::size_t c = 0; c <= m; ++c) a[m - 1][c] = Rational(1);
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    while (a[piv][col].is_zero()) ++piv;  // nonsingular for an irreducible class
    std::swap(a[piv], a[col]);
    const Rational inv = Rational(1) / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Rational f = a[r][col];
      for (std::size_t c = col; c <= m; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::vector<Rational> v(m);
  for (std::size_t r = 0; r < m; ++r) v[r] = a[r][m];
  return v;
}

}  // namespace

FixedPoints fixed_points(const FiniteKernel& k) {
  const auto p = atom_matrix(k);
  auto comps = strongly_connected(p);
  std::sort(comps.begin(), comps.end());
  FixedPoints out;
  for (const auto& cls : comps) {
    // Stationary mass lives exactly on closed classes of mass-one rows.
    bool closed = true;
    for (auto a : cls) {
      if (k.row(a).mass().is_zero()) closed = false;
      for (std::size_t b = 0; b < p.size() && closed; ++b) {
        if (!p[a][b].is_zero() && !std::binary_search(cls.begin(), cls.end(), b)) closed = false;
      }
    }
    if (!closed) continue;
    const auto local = stationary(p, cls);
    std::vector<Rational> v(k.atoms());
    for (std::size_t i = 0; i < cls.size(); ++i) v[cls[i]] = local[i];
    std::vector<Rational> induced(k.row(0).leaves().size());
    for (std::size_t a = 0; a < v.size(); ++a) {
      if (v[a].is_zero()) continue;
      for (std::size_t i = 0; i < induced.size(); ++i) induced[i] += v[a] * k.row(a).leaf(i);
    }
    out.vertices.push_back(std::move(v));
    out.induced.push_back(DyadicMeasure::from_leaves(k.depth(), std::move(induced), Word::kMaxDepth));
  }
  return out;
}

std::optional<StrictWitness> strictness_witness(const FiniteKernel& k) {
  for (std::size_t a = 0; a < k.atoms(); ++a) {
    const Rational escaped = k.row(a).mass() - atom_mass(k.row(a), k.level(), a);
    if (escaped.sign() > 0) {
      return StrictWitness{a, complement(CylinderSet::basic(Word(a, k.level()))), escaped};
    }
  }
  return std::nullopt;
}

namespace {

void require_compatible(const FiniteKernel& k, const FiniteKernel& other) {
  if (k.level() != other.level() || k.depth() != other.depth()) {
    throw Error(Errc::LevelMismatch, "kernels differ in level or row depth");
  }
}

// Mass of `row` on the union of atoms whose rows in `k` equal row x.
Rational class_mass(const FiniteKernel& k, std::size_t x, const DyadicMeasure& row) {
  Rational acc;
  for (std::size_t y = 0; y < k.atoms(); ++y) {
    if (k.row(y) == k.row(x)) acc += atom_mass(row, k.level(), y);
  }
  return acc;
}

}  // namespace

FiniteKernel dynkin_refine(const FiniteKernel& k, const std::vector<FiniteKernel>& with) {
  for (const auto& other : with) require_compatible(k, other);
  std::vector<DyadicMeasure> rows;
  bool zeroed = false;
  for (std::size_t x = 0; x < k.atoms(); ++x) {
    const DyadicMeasure& r = k.row(x);
    bool keep = r.is_probability();
    for (const auto& other : with) {
      if (!keep) break;
      keep = apply_kernel(r, other) == r;
    }
    keep = keep && class_mass(k, x, r) == Rational(1);
    if (keep) {
      rows.push_back(r);
    } else {
      rows.push_back(DyadicMeasure::zero(k.depth()));
      zeroed = zeroed || !r.mass().is_zero();
    }
  }
  FiniteKernel out = FiniteKernel::make(k.level(), std::move(rows), k.quasi() || zeroed);
  if (!dynkin_conditions_hold(out)) throw Error(Errc::InvalidArgument, "refined kernel violates the 0/1 conditions");
  return out;
}

bool dynkin_conditions_hold(const FiniteKernel& k) {
  // Label each atom with its Δ-class (first atom carrying the same row).
  std::vector<std::size_t> cls(k.atoms());
  std::vector<std::size_t> reps;
  for (std::size_t x = 0; x < k.atoms(); ++x) {
    cls[x] = x;
    for (std::size_t y = 0; y < x; ++y) {
      if (k.row(y) == k.row(x)) {
        cls[x] = cls[y];
        break;
      }
    }
    if (cls[x] == x) reps.push_back(x);
  }
  if (reps.size() > 20) throw Error(Errc::GroundTooLarge, "too many classes to enumerate unions");
  for (std::size_t x = 0; x < k.atoms(); ++x) {
    std::vector<Rational> per_class(reps.size());
    for (std::size_t y = 0; y < k.atoms(); ++y) {
      const auto pos = static_cast<std::size_t>(std::find(reps.begin(), reps.end(), cls[y]) - reps.begin());
      per_class[pos] += atom_mass(k.row(x), k.level(), y);
    }
    // (2): nothing outside the own class.
    const auto own = static_cast<std::size_t>(std::find(reps.begin(), reps.end(), cls[x]) - reps.begin());
    if (per_class[own] != k.row(x).mass()) return false;
    // (1): every union of classes gets 0 or 1.
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << reps.size()); ++mask) {
      Rational v;
      for (std::size_t c = 0; c < reps.size(); ++c) {
        if ((mask >> c) & 1U) v += per_class[c];
      }
      if (!v.is_zero() && v != Rational(1)) return false;
    }
  }
  return true;
}

bool satisfies_conditional_form(const DyadicMeasure& mu, const FiniteKernel& k) {
  if (mu.depth() != k.depth()) throw Error(Errc::LevelMismatch, "measure and rows differ in depth");
  const int gap = k.depth() - k.level();
  for (std::size_t a = 0; a < k.atoms(); ++a) {
    const Rational ma = atom_mass(mu, k.level(), a);
    for (std::uint64_t leaf = 0; leaf < mu.leaves().size(); ++leaf) {
      const Rational lhs = (leaf >> gap) == a ? mu.leaf(leaf) : Rational(0);
      if (lhs != ma * k.row(a).leaf(leaf)) return false;
    }
  }
  return true;
}

}  // namespace cantor
