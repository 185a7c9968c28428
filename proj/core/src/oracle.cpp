#include "cantor/oracle.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "cantor/error.hpp"

namespace cantor {

namespace {

/// A family of subsets of {0, …, n-1} held literally, one flag per subset.
class Family {
 public:
  explicit Family(int n) : flags_(std::size_t{1} << n, false) {}

  bool has(Subset s) const { return s < flags_.size() && flags_[s]; }

  bool add(Subset s) {
    if (flags_[s]) return false;
    flags_[s] = true;
    members_.push_back(s);
    return true;
  }

  const std::vector<Subset>& members() const { return members_; }

  std::vector<Subset> sorted() const {
    std::vector<Subset> out = members_;
    std::sort(out.begin(), out.end());
    return out;
  }

  friend bool operator==(const Family& a, const Family& b) { return a.flags_ == b.flags_; }

 private:
  std::vector<bool> flags_;
  std::vector<Subset> members_;
};

/// Smallest family on `universe` containing `gens`, ∅ and `universe`, closed under complement
/// (relative to `universe`) and pairwise union, computed by iterating to a fixpoint.
Family closure(int n, Subset universe, const std::vector<Subset>& gens) {
  Family fam(n);
  fam.add(0);
  fam.add(universe);
  for (Subset g : gens) fam.add(g & universe);
  for (std::size_t i = 0; i < fam.members().size(); ++i) {
    const Subset s = fam.members()[i];
    fam.add(universe & ~s);
    for (std::size_t j = 0; j < i; ++j) fam.add(s | fam.members()[j]);
  }
  return fam;
}

Family trace_family(int n, const Family& fam, Subset a) {
  Family out(n);
  for (Subset s : fam.members()) out.add(s & a);
  return out;
}

/// a_x: intersection of every member containing x.
Subset atom_at(const Family& fam, Subset universe, int x) {
  Subset acc = universe;
  for (Subset s : fam.members()) {
    if ((s >> x) & 1U) acc &= s;
  }
  return acc;
}

std::vector<Subset> atom_list(const Family& fam, int n, Subset universe) {
  std::vector<Subset> out;
  for (int x = 0; x < n; ++x) {
    if (((universe >> x) & 1U) == 0) continue;
    const Subset a = atom_at(fam, universe, x);
    if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_atom(const std::vector<Subset>& atoms, Subset s) {
  return std::find(atoms.begin(), atoms.end(), s) != atoms.end();
}

std::string describe_map(const FinMap& f) {
  std::ostringstream os;
  os << "f=(";
  for (std::size_t i = 0; i < f.table().size(); ++i) os << (i ? "," : "") << f.table()[i];
  os << ")";
  return os.str();
}

std::string describe_sets(const std::vector<Subset>& sets) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < sets.size(); ++i) {
    os << (i ? "," : "") << "{";
    bool first = true;
    for (int x = 0; x < 64; ++x) {
      if ((sets[i] >> x) & 1U) {
        os << (first ? "" : " ") << x;
        first = false;
      }
    }
    os << "}";
  }
  os << "}";
  return os.str();
}

class Tally {
 public:
  Tally(std::string name, std::string statement) {
    report_.name = std::move(name);
    report_.statement = std::move(statement);
  }

  void check(bool ok, const std::function<std::string()>& what) {
    ++report_.cases;
    if (!ok) {
      if (report_.failures == 0) report_.first_failure = what();
      ++report_.failures;
    }
  }

  SuiteReport report() const { return report_; }

 private:
  SuiteReport report_;
};

void for_each_map(int n, int m, const std::function<void(const FinMap&)>& fn) {
  std::vector<int> table(static_cast<std::size_t>(n), 0);
  while (true) {
    fn(FinMap(m, table));
    int i = 0;
    while (i < n && ++table[static_cast<std::size_t>(i)] == m) table[static_cast<std::size_t>(i++)] = 0;
    if (i == n) break;
  }
}

struct Space {
  FinSigma sigma;
  Family family;
  std::vector<Subset> atoms;
};

std::vector<Space> spaces_on(int n) {
  std::vector<Space> out;
  for (auto& blocks : all_partitions(n)) {
    Family fam = closure(n, full_subset(n), blocks);
    std::vector<Subset> at = atom_list(fam, n, full_subset(n));
    out.push_back({FinSigma::from_partition(n, full_subset(n), blocks), std::move(fam), std::move(at)});
  }
  return out;
}

}  // namespace

std::vector<std::vector<Subset>> all_partitions(int n) {
  if (n < 0 || n > FinSigma::kMaxGround) throw Error(Errc::GroundTooLarge, "partition enumeration limited to 8 points");
  std::vector<std::vector<Subset>> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  // Restricted growth strings: label[0] = 0, label[i] ≤ 1 + max(label[0..i-1]).
  std::vector<int> label(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int max_label) {
    if (i == n) {
      std::vector<Subset> blocks(static_cast<std::size_t>(max_label + 1), 0);
      for (int x = 0; x < n; ++x) blocks[static_cast<std::size_t>(label[static_cast<std::size_t>(x)])] |= Subset{1} << x;
      out.push_back(std::move(blocks));
      return;
    }
    for (int l = 0; l <= max_label + 1; ++l) {
      label[static_cast<std::size_t>(i)] = l;
      rec(i + 1, std::max(max_label, l));
    }
  };
  rec(1, 0);
  return out;
}

std::vector<SuiteReport> run_structural_oracle(const OracleOptions& opts) {
  Tally classifier("classifier-agreement",
                   "is_exactly_measurable agrees with comparing the preimage family to the domain family");
  Tally criterion("exactness-criterion",
                  "a measurable f is exact iff f(E) lies in the trace of F on f(X) and f^-1(f(E)) = E for all E");
  Tally lattice("exact-image-lattice",
                "exact maps carry unions and intersections of measurable sets to unions and intersections of "
                "images, and disjoint sets to disjoint images");
  Tally separated("exact-separated-injective", "an exact map on a separated space is injective");
  Tally fibers("atoms-are-fibers", "for exact f into a separable space the atoms are the fibers f^-1({z}), z in f(X)");
  Tally surj("surjective-atom-respect", "a surjective measurable map injective on atoms respects atoms");
  Tally inj_atoms("exact-injective-on-atoms", "every exact map is injective on atoms");
  Tally flags("atom-flag-agreement", "atom_map_checks agrees with the literal atom definitions");
  Tally generate("generate-closure-agreement", "sigma_generate equals closure of the family to a fixpoint");
  Tally trace_gen("trace-generate-commute", "sigma of the trace family equals the trace of the generated sigma-algebra");
  Tally trace_prod("trace-product-commute", "product of traces equals the trace of the product");
  Tally composition("exact-identity-composition", "identities are exact and composites of exact maps are exact");

  for (int n = 1; n <= opts.max_ground; ++n) {
    const std::vector<Space> dom = spaces_on(n);
    const Subset X = full_subset(n);
    for (int m = 1; m <= opts.max_codomain; ++m) {
      const std::vector<Space> cod = spaces_on(m);
      for_each_map(n, m, [&](const FinMap& f) {
        const Subset image_all = f.image(X);
        for (const Space& e : dom) {
          for (const Space& fs : cod) {
            Family pre(n);
            for (Subset F : fs.family.members()) pre.add(f.preimage(F));
            const bool measurable =
                std::all_of(pre.members().begin(), pre.members().end(), [&](Subset s) { return e.family.has(s); });
            const bool exact = measurable && pre == e.family;
            const auto ctx = [&] {
              return describe_map(f) + " E=" + describe_sets(e.atoms) + " F=" + describe_sets(fs.atoms);
            };

            const Measurability lib = is_exactly_measurable(f, e.sigma, fs.sigma);
            const Measurability want =
                exact ? Measurability::Exact : (measurable ? Measurability::MeasurableOnly : Measurability::NotMeasurable);
            classifier.check(lib == want, ctx);

            if (measurable) {
              const Family fs_trace = trace_family(m, fs.family, image_all);
              const bool crit = std::all_of(e.family.members().begin(), e.family.members().end(), [&](Subset E) {
                const Subset img = f.image(E);
                return fs_trace.has(img) && f.preimage(img) == E;
              });
              criterion.check(crit == exact && (lib == Measurability::Exact) == crit, ctx);

              const bool onto = image_all == full_subset(m);
              bool inj_on_atoms = true;
              for (Subset b : fs.atoms) {
                const Subset p = f.preimage(b);
                if (p != 0 && !is_atom(e.atoms, p)) inj_on_atoms = false;
              }
              bool respects = true;
              for (Subset a : e.atoms) {
                if (!is_atom(fs.atoms, f.image(a))) respects = false;
              }
              flags.check(atom_map_checks(f, e.sigma, fs.sigma) == AtomFlags{inj_on_atoms, respects}, ctx);
              if (onto && inj_on_atoms) surj.check(respects, ctx);
              if (exact) inj_atoms.check(inj_on_atoms, ctx);
            }

            if (exact) {
              bool ok = true;
              const auto& mem = e.family.members();
              for (Subset e1 : mem) {
                for (Subset e2 : mem) {
                  if (f.image(e1 | e2) != (f.image(e1) | f.image(e2))) ok = false;
                  if (f.image(e1 & e2) != (f.image(e1) & f.image(e2))) ok = false;
                  if ((e1 & e2) == 0 && (f.image(e1) & f.image(e2)) != 0) ok = false;
                }
              }
              lattice.check(ok, ctx);

              bool sep = true;
              for (int x = 0; x < n && sep; ++x) {
                for (int y = x + 1; y < n && sep; ++y) {
                  sep = std::any_of(mem.begin(), mem.end(),
                                    [&](Subset s) { return ((s >> x) & 1U) != ((s >> y) & 1U); });
                }
              }
              if (sep) separated.check(f.injective(), ctx);

              if (fs.atoms.size() == static_cast<std::size_t>(m)) {
                std::vector<Subset> fib;
                for (int z = 0; z < m; ++z) {
                  if ((image_all >> z) & 1U) fib.push_back(f.preimage(Subset{1} << z));
                }
                std::sort(fib.begin(), fib.end());
                fibers.check(fib == e.atoms, ctx);
              }
            }
          }
        }
      });
    }

    // Indicator embeddings: every algebra is the preimage of the power set under x ↦ (I_A(x))_A.
    for (const Space& e : dom) {
      const FinMap emb = indicator_embedding(n, e.atoms);
      const FinSigma power = FinSigma::power(emb.codomain_size());
      std::vector<Subset> fib;
      for (int z = 0; z < emb.codomain_size(); ++z) {
        const Subset p = emb.preimage(Subset{1} << z);
        if (p != 0) fib.push_back(p);
      }
      std::sort(fib.begin(), fib.end());
      fibers.check(is_exactly_measurable(emb, e.sigma, power) == Measurability::Exact && fib == e.atoms,
                   [&] { return "indicator embedding of " + describe_sets(e.atoms); });
    }

    // Generated algebras and traces over every family of subsets of {0, …, n-1}.
    const std::uint64_t subsets = std::uint64_t{1} << n;
    for (std::uint64_t fam_mask = 0; fam_mask < (std::uint64_t{1} << subsets); ++fam_mask) {
      std::vector<Subset> gens;
      for (Subset s = 0; s < subsets; ++s) {
        if ((fam_mask >> s) & 1U) gens.push_back(s);
      }
      const Family lit = closure(n, X, gens);
      const FinSigma lib = sigma_generate(n, gens);
      generate.check(lib.sets() == lit.sorted(), [&] { return "family " + describe_sets(gens); });
      for (Subset a = 1; a < subsets; ++a) {
        std::vector<Subset> traced;
        for (Subset g : gens) traced.push_back(g & a);
        const bool literal_ok = closure(n, a, traced) == trace_family(n, lit, a);
        const bool lib_ok = sigma_generate_on(n, a, traced) == trace_sigma(lib, a);
        trace_gen.check(literal_ok && lib_ok,
                        [&] { return "family " + describe_sets(gens) + " A=" + describe_sets({a}); });
      }
    }

    // Identity and composition, kept to small grounds since three spaces are involved.
    for (const Space& e : dom) {
      std::vector<int> id(static_cast<std::size_t>(n));
      for (int x = 0; x < n; ++x) id[static_cast<std::size_t>(x)] = x;
      composition.check(is_exactly_measurable(FinMap(n, id), e.sigma, e.sigma) == Measurability::Exact,
                        [&] { return "identity on " + describe_sets(e.atoms); });
    }
  }

  const int comp_max = std::min(3, opts.max_ground);
  for (int nx = 1; nx <= comp_max; ++nx) {
    const auto sx = spaces_on(nx);
    for (int ny = 1; ny <= comp_max; ++ny) {
      const auto sy = spaces_on(ny);
      for (int nz = 1; nz <= comp_max; ++nz) {
        const auto sz = spaces_on(nz);
        for_each_map(nx, ny, [&](const FinMap& f) {
          for_each_map(ny, nz, [&](const FinMap& g) {
            const FinMap gf = compose(g, f);
            for (const auto& e : sx) {
              for (const auto& fs : sy) {
                if (is_exactly_measurable(f, e.sigma, fs.sigma) != Measurability::Exact) continue;
                for (const auto& gs : sz) {
                  if (is_exactly_measurable(g, fs.sigma, gs.sigma) != Measurability::Exact) continue;
                  Family pre(nx);
                  for (Subset G : gs.family.members()) pre.add(gf.preimage(G));
                  composition.check(pre == e.family, [&] { return describe_map(f) + " then " + describe_map(g); });
                }
              }
            }
          });
        });
      }
    }
  }

  for (int nx = 1; nx <= opts.max_product_factor; ++nx) {
    const auto sx = spaces_on(nx);
    for (int ny = 1; ny <= opts.max_product_factor; ++ny) {
      const auto sy = spaces_on(ny);
      const int np = nx * ny;
      for (const auto& e : sx) {
        for (const auto& f : sy) {
          std::vector<Subset> rects;
          for (Subset E : e.family.members()) {
            for (Subset F : f.family.members()) rects.push_back(product_subset(E, F, ny));
          }
          const Family prod_lit = closure(np, full_subset(np), rects);
          const FinSigma prod_lib = product_sigma(e.sigma, f.sigma);
          const bool prod_agree = prod_lib.sets() == prod_lit.sorted();
          for (Subset a = 1; a <= full_subset(nx); ++a) {
            for (Subset b = 1; b <= full_subset(ny); ++b) {
              const Subset ab = product_subset(a, b, ny);
              const bool lib_ok =
                  product_sigma(trace_sigma(e.sigma, a), trace_sigma(f.sigma, b)) == trace_sigma(prod_lib, ab);
              std::vector<Subset> traced;
              for (Subset r : rects) traced.push_back(r & ab);
              const bool lit_ok = closure(np, ab, traced) == trace_family(np, prod_lit, ab);
              trace_prod.check(prod_agree && lib_ok && lit_ok, [&] {
                return "E=" + describe_sets(e.atoms) + " F=" + describe_sets(f.atoms) + " A=" + describe_sets({a}) +
                       " B=" + describe_sets({b});
              });
            }
          }
        }
      }
    }
  }

  return {classifier.report(), criterion.report(), lattice.report(),  separated.report(),
          fibers.report(),     surj.report(),      inj_atoms.report(), flags.report(),
          generate.report(),   trace_gen.report(), trace_prod.report(), composition.report()};
}

}  // namespace cantor
