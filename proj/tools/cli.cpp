#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "cantor/oracle.hpp"
#include "cantor/serialize.hpp"

namespace cantor::cli {

namespace {

struct Globals {
  int depth_cap = kDefaultDepthCap;
  int decimal = -1;
  std::string output;
};

class Formatter {
 public:
  explicit Formatter(int decimal) : decimal_(decimal) {}
  std::string operator()(const Rational& r) const { return decimal_ >= 0 ? r.decimal(decimal_) : r.str(); }

 private:
  int decimal_;
};

Artifact load(const std::string& path, const Globals& g) {
  try {
    return parse_artifact_file(path, g.depth_cap);
  } catch (const ParseError& e) {
    throw Error(e.code(), path + ":" + std::to_string(e.line()) + ": " + e.bare());
  }
}

template <class T>
T load_as(const std::string& path, const Globals& g) {
  Artifact a = load(path, g);
  if (auto* v = std::get_if<T>(&a)) return std::move(*v);
  throw Error(Errc::UnknownHeader, path + ": unexpected artifact '" + std::string(artifact_kind(a)) + "'");
}

WordMap map_from_spec(const std::string& spec, int depth, const Globals& g) {
  if (spec == "delta") return WordMap::delta(depth);
  if (spec == "id") return WordMap::identity(depth);
  if (spec.rfind("const:", 0) == 0) return WordMap::constant(depth, Word::parse(spec.substr(6)));
  return load_as<WordMap>(spec, g);
}

std::string join_indices(const std::vector<std::size_t>& idx) {
  std::string s = "indices";
  for (auto i : idx) s += " " + std::to_string(i);
  return s;
}

std::string vertex_str(const std::vector<Rational>& v, const Formatter& fmt) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + fmt(v[i]);
  return s + ")";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact measure-theory toolkit for Cantor space", "cantor"};
  app.require_subcommand(1, 1);
  app.fallthrough();  // global flags may follow the subcommand
  Globals g;
  app.add_option("--depth-cap", g.depth_cap, "Largest accepted measure depth")->capture_default_str();
  app.add_option("--decimal", g.decimal, "Render scalar results with this many decimal digits");
  app.add_option("-o,--output", g.output, "Write the report to a file instead of stdout");

  std::ostringstream report;
  std::function<void()> action;

  auto* validate = app.add_subcommand("validate", "Parse and validate an artifact file");
  std::string file_a, file_b;
  validate->add_option("file", file_a)->required();
  validate->callback([&] {
    action = [&] {
      const Artifact a = load(file_a, g);
      report << "valid " << artifact_kind(a) << "\n";
    };
  });

  auto* mass = app.add_subcommand("mass", "Mass of a cylinder set under a measure");
  mass->add_option("measure", file_a)->required();
  mass->add_option("cylset", file_b)->required();
  mass->callback([&] {
    action = [&] {
      report << Formatter(g.decimal)(cylinder_mass(load_as<DyadicMeasure>(file_a, g), load_as<CylinderSet>(file_b, g)))
             << "\n";
    };
  });

  auto* marginal = app.add_subcommand("marginal", "Even- or odd-bit marginal of a measure");
  std::string parity = "odd";
  marginal->add_option("measure", file_a)->required();
  marginal->add_option("--parity", parity)->check(CLI::IsMember({"even", "odd"}))->capture_default_str();
  marginal->callback([&] {
    action = [&] {
      report << serialize(bit_marginal(load_as<DyadicMeasure>(file_a, g), parity == "odd" ? Parity::Odd : Parity::Even));
    };
  });

  auto* product = app.add_subcommand("product", "Interleaved product of two measures");
  product->add_option("a", file_a)->required();
  product->add_option("b", file_b)->required();
  product->callback([&] {
    action = [&] {
      report << serialize(product_interleaved(load_as<DyadicMeasure>(file_a, g), load_as<DyadicMeasure>(file_b, g)));
    };
  });

  auto* extract = app.add_subcommand("extract", "Convergent-subsequence extraction over measures or configurations");
  std::vector<std::string> files;
  extract->add_option("files", files)->required();
  extract->callback([&] {
    action = [&] {
      std::vector<Artifact> items;
      for (const auto& f : files) items.push_back(load(f, g));
      if (std::holds_alternative<PointConfig>(items.front())) {
        std::vector<PointConfig> seq;
        for (std::size_t i = 0; i < items.size(); ++i) {
          auto* p = std::get_if<PointConfig>(&items[i]);
          if (!p) throw Error(Errc::UnknownHeader, files[i] + ": expected ppconfig");
          seq.push_back(*p);
        }
        const auto r = pp_extract(seq);
        report << join_indices(r.indices) << "\n" << serialize(r.limit);
      } else {
        std::vector<DyadicMeasure> seq;
        for (std::size_t i = 0; i < items.size(); ++i) {
          auto* m = std::get_if<DyadicMeasure>(&items[i]);
          if (!m) throw Error(Errc::UnknownHeader, files[i] + ": expected measure");
          seq.push_back(*m);
        }
        const auto r = diagonal_extract(MeasureSeq(std::move(seq)));
        report << join_indices(r.indices) << "\n" << serialize(r.limit);
      }
    };
  });

  auto* extend = app.add_subcommand("extend", "Joint cylinder table of a Δ-consistent tower");
  extend->add_option("--tower", file_a)->required();
  extend->callback([&] {
    action = [&] {
      const Formatter fmt(g.decimal);
      const auto joint = extend_tower(load_as<ConsistentTower>(file_a, g));
      for (std::size_t n = 0; n < joint.levels(); ++n) {
        for (int k = 0; k <= joint.depth(n); ++k) {
          for (std::uint64_t i = 0; i < (std::uint64_t{1} << k); ++i) {
            const Word w(i, k);
            report << "joint level=" << n << " " << w.str() << " " << fmt(joint.mass(n, w)) << "\n";
          }
        }
      }
    };
  });

  auto* disint = app.add_subcommand("disintegrate", "Conditional kernel of the second component given the first");
  int level = 1;
  disint->add_option("--mu", file_a)->required();
  disint->add_option("--level", level)->required();
  disint->callback([&] { action = [&] { report << serialize(disintegrate(load_as<DyadicMeasure>(file_a, g), level)); }; });

  auto* fixpoint = app.add_subcommand("fixpoint", "Extreme fixed probability measures of a kernel");
  bool induced = false;
  fixpoint->add_option("--kernel", file_a)->required();
  fixpoint->add_flag("--induced", induced, "Also print each vertex's measure at the row depth");
  fixpoint->callback([&] {
    action = [&] {
      const Formatter fmt(g.decimal);
      const auto fp = fixed_points(load_as<FiniteKernel>(file_a, g));
      if (fp.vertices.empty()) report << "none\n";
      for (std::size_t i = 0; i < fp.vertices.size(); ++i) {
        report << vertex_str(fp.vertices[i], fmt) << "\n";
        if (induced) report << serialize(fp.induced[i]);
      }
    };
  });

  auto* strict = app.add_subcommand("strict-check", "Whether every row stays inside its own atom");
  strict->add_option("--kernel", file_a)->required();
  strict->callback([&] {
    action = [&] {
      const auto k = load_as<FiniteKernel>(file_a, g);
      const auto w = strictness_witness(k);
      if (!w) {
        report << "strict\n";
        return;
      }
      report << "not strict atom=" << Word(w->atom, k.level()).str() << " escape=";
      const auto words = w->escape.coarsen().words();
      for (std::size_t i = 0; i < words.size(); ++i) report << (i ? "," : "") << words[i].str();
      report << " mass=" << Formatter(g.decimal)(w->mass) << "\n";
    };
  });

  auto* dynkin = app.add_subcommand("dynkin-refine", "Zero the rows outside the 0/1 refinement set");
  std::vector<std::string> with;
  dynkin->add_option("--kernel", file_a)->required();
  dynkin->add_option("--with", with, "Kernels the retained rows must be fixed by (default: the kernel itself)");
  dynkin->callback([&] {
    action = [&] {
      const auto k = load_as<FiniteKernel>(file_a, g);
      std::vector<FiniteKernel> others;
      for (const auto& f : with) others.push_back(load_as<FiniteKernel>(f, g));
      if (others.empty()) others.push_back(k);
      report << serialize(dynkin_refine(k, others));
    };
  });

  auto* ppdist = app.add_subcommand("pp-dist", "Discounted cylinder distance between two configurations or measures");
  std::uint64_t terms = 0;
  ppdist->add_option("a", file_a)->required();
  ppdist->add_option("b", file_b)->required();
  ppdist->add_option("--terms", terms)->required();
  ppdist->callback([&] {
    action = [&] {
      const Artifact a = load(file_a, g);
      const Artifact b = load(file_b, g);
      const Formatter fmt(g.decimal);
      if (auto* p = std::get_if<PointConfig>(&a)) {
        report << fmt(rho_pp(*p, std::get<PointConfig>(b), terms)) << "\n";
      } else if (auto* m = std::get_if<DyadicMeasure>(&a)) {
        report << fmt(rho_distance(*m, std::get<DyadicMeasure>(b), terms)) << "\n";
      } else {
        throw Error(Errc::UnknownHeader, file_a + ": expected ppconfig or measure");
      }
    };
  });

  auto* pppush = app.add_subcommand("pp-push", "Push a configuration through a word map");
  std::string map_spec;
  pppush->add_option("config", file_a)->required();
  pppush->add_option("--map", map_spec, "delta, id, const:<word>, or a wordmap file")->required();
  pppush->callback([&] {
    action = [&] {
      const auto p = load_as<PointConfig>(file_a, g);
      report << serialize(pp_pushforward(p, map_from_spec(map_spec, p.depth(), g)));
    };
  });

  auto* select = app.add_subcommand("select", "Retraction onto a closed tree, or its least branch");
  std::string word;
  int least = -1;
  select->add_option("--tree", file_a)->required();
  auto* word_opt = select->add_option("--word", word, "Dot-separated labels to retract");
  auto* least_opt = select->add_option("--least", least, "Print the least branch prefix of this length");
  word_opt->excludes(least_opt);
  select->callback([&] {
    if (word_opt->count() == 0 && least_opt->count() == 0) throw CLI::RequiredError("--word or --least");
    action = [&] {
      const auto t = load_as<ClosedTree>(file_a, g);
      report << nat_word_str(least >= 0 ? least_branch(t, least) : retract(t, parse_nat_word(word))) << "\n";
    };
  });

  auto* oracle = app.add_subcommand("oracle", "Exhaustive checks of the finite σ-algebra statements");
  OracleOptions oopts;
  oracle->add_option("--max-ground", oopts.max_ground)->check(CLI::Range(1, 4))->capture_default_str();
  oracle->add_option("--max-codomain", oopts.max_codomain)->check(CLI::Range(1, 4))->capture_default_str();
  bool oracle_failed = false;
  oracle->callback([&] {
    action = [&] {
      for (const auto& r : run_structural_oracle(oopts)) {
        report << (r.passed() ? "PASS " : "FAIL ") << r.name << " cases=" << r.cases << " failures=" << r.failures;
        if (!r.passed() && !r.first_failure.empty()) report << " first=" << r.first_failure;
        report << "\n";
        oracle_failed = oracle_failed || !r.passed();
      }
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    action();
  } catch (const std::bad_variant_access&) {
    err << "error: the two inputs are different artifact types\n";
    return kDomainError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }

  if (g.output.empty()) {
    out << report.str();
  } else {
    std::ofstream f(g.output, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << g.output << "\n";
      return kDomainError;
    }
    f << report.str();
  }
  return oracle_failed ? kDomainError : kOk;
}

}  // namespace cantor::cli
