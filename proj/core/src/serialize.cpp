#include "cantor/serialize.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace cantor {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

class Reader {
 public:
  explicit Reader(std::string_view text) {
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t nl = text.find('\n', pos);
      std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
      ++number;
      if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
      std::istringstream in{std::string(raw)};
      Line line{number, {}};
      for (std::string tok; in >> tok;) line.tokens.push_back(tok);
      if (!line.tokens.empty()) lines_.push_back(std::move(line));
      if (nl == std::string_view::npos) break;
      pos = nl + 1;
    }
  }

  bool done() const { return next_ == lines_.size(); }
  std::size_t last_line() const { return lines_.empty() ? 0 : lines_.back().number; }

  const Line& peek() const {
    if (done()) throw ParseError(Errc::Parse, last_line(), "unexpected end of input");
    return lines_[next_];
  }
  const Line& take() {
    const Line& l = peek();
    ++next_;
    return l;
  }

 private:
  std::vector<Line> lines_;
  std::size_t next_ = 0;
};

[[noreturn]] void fail(const Line& l, const std::string& what) { throw ParseError(Errc::Parse, l.number, what); }

// Runs `f`, re-raising plain domain errors with the given line.
template <class F>
auto at_line(std::size_t line, F&& f) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.code(), line, e.detail());
  }
}

std::map<std::string, std::string> header_fields(const Line& l, std::string_view keyword) {
  if (l.tokens.front() != keyword) fail(l, "expected '" + std::string(keyword) + "' header");
  std::map<std::string, std::string> out;
  for (std::size_t i = 1; i < l.tokens.size(); ++i) {
    const auto eq = l.tokens[i].find('=');
    if (eq == std::string::npos) fail(l, "expected key=value, got '" + l.tokens[i] + "'");
    if (!out.emplace(l.tokens[i].substr(0, eq), l.tokens[i].substr(eq + 1)).second) {
      fail(l, "duplicate field '" + l.tokens[i].substr(0, eq) + "'");
    }
  }
  return out;
}

const std::string& field(const Line& l, const std::map<std::string, std::string>& f, const std::string& key) {
  const auto it = f.find(key);
  if (it == f.end()) fail(l, "missing field '" + key + "'");
  return it->second;
}

int int_field(const Line& l, const std::map<std::string, std::string>& f, const std::string& key) {
  const std::string& s = field(l, f, key);
  int v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size() || v < 0) fail(l, "bad integer for '" + key + "': " + s);
  return v;
}

Rational rational_at(const Line& l, const std::string& s) {
  return at_line(l.number, [&] { return Rational::parse(s); });
}

Word word_at(const Line& l, const std::string& s) {
  return at_line(l.number, [&] { return Word::parse(s); });
}

void check_fields(const Line& l, const std::map<std::string, std::string>& f, std::initializer_list<std::string_view> known) {
  for (const auto& [k, v] : f) {
    if (std::find(known.begin(), known.end(), k) == known.end()) fail(l, "unknown field '" + k + "'");
  }
}

void check_depth_cap(const Line& l, int depth, int cap) {
  if (depth > cap || depth > CylinderSet::kMaxEnumerableDepth) {
    throw ParseError(Errc::DepthCapExceeded, l.number,
                     "depth " + std::to_string(depth) + " exceeds cap " + std::to_string(cap));
  }
}

// Reads 2^depth `<word> <p/q>` lines in lexicographic order.
std::vector<Rational> read_leaves(Reader& r, int depth, std::size_t& last) {
  std::vector<Rational> out;
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << depth); ++i) {
    const Line& l = r.take();
    if (l.tokens.size() != 2) fail(l, "expected '<word> <p>/<q>'");
    const Word w = word_at(l, l.tokens[0]);
    if (w != Word(i, depth)) fail(l, "expected leaf " + Word(i, depth).str() + ", got " + l.tokens[0]);
    out.push_back(rational_at(l, l.tokens[1]));
    if (out.back().sign() < 0) {
      throw ParseError(Errc::NegativeWeight, l.number, "leaf " + w.str() + " has negative weight " + out.back().str());
    }
    last = l.number;
  }
  return out;
}

DyadicMeasure read_measure(Reader& r, int cap) {
  const Line& h = r.take();
  const auto f = header_fields(h, "measure");
  check_fields(h, f, {"depth", "mass"});
  const int depth = int_field(h, f, "depth");
  check_depth_cap(h, depth, cap);
  const Rational mass = rational_at(h, field(h, f, "mass"));
  std::size_t last = h.number;
  auto leaves = read_leaves(r, depth, last);
  return at_line(last, [&] { return DyadicMeasure::from_leaf_weights(depth, std::move(leaves), mass, cap); });
}

FiniteKernel read_kernel(Reader& r, int cap) {
  const Line& h = r.take();
  const auto f = header_fields(h, "kernel");
  check_fields(h, f, {"level", "depth", "quasi"});
  const int level = int_field(h, f, "level");
  const int depth = int_field(h, f, "depth");
  const int quasi = int_field(h, f, "quasi");
  check_depth_cap(h, depth, cap);
  if (quasi > 1) fail(h, "quasi must be 0 or 1");
  if (level > depth) throw ParseError(Errc::LevelExceeded, h.number, "kernel level exceeds row depth");
  std::vector<DyadicMeasure> rows;
  std::size_t last = h.number;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << level); ++a) {
    const Line& rl = r.take();
    if (rl.tokens.size() != 3 || rl.tokens[0] != "row" || rl.tokens[2].rfind("mass=", 0) != 0) {
      fail(rl, "expected 'row <word> mass=<p>/<q>'");
    }
    if (word_at(rl, rl.tokens[1]) != Word(a, level)) fail(rl, "expected row " + Word(a, level).str());
    const Rational mass = rational_at(rl, rl.tokens[2].substr(5));
    if (!(mass.is_zero() || mass == Rational(1)) || (mass.is_zero() && !quasi)) {
      throw ParseError(Errc::RowMassInvalid, rl.number, "row " + Word(a, level).str() + " has mass " + mass.str());
    }
    auto leaves = read_leaves(r, depth, last);
    rows.push_back(at_line(last, [&] { return DyadicMeasure::from_leaf_weights(depth, std::move(leaves), mass, cap); }));
  }
  return at_line(last, [&] { return FiniteKernel::make(level, std::move(rows), quasi == 1); });
}

ConsistentTower read_tower(Reader& r, int cap) {
  const Line& h = r.take();
  const auto f = header_fields(h, "tower");
  check_fields(h, f, {"levels"});
  const int count = int_field(h, f, "levels");
  if (count == 0) throw ParseError(Errc::EmptySequence, h.number, "tower has no levels");
  std::vector<DyadicMeasure> levels;
  std::vector<std::size_t> starts;
  for (int n = 0; n < count; ++n) {
    starts.push_back(r.peek().number);
    levels.push_back(read_measure(r, cap));
  }
  try {
    return check_tower_consistency(std::move(levels));
  } catch (const ConsistencyViolationError& e) {
    throw ParseError(e.code(), starts[e.level() + 1], e.detail());
  } catch (const Error& e) {
    throw ParseError(e.code(), h.number, e.detail());
  }
}

PointConfig read_ppconfig(Reader& r, int cap) {
  const Line& h = r.take();
  const auto f = header_fields(h, "ppconfig");
  check_fields(h, f, {"depth", "n"});
  const int depth = int_field(h, f, "depth");
  check_depth_cap(h, depth, cap);
  const int n = int_field(h, f, "n");
  std::vector<Word> words;
  for (int i = 0; i < n; ++i) {
    const Line& l = r.take();
    if (l.tokens.size() != 1) fail(l, "expected one word per line");
    words.push_back(word_at(l, l.tokens[0]));
    if (words.back().depth() != depth) {
      throw ParseError(Errc::DepthMismatch, l.number, "point " + l.tokens[0] + " is not at depth " + std::to_string(depth));
    }
  }
  return PointConfig::from_words(depth, words);
}

CylinderSet read_cylset(Reader& r, int cap) {
  const Line& h = r.take();
  const auto f = header_fields(h, "cylset");
  check_fields(h, f, {"depth"});
  const int depth = int_field(h, f, "depth");
  check_depth_cap(h, depth, cap);
  CylinderSet s(depth);
  while (!r.done()) {
    const Line& l = r.take();
    if (l.tokens.size() != 1) fail(l, "expected one word per line");
    const Word w = word_at(l, l.tokens[0]);
    if (w.depth() > depth) throw ParseError(Errc::DepthExceeded, l.number, "word " + w.str() + " deeper than the set");
    s = unite(s, refine(CylinderSet::basic(w), depth));
  }
  return s;
}

ClosedTree read_tree(Reader& r) {
  const Line& h = r.take();
  const auto f = header_fields(h, "tree");
  check_fields(h, f, {"depth", "bounds"});
  const int depth = int_field(h, f, "depth");
  std::optional<std::vector<unsigned>> bounds;
  if (f.contains("bounds")) bounds = at_line(h.number, [&] { return parse_nat_word(f.at("bounds")); });
  std::vector<NatWord> nodes;
  std::map<NatWord, std::size_t> seen_at;
  while (!r.done()) {
    const Line& l = r.take();
    if (l.tokens.size() != 1) fail(l, "expected one node per line");
    nodes.push_back(at_line(l.number, [&] { return parse_nat_word(l.tokens[0]); }));
    seen_at.emplace(nodes.back(), l.number);
  }
  try {
    return ClosedTree::from_nodes(depth, nodes, bounds);
  } catch (const Error& e) {
    // Point at the first node line that violates the local rules, else the header.
    for (const auto& [w, line] : seen_at) {
      const bool too_long = w.size() > static_cast<std::size_t>(depth);
      const bool orphan = !w.empty() && !seen_at.contains(NatWord(w.begin(), w.end() - 1)) && w.size() > 1;
      bool over = false;
      if (bounds) {
        for (std::size_t j = 0; j < w.size() && j < bounds->size(); ++j) over = over || w[j] > (*bounds)[j];
      }
      if ((e.code() == Errc::LengthExceeded && too_long) || (e.code() == Errc::NotPrefixClosed && orphan) ||
          (e.code() == Errc::BoundViolated && over)) {
        throw ParseError(e.code(), line, e.detail());
      }
    }
    throw ParseError(e.code(), h.number, e.detail());
  }
}

WordMap read_wordmap(Reader& r) {
  const Line& h = r.take();
  const auto f = header_fields(h, "wordmap");
  check_fields(h, f, {"from", "to"});
  const int from = int_field(h, f, "from");
  const int to = int_field(h, f, "to");
  check_depth_cap(h, from, CylinderSet::kMaxEnumerableDepth);
  if (to > Word::kMaxDepth) fail(h, "target depth too large");
  std::vector<std::optional<std::uint64_t>> table(std::size_t{1} << from);
  while (!r.done()) {
    const Line& l = r.take();
    if (l.tokens.size() != 2) fail(l, "expected '<from> <to>'");
    const Word a = word_at(l, l.tokens[0]);
    const Word b = word_at(l, l.tokens[1]);
    if (a.depth() != from || b.depth() != to) throw ParseError(Errc::DepthMismatch, l.number, "entry depths differ from header");
    if (table[a.index()]) fail(l, "duplicate entry for " + a.str());
    table[a.index()] = b.index();
  }
  return WordMap(from, to, std::move(table));
}

}  // namespace

std::string_view artifact_kind(const Artifact& a) {
  static constexpr std::string_view kinds[] = {"measure", "kernel", "tower", "ppconfig", "cylset", "tree", "wordmap"};
  return kinds[a.index()];
}

Artifact parse_artifact(std::string_view text, int depth_cap) {
  Reader r(text);
  if (r.done()) throw ParseError(Errc::UnknownHeader, 1, "empty input");
  const Line& h = r.peek();
  const std::string& kw = h.tokens.front();
  Artifact out;
  if (kw == "measure") {
    out = read_measure(r, depth_cap);
  } else if (kw == "kernel") {
    out = read_kernel(r, depth_cap);
  } else if (kw == "tower") {
    out = read_tower(r, depth_cap);
  } else if (kw == "ppconfig") {
    out = read_ppconfig(r, depth_cap);
  } else if (kw == "cylset") {
    out = read_cylset(r, depth_cap);
  } else if (kw == "tree") {
    out = read_tree(r);
  } else if (kw == "wordmap") {
    out = read_wordmap(r);
  } else {
    throw ParseError(Errc::UnknownHeader, h.number, "unknown header '" + kw + "'");
  }
  if (!r.done()) fail(r.peek(), "trailing content after " + kw);
  return out;
}

Artifact parse_artifact_file(const std::filesystem::path& path, int depth_cap) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::InvalidArgument, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_artifact(buf.str(), depth_cap);
}

std::string serialize(const DyadicMeasure& m) {
  std::string out = "measure depth=" + std::to_string(m.depth()) + " mass=" + m.mass().str() + "\n";
  for (std::uint64_t i = 0; i < m.leaves().size(); ++i) out += Word(i, m.depth()).str() + " " + m.leaf(i).str() + "\n";
  return out;
}

std::string serialize(const FiniteKernel& k) {
  std::string out = "kernel level=" + std::to_string(k.level()) + " depth=" + std::to_string(k.depth()) +
                    " quasi=" + (k.quasi() ? "1" : "0") + "\n";
  for (std::size_t a = 0; a < k.atoms(); ++a) {
    const auto& row = k.row(a);
    out += "row " + Word(a, k.level()).str() + " mass=" + row.mass().str() + "\n";
    for (std::uint64_t i = 0; i < row.leaves().size(); ++i) out += Word(i, row.depth()).str() + " " + row.leaf(i).str() + "\n";
  }
  return out;
}

std::string serialize(const ConsistentTower& t) {
  std::string out = "tower levels=" + std::to_string(t.size()) + "\n";
  for (const auto& m : t.levels()) out += serialize(m);
  return out;
}

std::string serialize(const PointConfig& p) {
  std::string out = "ppconfig depth=" + std::to_string(p.depth()) + " n=" + std::to_string(p.n()) + "\n";
  for (const auto& w : p.words()) out += w.str() + "\n";
  return out;
}

std::string serialize(const CylinderSet& s) {
  std::string out = "cylset depth=" + std::to_string(s.depth()) + "\n";
  for (const auto& w : s.words()) out += w.str() + "\n";
  return out;
}

std::string serialize(const ClosedTree& t) {
  std::string out = "tree depth=" + std::to_string(t.depth());
  if (t.bounds()) out += " bounds=" + nat_word_str(*t.bounds());
  out += "\n";
  for (const auto& w : t.nodes()) out += nat_word_str(w) + "\n";
  return out;
}

std::string serialize(const WordMap& f) {
  std::string out = "wordmap from=" + std::to_string(f.from()) + " to=" + std::to_string(f.to()) + "\n";
  for (std::uint64_t i = 0; i < f.table().size(); ++i) {
    if (f.table()[i]) out += Word(i, f.from()).str() + " " + Word(*f.table()[i], f.to()).str() + "\n";
  }
  return out;
}

std::string serialize(const Artifact& a) {
  return std::visit([](const auto& v) { return serialize(v); }, a);
}

}  // namespace cantor
