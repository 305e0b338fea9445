#include "freeshift/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "freeshift/error.hpp"

namespace freeshift {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++number;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::istringstream is{std::string(line)};
    Line l{number, {}};
    for (std::string tok; is >> tok;) l.tokens.push_back(tok);
    if (!l.tokens.empty()) out.push_back(std::move(l));
    pos = end + 1;
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

class Reader {
 public:
  Reader(std::string_view text, std::string name) : lines_(tokenize(text)), name_(std::move(name)) {}

  bool done() const { return at_ >= lines_.size(); }
  const Line& peek() const { return lines_[at_]; }
  const Line& next() {
    if (done()) fail(last_line(), "unexpected end of input");
    return lines_[at_++];
  }
  std::size_t last_line() const { return lines_.empty() ? 1 : lines_[std::min(at_, lines_.size() - 1)].number; }

  [[noreturn]] void fail(std::size_t line, const std::string& msg) const { throw ParseError(name_, line, msg); }

  std::uint64_t number(const Line& l, const std::string& tok) const {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size()) fail(l.number, "expected a non-negative integer, got '" + tok + "'");
    return v;
  }

  const Line& expect(const std::string& keyword, std::size_t min_args = 0) {
    const Line& l = next();
    if (l.tokens[0] != keyword) fail(l.number, "expected '" + keyword + "', got '" + l.tokens[0] + "'");
    if (l.tokens.size() < min_args + 1) fail(l.number, "'" + keyword + "' needs at least " + std::to_string(min_args) + " argument(s)");
    return l;
  }

  const std::string& name() const { return name_; }

 private:
  std::vector<Line> lines_;
  std::string name_;
  std::size_t at_ = 0;
};

// Runs `f`, turning library errors into parse errors at `line`.
template <typename F>
auto at_line(const Reader& r, std::size_t line, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    r.fail(line, e.what());
  }
}

GroupPtr group_from_line(Reader& r, const Line& l, const std::filesystem::path& base_dir);

GroupPtr group_body(Reader& r, const Line& header, std::size_t first, const std::filesystem::path& base_dir) {
  const auto& t = header.tokens;
  if (t.size() <= first) r.fail(header.number, "missing group kind");
  const std::string& kind = t[first];
  if (kind == "cyclic") {
    if (t.size() != first + 2) r.fail(header.number, "usage: group cyclic <n>");
    const auto n = r.number(header, t[first + 1]);
    return at_line(r, header.number, [&] { return cyclic(n); });
  }
  if (kind == "product") {
    if (t.size() != first + 3) r.fail(header.number, "usage: group product <file> <file>");
    auto a = at_line(r, header.number, [&] { return load_group(base_dir / t[first + 1]); });
    auto b = at_line(r, header.number, [&] { return load_group(base_dir / t[first + 2]); });
    return direct_product(a, b);
  }
  if (kind == "table") {
    if (t.size() != first + 2) r.fail(header.number, "usage: group table <n>");
    const auto n = r.number(header, t[first + 1]);
    std::vector<std::vector<Element>> rows;
    for (std::uint64_t i = 0; i < n; ++i) {
      const Line& row = r.next();
      if (row.tokens.size() != n)
        r.fail(row.number, "table row has " + std::to_string(row.tokens.size()) + " entries, expected " + std::to_string(n));
      std::vector<Element> values;
      for (const auto& tok : row.tokens) values.push_back(static_cast<Element>(r.number(row, tok)));
      rows.push_back(std::move(values));
    }
    return at_line(r, header.number, [&] { return std::make_shared<const FiniteGroup>(FiniteGroup::from_table(rows)); });
  }
  r.fail(header.number, "unknown group kind '" + kind + "'");
}

GroupPtr group_from_line(Reader& r, const Line& l, const std::filesystem::path& base_dir) {
  if (l.tokens.size() < 2) r.fail(l.number, "usage: group <file> | group cyclic <n>");
  if (l.tokens[1] == "cyclic" || l.tokens[1] == "product" || l.tokens[1] == "table") return group_body(r, l, 1, base_dir);
  if (l.tokens.size() != 2) r.fail(l.number, "usage: group <file>");
  return at_line(r, l.number, [&] { return load_group(base_dir / l.tokens[1]); });
}

Alphabet alphabet_from_line(const Reader& r, const Line& l) {
  return at_line(r, l.number, [&] { return Alphabet({l.tokens.begin() + 1, l.tokens.end()}); });
}

std::vector<Element> elements_from_line(const Reader& r, const Line& l, const FiniteGroup* g) {
  std::vector<Element> out;
  for (std::size_t i = 1; i < l.tokens.size(); ++i) {
    const auto v = r.number(l, l.tokens[i]);
    if (g && v >= g->order()) r.fail(l.number, "element " + l.tokens[i] + " is outside the group");
    out.push_back(static_cast<Element>(v));
  }
  return out;
}

std::vector<Symbol> symbols_from(const Reader& r, const Line& l, std::size_t from, std::size_t to, const Alphabet& a) {
  std::vector<Symbol> out;
  for (std::size_t i = from; i < to; ++i) out.push_back(at_line(r, l.number, [&] { return a.index_of(l.tokens[i]); }));
  return out;
}

}  // namespace

GroupPtr parse_group(std::string_view text, const std::string& name, const std::filesystem::path& base_dir) {
  Reader r(text, name);
  const Line& header = r.expect("group", 1);
  GroupPtr g = group_body(r, header, 1, base_dir);
  if (!r.done()) r.fail(r.peek().number, "unexpected content after group definition");
  return g;
}

GroupPtr load_group(const std::filesystem::path& path) {
  return parse_group(read_file(path), path.string(), path.parent_path());
}

GroupTower parse_tower(std::string_view text, const std::string& name, const std::filesystem::path& base_dir) {
  Reader r(text, name);
  r.expect("tower");
  std::vector<GroupPtr> levels;
  std::vector<std::vector<Element>> embeddings;
  std::size_t last = 0;
  while (!r.done()) {
    const Line& l = r.next();
    last = l.number;
    if (l.tokens[0] == "level") {
      if (l.tokens.size() != 2) r.fail(l.number, "usage: level <groupfile>");
      if (!levels.empty() && embeddings.size() != levels.size())
        r.fail(l.number, "level " + std::to_string(levels.size()) + " needs an embed line before it");
      levels.push_back(at_line(r, l.number, [&] { return load_group(base_dir / l.tokens[1]); }));
    } else if (l.tokens[0] == "embed") {
      if (l.tokens.size() < 3 || l.tokens[2] != "pairs") r.fail(l.number, "usage: embed <k> pairs i->j ...");
      const auto k = r.number(l, l.tokens[1]);
      if (k != embeddings.size() || levels.size() != k + 1)
        r.fail(l.number, "embed " + l.tokens[1] + " must follow level " + l.tokens[1]);
      const std::size_t n = levels.back()->order();
      std::vector<Element> map(n, 0);
      std::vector<bool> seen(n, false);
      for (std::size_t i = 3; i < l.tokens.size(); ++i) {
        const std::string& pair = l.tokens[i];
        const auto arrow = pair.find("->");
        if (arrow == std::string::npos) r.fail(l.number, "expected i->j, got '" + pair + "'");
        const auto from = r.number(l, pair.substr(0, arrow));
        const auto to = r.number(l, pair.substr(arrow + 2));
        if (from >= n) r.fail(l.number, "source element " + std::to_string(from) + " is outside level " + l.tokens[1]);
        if (seen[from]) r.fail(l.number, "source element " + std::to_string(from) + " mapped twice");
        seen[from] = true;
        map[from] = static_cast<Element>(to);
      }
      for (std::size_t i = 0; i < n; ++i)
        if (!seen[i]) r.fail(l.number, "embedding is not total: element " + std::to_string(i) + " is unmapped");
      embeddings.push_back(std::move(map));
    } else {
      r.fail(l.number, "unknown tower directive '" + l.tokens[0] + "'");
    }
  }
  if (levels.empty()) r.fail(last ? last : 1, "tower has no levels");
  if (embeddings.size() >= levels.size()) r.fail(last, "trailing embed line has no target level");
  return at_line(r, last, [&] { return GroupTower::build(levels, embeddings); });
}

GroupTower load_tower(const std::filesystem::path& path) {
  return parse_tower(read_file(path), path.string(), path.parent_path());
}

SftSpec parse_sft(std::string_view text, const std::string& name, const std::filesystem::path& base_dir) {
  Reader r(text, name);
  r.expect("sft");
  const Line& gl = r.expect("group", 1);
  GroupPtr g = group_from_line(r, gl, base_dir);
  const Alphabet a = alphabet_from_line(r, r.expect("alphabet", 1));
  const Line& sl = r.expect("shape");
  const std::vector<Element> shape = elements_from_line(r, sl, g.get());
  std::vector<std::vector<Symbol>> rows;
  while (!r.done()) {
    const Line& l = r.expect("forbid");
    if (l.tokens.size() != shape.size() + 1)
      r.fail(l.number, "forbidden pattern has " + std::to_string(l.tokens.size() - 1) + " symbols, shape has " +
                           std::to_string(shape.size()));
    rows.push_back(symbols_from(r, l, 1, l.tokens.size(), a));
  }
  return at_line(r, sl.number, [&] {
    SftSpec spec = make_sft(g, a, shape, std::move(rows));
    if (spec.shape.size() != shape.size()) throw InputError("shape lists an element twice");
    spec.validate();
    return spec;
  });
}

SftSpec load_sft(const std::filesystem::path& path) {
  return parse_sft(read_file(path), path.string(), path.parent_path());
}

ShiftSpace parse_space(std::string_view text, const std::string& name, const std::filesystem::path& base_dir) {
  Reader r(text, name);
  r.expect("space");
  GroupPtr g = group_from_line(r, r.expect("group", 1), base_dir);
  const Alphabet a = alphabet_from_line(r, r.expect("alphabet", 1));
  std::vector<Config> configs;
  std::size_t last = 1;
  while (!r.done()) {
    const Line& l = r.expect("config");
    last = l.number;
    if (l.tokens.size() != g->order() + 1)
      r.fail(l.number, "configuration has " + std::to_string(l.tokens.size() - 1) + " symbols, group has " +
                           std::to_string(g->order()) + " elements");
    configs.push_back(symbols_from(r, l, 1, l.tokens.size(), a));
  }
  return at_line(r, last, [&] { return ShiftSpace(g, a, std::move(configs)); });
}

ShiftSpace load_space(const std::filesystem::path& path) {
  return parse_space(read_file(path), path.string(), path.parent_path());
}

BlockMap parse_block_map(std::string_view text, const Alphabet& source, const std::string& name) {
  Reader r(text, name);
  BlockMap map;
  map.window = elements_from_line(r, r.expect("window", 1), nullptr);
  map.target = source;
  bool saw_map = false;
  while (!r.done()) {
    const Line& l = r.next();
    if (l.tokens[0] == "target") {
      if (saw_map) r.fail(l.number, "target must come before map lines");
      map.target = alphabet_from_line(r, l);
      continue;
    }
    if (l.tokens[0] != "map") r.fail(l.number, "expected 'map' or 'target', got '" + l.tokens[0] + "'");
    saw_map = true;
    if (l.tokens.size() != map.window.size() + 3 || l.tokens[l.tokens.size() - 2] != "->")
      r.fail(l.number, "usage: map s1 ... s" + std::to_string(map.window.size()) + " -> s");
    auto key = symbols_from(r, l, 1, l.tokens.size() - 2, source);
    const Symbol value = at_line(r, l.number, [&] { return map.target.index_of(l.tokens.back()); });
    if (!map.table.emplace(std::move(key), value).second) r.fail(l.number, "window pattern mapped twice");
  }
  return map;
}

BlockMap load_block_map(const std::filesystem::path& path, const Alphabet& source) {
  return parse_block_map(read_file(path), source, path.string());
}

Pattern parse_pattern(std::string_view text, const GroupPtr& group, const Alphabet& alphabet, const std::string& name) {
  Reader r(text, name);
  const Line& sl = r.expect("shape");
  const auto shape = elements_from_line(r, sl, group.get());
  const Line& dl = r.expect("data");
  if (dl.tokens.size() != shape.size() + 1) r.fail(dl.number, "data length does not match shape");
  auto data = symbols_from(r, dl, 1, dl.tokens.size(), alphabet);
  if (!r.done()) r.fail(r.peek().number, "unexpected content after pattern");
  return at_line(r, sl.number, [&] { return Pattern(group, shape, std::move(data)); });
}

std::string format_space_body(const ShiftSpace& y) {
  std::ostringstream os;
  os << "alphabet";
  for (const auto& s : y.alphabet().symbols()) os << ' ' << s;
  os << '\n';
  for (const auto& x : y.configs()) {
    os << "config";
    for (Symbol s : x) os << ' ' << y.alphabet().name(s);
    os << '\n';
  }
  return os.str();
}

std::string format_property(const PropertyReport& report) {
  std::ostringstream os;
  os << "PROPERTY " << report.name << ' ' << (report.pass ? "PASS" : "FAIL") << '\n';
  for (const auto& w : report.witnesses) {
    std::istringstream is(w);
    for (std::string line; std::getline(is, line);) os << "  " << line << '\n';
  }
  return os.str();
}

}  // namespace freeshift
