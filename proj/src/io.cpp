#include "posetops/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace posetops {

namespace {

std::vector<std::string> split_ws(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

// Non-blank, non-comment lines as (keyword, rest) pairs.
std::vector<std::pair<std::string, std::string>> keyword_lines(std::string_view text) {
  std::vector<std::pair<std::string, std::string>> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line[start] == '#') continue;
    const size_t colon = line.find(':', start);
    if (colon == std::string::npos)
      fail(Errc::parse_error, "expected 'keyword: ...', got: " + line);
    std::string key = line.substr(start, colon - start);
    std::string rest = line.substr(colon + 1);
    const size_t rs = rest.find_first_not_of(" \t");
    rest = rs == std::string::npos ? std::string() : rest.substr(rs);
    while (!rest.empty() && (rest.back() == ' ' || rest.back() == '\t')) rest.pop_back();
    out.emplace_back(std::move(key), std::move(rest));
  }
  if (out.empty() || out[0].first != "version" || out[0].second != "1")
    fail(Errc::parse_error, "missing 'version: 1' header");
  out.erase(out.begin());
  return out;
}

std::pair<std::string, std::string> split_pair(const std::string& tok, char sep,
                                               const char* what) {
  const size_t pos = tok.find(sep);
  if (pos == std::string::npos || pos == 0 || pos + 1 == tok.size())
    fail(Errc::parse_error, std::string("bad ") + what + " entry: " + tok);
  return {tok.substr(0, pos), tok.substr(pos + 1)};
}

int index_in(const std::vector<std::string>& elements, const std::string& name) {
  for (size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == name) return static_cast<int>(i);
  fail(Errc::unknown_name, "unknown element name: " + name);
}

}  // namespace

PosetFile parse_poset_file(std::string_view text) {
  PosetFile f;
  bool have_elements = false;
  for (const auto& [key, rest] : keyword_lines(text)) {
    if (key == "elements") {
      if (have_elements) fail(Errc::parse_error, "repeated elements: line");
      f.elements = split_ws(rest);
      have_elements = true;
    } else if (key == "covers") {
      for (const std::string& tok : split_ws(rest))
        f.covers.push_back(split_pair(tok, '<', "cover"));
    } else if (key == "complement") {
      for (const std::string& tok : split_ws(rest))
        f.complement.push_back(split_pair(tok, ':', "complement"));
    } else if (key == "bounds") {
      const std::vector<std::string> b = split_ws(rest);
      if (b.size() != 2) fail(Errc::parse_error, "bounds: needs exactly two names");
      f.bounds = {b[0], b[1]};
    } else {
      fail(Errc::parse_error, "unknown section in poset file: " + key);
    }
  }
  if (!have_elements || f.elements.empty())
    fail(Errc::parse_error, "poset file needs a non-empty elements: line");
  return f;
}

StructureFile parse_structure_file(std::string_view text) {
  StructureFile f;
  std::map<std::string, std::map<std::pair<int, int>, ElementSet>> cells;
  for (const auto& [key, rest] : keyword_lines(text)) {
    if (key == "kind") {
      if (!f.kind.empty()) fail(Errc::parse_error, "repeated kind: line");
      f.kind = rest;
    } else if (key == "elements") {
      if (!f.elements.empty()) fail(Errc::parse_error, "repeated elements: line");
      f.elements = split_ws(rest);
    } else if (key == "zero" || key == "one") {
      auto& slot = key == "zero" ? f.zero : f.one;
      if (slot) fail(Errc::parse_error, "repeated " + key + ": line");
      slot = rest;
    } else if (key == "join" || key == "meet" || key == "stroke" || key == "plus" ||
               key == "times") {
      if (f.elements.empty())
        fail(Errc::parse_error, "table line before the elements: line");
      const std::vector<std::string> tok = split_ws(rest);
      if (tok.size() < 4 || tok[2] != "->")
        fail(Errc::parse_error, "expected '" + key + ": x y -> members', got: " + rest);
      const int x = index_in(f.elements, tok[0]);
      const int y = index_in(f.elements, tok[1]);
      ElementSet v;
      if (tok.size() != 4 || tok[3] != "-")
        for (size_t i = 3; i < tok.size(); ++i) v.add(index_in(f.elements, tok[i]));
      auto [it, fresh] = cells[key].try_emplace({x, y}, v);
      if (!fresh) fail(Errc::parse_error, "duplicate cell " + key + " " + tok[0] + " " + tok[1]);
    } else {
      fail(Errc::parse_error, "unknown section in structure file: " + key);
    }
  }
  if (f.elements.empty()) fail(Errc::parse_error, "structure file needs elements");

  std::vector<std::string> ops;
  if (f.kind == "operator")
    ops = {"join", "meet"};
  else if (f.kind == "sheffer")
    ops = {"stroke"};
  else if (f.kind == "dual")
    ops = {"plus", "times"};
  else
    fail(Errc::parse_error, "kind must be operator, sheffer or dual, got: " + f.kind);

  for (const auto& [label, table] : cells)
    if (std::find(ops.begin(), ops.end(), label) == ops.end())
      fail(Errc::parse_error, "table " + label + " does not belong to kind " + f.kind);

  if (f.kind == "sheffer") {
    if (f.zero || f.one)
      fail(Errc::parse_error, "a sheffer structure derives its constants; drop zero:/one:");
  } else if (!f.zero || !f.one) {
    fail(Errc::parse_error, f.kind + " structure needs zero: and one: lines");
  }

  const int n = static_cast<int>(f.elements.size());
  auto resolve = [&](const std::string& label) {
    std::vector<ElementSet> out(static_cast<size_t>(n) * n);
    auto& given = cells[label];
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        auto it = given.find({x, y});
        if (it == given.end()) it = given.find({y, x});  // mirror default
        if (it == given.end())
          fail(Errc::parse_error, "table " + label + " misses cell " + f.elements[x] + " " +
                                      f.elements[y]);
        out[x * n + y] = it->second;
      }
    return out;
  };
  f.table_a = resolve(ops[0]);
  if (ops.size() > 1) f.table_b = resolve(ops[1]);
  return f;
}

std::variant<PosetFile, StructureFile> parse_input(std::string_view text) {
  for (const auto& [key, rest] : keyword_lines(text))
    if (key == "kind") return parse_structure_file(text);
  return parse_poset_file(text);
}

std::string serialize(const PosetFile& f) {
  std::string out = "version: 1\nelements:";
  for (const std::string& e : f.elements) out += " " + e;
  out += "\n";
  if (!f.covers.empty()) {
    out += "covers:";
    for (const auto& [x, y] : f.covers) out += " " + x + "<" + y;
    out += "\n";
  }
  if (!f.complement.empty()) {
    out += "complement:";
    for (const auto& [x, y] : f.complement) out += " " + x + ":" + y;
    out += "\n";
  }
  if (f.bounds) out += "bounds: " + f.bounds->first + " " + f.bounds->second + "\n";
  return out;
}

std::string serialize(const StructureFile& f) {
  std::string out = "version: 1\nkind: " + f.kind + "\nelements:";
  for (const std::string& e : f.elements) out += " " + e;
  out += "\n";
  if (f.zero) out += "zero: " + *f.zero + "\n";
  if (f.one) out += "one: " + *f.one + "\n";
  const int n = static_cast<int>(f.elements.size());
  auto emit = [&](const std::string& label, const std::vector<ElementSet>& table) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        out += label + ": " + f.elements[x] + " " + f.elements[y] + " ->";
        const ElementSet v = table[x * n + y];
        if (v.empty()) {
          out += " -";
        } else {
          for (int m : v) out += " " + f.elements[m];
        }
        out += "\n";
      }
  };
  if (f.kind == "operator") {
    emit("join", f.table_a);
    emit("meet", f.table_b);
  } else if (f.kind == "sheffer") {
    emit("stroke", f.table_a);
  } else {
    emit("plus", f.table_a);
    emit("times", f.table_b);
  }
  return out;
}

FinitePoset to_poset(const PosetFile& f) {
  FinitePoset p = FinitePoset::from_covers(f.elements, f.covers);
  if (f.bounds) {
    if (!p.is_bounded() || p.name(p.bottom()) != f.bounds->first ||
        p.name(p.top()) != f.bounds->second)
      fail(Errc::parse_error, "bounds: line does not match the actual bottom and top");
  }
  return p;
}

BoundedPoset to_bounded(const PosetFile& f) { return BoundedPoset(to_poset(f)); }

ComplementedPoset to_complemented(const PosetFile& f) {
  if (f.complement.empty())
    fail(Errc::missing_complement, "this operation needs a complement: section");
  BoundedPoset bp = to_bounded(f);
  const int n = bp.size();
  std::vector<int> comp(n, -1);
  for (const auto& [xs, ys] : f.complement) {
    const int x = bp.poset().index_of(xs), y = bp.poset().index_of(ys);
    if (comp[x] != -1) fail(Errc::parse_error, "element complemented twice: " + xs);
    comp[x] = y;
  }
  for (int x = 0; x < n; ++x)
    if (comp[x] == -1)
      fail(Errc::parse_error, "complement: section misses " + bp.poset().name(x));
  return ComplementedPoset(std::move(bp), std::move(comp));
}

OperatorStructure to_operator(const StructureFile& f) {
  if (f.kind != "operator")
    fail(Errc::kind_mismatch, "expected an operator structure, file is kind " + f.kind);
  return OperatorStructure(f.elements, f.table_a, f.table_b, index_in(f.elements, *f.zero),
                           index_in(f.elements, *f.one));
}

ShefferStructure to_sheffer(const StructureFile& f) {
  if (f.kind != "sheffer")
    fail(Errc::kind_mismatch, "expected a sheffer structure, file is kind " + f.kind);
  return ShefferStructure(f.elements, f.table_a);
}

DualStructure to_dual(const StructureFile& f) {
  if (f.kind != "dual")
    fail(Errc::kind_mismatch, "expected a dual structure, file is kind " + f.kind);
  return DualStructure(f.elements, f.table_a, f.table_b, index_in(f.elements, *f.zero),
                       index_in(f.elements, *f.one));
}

PosetFile poset_file_from(const FinitePoset& p) {
  PosetFile f;
  f.elements = p.names();
  for (const auto& [x, y] : p.cover_pairs()) f.covers.emplace_back(p.name(x), p.name(y));
  return f;
}

PosetFile poset_file_from(const ComplementedPoset& cp) {
  PosetFile f = poset_file_from(cp.poset());
  for (int x = 0; x < cp.size(); ++x)
    f.complement.emplace_back(cp.poset().name(x), cp.poset().name(cp.comp(x)));
  f.bounds = {cp.poset().name(cp.bottom()), cp.poset().name(cp.top())};
  return f;
}

StructureFile structure_file_from(const OperatorStructure& s) {
  StructureFile f;
  f.kind = "operator";
  f.elements = s.names();
  f.zero = s.name(s.zero());
  f.one = s.name(s.one());
  const int n = s.size();
  f.table_a.resize(static_cast<size_t>(n) * n);
  f.table_b.resize(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      f.table_a[x * n + y] = s.join(x, y);
      f.table_b[x * n + y] = s.meet(x, y);
    }
  return f;
}

StructureFile structure_file_from(const ShefferStructure& s) {
  StructureFile f;
  f.kind = "sheffer";
  f.elements = s.names();
  const int n = s.size();
  f.table_a.resize(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) f.table_a[x * n + y] = s.stroke(x, y);
  return f;
}

StructureFile structure_file_from(const DualStructure& s) {
  StructureFile f;
  f.kind = "dual";
  f.elements = s.names();
  f.zero = s.name(s.zero());
  f.one = s.name(s.one());
  const int n = s.size();
  f.table_a.resize(static_cast<size_t>(n) * n);
  f.table_b.resize(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      f.table_a[x * n + y] = s.plus(x, y);
      f.table_b[x * n + y] = s.times(x, y);
    }
  return f;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::parse_error, "cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace posetops
