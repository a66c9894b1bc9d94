#include "posetops/op_table.hpp"

#include <algorithm>
#include <functional>

#include <json.hpp>

#include "posetops/cone_ops.hpp"

namespace posetops {

std::string OpTable::compact(ElementSet s) const {
  if (s.empty()) return "-";
  std::string out;
  for (int x : s) out += names[x];
  return out;
}

std::string OpTable::render_golden() const {
  const int n = size();
  std::string out(1, corner);
  for (int j = 0; j < n; ++j) {
    out += ' ';
    out += names[j];
  }
  out += '\n';
  for (int i = 0; i < n; ++i) {
    out += names[i];
    for (int j = 0; j < n; ++j) {
      out += ' ';
      out += compact(cell(i, j));
    }
    out += '\n';
  }
  return out;
}

std::string OpTable::render_aligned() const {
  const int n = size();
  std::vector<size_t> width(n + 1);
  width[0] = 1;
  for (int i = 0; i < n; ++i) width[0] = std::max(width[0], names[i].size());
  for (int j = 0; j < n; ++j) {
    width[j + 1] = names[j].size();
    for (int i = 0; i < n; ++i) width[j + 1] = std::max(width[j + 1], compact(cell(i, j)).size());
  }
  auto pad = [](const std::string& s, size_t w) { return s + std::string(w - s.size(), ' '); };
  std::string out = pad(std::string(1, corner), width[0]);
  for (int j = 0; j < n; ++j) out += "  " + pad(names[j], width[j + 1]);
  while (out.back() == ' ') out.pop_back();
  out += '\n';
  for (int i = 0; i < n; ++i) {
    std::string row = pad(names[i], width[0]);
    for (int j = 0; j < n; ++j) row += "  " + pad(compact(cell(i, j)), width[j + 1]);
    while (row.back() == ' ') row.pop_back();
    out += row + '\n';
  }
  return out;
}

std::string OpTable::render_json() const {
  const int n = size();
  nlohmann::json j;
  j["op"] = std::string(1, corner);
  j["elements"] = names;
  auto rows = nlohmann::json::array();
  for (int x = 0; x < n; ++x) {
    auto row = nlohmann::json::array();
    for (int y = 0; y < n; ++y) {
      auto members = nlohmann::json::array();
      for (int m : cell(x, y)) members.push_back(names[m]);
      row.push_back(members);
    }
    rows.push_back(row);
  }
  j["cells"] = rows;
  return j.dump(2) + "\n";
}

namespace {

OpTable pairwise(char corner, const FinitePoset& p,
                 const std::function<ElementSet(int, int)>& op) {
  OpTable t;
  t.corner = corner;
  t.names = p.names();
  const int n = p.size();
  t.cells.resize(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t.cells[x * n + y] = op(x, y);
  return t;
}

}  // namespace

OpTable sym_diff_table(const ComplementedPoset& cp) {
  return pairwise('+', cp.poset(), [&](int x, int y) {
    return sym_diff(cp, ElementSet::single(x), ElementSet::single(y));
  });
}

OpTable sheffer_table(const ComplementedPoset& cp) {
  return pairwise('|', cp.poset(), [&](int x, int y) {
    return max_l(cp.poset(), ElementSet::single(cp.comp(x)), ElementSet::single(cp.comp(y)));
  });
}

OpTable maxl_table(const FinitePoset& p) {
  return pairwise('^', p, [&](int x, int y) {
    return max_l(p, ElementSet::single(x), ElementSet::single(y));
  });
}

OpTable minu_table(const FinitePoset& p) {
  return pairwise('v', p, [&](int x, int y) {
    return min_u(p, ElementSet::single(x), ElementSet::single(y));
  });
}

}  // namespace posetops
