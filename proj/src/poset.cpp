#include "posetops/poset.hpp"

#include <algorithm>
#include <unordered_map>

namespace posetops {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::duplicate_name: return "duplicate_name";
    case Errc::unknown_name: return "unknown_name";
    case Errc::cycle_detected: return "cycle_detected";
    case Errc::not_a_poset: return "not_a_poset";
    case Errc::not_bounded: return "not_bounded";
    case Errc::invalid_complement: return "invalid_complement";
    case Errc::not_boolean: return "not_boolean";
    case Errc::empty_argument: return "empty_argument";
    case Errc::size_too_large: return "size_too_large";
    case Errc::axioms_fail: return "axioms_fail";
    case Errc::consistency_fail: return "consistency_fail";
    case Errc::kind_mismatch: return "kind_mismatch";
    case Errc::missing_complement: return "missing_complement";
    case Errc::parse_error: return "parse_error";
  }
  return "unknown";
}

std::vector<std::string> FinitePoset::checked_names(std::vector<std::string> names) {
  if (names.empty()) fail(Errc::empty_argument, "a poset needs at least one element");
  if (names.size() > kMaxElements)
    fail(Errc::size_too_large, "carrier larger than " + std::to_string(kMaxElements) + " elements");
  std::unordered_map<std::string, int> seen;
  for (const auto& n : names) {
    if (n.empty()) fail(Errc::parse_error, "empty element name");
    if (!seen.emplace(n, 1).second) fail(Errc::duplicate_name, "duplicate element name: " + n);
  }
  return names;
}

FinitePoset FinitePoset::from_covers(
    std::vector<std::string> names,
    const std::vector<std::pair<std::string, std::string>>& covers) {
  FinitePoset p;
  p.names_ = checked_names(std::move(names));
  const int n = p.size();
  p.above_.assign(n, 0);
  for (int i = 0; i < n; ++i) p.above_[i] = std::uint64_t{1} << i;

  for (const auto& [lo, hi] : covers) {
    int x = p.index_of(lo);
    int y = p.index_of(hi);
    if (x == y) fail(Errc::cycle_detected, "cover " + lo + " < " + hi + " relates an element to itself");
    p.above_[x] |= std::uint64_t{1} << y;
  }

  // Warshall closure over the successor masks.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if ((p.above_[i] >> k) & 1) p.above_[i] |= p.above_[k];

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (((p.above_[i] >> j) & 1) && ((p.above_[j] >> i) & 1))
        fail(Errc::cycle_detected, "cycle through " + p.names_[i] + " and " + p.names_[j]);

  p.finish_from_above();
  return p;
}

FinitePoset FinitePoset::from_relation(std::vector<std::string> names,
                                       const std::vector<std::uint64_t>& above) {
  FinitePoset p;
  p.names_ = checked_names(std::move(names));
  const int n = p.size();
  if (static_cast<int>(above.size()) != n)
    fail(Errc::not_a_poset, "relation size does not match the carrier");
  p.above_ = above;
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  for (int i = 0; i < n; ++i) {
    if (p.above_[i] & ~full) fail(Errc::not_a_poset, "relation mentions elements outside the carrier");
    if (!((p.above_[i] >> i) & 1)) fail(Errc::not_a_poset, "relation not reflexive at " + p.names_[i]);
  }
  for (int i = 0; i < n; ++i)
    for (int j : ElementSet::from_mask(p.above_[i])) {
      if (j != i && ((p.above_[j] >> i) & 1))
        fail(Errc::not_a_poset, "relation not antisymmetric at " + p.names_[i] + ", " + p.names_[j]);
      if (p.above_[j] & ~p.above_[i])
        fail(Errc::not_a_poset, "relation not transitive at " + p.names_[i] + ", " + p.names_[j]);
    }
  p.finish_from_above();
  return p;
}

void FinitePoset::finish_from_above() {
  const int n = size();
  carrier_ = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  below_.assign(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j : ElementSet::from_mask(above_[i])) below_[j] |= std::uint64_t{1} << i;
  bottom_ = top_ = -1;
  for (int i = 0; i < n; ++i) {
    if (above_[i] == carrier_) bottom_ = i;
    if (below_[i] == carrier_) top_ = i;
  }
}

int FinitePoset::index_of(std::string_view name) const {
  auto i = find(name);
  if (!i) fail(Errc::unknown_name, "unknown element name: " + std::string(name));
  return *i;
}

std::optional<int> FinitePoset::find(std::string_view name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::vector<std::pair<int, int>> FinitePoset::cover_pairs() const {
  // y covers x when x < y with nothing strictly between.
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < size(); ++x)
    for (int y : ElementSet::from_mask(above_[x] & ~(std::uint64_t{1} << x))) {
      bool direct = true;
      for (int z : ElementSet::from_mask(above_[x] & below_[y]))
        if (z != x && z != y) {
          direct = false;
          break;
        }
      if (direct) out.emplace_back(x, y);
    }
  return out;
}

ElementSet FinitePoset::lower_cone(ElementSet a) const {
  std::uint64_t m = carrier_;
  for (int x : a) m &= below_[x];
  return ElementSet::from_mask(m);
}

ElementSet FinitePoset::upper_cone(ElementSet a) const {
  std::uint64_t m = carrier_;
  for (int x : a) m &= above_[x];
  return ElementSet::from_mask(m);
}

ElementSet FinitePoset::maximal(ElementSet a) const {
  ElementSet out;
  for (int x : a)
    if ((ElementSet::from_mask(above_[x]) & a) == ElementSet::single(x)) out.add(x);
  return out;
}

ElementSet FinitePoset::minimal(ElementSet a) const {
  ElementSet out;
  for (int x : a)
    if ((ElementSet::from_mask(below_[x]) & a) == ElementSet::single(x)) out.add(x);
  return out;
}

bool FinitePoset::set_leq(ElementSet a, ElementSet b) const {
  for (int x : a)
    if (!b.subset_of(ElementSet::from_mask(above_[x]))) return false;
  return true;
}

int FinitePoset::bottom() const {
  if (bottom_ < 0) fail(Errc::not_bounded, "poset has no bottom element");
  return bottom_;
}

int FinitePoset::top() const {
  if (top_ < 0) fail(Errc::not_bounded, "poset has no top element");
  return top_;
}

FinitePoset FinitePoset::dual() const {
  FinitePoset p;
  p.names_ = names_;
  p.above_ = below_;
  p.finish_from_above();
  return p;
}

ElementSet FinitePoset::set_of(std::initializer_list<std::string_view> names) const {
  ElementSet s;
  for (auto n : names) s.add(index_of(n));
  return s;
}

std::string FinitePoset::render(ElementSet s) const {
  if (s.is_singleton()) return names_[s.sole_member()];
  std::string out = "{";
  bool first = true;
  for (int x : s) {
    if (!first) out += ",";
    out += names_[x];
    first = false;
  }
  return out + "}";
}

std::string FinitePoset::render_compact(ElementSet s) const {
  if (s.empty()) return "-";
  std::string out;
  for (int x : s) out += names_[x];
  return out;
}

BoundedPoset::BoundedPoset(FinitePoset p) : p_(std::move(p)) {
  if (!p_.has_bottom()) fail(Errc::not_bounded, "poset has no bottom element");
  if (!p_.has_top()) fail(Errc::not_bounded, "poset has no top element");
  bottom_ = p_.bottom();
  top_ = p_.top();
}

}  // namespace posetops
