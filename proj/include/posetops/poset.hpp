#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "posetops/element_set.hpp"
#include "posetops/error.hpp"

namespace posetops {

// Finite partial order on at most 64 named elements. The relation is kept as
// per-element up-set and down-set bitmasks, so cones are a few AND operations.
// Element indices follow declaration order of the names.
class FinitePoset {
 public:
  static constexpr int kMaxElements = 64;

  // Builds the reflexive-transitive closure of the given cover pairs.
  // Rejects duplicate or unknown names, oversized carriers and cycles.
  static FinitePoset from_covers(std::vector<std::string> names,
                                 const std::vector<std::pair<std::string, std::string>>& covers);

  // Relation given directly: above[x] = mask of {y | x <= y}. Validates that
  // the relation is reflexive, antisymmetric and transitive.
  static FinitePoset from_relation(std::vector<std::string> names,
                                   const std::vector<std::uint64_t>& above);

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_[i]; }
  int index_of(std::string_view name) const;
  std::optional<int> find(std::string_view name) const;

  bool leq(int x, int y) const { return (above_[x] >> y) & 1; }
  ElementSet up_set(int x) const { return ElementSet::from_mask(above_[x]); }
  ElementSet down_set(int x) const { return ElementSet::from_mask(below_[x]); }
  ElementSet carrier() const { return ElementSet::from_mask(carrier_); }

  // Covering pairs (x, y) of the stored order, i.e. its transitive reduction,
  // sorted lexicographically by index.
  std::vector<std::pair<int, int>> cover_pairs() const;

  // Cones follow the convention L(emptyset) = U(emptyset) = carrier.
  ElementSet lower_cone(ElementSet a) const;
  ElementSet upper_cone(ElementSet a) const;
  ElementSet maximal(ElementSet a) const;
  ElementSet minimal(ElementSet a) const;

  // Every element of a is below every element of b. Vacuously true on empties.
  bool set_leq(ElementSet a, ElementSet b) const;

  bool has_bottom() const { return bottom_ >= 0; }
  bool has_top() const { return top_ >= 0; }
  bool is_bounded() const { return bottom_ >= 0 && top_ >= 0; }
  int bottom() const;  // fails with not_bounded when absent
  int top() const;

  FinitePoset dual() const;

  // Same names in the same order and the same relation.
  bool same_order(const FinitePoset& o) const {
    return names_ == o.names_ && above_ == o.above_;
  }

  ElementSet set_of(std::initializer_list<std::string_view> names) const;
  std::string render(ElementSet s) const;          // {a,b'}; singletons bare; {} empty
  std::string render_compact(ElementSet s) const;  // ab'; "-" when empty

 private:
  FinitePoset() = default;
  static std::vector<std::string> checked_names(std::vector<std::string> names);
  void finish_from_above();

  std::vector<std::string> names_;
  std::vector<std::uint64_t> below_, above_;
  std::uint64_t carrier_ = 0;
  int bottom_ = -1, top_ = -1;
};

// Poset with a global least and greatest element.
class BoundedPoset {
 public:
  explicit BoundedPoset(FinitePoset p);  // fails with not_bounded

  const FinitePoset& poset() const { return p_; }
  int size() const { return p_.size(); }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

 private:
  FinitePoset p_;
  int bottom_, top_;
};

}  // namespace posetops
