#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "posetops/axiom_report.hpp"
#include "posetops/complemented.hpp"
#include "posetops/element_set.hpp"

namespace posetops {

// Algebra (P, |) with one subset-valued operation, the Sheffer stroke.
class ShefferStructure {
 public:
  using Table = std::vector<ElementSet>;  // n*n cells, row-major

  ShefferStructure(std::vector<std::string> names, Table stroke);

  int size() const { return n_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_[i]; }
  int index_of(std::string_view name) const;

  ElementSet stroke(int x, int y) const { return stroke_[x * n_ + y]; }

  // Union-form subset extension, grounded in the element table. With
  // C(z) = stroke(z,z), the stroke of a set collects every z reproduced by
  // all its arguments (stroke(w,a) = {z} for each w in C(z)) and keeps the
  // ones maximal under x below y iff stroke(w,v) = {x} over C(x) x C(y).
  ElementSet stroke_of_set(ElementSet c) const;

  // Subset pairs; singletons collapse to the table, empties are refused.
  ElementSet lift_stroke(ElementSet a, ElementSet b) const;

  void set_stroke(int x, int y, ElementSet v);

  bool operator==(const ShefferStructure& o) const {
    return names_ == o.names_ && stroke_ == o.stroke_;
  }

  std::string render(ElementSet s) const;

 private:
  void refresh_cache() const;

  int n_;
  std::vector<std::string> names_;
  Table stroke_;

  mutable bool cache_ok_ = false;
  mutable std::vector<std::uint64_t> cand_row_, up_row_;
};

// The Sheffer structure x|y = Max L(x',y') of a complemented poset.
ShefferStructure sheffer_from_poset(const ComplementedPoset& p);

// One verdict per axiom (i) through (vii).
AxiomReport check_sheffer_axioms(const ShefferStructure& s);

// Rebuilds the complemented poset: x' = x|x, x below y iff x'|y' = {x},
// bottom x|x', top its complement. Fails with axioms_fail when an axiom
// breaks and with consistency_fail when the data does not cohere (x|x not an
// element, the relation no poset, or tables drifting from the cones).
ComplementedPoset poset_from_sheffer(const ShefferStructure& s);

// The structure of the rebuilt poset equals the original and vice versa.
bool sheffer_roundtrip(const ComplementedPoset& p);

}  // namespace posetops
