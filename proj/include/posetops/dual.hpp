#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "posetops/axiom_report.hpp"
#include "posetops/complemented.hpp"
#include "posetops/element_set.hpp"

namespace posetops {

// Algebra (P, plus, times, 0, 1), the ring-flavored counterpart of a Boolean
// poset: times plays Max L, plus the symmetric difference.
class DualStructure {
 public:
  using Table = std::vector<ElementSet>;  // n*n cells, row-major

  // Both tables must be symmetric; cells are subsets of the carrier.
  DualStructure(std::vector<std::string> names, Table plus, Table times, int zero, int one);

  int size() const { return n_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_[i]; }
  int index_of(std::string_view name) const;
  int zero() const { return zero_; }
  int one() const { return one_; }

  ElementSet plus(int x, int y) const { return plus_[x * n_ + y]; }
  ElementSet times(int x, int y) const { return times_[x * n_ + y]; }

  // Subset extension of times: all common times-lower-bounds of the set,
  // maximal under the induced order x below y iff times(x,y) = {x}.
  ElementSet times_of_set(ElementSet c) const;

  // Subset extensions; singleton pairs collapse to the tables, empty
  // arguments are refused. lift_plus routes the defining formula
  // Min U(Max L(A°,B), Max L(A,B°)) through the times-induced order, with
  // A° collecting plus(a,1) over the set.
  ElementSet lift_times(ElementSet a, ElementSet b) const;
  ElementSet lift_plus(ElementSet a, ElementSet b) const;

  void set_plus(int x, int y, ElementSet v);
  void set_times(int x, int y, ElementSet v);

  bool operator==(const DualStructure& o) const {
    return names_ == o.names_ && plus_ == o.plus_ && times_ == o.times_ && zero_ == o.zero_ &&
           one_ == o.one_;
  }

  std::string render(ElementSet s) const;

 private:
  friend AxiomReport check_dual_axioms(const DualStructure&, SubsetPolicy);
  void refresh_cache() const;
  ElementSet plus_image(ElementSet a) const;  // union of plus(a,1) over a
  ElementSet plus_core(ElementSet a, ElementSet b) const;  // total, tolerates empties

  int n_;
  std::vector<std::string> names_;
  Table plus_, times_;
  int zero_, one_;

  // Row and column masks of the absorption relation times(x,y) = {x}.
  mutable bool cache_ok_ = false;
  mutable std::vector<std::uint64_t> up_row_, dn_row_;
};

// The dual (P, +, ·, 0, 1) of a Boolean poset. Fails with not_boolean when
// the complemented poset is not distributive.
DualStructure dual_from_boolean(const ComplementedPoset& p);

// One verdict per axiom (i) through (vi). The membership characterization
// (vi) runs over element pairs plus whole subsets, exhaustively while the
// carrier stays within policy.exhaustive_cap and sampled above it.
AxiomReport check_dual_axioms(const DualStructure& d, SubsetPolicy policy = {});

// Rebuilds the Boolean poset: x below y iff times(x,y) = {x}, complement from
// plus(x,1). Fails with axioms_fail on axiom violations, consistency_fail
// when the derived data is no Boolean poset.
ComplementedPoset boolean_from_dual(const DualStructure& d);

struct DualRoundtrip {
  bool times_equal = false;  // asserted by the correspondence theorem
  bool plus_equal = false;   // measured, not asserted
};

// Compares d against the dual rebuilt from its own Boolean poset.
DualRoundtrip dual_roundtrip(const DualStructure& d);

}  // namespace posetops
