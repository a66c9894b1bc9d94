#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "posetops/axiom_report.hpp"
#include "posetops/element_set.hpp"
#include "posetops/error.hpp"
#include "posetops/poset.hpp"

namespace posetops {

// Algebra (P, join, meet, 0, 1) whose operations are subset-valued tables.
class OperatorStructure {
 public:
  using Table = std::vector<ElementSet>;  // n*n cells, row-major

  OperatorStructure(std::vector<std::string> names, Table join, Table meet, int zero, int one);

  int size() const { return n_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_[i]; }
  int index_of(std::string_view name) const;
  int zero() const { return zero_; }
  int one() const { return one_; }

  ElementSet join(int x, int y) const { return join_[x * n_ + y]; }
  ElementSet meet(int x, int y) const { return meet_[x * n_ + y]; }

  // Union-form subset extension. join_of_set(C) collects the z absorbing every
  // element of C (join(a,z) = {z}) and keeps those minimal under the induced
  // order x below y iff join(x,y) = {y}; meet_of_set is dual. An empty C
  // constrains nothing, so the extremal layer of the whole carrier comes back.
  ElementSet join_of_set(ElementSet c) const;
  ElementSet meet_of_set(ElementSet c) const;

  // Operator extension to subset pairs. Singleton pairs collapse to the
  // tables; empty arguments are refused with empty_argument.
  ElementSet lift_join(ElementSet a, ElementSet b) const;
  ElementSet lift_meet(ElementSet a, ElementSet b) const;

  // Cell overrides, meant for probing how the axiom checks react.
  void set_join(int x, int y, ElementSet v);
  void set_meet(int x, int y, ElementSet v);

  bool operator==(const OperatorStructure& o) const {
    return names_ == o.names_ && join_ == o.join_ && meet_ == o.meet_ && zero_ == o.zero_ &&
           one_ == o.one_;
  }

  std::string render(ElementSet s) const;

 private:
  void refresh_cache() const;

  int n_;
  std::vector<std::string> names_;
  Table join_, meet_;
  int zero_, one_;

  // Absorption masks, rebuilt lazily after cell overrides.
  mutable bool cache_ok_ = false;
  mutable std::vector<std::uint64_t> jn_row_, jn_col_, mt_row_, mt_col_;
};

// The operator structure (P, Min U, Max L, 0, 1) of a bounded poset.
OperatorStructure structure_from_poset(const BoundedPoset& p);

// One verdict per axiom (i) through (vi).
AxiomReport check_operator_axioms(const OperatorStructure& s);

// Reads the order x below y iff join(x,y) = {y} off the tables. Fails with
// axioms_fail when an axiom breaks, and with consistency_fail when the axioms
// hold but the order is no bounded poset matching the tables and constants.
BoundedPoset poset_from_structure(const OperatorStructure& s);

// The structure rebuilt from its own induced poset equals the original.
bool roundtrip_structure(const OperatorStructure& s);

}  // namespace posetops
