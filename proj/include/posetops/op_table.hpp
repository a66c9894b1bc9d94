#pragma once

#include <string>
#include <vector>

#include "posetops/complemented.hpp"
#include "posetops/element_set.hpp"
#include "posetops/poset.hpp"

namespace posetops {

// Square table of a binary set-valued operation, kept purely as data so the
// renderers stay independent of where the cells came from.
struct OpTable {
  char corner = '?';  // operation symbol shown in the header corner
  std::vector<std::string> names;
  std::vector<ElementSet> cells;  // n*n, row-major

  int size() const { return static_cast<int>(names.size()); }
  ElementSet cell(int x, int y) const { return cells[x * names.size() + y]; }

  // Concatenated member names without braces, "-" for the empty set.
  std::string compact(ElementSet s) const;

  // One space between columns, operation symbol in the corner. This is the
  // byte-exact layout of the golden files.
  std::string render_golden() const;

  // Columns padded for reading; same cell text as the golden layout.
  std::string render_aligned() const;

  // Cells as arrays of member names.
  std::string render_json() const;
};

OpTable sym_diff_table(const ComplementedPoset& cp);
OpTable sheffer_table(const ComplementedPoset& cp);
OpTable maxl_table(const FinitePoset& p);
OpTable minu_table(const FinitePoset& p);

}  // namespace posetops
