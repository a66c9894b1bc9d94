#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "posetops/complemented.hpp"
#include "posetops/dual.hpp"
#include "posetops/operator_structure.hpp"
#include "posetops/poset.hpp"
#include "posetops/sheffer.hpp"

namespace posetops {

// Line-oriented poset description:
//   version: 1
//   elements: 0 a b 1
//   covers: 0<a 0<b a<1 b<1
//   complement: 0:1 a:b b:a 1:0     (optional)
//   bounds: 0 1                     (optional, validated)
// Blank lines and lines starting with # are skipped on parse; serialize emits
// the canonical form above (covers are the transitive reduction in index
// order), so serialize(parse(f)) == f for canonical files.
struct PosetFile {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> covers;
  std::vector<std::pair<std::string, std::string>> complement;
  std::optional<std::pair<std::string, std::string>> bounds;
};

// Structure description:
//   version: 1
//   kind: operator | sheffer | dual
//   elements: 0 a 1
//   zero: 0          (operator and dual; a sheffer file must not carry it)
//   one: 1
//   join: 0 a -> a   (one line per cell; result members space-separated, "-" empty)
// Table labels per kind: join/meet, stroke, plus/times. A missing (y,x) cell
// defaults to the given (x,y) value; every cell must be covered after that.
struct StructureFile {
  std::string kind;
  std::vector<std::string> elements;
  std::optional<std::string> zero, one;
  std::vector<ElementSet> table_a;  // join / stroke / plus
  std::vector<ElementSet> table_b;  // meet / unused / times
};

PosetFile parse_poset_file(std::string_view text);
StructureFile parse_structure_file(std::string_view text);

// Dispatch on the presence of a kind: line.
std::variant<PosetFile, StructureFile> parse_input(std::string_view text);

std::string serialize(const PosetFile& f);
std::string serialize(const StructureFile& f);

FinitePoset to_poset(const PosetFile& f);
BoundedPoset to_bounded(const PosetFile& f);
ComplementedPoset to_complemented(const PosetFile& f);  // missing_complement when absent

OperatorStructure to_operator(const StructureFile& f);  // kind_mismatch on wrong kind
ShefferStructure to_sheffer(const StructureFile& f);
DualStructure to_dual(const StructureFile& f);

PosetFile poset_file_from(const FinitePoset& p);
PosetFile poset_file_from(const ComplementedPoset& p);
StructureFile structure_file_from(const OperatorStructure& s);
StructureFile structure_file_from(const ShefferStructure& s);
StructureFile structure_file_from(const DualStructure& s);

std::string read_file(const std::string& path);  // parse_error when unreadable

}  // namespace posetops
