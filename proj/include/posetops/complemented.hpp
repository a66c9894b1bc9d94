#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "posetops/axiom_report.hpp"
#include "posetops/cone_ops.hpp"
#include "posetops/poset.hpp"

namespace posetops {

// Shared knob for checks that quantify over subsets: scan everything while
// 2^n stays small, otherwise fall back to seeded random sampling.
struct SubsetPolicy {
  int exhaustive_cap = 12;
  int samples = 2000;
  std::uint64_t seed = 0x9e3779b97f4a7c15ull;
};

// Bounded poset with an antitone involution pairing every element with a
// complement: L(x,x') is the bottom, U(x,x') the top.
class ComplementedPoset {
 public:
  ComplementedPoset(BoundedPoset base, std::vector<int> comp);  // invalid_complement

  const BoundedPoset& bounded() const { return b_; }
  const FinitePoset& poset() const { return b_.poset(); }
  int size() const { return b_.size(); }
  int bottom() const { return b_.bottom(); }
  int top() const { return b_.top(); }

  int comp(int x) const { return comp_[x]; }
  const std::vector<int>& comp_vector() const { return comp_; }
  ElementSet comp_image(ElementSet a) const;

  bool same_as(const ComplementedPoset& o) const {
    return poset().same_order(o.poset()) && comp_ == o.comp_;
  }

 private:
  BoundedPoset b_;
  std::vector<int> comp_;
};

// Every complementation the bounded poset admits, in lexicographic order of
// the complement vector. Empty when none exists.
std::vector<std::vector<int>> find_complementations(const BoundedPoset& p);

struct TripleWitness {
  int x, y, z;
  ElementSet lhs, rhs;
};
struct PairWitness {
  int x, y;
  ElementSet lhs, rhs;
};

struct DistributivityResult {
  bool holds = true;
  std::optional<TripleWitness> witness;  // first failing triple, lex order
};

// L(U(x,y),z) = LU(L(x,z),L(y,z)) over all element triples.
DistributivityResult is_distributive(const FinitePoset& p);

// The four classical distributivity conditions: the two element-level cone
// equations and their subset-parameter variants. They are known to agree;
// this evaluates each one separately so that claim stays checkable.
struct ConditionAgreement {
  std::array<bool, 4> holds{};
  bool exhaustive = true;  // false when the subset conditions were sampled
  bool agree() const {
    return holds[0] == holds[1] && holds[1] == holds[2] && holds[2] == holds[3];
  }
};
ConditionAgreement distributivity_conditions_agree(const FinitePoset& p, SubsetPolicy policy = {});

// Boolean means complemented and distributive.
bool is_boolean(const ComplementedPoset& p);

// Symmetric difference A+B = Min U(Max L(A',B), Max L(A,B')).
// Arguments must be non-empty.
ElementSet sym_diff(const ComplementedPoset& p, ElementSet a, ElementSet b);

// The eight element-level identities the symmetric difference satisfies in
// every complemented poset, reported one verdict each.
AxiomReport check_sd_identities(const ComplementedPoset& p);

// First triple where (x+y)+z differs from x+(y+z); the operator is not
// associative in general.
std::optional<TripleWitness> sd_associativity_witness(const ComplementedPoset& p);

struct IdentityResult {
  bool holds = true;
  std::optional<PairWitness> witness;
};

// x+y = Min U(Max L(Min U(x,y), Min U(x',y'))), valid in Boolean posets.
IdentityResult boolean_sd_identity(const ComplementedPoset& p);

// Min U(Max L(x+1, y')) = Max L(x,y') + y', the weak distributive law.
IdentityResult weak_distributivity(const ComplementedPoset& p);

struct SubsetTripleWitness {
  ElementSet a, b, c;
  ElementSet lhs, rhs;
};
struct SubsetPairWitness {
  ElementSet a, b;
  ElementSet lhs, rhs;
};

// The subset-level equation U(L(A,B),C) = UL(U(A,C),U(B,C)) together with the
// identity it implies, A+B = Min U(Max L(Min U(A,B), Min U(A',B'))). The
// conclusion is only evaluated where the hypothesis holds; subsets enter both
// sides only through their cones, so the scan runs over cone-signature
// classes with the smallest member of each class as representative.
struct StrongSubsetResult {
  bool hypothesis = true;
  std::optional<SubsetTripleWitness> hypothesis_witness;
  std::optional<bool> conclusion;
  std::optional<SubsetPairWitness> conclusion_witness;
  bool exhaustive = true;
};
StrongSubsetResult strong_subset_distributivity(const ComplementedPoset& p,
                                                SubsetPolicy policy = {});

}  // namespace posetops
