#pragma once

#include <optional>

#include "posetops/poset.hpp"

namespace posetops {

enum class PairOp { max_l, min_u };

// Max L(A, B): maximal elements of the lower cone of A with B; Min U dual.
// Results can be empty on unbounded posets; on bounded ones they never are.
ElementSet max_l(const FinitePoset& p, ElementSet a, ElementSet b);
ElementSet min_u(const FinitePoset& p, ElementSet a, ElementSet b);
ElementSet max_l(const FinitePoset& p, ElementSet a);
ElementSet min_u(const FinitePoset& p, ElementSet a);

// Every pair of elements has a single greatest lower and least upper bound,
// i.e. the bounded poset is a lattice.
bool meets_exist(const BoundedPoset& p);

struct AssocWitness {
  int x, y, z;
  ElementSet lhs, rhs;  // op(op(x,y),z) and op(x,op(y,z)), subset-extended
};

// First triple (x, y, z) in lexicographic index order where the two nestings
// of the operator differ; nullopt when the operator is associative.
std::optional<AssocWitness> associativity_witness(const FinitePoset& p, PairOp op);

}  // namespace posetops
