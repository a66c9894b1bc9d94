#include "posetops/cone_ops.hpp"

namespace posetops {

ElementSet max_l(const FinitePoset& p, ElementSet a, ElementSet b) {
  return p.maximal(p.lower_cone(a | b));
}

ElementSet min_u(const FinitePoset& p, ElementSet a, ElementSet b) {
  return p.minimal(p.upper_cone(a | b));
}

ElementSet max_l(const FinitePoset& p, ElementSet a) { return p.maximal(p.lower_cone(a)); }

ElementSet min_u(const FinitePoset& p, ElementSet a) { return p.minimal(p.upper_cone(a)); }

bool meets_exist(const BoundedPoset& bp) {
  const FinitePoset& p = bp.poset();
  for (int x = 0; x < p.size(); ++x)
    for (int y = x; y < p.size(); ++y) {
      if (!max_l(p, ElementSet::single(x), ElementSet::single(y)).is_singleton()) return false;
      if (!min_u(p, ElementSet::single(x), ElementSet::single(y)).is_singleton()) return false;
    }
  return true;
}

std::optional<AssocWitness> associativity_witness(const FinitePoset& p, PairOp op) {
  auto apply = [&](ElementSet a, ElementSet b) {
    return op == PairOp::max_l ? max_l(p, a, b) : min_u(p, a, b);
  };
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y)
      for (int z = 0; z < p.size(); ++z) {
        ElementSet ex = ElementSet::single(x), ey = ElementSet::single(y),
                   ez = ElementSet::single(z);
        ElementSet lhs = apply(apply(ex, ey), ez);
        ElementSet rhs = apply(ex, apply(ey, ez));
        if (lhs != rhs) return AssocWitness{x, y, z, lhs, rhs};
      }
  return std::nullopt;
}

}  // namespace posetops
