#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "posetops/poset.hpp"

namespace posetops::detail {

// Lower and upper cones for every subset mask of a small carrier, built
// incrementally off the single-element cones. Callers guard the carrier size;
// 2^n entries per table get materialized here.
struct MaskCones {
  explicit MaskCones(const FinitePoset& p) : n(p.size()) {
    const std::size_t total = std::size_t{1} << n;
    lower.resize(total);
    upper.resize(total);
    lower[0] = upper[0] = p.carrier().mask();
    for (std::size_t m = 1; m < total; ++m) {
      const int low = std::countr_zero(m);
      lower[m] = lower[m & (m - 1)] & p.down_set(low).mask();
      upper[m] = upper[m & (m - 1)] & p.up_set(low).mask();
    }
  }

  ElementSet lower_cone(std::uint64_t mask) const { return ElementSet::from_mask(lower[mask]); }
  ElementSet upper_cone(std::uint64_t mask) const { return ElementSet::from_mask(upper[mask]); }

  int n;
  std::vector<std::uint64_t> lower, upper;
};

}  // namespace posetops::detail
