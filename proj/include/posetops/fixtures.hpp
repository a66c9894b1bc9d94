#pragma once

#include "posetops/complemented.hpp"
#include "posetops/poset.hpp"

namespace posetops {
namespace fixtures {

// The four reference posets used throughout the test suite. figure1 is
// unbounded; figure2 is complemented but not distributive; figure3 is a
// Boolean poset; figure4 is orthocomplemented with twelve elements.
FinitePoset figure1();
ComplementedPoset figure2();
ComplementedPoset figure3();
ComplementedPoset figure4();

}  // namespace fixtures
}  // namespace posetops
