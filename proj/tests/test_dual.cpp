#include <doctest.h>

#include <random>

#include "posetops/cone_ops.hpp"
#include "posetops/dual.hpp"
#include "posetops/fixtures.hpp"
#include "support/check_fails.hpp"

using namespace posetops;

namespace {

DualStructure fig3_dual() { return dual_from_boolean(fixtures::figure3()); }

// Copies the tables so a single cell can be bent before construction.
DualStructure rebuilt_with(DualStructure::Table plus, DualStructure::Table times) {
  const auto cp = fixtures::figure3();
  return DualStructure(cp.poset().names(), std::move(plus), std::move(times), cp.bottom(),
                       cp.top());
}

std::pair<DualStructure::Table, DualStructure::Table> fig3_tables() {
  const auto d = fig3_dual();
  const int n = d.size();
  DualStructure::Table plus(static_cast<size_t>(n) * n), times(plus.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      plus[x * n + y] = d.plus(x, y);
      times[x * n + y] = d.times(x, y);
    }
  return {plus, times};
}

}  // namespace

TEST_CASE("dual cells come from symmetric difference and Max L") {
  const auto cp = fixtures::figure3();
  const auto& p = cp.poset();
  const auto d = fig3_dual();
  const int a = p.index_of("a"), b = p.index_of("b");
  CHECK(d.plus(a, b) == p.set_of({"c'", "d'"}));
  CHECK(d.times(a, b) == p.set_of({"0"}));
  CHECK(d.plus(a, d.one()) == p.set_of({"a'"}));
  CHECK(d.zero() == cp.bottom());
  CHECK(d.one() == cp.top());
}

TEST_CASE("only Boolean posets have duals") {
  CHECK_FAILS(dual_from_boolean(fixtures::figure2()), not_boolean);
  CHECK_NOTHROW(dual_from_boolean(fixtures::figure4()));
}

TEST_CASE("dual axioms pass on the Boolean fixtures") {
  for (const auto& cp : {fixtures::figure3(), fixtures::figure4()}) {
    const auto r = check_dual_axioms(dual_from_boolean(cp));
    CHECK(r.verdicts.size() == 6);
    CHECK_MESSAGE(r.all_pass(), r.first_failure());
  }
}

TEST_CASE("asymmetric probe breaks the membership characterization") {
  auto d = fig3_dual();
  const int a = d.index_of("a"), b = d.index_of("b");
  d.set_times(a, b, ElementSet::single(d.index_of("a'")));
  const auto r = check_dual_axioms(d);
  CHECK_FALSE(r.all_pass());
  const auto* vi = r.find("(vi)");
  REQUIRE(vi != nullptr);
  CHECK_FALSE(vi->pass);
  CHECK(vi->witness.find("x=a y=b") != std::string::npos);
}

TEST_CASE("symmetric corruption breaks complement antitonicity") {
  auto d = fig3_dual();
  const int a = d.index_of("a"), b = d.index_of("b");
  d.set_times(a, b, ElementSet::single(a));
  d.set_times(b, a, ElementSet::single(a));
  const auto r = check_dual_axioms(d);
  CHECK_FALSE(r.all_pass());
  const auto* iii = r.find("(iii)");
  REQUIRE(iii != nullptr);
  CHECK_FALSE(iii->pass);
  CHECK(iii->witness.find("x=a y=b") != std::string::npos);

  CHECK_FAILS(boolean_from_dual(d), axioms_fail);
}

TEST_CASE("the constructor rejects asymmetric tables") {
  auto [plus, times] = fig3_tables();
  const int n = 10;
  times[1 * n + 2] = ElementSet::single(5);
  CHECK_FAILS(rebuilt_with(plus, times), consistency_fail);

  auto [plus2, times2] = fig3_tables();
  plus2[0 * n + 3] = ElementSet::single(7);
  CHECK_FAILS(rebuilt_with(plus2, times2), consistency_fail);
}

TEST_CASE("boolean_from_dual inverts dual_from_boolean") {
  for (const auto& cp : {fixtures::figure3(), fixtures::figure4()}) {
    CHECK(boolean_from_dual(dual_from_boolean(cp)).same_as(cp));
    const auto rt = dual_roundtrip(dual_from_boolean(cp));
    CHECK(rt.times_equal);
    CHECK(rt.plus_equal);
  }
}

TEST_CASE("subset times equals Max L on derived duals") {
  const auto cp = fixtures::figure3();
  const auto& p = cp.poset();
  const auto d = fig3_dual();
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << p.size()); ++m) {
    const auto c = ElementSet::from_mask(m);
    CHECK(d.times_of_set(c) == max_l(p, c));
  }
}

TEST_CASE("subset plus equals the symmetric difference on derived duals") {
  std::mt19937_64 rng(99251);
  const auto cp = fixtures::figure3();
  const auto& p = cp.poset();
  const auto d = fig3_dual();
  for (std::uint64_t am = 1; am < 32; ++am)
    for (std::uint64_t bm = 1; bm < 32; ++bm) {
      const auto a = ElementSet::from_mask(am), b = ElementSet::from_mask(bm);
      CHECK(d.lift_plus(a, b) == sym_diff(cp, a, b));
      CHECK(d.lift_times(a, b) == max_l(p, a | b));
    }
  for (int i = 0; i < 300; ++i) {
    const auto a = ElementSet::from_mask(rng() & p.carrier().mask());
    const auto b = ElementSet::from_mask(rng() & p.carrier().mask());
    if (a.empty() || b.empty()) continue;
    CHECK(d.lift_plus(a, b) == sym_diff(cp, a, b));
  }
}

TEST_CASE("lifts collapse on singletons and refuse empties") {
  const auto d = fig3_dual();
  const int a = d.index_of("a"), b = d.index_of("b");
  CHECK(d.lift_plus(ElementSet::single(a), ElementSet::single(b)) == d.plus(a, b));
  CHECK(d.lift_times(ElementSet::single(a), ElementSet::single(b)) == d.times(a, b));
  CHECK_FAILS(d.lift_plus({}, ElementSet::single(a)), empty_argument);
  CHECK_FAILS(d.lift_times(ElementSet::single(a), {}), empty_argument);
}
