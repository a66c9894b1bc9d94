#include <doctest.h>

#include "posetops/cone_ops.hpp"
#include "posetops/fixtures.hpp"
#include "posetops/operator_structure.hpp"
#include "support/check_fails.hpp"

using namespace posetops;

namespace {

OperatorStructure figure2_structure() { return structure_from_poset(fixtures::figure2().bounded()); }

OperatorStructure chain2_structure() {
  return structure_from_poset(
      BoundedPoset(FinitePoset::from_covers({"0", "1"}, {{"0", "1"}})));
}

OperatorStructure corrupt_chain2() {
  auto s = chain2_structure();
  s.set_join(0, 1, ElementSet::single(0));
  s.set_join(1, 0, ElementSet::single(0));
  return s;
}

}  // namespace

TEST_CASE("derived tables hold the cone operators") {
  const auto s = figure2_structure();
  const auto cp = fixtures::figure2();
  const auto& p = cp.poset();
  const int a = p.index_of("a"), b = p.index_of("b");
  CHECK(s.join(a, b) == p.set_of({"d'"}));
  CHECK(s.meet(a, b) == p.set_of({"0"}));
  CHECK(s.zero() == p.index_of("0"));
  CHECK(s.one() == p.index_of("1"));
}

TEST_CASE("subset lift matches the cones on derived structures") {
  const auto s = figure2_structure();
  const auto cp = fixtures::figure2();
  const auto& p = cp.poset();
  CHECK(s.lift_join(p.set_of({"a", "b"}), p.set_of({"c"})) == p.set_of({"d'"}));

  for (std::uint64_t m = 1; m < (std::uint64_t{1} << p.size()); ++m) {
    const auto c = ElementSet::from_mask(m);
    CHECK(s.join_of_set(c) == min_u(p, c));
    CHECK(s.meet_of_set(c) == max_l(p, c));
  }

  CHECK_FAILS(s.lift_join({}, p.set_of({"a"})), empty_argument);
  CHECK_FAILS(s.lift_meet(p.set_of({"a"}), {}), empty_argument);
}

TEST_CASE("axioms pass on structures of bounded posets") {
  for (const auto& cp : {fixtures::figure2(), fixtures::figure3(), fixtures::figure4()}) {
    const auto r = check_operator_axioms(structure_from_poset(cp.bounded()));
    CHECK_MESSAGE(r.all_pass(), r.first_failure());
    CHECK(r.verdicts.size() == 6);
  }
  CHECK(check_operator_axioms(chain2_structure()).all_pass());
}

TEST_CASE("a corrupted join cell breaks exactly the absorption axiom") {
  const auto s = corrupt_chain2();
  const auto r = check_operator_axioms(s);
  CHECK_FALSE(r.all_pass());
  CHECK(r.find("(i)")->pass);
  CHECK(r.find("(ii)")->pass);
  CHECK_FALSE(r.find("(iii)")->pass);
  CHECK(r.find("(iii)")->witness.find("x=1") != std::string::npos);

  // Singleton lifts keep reading the raw table, corrupt or not.
  CHECK(s.lift_join(ElementSet::single(0), ElementSet::single(1)) == ElementSet::single(0));
}

TEST_CASE("structures rebuild their posets") {
  for (const auto& cp : {fixtures::figure2(), fixtures::figure3(), fixtures::figure4()}) {
    const auto s = structure_from_poset(cp.bounded());
    const auto back = poset_from_structure(s);
    CHECK(back.poset().same_order(cp.poset()));
    CHECK(roundtrip_structure(s));
  }
}

TEST_CASE("poset_from_structure rejects corrupt tables") {
  try {
    poset_from_structure(corrupt_chain2());
    FAIL("corrupt structure accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::axioms_fail);
    CHECK(std::string(e.what()).find("(iii)") != std::string::npos);
  }
}

TEST_CASE("two-element corpus: axiom implications and uniqueness") {
  // Every pair of join/meet tables over {0,1} with zero=0, one=1. Each of the
  // four cells independently takes one of the four subsets.
  const auto reference = chain2_structure();
  int full_passes = 0;
  for (int jm = 0; jm < 256; ++jm)
    for (int mm = 0; mm < 256; ++mm) {
      OperatorStructure::Table join(4), meet(4);
      for (int c = 0; c < 4; ++c) {
        join[c] = ElementSet::from_mask((jm >> (2 * c)) & 3);
        meet[c] = ElementSet::from_mask((mm >> (2 * c)) & 3);
      }
      const OperatorStructure s({"0", "1"}, join, meet, 0, 1);
      const auto r = check_operator_axioms(s);
      auto pass = [&](const char* id) { return r.find(id)->pass; };

      if (pass("(i)") && pass("(iv)")) CHECK(pass("(iii)"));
      if (pass("(ii)") && pass("(iii)") && pass("(v)")) CHECK(pass("(i)"));
      if (r.all_pass()) {
        ++full_passes;
        CHECK(s == reference);
      }
    }
  CHECK(full_passes == 1);
}
