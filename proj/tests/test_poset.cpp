#include <doctest.h>

#include <random>

#include "posetops/fixtures.hpp"
#include "posetops/poset.hpp"
#include "support/check_fails.hpp"
#include "support/generators.hpp"
#include "support/naive_oracle.hpp"

using namespace posetops;

namespace {

FinitePoset diamond() {
  return FinitePoset::from_covers({"0", "a", "b", "1"},
                                  {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
}

}  // namespace

TEST_CASE("covers close transitively") {
  const auto p = FinitePoset::from_covers({"0", "a", "b"}, {{"0", "a"}, {"a", "b"}});
  CHECK(p.leq(0, 2));
  CHECK(p.leq(0, 0));
  CHECK_FALSE(p.leq(2, 0));
  CHECK(p.up_set(0) == p.carrier());
  CHECK(p.down_set(2) == p.carrier());
}

TEST_CASE("construction rejects bad input") {
  CHECK_FAILS(FinitePoset::from_covers({"a", "b"}, {{"a", "b"}, {"b", "a"}}), cycle_detected);
  CHECK_FAILS(FinitePoset::from_covers({"a"}, {{"a", "a"}}), cycle_detected);
  CHECK_FAILS(FinitePoset::from_covers({"a", "a"}, {}), duplicate_name);
  CHECK_FAILS(FinitePoset::from_covers({"a", "b"}, {{"a", "c"}}), unknown_name);

  std::vector<std::string> many;
  for (int i = 0; i < 65; ++i) many.push_back("x" + std::to_string(i));
  CHECK_FAILS(FinitePoset::from_covers(many, {}), size_too_large);
}

TEST_CASE("from_relation validates the relation") {
  // 0<=1 and 1<=2 without 0<=2.
  CHECK_FAILS(FinitePoset::from_relation({"x", "y", "z"}, {0b011, 0b110, 0b100}), not_a_poset);
  CHECK_FAILS(FinitePoset::from_relation({"x", "y"}, {0b11, 0b11}), not_a_poset);
  CHECK_FAILS(FinitePoset::from_relation({"x", "y"}, {0b01, 0b00}), not_a_poset);
  const auto p = FinitePoset::from_relation({"x", "y"}, {0b11, 0b10});
  CHECK(p.leq(0, 1));
}

TEST_CASE("cover_pairs is the transitive reduction") {
  const auto p =
      FinitePoset::from_covers({"0", "a", "b"}, {{"0", "a"}, {"a", "b"}, {"0", "b"}});
  const std::vector<std::pair<int, int>> want = {{0, 1}, {1, 2}};
  CHECK(p.cover_pairs() == want);
}

TEST_CASE("empty set cones give the carrier") {
  const auto p = diamond();
  CHECK(p.lower_cone({}) == p.carrier());
  CHECK(p.upper_cone({}) == p.carrier());
  CHECK(p.maximal({}).empty());
  CHECK(p.minimal({}).empty());
}

TEST_CASE("maximal, minimal and set_leq") {
  const auto p = diamond();
  const auto ab = p.set_of({"a", "b"});
  CHECK(p.maximal(p.carrier()) == p.set_of({"1"}));
  CHECK(p.minimal(p.carrier()) == p.set_of({"0"}));
  CHECK(p.maximal(ab) == ab);  // antichain
  CHECK(p.set_leq(p.set_of({"0"}), ab));
  CHECK_FALSE(p.set_leq(ab, p.set_of({"a"})));
  CHECK(p.set_leq({}, ab));  // vacuous
  CHECK(p.set_leq(ab, {}));
}

TEST_CASE("bounds on the fixtures") {
  const auto f1 = fixtures::figure1();
  CHECK(f1.has_bottom());
  CHECK_FALSE(f1.has_top());
  CHECK(f1.name(f1.bottom()) == "0");
  CHECK_FAILS(f1.top(), not_bounded);

  const auto f2 = fixtures::figure2();
  CHECK(f2.poset().is_bounded());
  CHECK(f2.poset().name(f2.bottom()) == "0");
  CHECK(f2.poset().name(f2.top()) == "1");
}

TEST_CASE("BoundedPoset refuses unbounded posets") {
  try {
    BoundedPoset b(fixtures::figure1());
    FAIL("figure1 has no top");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_bounded);
    CHECK(std::string(e.what()).find("top") != std::string::npos);
  }
}

TEST_CASE("dual swaps the order") {
  const auto p = diamond();
  const auto d = p.dual();
  CHECK(d.leq(3, 0));
  CHECK_FALSE(d.leq(0, 3));
  CHECK(d.name(d.bottom()) == "1");
  CHECK(d.dual().same_order(p));
}

TEST_CASE("rendering") {
  const auto f2 = fixtures::figure2();
  const auto& p = f2.poset();
  CHECK(p.render(p.set_of({"a", "b'"})) == "{a,b'}");
  CHECK(p.render(p.set_of({"a"})) == "a");
  CHECK(p.render({}) == "{}");
  CHECK(p.render_compact(p.set_of({"a", "b'"})) == "ab'");
  CHECK(p.render_compact({}) == "-");
}

TEST_CASE("name lookup") {
  const auto p = diamond();
  CHECK(p.index_of("b") == 2);
  CHECK(p.find("nope") == std::nullopt);
  CHECK_FAILS(p.index_of("nope"), unknown_name);
}

TEST_CASE("random posets agree with the set-based oracle") {
  std::mt19937_64 rng(20260816);
  std::uniform_int_distribution<int> size(1, 10);
  for (int round = 0; round < 40; ++round) {
    const auto p = gen::random_poset(rng, size(rng));
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = ElementSet::from_mask(rng() & p.carrier().mask());
      if (a.empty()) continue;
      const auto av = naive::members(a);
      CHECK(naive::same_set(naive::lower_cone(p, av), p.lower_cone(a)));
      CHECK(naive::same_set(naive::upper_cone(p, av), p.upper_cone(a)));
      CHECK(naive::same_set(naive::maximal(p, av), p.maximal(a)));
      CHECK(naive::same_set(naive::minimal(p, av), p.minimal(a)));
    }
  }
}
