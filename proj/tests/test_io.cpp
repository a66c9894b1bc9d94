#include <doctest.h>

#include <string>
#include <variant>

#include "posetops/fixtures.hpp"
#include "posetops/io.hpp"
#include "posetops/operator_structure.hpp"
#include "support/check_fails.hpp"

using namespace posetops;

namespace {

std::string fixture_text(const char* name) {
  return read_file(std::string(FIXTURES_DIR "/") + name);
}

}  // namespace

TEST_CASE("fixture files are canonical") {
  for (const char* name : {"fig1.poset", "fig2.poset", "fig3.poset", "fig4.poset"}) {
    const std::string text = fixture_text(name);
    CHECK_MESSAGE(serialize(parse_poset_file(text)) == text, name);
  }
}

TEST_CASE("fixture files rebuild the bundled posets") {
  CHECK(to_poset(parse_poset_file(fixture_text("fig1.poset"))).same_order(fixtures::figure1()));
  CHECK(to_complemented(parse_poset_file(fixture_text("fig2.poset"))).same_as(fixtures::figure2()));
  CHECK(to_complemented(parse_poset_file(fixture_text("fig3.poset"))).same_as(fixtures::figure3()));
  CHECK(to_complemented(parse_poset_file(fixture_text("fig4.poset"))).same_as(fixtures::figure4()));

  CHECK(serialize(poset_file_from(fixtures::figure1())) == fixture_text("fig1.poset"));
  CHECK(serialize(poset_file_from(fixtures::figure2())) == fixture_text("fig2.poset"));
}

TEST_CASE("comments, blank lines and CRLF are tolerated") {
  const std::string canonical = fixture_text("fig2.poset");
  const std::string noisy = "# a complemented poset\r\n\r\n  # indented comment\n" + canonical;
  CHECK(serialize(parse_poset_file(noisy)) == canonical);
}

TEST_CASE("structure files round-trip") {
  const OperatorStructure os =
      structure_from_poset(BoundedPoset(fixtures::figure2().poset()));
  const std::string os_text = serialize(structure_file_from(os));
  CHECK(to_operator(parse_structure_file(os_text)) == os);
  CHECK(serialize(parse_structure_file(os_text)) == os_text);

  const ShefferStructure sh = sheffer_from_poset(fixtures::figure3());
  const std::string sh_text = serialize(structure_file_from(sh));
  CHECK(to_sheffer(parse_structure_file(sh_text)) == sh);
  CHECK(serialize(parse_structure_file(sh_text)) == sh_text);

  const DualStructure du = dual_from_boolean(fixtures::figure3());
  const std::string du_text = serialize(structure_file_from(du));
  CHECK(to_dual(parse_structure_file(du_text)) == du);
  CHECK(serialize(parse_structure_file(du_text)) == du_text);
}

TEST_CASE("parse_input dispatches on the kind line") {
  const auto poset_side = parse_input(fixture_text("fig2.poset"));
  CHECK(std::holds_alternative<PosetFile>(poset_side));

  const std::string du_text =
      serialize(structure_file_from(dual_from_boolean(fixtures::figure3())));
  const auto structure_side = parse_input(du_text);
  CHECK(std::holds_alternative<StructureFile>(structure_side));
}

TEST_CASE("poset file rejects malformed text") {
  CHECK_FAILS(parse_poset_file("elements: a b\n"), parse_error);             // no header
  CHECK_FAILS(parse_poset_file("version: 2\nelements: a\n"), parse_error);   // wrong version
  CHECK_FAILS(parse_poset_file("version: 1\n"), parse_error);                // no elements
  CHECK_FAILS(parse_poset_file("version: 1\nelements:\n"), parse_error);     // empty elements
  CHECK_FAILS(parse_poset_file("version: 1\nelements: a\njust words\n"), parse_error);
  CHECK_FAILS(parse_poset_file("version: 1\nelements: a\nedges: a<a\n"), parse_error);
  CHECK_FAILS(parse_poset_file("version: 1\nelements: a b\nelements: a\n"), parse_error);
  CHECK_FAILS(parse_poset_file("version: 1\nelements: a b\ncovers: a-b\n"), parse_error);
  CHECK_FAILS(parse_poset_file("version: 1\nelements: a b\ncovers: a<\n"), parse_error);
  CHECK_FAILS(parse_poset_file("version: 1\nelements: a b\nbounds: a\n"), parse_error);
}

TEST_CASE("name errors surface when the poset is built") {
  CHECK_FAILS(to_poset(parse_poset_file("version: 1\nelements: a b\ncovers: a<c\n")),
              unknown_name);
  CHECK_FAILS(to_poset(parse_poset_file("version: 1\nelements: a a\n")), duplicate_name);
}

TEST_CASE("bounds lines are checked against the order") {
  const std::string chain = "version: 1\nelements: p q\ncovers: p<q\n";
  CHECK(to_poset(parse_poset_file(chain + "bounds: p q\n")).is_bounded());
  CHECK_FAILS(to_poset(parse_poset_file(chain + "bounds: q p\n")), parse_error);
  CHECK_FAILS(to_poset(parse_poset_file(fixture_text("fig1.poset") + "bounds: 0 e\n")),
              parse_error);
}

TEST_CASE("complement section errors") {
  CHECK_FAILS(to_complemented(parse_poset_file(fixture_text("fig1.poset"))), missing_complement);

  const std::string chain = "version: 1\nelements: p q\ncovers: p<q\n";
  CHECK_FAILS(to_complemented(parse_poset_file(chain + "complement: p:q p:q\n")), parse_error);
  CHECK_FAILS(to_complemented(parse_poset_file(chain + "complement: p:q\n")), parse_error);
  CHECK_FAILS(to_complemented(parse_poset_file(chain + "complement: p:q q:r\n")), unknown_name);
  CHECK(to_complemented(parse_poset_file(chain + "complement: p:q q:p\n")).size() == 2);
}

TEST_CASE("structure file rejects malformed text") {
  const std::string head = "version: 1\nkind: operator\nelements: 0 1\nzero: 0\none: 1\n";
  CHECK_FAILS(parse_structure_file("version: 1\nkind: ring\nelements: a\n"), parse_error);
  CHECK_FAILS(parse_structure_file("version: 1\nkind: operator\njoin: a a -> a\n"), parse_error);
  CHECK_FAILS(parse_structure_file(head + "join: 0 1 1\n"), parse_error);           // no arrow
  CHECK_FAILS(parse_structure_file(head + "plus: 0 1 -> 1\n"), parse_error);        // wrong table
  CHECK_FAILS(parse_structure_file(head + "join: 0 1 -> 1\njoin: 0 1 -> 0\n"), parse_error);
  CHECK_FAILS(parse_structure_file(head + "join: 0 2 -> 1\n"), unknown_name);

  // every cell must be covered once mirrors are applied
  CHECK_FAILS(parse_structure_file(head +
                                   "join: 0 0 -> 0\njoin: 0 1 -> 1\njoin: 1 1 -> 1\n"
                                   "meet: 0 0 -> 0\nmeet: 1 1 -> 1\n"),
              parse_error);
}

TEST_CASE("constants belong to the kind") {
  CHECK_FAILS(parse_structure_file("version: 1\nkind: sheffer\nelements: 0 1\nzero: 0\n"
                                   "stroke: 0 0 -> 1\nstroke: 0 1 -> 1\nstroke: 1 1 -> 0\n"),
              parse_error);
  CHECK_FAILS(parse_structure_file("version: 1\nkind: dual\nelements: 0 1\none: 1\n"
                                   "plus: 0 0 -> 0\nplus: 0 1 -> 1\nplus: 1 1 -> 0\n"
                                   "times: 0 0 -> 0\ntimes: 0 1 -> 0\ntimes: 1 1 -> 1\n"),
              parse_error);
}

TEST_CASE("kind mismatches are reported as such") {
  const std::string sheffer_text =
      serialize(structure_file_from(sheffer_from_poset(fixtures::figure3())));
  const StructureFile sf = parse_structure_file(sheffer_text);
  CHECK_FAILS(to_operator(sf), kind_mismatch);
  CHECK_FAILS(to_dual(sf), kind_mismatch);

  const std::string op_text = serialize(
      structure_file_from(structure_from_poset(BoundedPoset(fixtures::figure2().poset()))));
  CHECK_FAILS(to_sheffer(parse_structure_file(op_text)), kind_mismatch);
}

TEST_CASE("missing mirror cells default to the given one") {
  const OperatorStructure s = to_operator(parse_structure_file(
      "version: 1\nkind: operator\nelements: 0 1\nzero: 0\none: 1\n"
      "join: 0 0 -> 0\njoin: 0 1 -> 1\njoin: 1 1 -> 1\n"
      "meet: 0 0 -> 0\nmeet: 0 1 -> 0\nmeet: 1 1 -> 1\n"));
  CHECK(s.join(1, 0) == s.join(0, 1));
  CHECK(s.meet(1, 0) == ElementSet::single(0));
  CHECK(s == structure_from_poset(BoundedPoset(
                 FinitePoset::from_covers({"0", "1"}, {{"0", "1"}}))));
}

TEST_CASE("empty cells are written and read as a dash") {
  StructureFile f;
  f.kind = "sheffer";
  f.elements = {"p", "q"};
  f.table_a = {ElementSet::single(1), ElementSet{}, ElementSet{}, ElementSet::single(0)};
  const std::string text = serialize(f);
  CHECK(text.find("stroke: p q -> -\n") != std::string::npos);
  const StructureFile back = parse_structure_file(text);
  CHECK(back.table_a == f.table_a);
}

TEST_CASE("read_file reports unreadable paths") {
  CHECK_FAILS(read_file(FIXTURES_DIR "/no-such-file.poset"), parse_error);
  CHECK_FALSE(fixture_text("fig1.poset").empty());
}
