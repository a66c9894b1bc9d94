#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "posetops/cone_ops.hpp"
#include "posetops/enumerate.hpp"
#include "posetops/io.hpp"
#include "posetops/op_table.hpp"

namespace {

using namespace posetops;

int exit_code_for(Errc c) {
  switch (c) {
    case Errc::parse_error:
    case Errc::unknown_name:
    case Errc::duplicate_name:
    case Errc::kind_mismatch:
    case Errc::missing_complement:
    case Errc::size_too_large:
      return 2;
    default:
      return 1;
  }
}

std::string triple_text(const FinitePoset& p, const TripleWitness& w) {
  return "x=" + p.name(w.x) + " y=" + p.name(w.y) + " z=" + p.name(w.z) + ": " + p.render(w.lhs) +
         " vs " + p.render(w.rhs);
}

int run_check(const std::string& text, const std::string& cls) {
  const PosetFile f = parse_poset_file(text);
  if (cls == "poset") {
    FinitePoset p = to_poset(f);
    std::cout << "ok: poset with " << p.size() << " elements\n";
    return 0;
  }
  if (cls == "bounded") {
    BoundedPoset bp = to_bounded(f);
    std::cout << "ok: bounded, bottom " << bp.poset().name(bp.bottom()) << ", top "
              << bp.poset().name(bp.top()) << "\n";
    return 0;
  }
  if (cls == "complemented") {
    to_complemented(f);
    std::cout << "ok: complemented\n";
    return 0;
  }
  if (cls == "distributive" || cls == "boolean") {
    if (cls == "boolean") to_complemented(f);
    const FinitePoset p = to_poset(f);
    const DistributivityResult r = is_distributive(p);
    if (!r.holds) {
      std::cout << "not distributive: " << triple_text(p, *r.witness) << "\n";
      return 1;
    }
    std::cout << "ok: " << cls << "\n";
    return 0;
  }
  if (cls == "lattice") {
    BoundedPoset bp = to_bounded(f);
    const FinitePoset& p = bp.poset();
    for (int x = 0; x < p.size(); ++x)
      for (int y = 0; y < p.size(); ++y) {
        if (!max_l(p, ElementSet::single(x), ElementSet::single(y)).is_singleton()) {
          std::cout << "no meet for " << p.name(x) << ", " << p.name(y) << "\n";
          return 1;
        }
        if (!min_u(p, ElementSet::single(x), ElementSet::single(y)).is_singleton()) {
          std::cout << "no join for " << p.name(x) << ", " << p.name(y) << "\n";
          return 1;
        }
      }
    std::cout << "ok: lattice\n";
    return 0;
  }
  fail(Errc::parse_error, "unknown class: " + cls);
}

int run_table(const std::string& text, const std::string& op, const std::string& format) {
  OpTable t;
  if (op == "sd" || op == "sheffer") {
    const ComplementedPoset cp = to_complemented(parse_poset_file(text));
    t = op == "sd" ? sym_diff_table(cp) : sheffer_table(cp);
  } else if (op == "maxl" || op == "minu") {
    const FinitePoset p = to_poset(parse_poset_file(text));
    t = op == "maxl" ? maxl_table(p) : minu_table(p);
  } else {
    fail(Errc::parse_error, "unknown op: " + op);
  }
  if (format == "golden")
    std::cout << t.render_golden();
  else if (format == "aligned")
    std::cout << t.render_aligned();
  else if (format == "json")
    std::cout << t.render_json();
  else
    fail(Errc::parse_error, "unknown format: " + format);
  return 0;
}

int report_axioms(const AxiomReport& r) {
  std::cout << r.to_string();
  return r.all_pass() ? 0 : 1;
}

int run_axioms(const std::string& text, const std::string& structure) {
  const auto parsed = parse_input(text);
  if (structure == "operator") {
    if (const auto* sf = std::get_if<StructureFile>(&parsed))
      return report_axioms(check_operator_axioms(to_operator(*sf)));
    return report_axioms(
        check_operator_axioms(structure_from_poset(to_bounded(std::get<PosetFile>(parsed)))));
  }
  if (structure == "sheffer") {
    if (const auto* sf = std::get_if<StructureFile>(&parsed))
      return report_axioms(check_sheffer_axioms(to_sheffer(*sf)));
    return report_axioms(
        check_sheffer_axioms(sheffer_from_poset(to_complemented(std::get<PosetFile>(parsed)))));
  }
  if (structure == "dual") {
    if (const auto* sf = std::get_if<StructureFile>(&parsed))
      return report_axioms(check_dual_axioms(to_dual(*sf)));
    return report_axioms(
        check_dual_axioms(dual_from_boolean(to_complemented(std::get<PosetFile>(parsed)))));
  }
  fail(Errc::parse_error, "unknown structure: " + structure);
}

int run_roundtrip(const std::string& text, const std::string& via) {
  const auto parsed = parse_input(text);
  if (via == "operator") {
    bool ok;
    if (const auto* sf = std::get_if<StructureFile>(&parsed)) {
      ok = roundtrip_structure(to_operator(*sf));
    } else {
      const BoundedPoset bp = to_bounded(std::get<PosetFile>(parsed));
      ok = poset_from_structure(structure_from_poset(bp)).poset().same_order(bp.poset());
    }
    std::cout << (ok ? "roundtrip via operator: ok\n" : "roundtrip via operator: differs\n");
    return ok ? 0 : 1;
  }
  if (via == "sheffer") {
    bool ok;
    if (const auto* sf = std::get_if<StructureFile>(&parsed)) {
      const ShefferStructure s = to_sheffer(*sf);
      ok = sheffer_from_poset(poset_from_sheffer(s)) == s;
    } else {
      ok = sheffer_roundtrip(to_complemented(std::get<PosetFile>(parsed)));
    }
    std::cout << (ok ? "roundtrip via sheffer: ok\n" : "roundtrip via sheffer: differs\n");
    return ok ? 0 : 1;
  }
  if (via == "dual") {
    bool poset_ok = true;
    DualRoundtrip rt;
    if (const auto* sf = std::get_if<StructureFile>(&parsed)) {
      rt = dual_roundtrip(to_dual(*sf));
    } else {
      const ComplementedPoset cp = to_complemented(std::get<PosetFile>(parsed));
      const DualStructure d = dual_from_boolean(cp);
      poset_ok = boolean_from_dual(d).same_as(cp);
      rt = dual_roundtrip(d);
    }
    std::cout << "roundtrip via dual: " << (poset_ok ? "poset ok" : "poset differs") << "\n";
    std::cout << "times reduct: " << (rt.times_equal ? "equal" : "differs") << "\n";
    std::cout << "plus reduct: " << (rt.plus_equal ? "equal" : "differs")
              << " (reported, not asserted)\n";
    return poset_ok && rt.times_equal ? 0 : 1;
  }
  fail(Errc::parse_error, "unknown via: " + via);
}

int run_enumerate(int max_size, const std::string& filter, const std::string& theorem,
                  bool distinct, int workers) {
  if (!theorem.empty()) {
    const SweepReport r = exhaustive_check(theorem, max_size, workers);
    std::cout << r.to_string();
    return r.failures == 0 ? 0 : 1;
  }
  const PosetFilter f = filter_from_name(filter);
  if (max_size > 8)  // refuse before counting the feasible sizes, not after
    fail(Errc::size_too_large, "exhaustive enumeration handles 1 to 8 elements");
  for (int n = 1; n <= max_size; ++n) {
    const StreamCounts c = count_posets(n, f, distinct);
    std::cout << "size " << n << ": " << c.labeled << " labeled";
    if (c.distinct) std::cout << ", " << *c.distinct << " distinct";
    std::cout << "\n";
  }
  return 0;
}

int run_counterexample(const std::string& property, int max_size) {
  const auto found = find_counterexample(property, max_size);
  std::cout << "# property: " << property << "\n";
  if (!found) {
    std::cout << "# no counterexample up to size " << max_size << "\n";
    return 0;
  }
  if (found->fallback)
    std::cout << "# no witness within size " << max_size
              << "; this is the bundled 10-element fixture\n";
  else
    std::cout << "# found at size " << found->poset.size() << "\n";
  std::cout << "# witness: " << found->witness << "\n";
  PosetFile f = poset_file_from(found->poset);
  if (!found->comp.empty()) {
    for (int x = 0; x < found->poset.size(); ++x)
      f.complement.emplace_back(found->poset.name(x), found->poset.name(found->comp[x]));
  }
  std::cout << serialize(f);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite poset operator algebra toolkit"};
  app.require_subcommand(1);

  std::string file, cls = "poset", op, format = "golden", structure, via;
  std::string filter = "all", theorem, property;
  int max_size = 6, workers = 0;
  bool distinct = false;

  CLI::App* check = app.add_subcommand("check", "classify a poset file");
  check->add_option("file", file)->required();
  check->add_option("--class", cls,
                    "poset | bounded | complemented | distributive | boolean | lattice");

  CLI::App* table = app.add_subcommand("table", "print an operation table");
  table->add_option("file", file)->required();
  table->add_option("--op", op, "sd | maxl | minu | sheffer")->required();
  table->add_option("--format", format, "golden | aligned | json");

  CLI::App* axioms = app.add_subcommand("axioms", "verify an axiom system");
  axioms->add_option("file", file)->required();
  axioms->add_option("--structure", structure, "operator | sheffer | dual")->required();

  CLI::App* roundtrip = app.add_subcommand("roundtrip", "verify a construction round-trip");
  roundtrip->add_option("file", file)->required();
  roundtrip->add_option("--via", via, "operator | sheffer | dual")->required();

  CLI::App* enumerate = app.add_subcommand("enumerate", "count posets or sweep a theorem");
  enumerate->add_option("--max-size", max_size);
  enumerate->add_option("--filter", filter, "all | bounded | complemented | boolean | lattice");
  enumerate->add_option("--theorem", theorem, "run this theorem over every instance");
  enumerate->add_flag("--distinct", distinct, "also count up to isomorphism (size <= 6)");
  enumerate->add_option("--workers", workers, "0 = hardware default");

  CLI::App* counter = app.add_subcommand("counterexample", "search for a property violation");
  counter->add_option("--property", property)->required();
  counter->add_option("--max-size", max_size);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") return app.exit(e);
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (check->parsed()) return run_check(posetops::read_file(file), cls);
    if (table->parsed()) return run_table(posetops::read_file(file), op, format);
    if (axioms->parsed()) return run_axioms(posetops::read_file(file), structure);
    if (roundtrip->parsed()) return run_roundtrip(posetops::read_file(file), via);
    if (enumerate->parsed()) return run_enumerate(max_size, filter, theorem, distinct, workers);
    if (counter->parsed()) return run_counterexample(property, max_size);
  } catch (const posetops::Error& e) {
    std::cerr << "error: " << posetops::errc_name(e.code()) << ": " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return 2;
}
