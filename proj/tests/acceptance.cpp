// Acceptance gate: eleven numbered criteria, one PASS/FAIL line each, exit
// code equal to the number of failures. Every criterion carries a wall-clock
// budget; blowing the budget fails the line even when the values check out.
//
//   acceptance --cli <path-to-binary> --fixtures <dir> [--workers N]

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "posetops/complemented.hpp"
#include "posetops/cone_ops.hpp"
#include "posetops/dual.hpp"
#include "posetops/enumerate.hpp"
#include "posetops/fixtures.hpp"
#include "posetops/io.hpp"
#include "posetops/operator_structure.hpp"
#include "posetops/sheffer.hpp"
#include "support/generators.hpp"
#include "support/naive_oracle.hpp"

using namespace posetops;

namespace {

// Budgets in seconds, one per criterion group.
constexpr double kTableRunBudget = 1.0;  // each CLI table invocation
constexpr double kValueBudget = 1.0;     // criteria 2 through 6
constexpr double kAxiomBudget = 30.0;
constexpr double kRoundtripBudget = 10.0;
constexpr double kSweepBudget = 600.0;
constexpr double kOracleBudget = 30.0;
constexpr double kRecountBudget = 10.0;

constexpr std::uint64_t kOracleSeed = 0xACCE55;
constexpr int kOracleRounds = 50;
constexpr int kOracleMaxElements = 16;

std::string g_cli, g_fixtures;
int g_workers = 0;

using Clock = std::chrono::steady_clock;
using Body = std::function<std::optional<std::string>()>;

int run_criterion(int num, const char* desc, double budget, const Body& body) {
  const auto t0 = Clock::now();
  std::optional<std::string> problem;
  try {
    problem = body();
  } catch (const std::exception& e) {
    problem = std::string("unexpected error: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (!problem && secs > budget) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "over the %.0fs budget", budget);
    problem = buf;
  }
  if (problem) {
    std::printf("FAIL criterion %d: %s: %s (%.2fs)\n", num, desc, problem->c_str(), secs);
    return 1;
  }
  std::printf("PASS criterion %d: %s (%.2fs)\n", num, desc, secs);
  return 0;
}

// Runs the CLI, captures stdout, reports the wall time.
std::optional<std::string> cli_table(const std::string& args, const std::string& golden_name,
                                     double* secs) {
  const std::string out_path = "/tmp/posetops_acceptance_out.txt";
  const std::string cmd = "\"" + g_cli + "\" " + args + " >" + out_path + " 2>/dev/null";
  const auto t0 = Clock::now();
  const int rc = std::system(cmd.c_str());
  *secs = std::chrono::duration<double>(Clock::now() - t0).count();
  if (!WIFEXITED(rc) || WEXITSTATUS(rc) != 0)
    return "CLI failed on: " + args;
  if (read_file(out_path) != read_file(g_fixtures + "/golden/" + golden_name))
    return golden_name + " differs";
  return std::nullopt;
}

std::optional<std::string> check_tables() {
  const char* jobs[][2] = {{"fig2.poset", "fig2_sd.txt"},
                           {"fig3.poset", "fig3_sd.txt"},
                           {"fig4.poset", "fig4_sd.txt"}};
  for (const auto& job : jobs) {
    double secs = 0;
    const std::string args =
        "table " + g_fixtures + "/" + job[0] + " --op sd --format golden";
    if (auto bad = cli_table(args, job[1], &secs)) return bad;
    if (secs > kTableRunBudget) return std::string(job[1]) + " took too long";
  }
  return std::nullopt;
}

std::optional<std::string> check_maxl_values() {
  const FinitePoset p = fixtures::figure1();
  const ElementSet lhs = max_l(p, max_l(p, p.set_of({"c"}), p.set_of({"d"})), p.set_of({"e"}));
  const ElementSet rhs = max_l(p, p.set_of({"c"}), max_l(p, p.set_of({"d"}), p.set_of({"e"})));
  if (lhs != p.set_of({"0"})) return "(c meet d) meet e gave " + p.render(lhs);
  if (rhs != p.set_of({"b"})) return "c meet (d meet e) gave " + p.render(rhs);
  return std::nullopt;
}

std::optional<std::string> check_distributivity_values() {
  const ComplementedPoset cp = fixtures::figure2();
  const FinitePoset& p = cp.poset();
  const ElementSet a = p.set_of({"a"}), b = p.set_of({"b"}), c = p.set_of({"c"});
  const ElementSet lhs = p.lower_cone(p.upper_cone(a | b) | c);
  const ElementSet rhs = p.lower_cone(p.upper_cone(p.lower_cone(a | c) | p.lower_cone(b | c)));
  if (lhs != p.set_of({"0", "c"})) return "L(U(a,b),c) gave " + p.render(lhs);
  if (rhs != p.set_of({"0"})) return "LU(L(a,c),L(b,c)) gave " + p.render(rhs);
  return std::nullopt;
}

std::optional<std::string> check_join_expansion_boundary() {
  for (const ComplementedPoset& cp : {fixtures::figure3(), fixtures::figure4()}) {
    const IdentityResult r = boolean_sd_identity(cp);
    if (!r.holds) return "failed on a distributive fixture";
  }
  const ComplementedPoset cp = fixtures::figure2();
  const FinitePoset& p = cp.poset();
  const IdentityResult r = boolean_sd_identity(cp);
  if (r.holds) return "unexpectedly holds on the non-distributive fixture";
  if (!r.witness) return "no witness pair reported";
  if (p.name(r.witness->x) != "b" || p.name(r.witness->y) != "c")
    return "witness is (" + p.name(r.witness->x) + "," + p.name(r.witness->y) + ")";
  if (r.witness->lhs != p.set_of({"0"})) return "lhs gave " + p.render(r.witness->lhs);
  if (r.witness->rhs != p.set_of({"a'", "d'"})) return "rhs gave " + p.render(r.witness->rhs);
  return std::nullopt;
}

std::optional<std::string> check_sd_associativity_values() {
  const ComplementedPoset cp = fixtures::figure4();
  const FinitePoset& p = cp.poset();
  const ElementSet a = p.set_of({"a"}), b = p.set_of({"b"}), c = p.set_of({"c"});
  const ElementSet lhs = sym_diff(cp, sym_diff(cp, a, b), c);
  const ElementSet rhs = sym_diff(cp, a, sym_diff(cp, b, c));
  if (lhs != p.set_of({"d'"})) return "(a+b)+c gave " + p.render(lhs);
  if (rhs != p.set_of({"a'", "d'"})) return "a+(b+c) gave " + p.render(rhs);
  return std::nullopt;
}

std::optional<std::string> check_identity_suite() {
  const char* names[] = {"fig2", "fig3", "fig4"};
  const ComplementedPoset cps[] = {fixtures::figure2(), fixtures::figure3(),
                                   fixtures::figure4()};
  for (int i = 0; i < 3; ++i) {
    const AxiomReport r = check_sd_identities(cps[i]);
    if (r.verdicts.size() != 8)
      return std::string(names[i]) + " reported " + std::to_string(r.verdicts.size()) +
             " identities";
    if (!r.all_pass()) return std::string(names[i]) + ": " + r.first_failure();
  }
  return std::nullopt;
}

std::optional<std::string> check_axiom_suites() {
  const char* names[] = {"fig2", "fig3", "fig4"};
  const ComplementedPoset cps[] = {fixtures::figure2(), fixtures::figure3(),
                                   fixtures::figure4()};
  for (int i = 0; i < 3; ++i) {
    const AxiomReport op = check_operator_axioms(structure_from_poset(BoundedPoset(cps[i].poset())));
    if (op.verdicts.size() != 6 || !op.all_pass())
      return std::string(names[i]) + " operator: " + op.first_failure();
    const AxiomReport sh = check_sheffer_axioms(sheffer_from_poset(cps[i]));
    if (sh.verdicts.size() != 7 || !sh.all_pass())
      return std::string(names[i]) + " stroke: " + sh.first_failure();
  }
  const SubsetPolicy policy;
  for (int i = 1; i < 3; ++i) {
    if (cps[i].size() > policy.exhaustive_cap)
      return std::string(names[i]) + " would be sampled, not exhaustive";
    const AxiomReport du = check_dual_axioms(dual_from_boolean(cps[i]), policy);
    if (du.verdicts.size() != 6 || !du.all_pass())
      return std::string(names[i]) + " dual: " + du.first_failure();
  }
  return std::nullopt;
}

std::optional<std::string> check_roundtrips() {
  const char* names[] = {"fig2", "fig3", "fig4"};
  const ComplementedPoset cps[] = {fixtures::figure2(), fixtures::figure3(),
                                   fixtures::figure4()};
  for (int i = 0; i < 3; ++i) {
    const BoundedPoset bp(cps[i].poset());
    if (!poset_from_structure(structure_from_poset(bp)).poset().same_order(bp.poset()))
      return std::string(names[i]) + ": operator structure round-trip differs";
    if (!sheffer_roundtrip(cps[i]))
      return std::string(names[i]) + ": stroke round-trip differs";
  }
  for (int i = 1; i < 3; ++i) {
    const DualStructure d = dual_from_boolean(cps[i]);
    if (!boolean_from_dual(d).same_as(cps[i]))
      return std::string(names[i]) + ": dual round-trip differs";
    if (!dual_roundtrip(d).times_equal)
      return std::string(names[i]) + ": rebuilt times table differs";
  }
  return std::nullopt;
}

std::optional<std::string> check_sweeps() {
  const struct {
    const char* theorem;
    int n_max;
  } sweeps[] = {{"operator-structure", 5}, {"poset-from-structure", 5},
                {"roundtrip-operator", 5}, {"lemma2", 5},
                {"sheffer-roundtrip", 8},  {"dual-roundtrip", 8}};
  for (const auto& s : sweeps) {
    const SweepReport r = exhaustive_check(s.theorem, s.n_max, g_workers);
    if (r.instances == 0) return std::string(s.theorem) + " checked nothing";
    if (r.failures != 0)
      return std::string(s.theorem) + ": " + std::to_string(r.failures) + " failures, first " +
             r.first_failure;
  }
  return std::nullopt;
}

std::optional<std::string> check_lattice_oracle() {
  std::mt19937_64 rng(kOracleSeed);
  for (int round = 0; round < kOracleRounds; ++round) {
    const ComplementedPoset cp = gen::random_ortholattice(rng, kOracleMaxElements);
    const FinitePoset& p = cp.poset();
    if (!meets_exist(BoundedPoset(p)))
      return "round " + std::to_string(round) + " generated a non-lattice";
    for (int x = 0; x < p.size(); ++x)
      for (int y = 0; y < p.size(); ++y) {
        const auto low = naive::inf(p, x, y);
        const auto high = naive::sup(p, x, y);
        if (!low || !high) return "oracle found no bound in a lattice";
        if (max_l(p, ElementSet::single(x), ElementSet::single(y)) != ElementSet::single(*low))
          return "Max L differs from inf at (" + p.name(x) + "," + p.name(y) + ") in round " +
                 std::to_string(round);
        if (min_u(p, ElementSet::single(x), ElementSet::single(y)) != ElementSet::single(*high))
          return "Min U differs from sup at (" + p.name(x) + "," + p.name(y) + ") in round " +
                 std::to_string(round);
        const auto left = naive::inf(p, cp.comp(x), y);
        const auto right = naive::inf(p, x, cp.comp(y));
        const auto want = naive::sup(p, *left, *right);
        if (sym_diff(cp, ElementSet::single(x), ElementSet::single(y)) !=
            ElementSet::single(*want))
          return "x+y differs from (x' meet y) join (x meet y') at (" + p.name(x) + "," +
                 p.name(y) + ") in round " + std::to_string(round);
      }
  }
  return std::nullopt;
}

std::optional<std::string> check_poset_recount() {
  for (int n = 1; n <= 4; ++n) {
    const std::uint64_t stream = count_posets(n, PosetFilter::all).labeled;
    const std::uint64_t brute = naive::count_posets(n);
    if (stream != brute)
      return "size " + std::to_string(n) + ": stream " + std::to_string(stream) +
             " vs recount " + std::to_string(brute);
  }
  return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string flag = argv[i];
    if (flag == "--cli")
      g_cli = argv[i + 1];
    else if (flag == "--fixtures")
      g_fixtures = argv[i + 1];
    else if (flag == "--workers")
      g_workers = std::atoi(argv[i + 1]);
  }
  if (g_cli.empty() || g_fixtures.empty()) {
    std::fprintf(stderr, "usage: acceptance --cli <binary> --fixtures <dir> [--workers N]\n");
    return 64;
  }

  int failures = 0;
  failures += run_criterion(1, "golden symmetric-difference tables through the CLI",
                            3 * kTableRunBudget, check_tables);
  failures += run_criterion(2, "Max L associativity failure values on the six-element fixture",
                            kValueBudget, check_maxl_values);
  failures += run_criterion(3, "distributivity failure values on the first ten-element fixture",
                            kValueBudget, check_distributivity_values);
  failures += run_criterion(4, "join expansion of x+y holds exactly on the distributive fixtures",
                            kValueBudget, check_join_expansion_boundary);
  failures += run_criterion(5, "x+y associativity failure values on the twelve-element fixture",
                            kValueBudget, check_sd_associativity_values);
  failures += run_criterion(6, "all eight symmetric-difference identities on the three fixtures",
                            kValueBudget, check_identity_suite);
  failures += run_criterion(7, "operator, stroke and dual axiom systems pass on their fixtures",
                            kAxiomBudget, check_axiom_suites);
  failures += run_criterion(8, "all construction round-trips on their fixtures",
                            kRoundtripBudget, check_roundtrips);
  failures += run_criterion(9, "exhaustive sweeps, structures to size 5 and round-trips to size 8",
                            kSweepBudget, check_sweeps);
  failures += run_criterion(10, "cone operators and x+y match a lattice oracle on random instances",
                            kOracleBudget, check_lattice_oracle);
  failures += run_criterion(11, "labeled poset counts match a brute-force relation recount",
                            kRecountBudget, check_poset_recount);

  if (failures == 0)
    std::printf("all 11 criteria pass\n");
  else
    std::printf("%d criteria failed\n", failures);
  return failures;
}
