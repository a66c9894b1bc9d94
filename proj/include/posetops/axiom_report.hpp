#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace posetops {

struct AxiomVerdict {
  std::string axiom;    // short id, e.g. "(iv)"
  bool pass = true;
  std::string witness;  // first counterexample found; empty when the axiom holds
};

struct AxiomReport {
  std::vector<AxiomVerdict> verdicts;

  bool all_pass() const {
    for (const auto& v : verdicts)
      if (!v.pass) return false;
    return true;
  }

  const AxiomVerdict* find(std::string_view axiom) const {
    for (const auto& v : verdicts)
      if (v.axiom == axiom) return &v;
    return nullptr;
  }

  std::string first_failure() const {
    for (const auto& v : verdicts)
      if (!v.pass) return v.axiom + " " + v.witness;
    return {};
  }

  std::string to_string() const {
    std::string out;
    for (const auto& v : verdicts) {
      out += v.pass ? "pass " : "FAIL ";
      out += v.axiom;
      if (!v.pass) out += "  " + v.witness;
      out += "\n";
    }
    return out;
  }
};

}  // namespace posetops
