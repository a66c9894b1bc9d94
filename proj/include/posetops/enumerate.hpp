#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "posetops/poset.hpp"

namespace posetops {

enum class PosetFilter { all, bounded, complemented, boolean_poset, lattice };

PosetFilter filter_from_name(std::string_view name);  // parse_error on unknown
std::string_view filter_name(PosetFilter f);

// One test instance. comp stays empty unless the filter carries
// complementations (complemented, boolean), where each (poset, comp) pair
// counts as its own instance.
struct PosetInstance {
  FinitePoset poset;
  std::vector<int> comp;
};

// Streams every labeled poset on n elements passing the filter, exactly once,
// in a fixed deterministic order. Element labels are e0..e<n-1>.
class PosetStream {
 public:
  PosetStream(int n, PosetFilter filter);  // size_too_large beyond 8 elements
  PosetStream(PosetStream&&) noexcept;
  PosetStream& operator=(PosetStream&&) noexcept;
  ~PosetStream();

  std::optional<PosetInstance> next();
  std::uint64_t yielded() const;

  // "v1:<n>:<filter>:<ordinal>"; resume replays the stream up to the recorded
  // ordinal, so cursors stay valid across processes.
  std::string cursor() const;
  static PosetStream resume(const std::string& cursor);

  int size() const;
  PosetFilter filter() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

struct StreamCounts {
  std::uint64_t labeled = 0;
  std::optional<std::uint64_t> distinct;  // up-to-isomorphism, computed on request for n <= 6
};
StreamCounts count_posets(int n, PosetFilter filter, bool with_distinct = false);

// Theorem sweeps. Tags and the instance scope each one runs over:
//   operator-structure    bounded        derived structure passes all six axioms
//   poset-from-structure  bounded        rebuilt poset equals the original
//   roundtrip-operator    bounded        structure -> poset -> structure is the identity
//   lemma2                all            the four cone lemma clauses, every subset
//   sd-identities         complemented   the eight symmetric-difference identities
//   thm-th1               boolean        the Min U/Max L expansion of x+y
//   sheffer-structure     complemented   derived stroke passes all seven axioms
//   sheffer-roundtrip     complemented   poset -> stroke -> poset is the identity
//   dual-structure        boolean        derived dual passes all six axioms
//   dual-roundtrip        boolean        poset -> dual -> poset identity; the
//                                        rebuilt dual's times table must agree,
//                                        the plus table is tallied in notes
struct SweepReport {
  std::string theorem;
  int n_max = 0;
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  std::string first_failure;           // empty when clean
  std::vector<std::uint64_t> per_size;  // instances checked, indexed by element count
  std::string notes;
  std::string to_string() const;
};

// workers = 0 picks default_worker_count(). Instances are striped over
// workers by ordinal; verdicts merge deterministically.
SweepReport exhaustive_check(std::string_view theorem, int n_max, int workers = 0);
const std::vector<std::string>& theorem_tags();

// Counterexample mining. Property tags:
//   maxl-associativity             all posets
//   minu-associativity             all posets
//   maxl-associativity-on-lattices lattices (expected absent)
//   sd-associativity               complemented instances
//   th1-on-complemented            complemented instances; falls back to the
//                                  bundled 10-element fixture when no witness
//                                  exists within n_max
struct FoundCounterexample {
  FinitePoset poset;
  std::vector<int> comp;  // empty when the property needs no complementation
  std::string witness;
  bool fallback = false;
};
std::optional<FoundCounterexample> find_counterexample(std::string_view property, int n_max);
const std::vector<std::string>& property_tags();

// POSETOPS_WORKERS env var, else hardware concurrency, clamped to [1, 64].
int default_worker_count();

}  // namespace posetops
