#include "posetops/enumerate.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <set>
#include <sstream>
#include <thread>

#include "mask_tables.hpp"
#include "posetops/complemented.hpp"
#include "posetops/cone_ops.hpp"
#include "posetops/dual.hpp"
#include "posetops/fixtures.hpp"
#include "posetops/operator_structure.hpp"
#include "posetops/sheffer.hpp"

namespace posetops {

namespace {

constexpr int kMaxEnumSize = 8;

void check_enum_size(int n) {
  if (n < 1 || n > kMaxEnumSize)
    fail(Errc::size_too_large, "exhaustive enumeration handles 1 to 8 elements");
}

std::vector<std::string> element_names(int n) {
  std::vector<std::string> v;
  v.reserve(n);
  for (int i = 0; i < n; ++i) v.push_back("e" + std::to_string(i));
  return v;
}

// Streams every labeled poset on n points. Point k is added to the poset on
// {0..k-1} by picking the down-set of points below it and an up-set of points
// above it, drawn from the common strict upper bounds of the chosen down-set.
// Every labeled poset arises from exactly one choice sequence. The first
// assignment at each level is (empty, empty), so backtracking never stalls.
class RawGen {
 public:
  explicit RawGen(int n)
      : n_(n), below_(std::max(n, 1), 0), above_(std::max(n, 1), 0), lv_(std::max(n, 1)) {}

  bool next() {
    if (done_) return false;
    if (!started_) {
      started_ = true;
      if (n_ == 0) {
        done_ = true;
        return true;  // the empty poset
      }
      below_[0] = above_[0] = 1;
      for (int k = 1; k < n_; ++k) start_level(k);
      return true;
    }
    for (int k = n_ - 1; k >= 1; --k) {
      undo(k);
      if (advance_level(k)) {
        for (int j = k + 1; j < n_; ++j) start_level(j);
        return true;
      }
    }
    done_ = true;
    return false;
  }

  // Valid after next() returned true; masks include the element itself.
  const std::vector<std::uint64_t>& below() const { return below_; }
  const std::vector<std::uint64_t>& above() const { return above_; }

 private:
  struct Level {
    std::uint64_t d = 0, u = 0, allowed = 0;
  };

  void apply(int k) {
    const std::uint64_t bk = std::uint64_t{1} << k;
    below_[k] = lv_[k].d | bk;
    above_[k] = lv_[k].u | bk;
    for (int j : ElementSet::from_mask(lv_[k].u)) below_[j] |= bk;
    for (int i : ElementSet::from_mask(lv_[k].d)) above_[i] |= bk;
  }

  void undo(int k) {
    const std::uint64_t bk = std::uint64_t{1} << k;
    for (int j : ElementSet::from_mask(lv_[k].u)) below_[j] &= ~bk;
    for (int i : ElementSet::from_mask(lv_[k].d)) above_[i] &= ~bk;
  }

  bool is_downset(std::uint64_t d) const {
    for (int i : ElementSet::from_mask(d))
      if ((below_[i] & ~(std::uint64_t{1} << i) & ~d) != 0) return false;
    return true;
  }

  bool is_upset(std::uint64_t u) const {
    for (int j : ElementSet::from_mask(u))
      if ((above_[j] & ~(std::uint64_t{1} << j) & ~u) != 0) return false;
    return true;
  }

  std::uint64_t allowed_for(int k, std::uint64_t d) const {
    std::uint64_t a = (std::uint64_t{1} << k) - 1;
    for (int i : ElementSet::from_mask(d)) a &= above_[i];
    return a & ~d;
  }

  void start_level(int k) {
    lv_[k] = {0, 0, (std::uint64_t{1} << k) - 1};
    apply(k);
  }

  // Caller has undone level k. Moves it to the next (down-set, up-set) pair
  // and applies it, or reports exhaustion.
  bool advance_level(int k) {
    Level& L = lv_[k];
    std::uint64_t u = L.u;
    for (;;) {
      u = (u - L.allowed) & L.allowed;  // next subset of allowed, wrapping to 0
      if (u == 0) break;
      if (is_upset(u)) {
        L.u = u;
        apply(k);
        return true;
      }
    }
    const std::uint64_t full = (std::uint64_t{1} << k) - 1;
    for (std::uint64_t d = L.d + 1; d <= full; ++d) {
      if (!is_downset(d)) continue;
      L.d = d;
      L.allowed = allowed_for(k, d);
      L.u = 0;
      apply(k);
      return true;
    }
    return false;
  }

  int n_;
  bool started_ = false, done_ = false;
  std::vector<std::uint64_t> below_, above_;
  std::vector<Level> lv_;
};

// Bounded posets on n labeled points decompose uniquely as (bottom label,
// top label, arbitrary poset on the remaining labels).
class BoundedGen {
 public:
  explicit BoundedGen(int n) : n_(n), core_(std::max(n - 2, 0)) {
    if (n_ >= 2) {
      t_ = 1;
      rebuild_labels();
    }
    out_below_.resize(n_);
    out_above_.resize(n_);
  }

  bool next() {
    if (n_ == 1) {
      if (emitted_single_) return false;
      emitted_single_ = true;
      out_below_[0] = out_above_[0] = 1;
      return true;
    }
    for (;;) {
      if (core_.next()) {
        emit();
        return true;
      }
      do {
        ++t_;
        if (t_ == n_) {
          ++b_;
          t_ = 0;
        }
      } while (b_ < n_ && t_ == b_);
      if (b_ >= n_) return false;
      core_ = RawGen(n_ - 2);
      rebuild_labels();
    }
  }

  const std::vector<std::uint64_t>& below() const { return out_below_; }
  const std::vector<std::uint64_t>& above() const { return out_above_; }

 private:
  void rebuild_labels() {
    label_.clear();
    for (int i = 0; i < n_; ++i)
      if (i != b_ && i != t_) label_.push_back(i);
  }

  void emit() {
    const std::uint64_t bb = std::uint64_t{1} << b_, bt = std::uint64_t{1} << t_;
    const std::uint64_t full = (std::uint64_t{1} << n_) - 1;
    out_below_[b_] = bb;
    out_above_[b_] = full;
    out_below_[t_] = full;
    out_above_[t_] = bt;
    for (int i = 0; i < n_ - 2; ++i) {
      std::uint64_t bl = bb, ab = bt;
      for (int j : ElementSet::from_mask(core_.below()[i])) bl |= std::uint64_t{1} << label_[j];
      for (int j : ElementSet::from_mask(core_.above()[i])) ab |= std::uint64_t{1} << label_[j];
      out_below_[label_[i]] = bl;
      out_above_[label_[i]] = ab;
    }
  }

  int n_, b_ = 0, t_ = 0;
  RawGen core_;
  std::vector<int> label_;
  std::vector<std::uint64_t> out_below_, out_above_;
  bool emitted_single_ = false;
};

struct KeyedInstance {
  PosetInstance inst;
  std::uint64_t primary = 0;  // ordinal of the underlying poset in its stream
  int secondary = 0;          // complementation index within that poset
};

// Single generator behind both the public stream and the sweep workers.
// Striping happens at the underlying-poset level, so parallel workers split
// the complementation searches too, not just the per-instance checks.
class InstanceGen {
 public:
  InstanceGen(int n, PosetFilter filter, int stripe = 0, int stripes = 1)
      : n_(n),
        filter_(filter),
        stripe_(stripe),
        stripes_(stripes),
        raw_(n),
        bounded_(n),
        names_(element_names(n)) {}

  std::optional<KeyedInstance> next() {
    switch (filter_) {
      case PosetFilter::all:
        while (raw_.next()) {
          const std::uint64_t ord = raw_ord_++;
          if (ord % stripes_ != static_cast<std::uint64_t>(stripe_)) continue;
          return KeyedInstance{{make_poset(raw_.above()), {}}, ord, 0};
        }
        return std::nullopt;
      case PosetFilter::bounded:
      case PosetFilter::lattice:
        while (bounded_.next()) {
          const std::uint64_t ord = bnd_ord_++;
          if (ord % stripes_ != static_cast<std::uint64_t>(stripe_)) continue;
          FinitePoset p = make_poset(bounded_.above());
          if (filter_ == PosetFilter::lattice && !meets_exist(BoundedPoset(p))) continue;
          return KeyedInstance{{std::move(p), {}}, ord, 0};
        }
        return std::nullopt;
      case PosetFilter::complemented:
      case PosetFilter::boolean_poset:
        for (;;) {
          if (comp_idx_ < comps_.size()) {
            const int j = static_cast<int>(comp_idx_++);
            return KeyedInstance{{*cur_, comps_[j]}, cur_ord_, j};
          }
          if (!bounded_.next()) return std::nullopt;
          const std::uint64_t ord = bnd_ord_++;
          if (ord % stripes_ != static_cast<std::uint64_t>(stripe_)) continue;
          FinitePoset p = make_poset(bounded_.above());
          std::vector<std::vector<int>> comps = find_complementations(BoundedPoset(p));
          if (comps.empty()) continue;
          if (filter_ == PosetFilter::boolean_poset && !is_distributive(p).holds) continue;
          cur_ = std::move(p);
          cur_ord_ = ord;
          comps_ = std::move(comps);
          comp_idx_ = 0;
        }
    }
    return std::nullopt;
  }

 private:
  FinitePoset make_poset(const std::vector<std::uint64_t>& above) const {
    return FinitePoset::from_relation(names_, above);
  }

  int n_;
  PosetFilter filter_;
  int stripe_, stripes_;
  RawGen raw_;
  BoundedGen bounded_;
  std::vector<std::string> names_;
  std::uint64_t raw_ord_ = 0, bnd_ord_ = 0, cur_ord_ = 0;
  std::optional<FinitePoset> cur_;
  std::vector<std::vector<int>> comps_;
  std::size_t comp_idx_ = 0;
};

// Smallest relation encoding over all relabelings; complementations join the
// key so complemented instances dedup as (poset, comp) pairs. Fits in 64 bits
// for n <= 6: 36 relation bits plus 18 complement bits.
std::uint64_t canonical_key(const FinitePoset& p, const std::vector<int>& comp) {
  const int n = p.size();
  std::vector<int> q(n);
  for (int i = 0; i < n; ++i) q[i] = i;
  std::uint64_t best = ~std::uint64_t{0};
  std::vector<int> inv(n);
  do {
    std::uint64_t key = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (p.leq(q[i], q[j])) key |= std::uint64_t{1} << (i * n + j);
    if (!comp.empty()) {
      for (int i = 0; i < n; ++i) inv[q[i]] = i;
      for (int i = 0; i < n; ++i)
        key = key << 3 | static_cast<std::uint64_t>(inv[comp[q[i]]]);
    }
    best = std::min(best, key);
  } while (std::next_permutation(q.begin(), q.end()));
  return best;
}

std::optional<std::string> lemma2_check(const FinitePoset& p) {
  detail::MaskCones mc(p);
  const int n = p.size();
  const std::size_t total = std::size_t{1} << n;
  std::vector<std::uint64_t> maxL(total), minU(total), maxA(total), minA(total);
  for (std::size_t m = 0; m < total; ++m) {
    maxL[m] = p.maximal(mc.lower_cone(m)).mask();
    minU[m] = p.minimal(mc.upper_cone(m)).mask();
    maxA[m] = p.maximal(ElementSet::from_mask(m)).mask();
    minA[m] = p.minimal(ElementSet::from_mask(m)).mask();
  }
  for (std::size_t m = 0; m < total; ++m) {
    for (int a : ElementSet::from_mask(m)) {
      if ((p.down_set(a).mask() & minA[m]) == 0 || (p.up_set(a).mask() & maxA[m]) == 0)
        return "(i) at A=" + p.render(ElementSet::from_mask(m)) + " a=" + p.name(a);
    }
    if (mc.lower[minA[m]] != mc.lower[m] || mc.upper[maxA[m]] != mc.upper[m])
      return "(iv) at A=" + p.render(ElementSet::from_mask(m));
  }
  for (std::size_t m1 = 0; m1 < total; ++m1)
    for (std::size_t m2 = 0; m2 < total; ++m2) {
      if ((mc.lower[m1] == mc.lower[m2]) != (maxL[m1] == maxL[m2]))
        return "(ii) at A=" + p.render(ElementSet::from_mask(m1)) +
               " B=" + p.render(ElementSet::from_mask(m2));
      if ((mc.upper[m1] == mc.upper[m2]) != (minU[m1] == minU[m2]))
        return "(iii) at A=" + p.render(ElementSet::from_mask(m1)) +
               " B=" + p.render(ElementSet::from_mask(m2));
    }
  return std::nullopt;
}

struct WorkerStats {
  std::uint64_t instances = 0, failures = 0;
  std::vector<std::uint64_t> per_size;
  std::uint64_t measured_total = 0, measured_ok = 0;
  int fail_size = INT_MAX;
  std::uint64_t fail_primary = ~std::uint64_t{0};
  int fail_secondary = INT_MAX;
  std::string fail_text;
};

using CheckFn = std::optional<std::string> (*)(const PosetInstance&, WorkerStats&);

ComplementedPoset make_cp(const PosetInstance& inst) {
  return ComplementedPoset(BoundedPoset(inst.poset), inst.comp);
}

std::optional<std::string> check_operator_structure(const PosetInstance& inst, WorkerStats&) {
  AxiomReport r = check_operator_axioms(structure_from_poset(BoundedPoset(inst.poset)));
  if (!r.all_pass()) return "axiom " + r.first_failure();
  return std::nullopt;
}

std::optional<std::string> check_poset_from_structure(const PosetInstance& inst, WorkerStats&) {
  BoundedPoset back = poset_from_structure(structure_from_poset(BoundedPoset(inst.poset)));
  if (!back.poset().same_order(inst.poset)) return "rebuilt order differs";
  return std::nullopt;
}

std::optional<std::string> check_roundtrip_operator(const PosetInstance& inst, WorkerStats&) {
  if (!roundtrip_structure(structure_from_poset(BoundedPoset(inst.poset))))
    return "structure round-trip differs";
  return std::nullopt;
}

std::optional<std::string> check_lemma2(const PosetInstance& inst, WorkerStats&) {
  return lemma2_check(inst.poset);
}

std::optional<std::string> check_sd_ids(const PosetInstance& inst, WorkerStats&) {
  AxiomReport r = check_sd_identities(make_cp(inst));
  if (!r.all_pass()) return "identity " + r.first_failure();
  return std::nullopt;
}

std::optional<std::string> check_th1(const PosetInstance& inst, WorkerStats&) {
  IdentityResult r = boolean_sd_identity(make_cp(inst));
  if (!r.holds) {
    const auto& w = *r.witness;
    return "x=" + inst.poset.name(w.x) + " y=" + inst.poset.name(w.y) + ": " +
           inst.poset.render(w.lhs) + " vs " + inst.poset.render(w.rhs);
  }
  return std::nullopt;
}

std::optional<std::string> check_sheffer_structure(const PosetInstance& inst, WorkerStats&) {
  AxiomReport r = check_sheffer_axioms(sheffer_from_poset(make_cp(inst)));
  if (!r.all_pass()) return "axiom " + r.first_failure();
  return std::nullopt;
}

std::optional<std::string> check_sheffer_roundtrip(const PosetInstance& inst, WorkerStats&) {
  if (!sheffer_roundtrip(make_cp(inst))) return "stroke round-trip differs";
  return std::nullopt;
}

std::optional<std::string> check_dual_structure(const PosetInstance& inst, WorkerStats&) {
  AxiomReport r = check_dual_axioms(dual_from_boolean(make_cp(inst)));
  if (!r.all_pass()) return "axiom " + r.first_failure();
  return std::nullopt;
}

std::optional<std::string> check_dual_roundtrip(const PosetInstance& inst, WorkerStats& st) {
  ComplementedPoset cp = make_cp(inst);
  DualStructure d = dual_from_boolean(cp);
  ComplementedPoset back = boolean_from_dual(d);
  if (!back.same_as(cp)) return "rebuilt Boolean poset differs";
  DualRoundtrip rt = dual_roundtrip(d);
  ++st.measured_total;
  if (rt.plus_equal) ++st.measured_ok;
  if (!rt.times_equal) return "times reduct differs";
  return std::nullopt;
}

struct TheoremSpec {
  PosetFilter scope;
  CheckFn check;
};

TheoremSpec theorem_spec(std::string_view tag) {
  if (tag == "operator-structure") return {PosetFilter::bounded, check_operator_structure};
  if (tag == "poset-from-structure") return {PosetFilter::bounded, check_poset_from_structure};
  if (tag == "roundtrip-operator") return {PosetFilter::bounded, check_roundtrip_operator};
  if (tag == "lemma2") return {PosetFilter::all, check_lemma2};
  if (tag == "sd-identities") return {PosetFilter::complemented, check_sd_ids};
  if (tag == "thm-th1") return {PosetFilter::boolean_poset, check_th1};
  if (tag == "sheffer-structure") return {PosetFilter::complemented, check_sheffer_structure};
  if (tag == "sheffer-roundtrip") return {PosetFilter::complemented, check_sheffer_roundtrip};
  if (tag == "dual-structure") return {PosetFilter::boolean_poset, check_dual_structure};
  if (tag == "dual-roundtrip") return {PosetFilter::boolean_poset, check_dual_roundtrip};
  fail(Errc::unknown_name, "unknown theorem tag: " + std::string(tag));
}

}  // namespace

PosetFilter filter_from_name(std::string_view name) {
  if (name == "all") return PosetFilter::all;
  if (name == "bounded") return PosetFilter::bounded;
  if (name == "complemented") return PosetFilter::complemented;
  if (name == "boolean") return PosetFilter::boolean_poset;
  if (name == "lattice") return PosetFilter::lattice;
  fail(Errc::parse_error, "unknown filter: " + std::string(name));
}

std::string_view filter_name(PosetFilter f) {
  switch (f) {
    case PosetFilter::all: return "all";
    case PosetFilter::bounded: return "bounded";
    case PosetFilter::complemented: return "complemented";
    case PosetFilter::boolean_poset: return "boolean";
    case PosetFilter::lattice: return "lattice";
  }
  return "all";
}

struct PosetStream::Impl {
  int n;
  PosetFilter filter;
  std::uint64_t ordinal = 0;
  InstanceGen gen;

  Impl(int n_in, PosetFilter f) : n(n_in), filter(f), gen(n_in, f) {}
};

PosetStream::PosetStream(int n, PosetFilter filter) {
  check_enum_size(n);
  impl_ = std::make_unique<Impl>(n, filter);
}

PosetStream::PosetStream(PosetStream&&) noexcept = default;
PosetStream& PosetStream::operator=(PosetStream&&) noexcept = default;
PosetStream::~PosetStream() = default;

std::optional<PosetInstance> PosetStream::next() {
  std::optional<KeyedInstance> k = impl_->gen.next();
  if (!k) return std::nullopt;
  ++impl_->ordinal;
  return std::move(k->inst);
}

std::uint64_t PosetStream::yielded() const { return impl_->ordinal; }

std::string PosetStream::cursor() const {
  std::ostringstream out;
  out << "v1:" << impl_->n << ":" << filter_name(impl_->filter) << ":" << impl_->ordinal;
  return out.str();
}

PosetStream PosetStream::resume(const std::string& cursor) {
  std::istringstream in(cursor);
  std::string ver, nstr, fstr, ostr;
  if (!std::getline(in, ver, ':') || !std::getline(in, nstr, ':') ||
      !std::getline(in, fstr, ':') || !std::getline(in, ostr) || ver != "v1")
    fail(Errc::parse_error, "bad stream cursor: " + cursor);
  int n = 0;
  std::uint64_t ordinal = 0;
  try {
    n = std::stoi(nstr);
    ordinal = std::stoull(ostr);
  } catch (const std::exception&) {
    fail(Errc::parse_error, "bad stream cursor: " + cursor);
  }
  PosetStream s(n, filter_from_name(fstr));
  for (std::uint64_t i = 0; i < ordinal; ++i)
    if (!s.next()) fail(Errc::parse_error, "cursor past the end of the stream: " + cursor);
  return s;
}

int PosetStream::size() const { return impl_->n; }
PosetFilter PosetStream::filter() const { return impl_->filter; }

StreamCounts count_posets(int n, PosetFilter filter, bool with_distinct) {
  check_enum_size(n);
  StreamCounts out;
  const bool dedup = with_distinct && n <= 6;
  std::set<std::uint64_t> seen;
  InstanceGen gen(n, filter);
  while (std::optional<KeyedInstance> k = gen.next()) {
    ++out.labeled;
    if (dedup) seen.insert(canonical_key(k->inst.poset, k->inst.comp));
  }
  if (dedup) out.distinct = seen.size();
  return out;
}

std::string SweepReport::to_string() const {
  std::ostringstream out;
  out << "sweep " << theorem << " up to size " << n_max << "\n";
  for (std::size_t s = 1; s < per_size.size(); ++s)
    out << "  size " << s << ": " << per_size[s] << " instance(s)\n";
  if (!first_failure.empty()) out << "  first failure: " << first_failure << "\n";
  if (!notes.empty()) out << "  note: " << notes << "\n";
  out << failures << " failures / " << instances << " instances\n";
  return out.str();
}

SweepReport exhaustive_check(std::string_view theorem, int n_max, int workers) {
  check_enum_size(n_max);
  const TheoremSpec spec = theorem_spec(theorem);
  const int W = workers > 0 ? std::min(workers, 64) : default_worker_count();

  SweepReport report;
  report.theorem = std::string(theorem);
  report.n_max = n_max;
  report.per_size.assign(n_max + 1, 0);

  std::vector<WorkerStats> stats(W);
  for (auto& s : stats) s.per_size.assign(n_max + 1, 0);

  for (int n = 1; n <= n_max; ++n) {
    std::vector<std::thread> pool;
    pool.reserve(W);
    for (int w = 0; w < W; ++w)
      pool.emplace_back([&, w, n] {
        WorkerStats& st = stats[w];
        InstanceGen gen(n, spec.scope, w, W);
        while (std::optional<KeyedInstance> k = gen.next()) {
          ++st.instances;
          ++st.per_size[n];
          std::optional<std::string> bad;
          try {
            bad = spec.check(k->inst, st);
          } catch (const Error& e) {
            bad = std::string("error: ") + e.what();
          }
          if (!bad) continue;
          ++st.failures;
          const bool earlier =
              n < st.fail_size ||
              (n == st.fail_size &&
               (k->primary < st.fail_primary ||
                (k->primary == st.fail_primary && k->secondary < st.fail_secondary)));
          if (earlier) {
            st.fail_size = n;
            st.fail_primary = k->primary;
            st.fail_secondary = k->secondary;
            st.fail_text = "size " + std::to_string(n) + ": " + *bad;
          }
        }
      });
    for (auto& t : pool) t.join();
  }

  const WorkerStats* first = nullptr;
  std::uint64_t measured_total = 0, measured_ok = 0;
  for (const WorkerStats& st : stats) {
    report.instances += st.instances;
    report.failures += st.failures;
    for (int s = 1; s <= n_max; ++s) report.per_size[s] += st.per_size[s];
    measured_total += st.measured_total;
    measured_ok += st.measured_ok;
    if (st.fail_size == INT_MAX) continue;
    if (!first || st.fail_size < first->fail_size ||
        (st.fail_size == first->fail_size &&
         (st.fail_primary < first->fail_primary ||
          (st.fail_primary == first->fail_primary && st.fail_secondary < first->fail_secondary))))
      first = &st;
  }
  if (first) report.first_failure = first->fail_text;
  if (theorem == "dual-roundtrip")
    report.notes = "plus reduct equal on " + std::to_string(measured_ok) + "/" +
                   std::to_string(measured_total) + " instances";
  return report;
}

const std::vector<std::string>& theorem_tags() {
  static const std::vector<std::string> tags = {
      "operator-structure", "poset-from-structure", "roundtrip-operator", "lemma2",
      "sd-identities",      "thm-th1",              "sheffer-structure",  "sheffer-roundtrip",
      "dual-structure",     "dual-roundtrip"};
  return tags;
}

std::optional<FoundCounterexample> find_counterexample(std::string_view property, int n_max) {
  check_enum_size(n_max);
  const bool known = std::find(property_tags().begin(), property_tags().end(), property) !=
                     property_tags().end();
  if (!known) fail(Errc::unknown_name, "unknown property tag: " + std::string(property));

  auto assoc_witness_text = [](const FinitePoset& p, const AssocWitness& w) {
    return "x=" + p.name(w.x) + " y=" + p.name(w.y) + " z=" + p.name(w.z) + ": " +
           p.render(w.lhs) + " vs " + p.render(w.rhs);
  };

  if (property == "maxl-associativity" || property == "minu-associativity" ||
      property == "maxl-associativity-on-lattices") {
    const bool lattices = property == "maxl-associativity-on-lattices";
    const PairOp op = property == "minu-associativity" ? PairOp::min_u : PairOp::max_l;
    for (int n = 1; n <= n_max; ++n) {
      InstanceGen gen(n, lattices ? PosetFilter::lattice : PosetFilter::all);
      while (std::optional<KeyedInstance> k = gen.next()) {
        std::optional<AssocWitness> w = associativity_witness(k->inst.poset, op);
        if (w)
          return FoundCounterexample{k->inst.poset, {}, assoc_witness_text(k->inst.poset, *w)};
      }
    }
    return std::nullopt;
  }

  auto pair_witness_text = [](const FinitePoset& p, int x, int y, ElementSet lhs, ElementSet rhs) {
    return "x=" + p.name(x) + " y=" + p.name(y) + ": " + p.render(lhs) + " vs " + p.render(rhs);
  };

  for (int n = 1; n <= n_max; ++n) {
    InstanceGen gen(n, PosetFilter::complemented);
    while (std::optional<KeyedInstance> k = gen.next()) {
      ComplementedPoset cp = make_cp(k->inst);
      if (property == "sd-associativity") {
        std::optional<TripleWitness> w = sd_associativity_witness(cp);
        if (w)
          return FoundCounterexample{
              k->inst.poset, k->inst.comp,
              "x=" + k->inst.poset.name(w->x) + " y=" + k->inst.poset.name(w->y) +
                  " z=" + k->inst.poset.name(w->z) + ": " + k->inst.poset.render(w->lhs) +
                  " vs " + k->inst.poset.render(w->rhs)};
      } else {  // th1-on-complemented
        IdentityResult r = boolean_sd_identity(cp);
        if (!r.holds)
          return FoundCounterexample{
              k->inst.poset, k->inst.comp,
              pair_witness_text(k->inst.poset, r.witness->x, r.witness->y, r.witness->lhs,
                                r.witness->rhs)};
      }
    }
  }
  if (property == "th1-on-complemented") {
    // No witness in range; the bundled 10-element fixture is a known one.
    ComplementedPoset cp = fixtures::figure2();
    IdentityResult r = boolean_sd_identity(cp);
    if (!r.holds) {
      FoundCounterexample out{cp.poset(), cp.comp_vector(),
                              pair_witness_text(cp.poset(), r.witness->x, r.witness->y,
                                                r.witness->lhs, r.witness->rhs)};
      out.fallback = true;
      return out;
    }
  }
  return std::nullopt;
}

const std::vector<std::string>& property_tags() {
  static const std::vector<std::string> tags = {
      "maxl-associativity", "minu-associativity", "maxl-associativity-on-lattices",
      "sd-associativity", "th1-on-complemented"};
  return tags;
}

int default_worker_count() {
  if (const char* env = std::getenv("POSETOPS_WORKERS")) {
    const int v = std::atoi(env);
    if (v >= 1) return std::min(v, 64);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(std::min(hw, 64u));
}

}  // namespace posetops
