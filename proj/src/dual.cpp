#include "posetops/dual.hpp"

#include <random>
#include <utility>

#include "posetops/cone_ops.hpp"

namespace posetops {

DualStructure::DualStructure(std::vector<std::string> names, Table plus, Table times, int zero,
                             int one)
    : n_(static_cast<int>(names.size())),
      names_(std::move(names)),
      plus_(std::move(plus)),
      times_(std::move(times)),
      zero_(zero),
      one_(one) {
  if (n_ == 0) fail(Errc::empty_argument, "a structure needs at least one element");
  if (n_ > FinitePoset::kMaxElements) fail(Errc::size_too_large, "carrier larger than 64 elements");
  if (plus_.size() != static_cast<size_t>(n_) * n_ || times_.size() != plus_.size())
    fail(Errc::consistency_fail, "operator tables do not match the carrier size");
  if (zero_ < 0 || zero_ >= n_ || one_ < 0 || one_ >= n_)
    fail(Errc::unknown_name, "designated constants outside the carrier");
  const ElementSet carrier =
      ElementSet::from_mask(n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1);
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y) {
      if (!plus_[x * n_ + y].subset_of(carrier) || !times_[x * n_ + y].subset_of(carrier))
        fail(Errc::consistency_fail, "table cell outside the carrier");
      if (plus_[x * n_ + y] != plus_[y * n_ + x])
        fail(Errc::consistency_fail,
             "plus table not symmetric at " + names_[x] + ", " + names_[y]);
      if (times_[x * n_ + y] != times_[y * n_ + x])
        fail(Errc::consistency_fail,
             "times table not symmetric at " + names_[x] + ", " + names_[y]);
    }
}

int DualStructure::index_of(std::string_view name) const {
  for (int i = 0; i < n_; ++i)
    if (names_[i] == name) return i;
  fail(Errc::unknown_name, "unknown element name: " + std::string(name));
}

void DualStructure::set_plus(int x, int y, ElementSet v) {
  plus_[x * n_ + y] = v;
  cache_ok_ = false;
}

void DualStructure::set_times(int x, int y, ElementSet v) {
  times_[x * n_ + y] = v;
  cache_ok_ = false;
}

void DualStructure::refresh_cache() const {
  // Absorption relation: x sits below y when times(x,y) = {x}.
  up_row_.assign(n_, 0);
  dn_row_.assign(n_, 0);
  for (int x = 0; x < n_; ++x)
    for (int y = 0; y < n_; ++y)
      if (times(x, y) == ElementSet::single(x)) {
        up_row_[x] |= std::uint64_t{1} << y;
        dn_row_[y] |= std::uint64_t{1} << x;
      }
  cache_ok_ = true;
}

ElementSet DualStructure::times_of_set(ElementSet c) const {
  if (!cache_ok_) refresh_cache();
  std::uint64_t cand = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  for (int y : c) cand &= dn_row_[y];
  ElementSet out;
  for (int x : ElementSet::from_mask(cand))
    if ((cand & up_row_[x] & ~(std::uint64_t{1} << x)) == 0) out.add(x);
  return out;
}

ElementSet DualStructure::plus_image(ElementSet a) const {
  ElementSet out;
  for (int x : a) out |= plus(x, one_);
  return out;
}

namespace {

ElementSet eval_times(const DualStructure& d, ElementSet a, ElementSet b) {
  if (a.is_singleton() && b.is_singleton()) return d.times(a.sole_member(), b.sole_member());
  return d.times_of_set(a | b);
}

}  // namespace

ElementSet DualStructure::lift_times(ElementSet a, ElementSet b) const {
  if (a.empty() || b.empty()) fail(Errc::empty_argument, "lift_times needs non-empty arguments");
  return eval_times(*this, a, b);
}

ElementSet DualStructure::lift_plus(ElementSet a, ElementSet b) const {
  if (a.empty() || b.empty()) fail(Errc::empty_argument, "lift_plus needs non-empty arguments");
  if (a.is_singleton() && b.is_singleton()) return plus(a.sole_member(), b.sole_member());
  return plus_core(a, b);
}

ElementSet DualStructure::plus_core(ElementSet a, ElementSet b) const {
  if (!cache_ok_) refresh_cache();
  const std::uint64_t full = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  auto lower = [&](ElementSet s) {
    std::uint64_t m = full;
    for (int x : s) m &= dn_row_[x];
    return m;
  };
  auto upper = [&](ElementSet s) {
    std::uint64_t m = full;
    for (int x : s) m &= up_row_[x];
    return m;
  };
  auto max_of = [&](std::uint64_t t) {
    std::uint64_t out = 0;
    for (int x : ElementSet::from_mask(t))
      if ((t & up_row_[x] & ~(std::uint64_t{1} << x)) == 0) out |= std::uint64_t{1} << x;
    return out;
  };
  auto min_of = [&](std::uint64_t t) {
    std::uint64_t out = 0;
    for (int x : ElementSet::from_mask(t))
      if ((t & dn_row_[x] & ~(std::uint64_t{1} << x)) == 0) out |= std::uint64_t{1} << x;
    return out;
  };
  const std::uint64_t left = max_of(lower(plus_image(a) | b));
  const std::uint64_t right = max_of(lower(a | plus_image(b)));
  return ElementSet::from_mask(min_of(upper(ElementSet::from_mask(left | right))));
}

std::string DualStructure::render(ElementSet s) const {
  if (s.is_singleton()) return names_[s.sole_member()];
  std::string out = "{";
  bool first = true;
  for (int x : s) {
    if (!first) out += ",";
    out += names_[x];
    first = false;
  }
  return out + "}";
}

DualStructure dual_from_boolean(const ComplementedPoset& cp) {
  if (!is_boolean(cp)) fail(Errc::not_boolean, "the complemented poset is not distributive");
  const FinitePoset& p = cp.poset();
  const int n = p.size();
  DualStructure::Table plus(static_cast<size_t>(n) * n), times(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      plus[x * n + y] = sym_diff(cp, ElementSet::single(x), ElementSet::single(y));
      times[x * n + y] = max_l(p, ElementSet::single(x), ElementSet::single(y));
    }
  return DualStructure(p.names(), std::move(plus), std::move(times), cp.bottom(), cp.top());
}

AxiomReport check_dual_axioms(const DualStructure& d, SubsetPolicy policy) {
  AxiomReport r;
  const int n = d.size();
  auto one = [](int x) { return ElementSet::single(x); };
  auto tm = [&](ElementSet a, ElementSet b) { return eval_times(d, a, b); };
  auto pl = [&](ElementSet a, ElementSet b) {
    if (a.is_singleton() && b.is_singleton()) return d.plus(a.sole_member(), b.sole_member());
    // the core lift tolerates empty intermediates while probing broken tables
    return d.plus_core(a, b);
  };
  const ElementSet e0 = one(d.zero()), e1 = one(d.one());

  auto named = [&](int x) { return d.name(x); };

  {
    AxiomVerdict v{"(i)"};
    for (int x = 0; x < n && v.pass; ++x) {
      if (d.times(x, x) != one(x)) {
        v = {"(i)", false, "x=" + named(x) + ": times(x,x)=" + d.render(d.times(x, x))};
        break;
      }
      if (d.times(x, d.zero()) != e0) {
        v = {"(i)", false, "x=" + named(x) + ": times(x,0)=" + d.render(d.times(x, d.zero()))};
        break;
      }
      if (d.times(x, d.one()) != one(x)) {
        v = {"(i)", false, "x=" + named(x) + ": times(x,1)=" + d.render(d.times(x, d.one()))};
        break;
      }
      for (int y = 0; y < n && v.pass; ++y) {
        if (d.times(x, y) != d.times(y, x)) {
          v = {"(i)", false,
               "x=" + named(x) + " y=" + named(y) + ": times(x,y)=" + d.render(d.times(x, y)) +
                   " vs times(y,x)=" + d.render(d.times(y, x))};
          break;
        }
        for (int z = 0; z < n; ++z) {
          const ElementSet a = tm(one(x), d.times(y, z));
          const ElementSet lhs = tm(a, one(z)), rhs = tm(a, e1);
          if (lhs != rhs) {
            v = {"(i)", false,
                 "quasi-associativity at x=" + named(x) + " y=" + named(y) + " z=" + named(z) +
                     ": " + d.render(lhs) + " vs " + d.render(rhs)};
            break;
          }
        }
      }
    }
    r.verdicts.push_back(v);
  }
  {
    AxiomVerdict v{"(ii)"};
    for (int x = 0; x < n && v.pass; ++x) {
      const ElementSet got = pl(d.plus(x, d.one()), e1);
      if (got != one(x)) v = {"(ii)", false, "x=" + named(x) + ": (x+1)+1=" + d.render(got)};
    }
    r.verdicts.push_back(v);
  }
  {
    AxiomVerdict v{"(iii)"};
    for (int x = 0; x < n && v.pass; ++x)
      for (int y = 0; y < n && v.pass; ++y) {
        if (d.times(x, y) != one(x)) continue;
        const ElementSet want = d.plus(y, d.one());
        const ElementSet got = tm(d.plus(x, d.one()), want);
        if (got != want)
          v = {"(iii)", false,
               "x=" + named(x) + " y=" + named(y) + ": (x+1)(y+1)=" + d.render(got) + " vs " +
                   d.render(want)};
      }
    r.verdicts.push_back(v);
  }
  {
    AxiomVerdict v{"(iv)"};
    for (int x = 0; x < n && v.pass; ++x) {
      const ElementSet got = tm(one(x), d.plus(x, d.one()));
      if (got != e0) v = {"(iv)", false, "x=" + named(x) + ": x(x+1)=" + d.render(got)};
    }
    r.verdicts.push_back(v);
  }
  {
    AxiomVerdict v{"(v)"};
    for (int x = 0; x < n && v.pass; ++x)
      for (int y = 0; y < n && v.pass; ++y)
        for (int z = 0; z < n && v.pass; ++z) {
          const ElementSet lhs =
              tm(pl(tm(d.plus(x, d.one()), d.plus(y, d.one())), e1), one(z));
          const ElementSet rhs = tm(
              pl(tm(pl(d.times(x, z), e1), pl(d.times(y, z), e1)), e1), e1);
          if (lhs != rhs)
            v = {"(v)", false,
                 "x=" + named(x) + " y=" + named(y) + " z=" + named(z) + ": " + d.render(lhs) +
                     " vs " + d.render(rhs)};
        }
    r.verdicts.push_back(v);
  }
  {
    AxiomVerdict v{"(vi)"};
    // independent evaluation of the membership characterization
    auto character = [&](ElementSet c) {
      ElementSet out;
      for (int x = 0; x < n; ++x) {
        bool lower = true;
        for (int y : c)
          if (d.times(x, y) != one(x)) {
            lower = false;
            break;
          }
        if (!lower) continue;
        bool maximal = true;
        for (int z = 0; z < n && maximal; ++z) {
          if (z == x || d.times(x, z) != one(x)) continue;
          bool z_lower = true;
          for (int y : c)
            if (d.times(z, y) != one(z)) {
              z_lower = false;
              break;
            }
          if (z_lower) maximal = false;
        }
        if (maximal) out.add(x);
      }
      return out;
    };
    for (int x = 0; x < n && v.pass; ++x)
      for (int y = 0; y < n && v.pass; ++y) {
        const ElementSet want = character(one(x) | one(y));
        if (d.times(x, y) != want)
          v = {"(vi)", false,
               "x=" + named(x) + " y=" + named(y) + ": times(x,y)=" + d.render(d.times(x, y)) +
                   " vs " + d.render(want)};
      }
    if (v.pass) {
      auto check_subset = [&](ElementSet c) {
        const ElementSet got = d.times_of_set(c);
        const ElementSet want = character(c);
        if (got != want) {
          v = {"(vi)", false,
               "subset " + d.render(c) + ": lift=" + d.render(got) + " vs " + d.render(want)};
          return false;
        }
        return true;
      };
      if (n <= policy.exhaustive_cap) {
        const std::uint64_t total = std::uint64_t{1} << n;
        for (std::uint64_t m = 0; m < total; ++m)
          if (!check_subset(ElementSet::from_mask(m))) break;
      } else {
        std::mt19937_64 rng(policy.seed);
        const std::uint64_t full = (std::uint64_t{1} << n) - 1;
        for (int i = 0; i < policy.samples; ++i)
          if (!check_subset(ElementSet::from_mask(rng() & full))) break;
      }
    }
    r.verdicts.push_back(v);
  }
  return r;
}

ComplementedPoset boolean_from_dual(const DualStructure& d) {
  AxiomReport rep = check_dual_axioms(d);
  if (!rep.all_pass()) fail(Errc::axioms_fail, "axiom " + rep.first_failure());

  const int n = d.size();
  std::vector<int> comp(n);
  for (int x = 0; x < n; ++x) {
    const ElementSet cx = d.plus(x, d.one());
    if (!cx.is_singleton())
      fail(Errc::consistency_fail, "x+1 is no element at x=" + d.name(x));
    comp[x] = cx.sole_member();
  }

  std::vector<std::uint64_t> above(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (d.times(x, y) == ElementSet::single(x)) above[x] |= std::uint64_t{1} << y;

  ComplementedPoset cp = [&] {
    try {
      FinitePoset p = FinitePoset::from_relation(d.names(), above);
      if (!p.is_bounded() || p.bottom() != d.zero() || p.top() != d.one())
        fail(Errc::not_bounded, "derived order is not bounded by the designated constants");
      return ComplementedPoset(BoundedPoset(std::move(p)), comp);
    } catch (const Error& e) {
      fail(Errc::consistency_fail, std::string("derived order is no complemented poset: ") + e.what());
    }
  }();
  if (!is_boolean(cp)) fail(Errc::consistency_fail, "derived poset is not distributive");
  return cp;
}

DualRoundtrip dual_roundtrip(const DualStructure& d) {
  const ComplementedPoset cp = boolean_from_dual(d);
  const DualStructure again = dual_from_boolean(cp);
  DualRoundtrip out;
  out.times_equal = true;
  out.plus_equal = true;
  for (int x = 0; x < d.size(); ++x)
    for (int y = 0; y < d.size(); ++y) {
      if (d.times(x, y) != again.times(x, y)) out.times_equal = false;
      if (d.plus(x, y) != again.plus(x, y)) out.plus_equal = false;
    }
  return out;
}

}  // namespace posetops
