#include "posetops/complemented.hpp"

#include <map>
#include <random>
#include <utility>

#include "mask_tables.hpp"

namespace posetops {

ComplementedPoset::ComplementedPoset(BoundedPoset base, std::vector<int> comp)
    : b_(std::move(base)), comp_(std::move(comp)) {
  const FinitePoset& p = b_.poset();
  const int n = p.size();
  if (static_cast<int>(comp_.size()) != n)
    fail(Errc::invalid_complement, "complement vector does not match the carrier");
  for (int x = 0; x < n; ++x)
    if (comp_[x] < 0 || comp_[x] >= n)
      fail(Errc::invalid_complement, "complement of " + p.name(x) + " outside the carrier");
  for (int x = 0; x < n; ++x)
    if (comp_[comp_[x]] != x)
      fail(Errc::invalid_complement, "complementation is no involution at " + p.name(x));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (p.leq(x, y) && !p.leq(comp_[y], comp_[x]))
        fail(Errc::invalid_complement,
             "complementation is not antitone on " + p.name(x) + " <= " + p.name(y));
  const ElementSet bot = ElementSet::single(b_.bottom()), top = ElementSet::single(b_.top());
  for (int x = 0; x < n; ++x) {
    const ElementSet pair = ElementSet::single(x) | ElementSet::single(comp_[x]);
    if (p.lower_cone(pair) != bot || p.upper_cone(pair) != top)
      fail(Errc::invalid_complement,
           p.name(comp_[x]) + " is no complement of " + p.name(x));
  }
}

ElementSet ComplementedPoset::comp_image(ElementSet a) const {
  ElementSet out;
  for (int x : a) out.add(comp_[x]);
  return out;
}

std::vector<std::vector<int>> find_complementations(const BoundedPoset& bp) {
  const FinitePoset& p = bp.poset();
  const int n = p.size();
  const ElementSet bot = ElementSet::single(bp.bottom()), top = ElementSet::single(bp.top());
  std::vector<std::vector<int>> out;
  std::vector<int> comp(n, -1);

  auto complement_pair = [&](int x, int c) {
    const ElementSet pair = ElementSet::single(x) | ElementSet::single(c);
    return p.lower_cone(pair) == bot && p.upper_cone(pair) == top;
  };
  auto antitone_against_assigned = [&](int x, int c) {
    for (int u = 0; u < n; ++u) {
      const int v = comp[u];
      if (v < 0) continue;
      if (p.leq(u, x) && !p.leq(c, v)) return false;
      if (p.leq(x, u) && !p.leq(v, c)) return false;
      if (p.leq(u, c) && !p.leq(x, v)) return false;
      if (p.leq(c, u) && !p.leq(v, x)) return false;
    }
    return true;
  };

  auto rec = [&](auto&& self) -> void {
    int x = -1;
    for (int i = 0; i < n; ++i)
      if (comp[i] < 0) {
        x = i;
        break;
      }
    if (x < 0) {
      out.push_back(comp);
      return;
    }
    for (int c = x; c < n; ++c) {
      if (comp[c] >= 0) continue;
      if (!complement_pair(x, c) || !antitone_against_assigned(x, c)) continue;
      comp[x] = c;
      comp[c] = x;
      self(self);
      comp[x] = comp[c] = -1;
    }
  };
  rec(rec);
  return out;
}

DistributivityResult is_distributive(const FinitePoset& p) {
  const int n = p.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const ElementSet xy = ElementSet::single(x) | ElementSet::single(y);
        const ElementSet lhs = p.lower_cone(p.upper_cone(xy) | ElementSet::single(z));
        const ElementSet lx = p.lower_cone(ElementSet::single(x) | ElementSet::single(z));
        const ElementSet ly = p.lower_cone(ElementSet::single(y) | ElementSet::single(z));
        const ElementSet rhs = p.lower_cone(p.upper_cone(lx | ly));
        if (lhs != rhs) return {false, TripleWitness{x, y, z, lhs, rhs}};
      }
  return {true, std::nullopt};
}

ConditionAgreement distributivity_conditions_agree(const FinitePoset& p, SubsetPolicy policy) {
  const int n = p.size();
  ConditionAgreement out;
  out.holds[0] = is_distributive(p).holds;
  out.holds[1] = true;
  for (int x = 0; x < n && out.holds[1]; ++x)
    for (int y = 0; y < n && out.holds[1]; ++y)
      for (int z = 0; z < n; ++z) {
        const ElementSet xy = ElementSet::single(x) | ElementSet::single(y);
        const ElementSet lhs = p.upper_cone(p.lower_cone(xy) | ElementSet::single(z));
        const ElementSet ux = p.upper_cone(ElementSet::single(x) | ElementSet::single(z));
        const ElementSet uy = p.upper_cone(ElementSet::single(y) | ElementSet::single(z));
        if (lhs != p.upper_cone(p.lower_cone(ux | uy))) {
          out.holds[1] = false;
          break;
        }
      }

  auto lower_variant = [&](ElementSet ex, ElementSet ey, ElementSet a) {
    const ElementSet lhs = p.lower_cone(p.upper_cone(ex | ey) | a);
    const ElementSet rhs = p.lower_cone(p.upper_cone(p.lower_cone(ex | a) | p.lower_cone(ey | a)));
    return lhs == rhs;
  };
  auto upper_variant = [&](ElementSet ex, ElementSet ey, ElementSet a) {
    const ElementSet lhs = p.upper_cone(p.lower_cone(ex | ey) | a);
    const ElementSet rhs = p.upper_cone(p.lower_cone(p.upper_cone(ex | a) | p.upper_cone(ey | a)));
    return lhs == rhs;
  };

  out.holds[2] = out.holds[3] = true;
  if (n <= policy.exhaustive_cap) {
    const std::uint64_t total = std::uint64_t{1} << n;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (std::uint64_t m = 0; m < total; ++m) {
          const ElementSet a = ElementSet::from_mask(m);
          const ElementSet ex = ElementSet::single(x), ey = ElementSet::single(y);
          if (out.holds[2] && !lower_variant(ex, ey, a)) out.holds[2] = false;
          if (out.holds[3] && !upper_variant(ex, ey, a)) out.holds[3] = false;
          if (!out.holds[2] && !out.holds[3]) return out;
        }
  } else {
    out.exhaustive = false;
    std::mt19937_64 rng(policy.seed);
    for (int i = 0; i < policy.samples; ++i) {
      const int x = static_cast<int>(rng() % n), y = static_cast<int>(rng() % n);
      const ElementSet a = ElementSet::from_mask(rng() & p.carrier().mask());
      const ElementSet ex = ElementSet::single(x), ey = ElementSet::single(y);
      if (out.holds[2] && !lower_variant(ex, ey, a)) out.holds[2] = false;
      if (out.holds[3] && !upper_variant(ex, ey, a)) out.holds[3] = false;
    }
  }
  return out;
}

bool is_boolean(const ComplementedPoset& p) { return is_distributive(p.poset()).holds; }

ElementSet sym_diff(const ComplementedPoset& cp, ElementSet a, ElementSet b) {
  if (a.empty() || b.empty()) fail(Errc::empty_argument, "sym_diff needs non-empty arguments");
  const FinitePoset& p = cp.poset();
  const ElementSet left = max_l(p, cp.comp_image(a), b);
  const ElementSet right = max_l(p, a, cp.comp_image(b));
  return min_u(p, left, right);
}

AxiomReport check_sd_identities(const ComplementedPoset& cp) {
  const FinitePoset& p = cp.poset();
  const int n = p.size();
  const ElementSet zero = ElementSet::single(cp.bottom()), one = ElementSet::single(cp.top());
  AxiomReport r;

  auto elem_witness = [&](int x, ElementSet got, ElementSet want) {
    return "x=" + p.name(x) + ": " + p.render(got) + " vs " + p.render(want);
  };
  auto pair_witness = [&](int x, int y, ElementSet got, ElementSet want) {
    return "x=" + p.name(x) + " y=" + p.name(y) + ": " + p.render(got) + " vs " + p.render(want);
  };
  auto check_elem = [&](const char* id, auto lhs_of, auto rhs_of) {
    AxiomVerdict v{id};
    for (int x = 0; x < n && v.pass; ++x) {
      const ElementSet lhs = lhs_of(x), rhs = rhs_of(x);
      if (lhs != rhs) v = {id, false, elem_witness(x, lhs, rhs)};
    }
    r.verdicts.push_back(v);
  };
  auto check_pair = [&](const char* id, auto lhs_of, auto rhs_of) {
    AxiomVerdict v{id};
    for (int x = 0; x < n && v.pass; ++x)
      for (int y = 0; y < n && v.pass; ++y) {
        const ElementSet lhs = lhs_of(x, y), rhs = rhs_of(x, y);
        if (lhs != rhs) v = {id, false, pair_witness(x, y, lhs, rhs)};
      }
    r.verdicts.push_back(v);
  };
  auto sd = [&](ElementSet a, ElementSet b) { return sym_diff(cp, a, b); };
  auto e = [](int x) { return ElementSet::single(x); };

  check_elem(
      "x+x=0", [&](int x) { return sd(e(x), e(x)); }, [&](int) { return zero; });
  check_pair(
      "x+y=y+x", [&](int x, int y) { return sd(e(x), e(y)); },
      [&](int x, int y) { return sd(e(y), e(x)); });
  check_elem(
      "x+0=x", [&](int x) { return sd(e(x), zero); }, [&](int x) { return e(x); });
  check_elem(
      "x+1=x'", [&](int x) { return sd(e(x), one); }, [&](int x) { return e(cp.comp(x)); });
  check_elem(
      "(x+1)+1=x", [&](int x) { return sd(sd(e(x), one), one); }, [&](int x) { return e(x); });
  check_elem(
      "x+x'=1", [&](int x) { return sd(e(x), e(cp.comp(x))); }, [&](int) { return one; });
  check_pair(
      "x+y=x'+y'", [&](int x, int y) { return sd(e(x), e(y)); },
      [&](int x, int y) { return sd(e(cp.comp(x)), e(cp.comp(y))); });
  check_pair(
      "x+y'=x'+y", [&](int x, int y) { return sd(e(x), e(cp.comp(y))); },
      [&](int x, int y) { return sd(e(cp.comp(x)), e(y)); });
  return r;
}

std::optional<TripleWitness> sd_associativity_witness(const ComplementedPoset& cp) {
  const int n = cp.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const ElementSet ex = ElementSet::single(x), ey = ElementSet::single(y),
                         ez = ElementSet::single(z);
        const ElementSet lhs = sym_diff(cp, sym_diff(cp, ex, ey), ez);
        const ElementSet rhs = sym_diff(cp, ex, sym_diff(cp, ey, ez));
        if (lhs != rhs) return TripleWitness{x, y, z, lhs, rhs};
      }
  return std::nullopt;
}

IdentityResult boolean_sd_identity(const ComplementedPoset& cp) {
  const FinitePoset& p = cp.poset();
  const int n = p.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const ElementSet ex = ElementSet::single(x), ey = ElementSet::single(y);
      const ElementSet lhs = sym_diff(cp, ex, ey);
      const ElementSet joins = min_u(p, ex, ey);
      const ElementSet cjoins =
          min_u(p, ElementSet::single(cp.comp(x)), ElementSet::single(cp.comp(y)));
      const ElementSet rhs = min_u(p, max_l(p, joins, cjoins));
      if (lhs != rhs) return {false, PairWitness{x, y, lhs, rhs}};
    }
  return {true, std::nullopt};
}

IdentityResult weak_distributivity(const ComplementedPoset& cp) {
  const FinitePoset& p = cp.poset();
  const int n = p.size();
  const ElementSet one = ElementSet::single(cp.top());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const ElementSet ex = ElementSet::single(x), yc = ElementSet::single(cp.comp(y));
      const ElementSet lhs = min_u(p, max_l(p, sym_diff(cp, ex, one), yc));
      const ElementSet rhs = sym_diff(cp, max_l(p, ex, yc), yc);
      if (lhs != rhs) return {false, PairWitness{x, y, lhs, rhs}};
    }
  return {true, std::nullopt};
}

StrongSubsetResult strong_subset_distributivity(const ComplementedPoset& cp, SubsetPolicy policy) {
  const FinitePoset& p = cp.poset();
  const int n = p.size();
  StrongSubsetResult res;

  auto hypothesis_sides = [&](ElementSet a, ElementSet b, ElementSet c) {
    const ElementSet lhs = p.upper_cone(p.lower_cone(a | b) | c);
    const ElementSet rhs =
        p.upper_cone(p.lower_cone(p.upper_cone(a | c) | p.upper_cone(b | c)));
    return std::pair{lhs, rhs};
  };
  auto conclusion_sides = [&](ElementSet a, ElementSet b) {
    const ElementSet lhs = sym_diff(cp, a, b);
    const ElementSet joins = min_u(p, a, b);
    const ElementSet cjoins = min_u(p, cp.comp_image(a), cp.comp_image(b));
    const ElementSet rhs = min_u(p, max_l(p, joins, cjoins));
    return std::pair{lhs, rhs};
  };

  if (n <= policy.exhaustive_cap) {
    const detail::MaskCones cones(p);
    // Non-empty subsets grouped by (lower cone, upper cone); the smallest
    // mask of each class represents it.
    std::vector<std::uint64_t> reps;
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> seen;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t m = 1; m < total; ++m)
      if (seen.emplace(std::pair{cones.lower[m], cones.upper[m]}, m).second) reps.push_back(m);

    for (std::uint64_t am : reps) {
      for (std::uint64_t bm : reps) {
        for (std::uint64_t cm : reps) {
          const auto [lhs, rhs] = hypothesis_sides(ElementSet::from_mask(am),
                                                   ElementSet::from_mask(bm),
                                                   ElementSet::from_mask(cm));
          if (lhs != rhs) {
            res.hypothesis = false;
            res.hypothesis_witness = SubsetTripleWitness{
                ElementSet::from_mask(am), ElementSet::from_mask(bm), ElementSet::from_mask(cm),
                lhs, rhs};
            break;
          }
        }
        if (!res.hypothesis) break;
      }
      if (!res.hypothesis) break;
    }
    if (res.hypothesis) {
      res.conclusion = true;
      for (std::uint64_t am : reps) {
        for (std::uint64_t bm : reps) {
          const auto [lhs, rhs] =
              conclusion_sides(ElementSet::from_mask(am), ElementSet::from_mask(bm));
          if (lhs != rhs) {
            res.conclusion = false;
            res.conclusion_witness =
                SubsetPairWitness{ElementSet::from_mask(am), ElementSet::from_mask(bm), lhs, rhs};
            break;
          }
        }
        if (!*res.conclusion) break;
      }
    }
  } else {
    res.exhaustive = false;
    std::mt19937_64 rng(policy.seed);
    auto random_nonempty = [&] {
      std::uint64_t m;
      do {
        m = rng() & p.carrier().mask();
      } while (m == 0);
      return ElementSet::from_mask(m);
    };
    for (int i = 0; i < policy.samples && res.hypothesis; ++i) {
      const ElementSet a = random_nonempty(), b = random_nonempty(), c = random_nonempty();
      const auto [lhs, rhs] = hypothesis_sides(a, b, c);
      if (lhs != rhs) {
        res.hypothesis = false;
        res.hypothesis_witness = SubsetTripleWitness{a, b, c, lhs, rhs};
      }
    }
    if (res.hypothesis) {
      res.conclusion = true;
      for (int i = 0; i < policy.samples && *res.conclusion; ++i) {
        const ElementSet a = random_nonempty(), b = random_nonempty();
        const auto [lhs, rhs] = conclusion_sides(a, b);
        if (lhs != rhs) {
          res.conclusion = false;
          res.conclusion_witness = SubsetPairWitness{a, b, lhs, rhs};
        }
      }
    }
  }
  return res;
}

}  // namespace posetops
