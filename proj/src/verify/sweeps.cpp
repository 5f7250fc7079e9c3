#include "kschmidt/verify/sweeps.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "kschmidt/constructions.hpp"
#include "kschmidt/endomorphism.hpp"
#include "kschmidt/error.hpp"
#include "kschmidt/isomorphism.hpp"
#include "kschmidt/krull_schmidt.hpp"
#include "kschmidt/named.hpp"
#include "kschmidt/verify/oracles.hpp"

namespace kschmidt::verify {

void SweepResult::check(bool condition, const std::string& what) {
  ++checks;
  if (condition) return;
  ++failures;
  if (messages.size() < 20) messages.push_back(what);
}

namespace {

struct Entry {
  std::string name;
  FiniteGroup group;
};

std::vector<Entry> build(const std::vector<CorpusEntry>& specs, const Limits& limits) {
  std::vector<Entry> out;
  for (const auto& c : specs) out.push_back(Entry{c.spec.to_string(), named_group(c.spec, limits)});
  return out;
}

std::vector<Entry> corpus_groups(std::uint64_t max_order, const Limits& limits) {
  return build(corpus(max_order), limits);
}

std::vector<Element> to_vec(std::span<const Element> s) { return {s.begin(), s.end()}; }

// Runs `body`, turning a library error into a failed check.
template <class F>
void guarded(SweepResult& r, const std::string& where, F&& body) {
  try {
    body();
  } catch (const Error& e) {
    r.check(false, where + ": " + e.what());
  }
}

bool valid_iso(const GroupHom& f, const FiniteGroup& src, const FiniteGroup& dst) {
  try {
    const auto g = GroupHom::verified(src, dst, to_vec(f.images()));
    return g.is_bijective();
  } catch (const Error&) {
    return false;
  }
}

// Copy of `group` with elements renamed by a random permutation fixing 0.
FiniteGroup relabeled(const FiniteGroup& group, std::uint32_t seed) {
  const std::size_t n = group.order();
  std::vector<Element> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::mt19937 rng(seed);
  if (n > 2) std::shuffle(sigma.begin() + 1, sigma.end(), rng);
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) table[sigma[a]][sigma[b]] = sigma[group.mul(a, b)];
  }
  return FiniteGroup::from_table(table, group.label() + "'");
}

std::vector<IsoFingerprint> factor_fingerprints(const InternalDecomposition& d) {
  std::vector<IsoFingerprint> out;
  for (std::size_t i = 0; i < d.size(); ++i) out.push_back(fingerprint(d.factor_group(i)));
  std::sort(out.begin(), out.end());
  return out;
}

// Direct product of `parts` with each factor as a normal subgroup of it.
struct ExplicitProduct {
  FiniteGroup group;
  std::vector<NormalSubgroup> factors;
};

ExplicitProduct explicit_product(const std::vector<FiniteGroup>& parts, const Limits& limits) {
  FiniteGroup acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = direct_product(acc, parts[i], limits).group;
  std::vector<NormalSubgroup> factors;
  std::size_t stride = acc.order();
  for (const auto& p : parts) {
    stride /= p.order();
    std::vector<Element> members;
    for (std::size_t x = 0; x < p.order(); ++x) members.push_back(static_cast<Element>(x * stride));
    factors.push_back(NormalSubgroup::verified(acc, std::move(members)));
  }
  return ExplicitProduct{acc, std::move(factors)};
}

Limits endo_limits(std::uint64_t max_order, const Limits& limits) {
  Limits out = limits;
  out.endo_order_cap = std::max<std::size_t>(out.endo_order_cap, max_order);
  return out;
}

// --- group core and isomorphism -------------------------------------------

SweepResult sweep_oracle(std::uint64_t max_order, const Limits& limits) {
  SweepResult r;
  const auto groups = corpus_groups(max_order, limits);
  for (const auto& [name, g] : groups) {
    guarded(r, name, [&] {
      std::vector<oracle::MemberSet> mine;
      for (const auto& n : normal_subgroups(g, limits)) mine.push_back(to_vec(n.members()));
      r.check(mine == oracle::normal_subgroups(g), name + ": normal subgroups differ from subset enumeration");
      const bool indec = is_indecomposable(g, limits);
      r.check(indec == oracle::is_indecomposable(g), name + ": indecomposability differs from oracle");
      std::vector<std::vector<Element>> endos;
      for (const auto& f : enumerate_endomorphisms(g, false, endo_limits(max_order, limits))) {
        endos.push_back(to_vec(f.images()));
      }
      std::sort(endos.begin(), endos.end());
      r.check(endos == oracle::endomorphisms(g), name + ": endomorphism set differs from oracle");
    });
  }
  for (std::size_t i = 0; i < groups.size(); ++i) {
    for (std::size_t j = i; j < groups.size(); ++j) {
      const auto& a = groups[i];
      const auto& b = groups[j];
      if (a.group.order() != b.group.order()) continue;
      guarded(r, a.name + " vs " + b.name, [&] {
        const auto f = find_isomorphism(a.group, b.group, limits);
        r.check(f.has_value() == oracle::isomorphic(a.group, b.group),
                a.name + " vs " + b.name + ": isomorphism verdict differs from bijection search");
        if (f) r.check(valid_iso(*f, a.group, b.group), a.name + " vs " + b.name + ": invalid witness");
      });
    }
  }
  return r;
}

SweepResult sweep_group_core(std::uint64_t max_order, const Limits& limits) {
  SweepResult r;
  for (const auto& [name, g] : corpus_groups(max_order, limits)) {
    guarded(r, name, [&] {
      const auto normals = normal_subgroups(g, limits);
      r.check(normals.size() == oracle::normal_subgroups(g).size(), name + ": normal subgroup count");
      for (const auto& n : normals) {
        r.check(is_normal(n), name + ": listed subgroup not normal");
        const auto q = quotient(n);
        std::vector<Element> preimage;
        for (Element x = 0; x < g.order(); ++x) {
          if (q.projection(x) == 0) preimage.push_back(x);
        }
        r.check(preimage == to_vec(n.members()), name + ": preimage of identity coset differs from N");
        r.check(q.group.order() * n.order() == g.order(), name + ": quotient order");
      }
      std::vector<GroupHom> autos;
      if (g.order() <= 16) {
        for (auto& f : enumerate_endomorphisms(g, false, endo_limits(16, limits))) {
          if (f.is_bijective()) autos.push_back(std::move(f));
        }
      }
      for (std::uint64_t m = 1; m <= 12; ++m) {
        const auto v = verbal_power_subgroup(g, m);
        r.check(to_vec(v.members()) == oracle::power_subgroup(g, m),
                name + ": verbal subgroup for m=" + std::to_string(m) + " differs from oracle");
        r.check(is_normal(v), name + ": verbal subgroup not normal");
        for (const auto& a : autos) {
          r.check(a.image_of(v) == v, name + ": verbal subgroup moved by an automorphism, m=" + std::to_string(m));
        }
      }
    });
  }
  return r;
}

SweepResult sweep_isomorphism(std::uint64_t max_order, const Limits& limits) {
  SweepResult r;
  const auto groups = corpus_groups(max_order, limits);
  std::uint32_t seed = 1;
  for (const auto& [name, g] : groups) {
    guarded(r, name, [&] {
      const auto self = find_isomorphism(g, g, limits);
      r.check(self && self->is_identity(), name + ": self-isomorphism is not the identity");
      const auto copy = relabeled(g, seed++);
      r.check(fingerprint(copy) == fingerprint(g), name + ": fingerprint changed under relabeling");
      const auto f = find_isomorphism(g, copy, limits);
      r.check(f && valid_iso(*f, g, copy), name + ": no valid isomorphism to a relabeled copy");
    });
  }
  for (std::size_t i = 0; i < groups.size(); ++i) {
    for (std::size_t j = i + 1; j < groups.size(); ++j) {
      const auto& a = groups[i];
      const auto& b = groups[j];
      if (a.group.order() != b.group.order()) continue;
      guarded(r, a.name + " vs " + b.name, [&] {
        const auto f = find_isomorphism(a.group, b.group, limits);
        const auto h = find_isomorphism(b.group, a.group, limits);
        r.check(f.has_value() == h.has_value(), a.name + " vs " + b.name + ": asymmetric verdict");
        if (f) r.check(valid_iso(*f, a.group, b.group), a.name + " vs " + b.name + ": invalid witness");
        if (h) r.check(valid_iso(*h, b.group, a.group), b.name + " vs " + a.name + ": invalid witness");
        if (fingerprint(a.group) != fingerprint(b.group)) {
          r.check(!f, a.name + " vs " + b.name + ": isomorphic with different fingerprints");
        }
      });
    }
  }
  return r;
}

SweepResult sweep_verbal_product(std::uint64_t max_order, const Limits& limits) {
  SweepResult r;
  const auto groups = corpus_groups(max_order, limits);
  for (std::size_t i = 0; i < groups.size(); ++i) {
    for (std::size_t j = i; j < groups.size(); ++j) {
      const auto& a = groups[i];
      const auto& b = groups[j];
      if (a.group.order() * b.group.order() > max_order) continue;
      const std::string name = a.name + " x " + b.name;
      guarded(r, name, [&] {
        const auto prod = direct_product(a.group, b.group, limits).group;
        for (std::uint64_t m = 1; m <= 12; ++m) {
          const auto va = verbal_power_subgroup(a.group, m);
          const auto vb = verbal_power_subgroup(b.group, m);
          std::vector<Element> expected;
          for (const Element x : va.members()) {
            for (const Element y : vb.members()) {
              expected.push_back(static_cast<Element>(x * b.group.order() + y));
            }
          }
          std::sort(expected.begin(), expected.end());
          r.check(to_vec(verbal_power_subgroup(prod, m).members()) == expected,
                  name + ": (AxB)^m != A^m x B^m for m=" + std::to_string(m));
        }
      });
    }
  }
  return r;
}

// --- endomorphism calculus ------------------------------------------------

struct Chains {
  std::vector<NormalSubgroup> kernels;  // kernels[n-1] = ker f^n
  std::vector<Subgroup> images;
};

// Iterates until both chains repeat, then one step further.
Chains chains_of(const GroupHom& f) {
  Chains c;
  GroupHom current = f;
  while (true) {
    c.kernels.push_back(current.kernel());
    c.images.push_back(current.image());
    const std::size_t n = c.kernels.size();
    if (n >= 2 && c.kernels[n - 1] == c.kernels[n - 2] && c.images[n - 1] == c.images[n - 2]) break;
    current = compose(f, current);
  }
  return c;
}

SweepResult sweep_fitting(std::uint64_t max_order, const Limits& limits) {
  SweepResult r;
  const auto lim = endo_limits(max_order, limits);
  for (const auto& [name, g] : corpus_groups(max_order, limits)) {
    guarded(r, name, [&] {
      for (const auto& f : enumerate_endomorphisms(g, true, lim)) {
        const auto c = chains_of(f);
        const std::size_t last = c.kernels.size();  // chains constant from last-1 on
        std::size_t least_stable = 0;
        for (std::size_t n = 1; n <= last; ++n) {
          const bool split = is_internal_direct_sum(c.kernels[n - 1], c.images[n - 1]);
          const bool stable = c.kernels[n - 1] == c.kernels[last - 1] && c.images[n - 1] == c.images[last - 1];
          if (stable && least_stable == 0) least_stable = n;
          r.check(split == stable, name + ": Fitting equivalence fails at n=" + std::to_string(n) + " (split=" +
                                       std::to_string(split) + ", stable=" + std::to_string(stable) + ")");
        }
        const auto fs = fitting_decomposition(f);
        r.check(fs.exponent == least_stable && fs.kernel_part == c.kernels[least_stable - 1] &&
                    fs.image_part == c.images[least_stable - 1],
                name + ": fitting_decomposition disagrees with the iterated chains");
        r.check(fs.kernel_part.order() * fs.image_part.order() == g.order(), name + ": split orders");
      }
    });
  }
  return r;
}

SweepResult sweep_dichotomy(std::uint64_t max_order, const Limits& limits) {
  SweepResult r;
  const auto lim = endo_limits(max_order, limits);
  for (const auto& [name, g] : corpus_groups(max_order, limits)) {
    guarded(r, name, [&] {
      const auto kind = indecomposability(g, limits);
      const auto endos = enumerate_endomorphisms(g, true, lim);
      for (const auto& f : endos) {
        const auto cls = classify_normal_endo(f);
        if (cls.kind == EndoKind::kNeither) {
          r.check(kind == Indecomposability::kDecomposable, name + ": Neither on an indecomposable group");
        }
        if (kind == Indecomposability::kDecomposable) continue;
        r.check(cls.kind != EndoKind::kNeither, name + ": normal endomorphism classified Neither");
        if (cls.kind == EndoKind::kNilpotent) {
          const std::size_t k = cls.nilpotency_index.value_or(0);
          r.check(k >= 1 && power(f, k).is_trivial() && (k == 1 || !power(f, k - 1).is_trivial()),
                  name + ": wrong nilpotency index");
        }
      }
      if (kind == Indecomposability::kDecomposable) return;
      // Two-summand form: a bijective sum has a bijective summand.
      for (const auto& phi : endos) {
        for (const auto& psi : endos) {
          const auto s = endo_sum(phi, psi);
          if (!s || !s->is_bijective()) continue;
          r.check(phi.is_bijective() || psi.is_bijective(), name + ": bijective sum of two non-automorphisms");
        }
      }
    });
  }
  return r;
}

SweepResult sweep_closure(std::uint64_t max_order, const Limits& limits) {
  SweepResult r;
  const auto lim = endo_limits(max_order, limits);
  for (const auto& [name, g] : corpus_groups(max_order, limits)) {
    guarded(r, name, [&] {
      const auto endos = enumerate_endomorphisms(g, true, lim);
      for (const auto& phi : endos) {
        if (phi.is_bijective()) {
          r.check(is_normal_endomorphism(phi.inverse()), name + ": inverse of a normal automorphism not normal");
        }
        for (const auto& psi : endos) {
          if (const auto s = endo_sum(phi, psi)) {
            r.check(is_normal_endomorphism(*s), name + ": sum of normal endomorphisms not normal");
          }
          r.check(is_normal_endomorphism(compose(phi, psi)), name + ": composition not normal");
        }
      }
    });
  }
  // Sums of the idempotents of products with up to three factors.
  const auto bases = build(corpus_bases(max_order), limits);
  std::vector<std::vector<std::size_t>> combos;
  for (std::size_t i = 0; i < bases.size(); ++i) {
    for (std::size_t j = i; j < bases.size(); ++j) {
      combos.push_back({i, j});
      for (std::size_t k = j; k < bases.size(); ++k) combos.push_back({i, j, k});
    }
  }
  for (const auto& combo : combos) {
    std::vector<FiniteGroup> parts;
    std::string name;
    std::uint64_t order = 1;
    for (const auto idx : combo) {
      parts.push_back(bases[idx].group);
      order *= bases[idx].group.order();
      name += (name.empty() ? "" : " x ") + bases[idx].name;
    }
    if (order > max_order || std::any_of(parts.begin(), parts.end(), [](auto& p) { return p.is_trivial(); })) {
      continue;
    }
    guarded(r, name, [&] {
      const auto prod = explicit_product(parts, limits);
      const auto d = InternalDecomposition::verified(prod.group, prod.factors);
      const std::size_t m = d.size();
      for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
        std::optional<GroupHom> sum;
        bool defined = true;
        for (std::size_t i = 0; i < m && defined; ++i) {
          if (!(mask >> i & 1)) continue;
          const auto e = d.idempotent(i);
          if (!sum) {
            sum = e;
          } else if (auto next = endo_sum(*sum, e)) {
            sum = std::move(*next);
          } else {
            defined = false;
          }
        }
        r.check(defined, name + ": partial sum of idempotents undefined");
        if (!defined) continue;
        r.check(is_normal_endomorphism(*sum), name + ": sum of idempotents not normal");
        if (mask + 1 == (std::size_t{1} << m)) r.check(sum->is_identity(), name + ": full sum is not the identity");
      }
    });
  }
  return r;
}

// --- Krull-Schmidt ----------------------------------------------------------

SweepResult sweep_existence(std::uint64_t max_order, const Limits& limits) {
  SweepResult r;
  for (const auto& [name, g] : corpus_groups(max_order, limits)) {
    guarded(r, name, [&] {
      const auto d = decompose(g, limits);
      std::size_t product = 1;
      std::vector<NormalSubgroup> copy(d.factors().begin(), d.factors().end());
      for (std::size_t i = 0; i < d.size(); ++i) {
        product *= d.factors()[i].order();
        r.check(indecomposability(d.factor_group(i), limits) == Indecomposability::kIndecomposable,
                name + ": factor " + std::to_string(i) + " decomposes further");
      }
      r.check(product == g.order(), name + ": factor orders do not multiply to |G|");
      InternalDecomposition::verified(g, std::move(copy));
      r.check(std::is_sorted(d.factors().begin(), d.factors().end()), name + ": factors not canonical");
    });
  }
  return r;
}

SweepResult sweep_ks_uniqueness(std::uint64_t max_order, const Limits& limits) {
  SweepResult r;
  for (const auto& [name, g] : corpus_groups(max_order, limits)) {
    guarded(r, name, [&] {
      const auto ref = decompose(g, limits);
      const auto ref_fps = factor_fingerprints(ref);
      for (const auto& d : all_decompositions(g, limits)) {
        r.check(factor_fingerprints(d) == ref_fps, name + ": fingerprint multisets differ");
        const auto m = match_decompositions(g, d, ref, limits);
        std::set<std::size_t> targets(m.bijection.begin(), m.bijection.end());
        r.check(targets.size() == d.size() && d.size() == ref.size(), name + ": matching not a bijection");
        for (std::size_t i = 0; i < d.size(); ++i) {
          const std::size_t j = m.bijection[i];
          r.check(valid_iso(m.witnesses[i], d.factor_group(i), ref.factor_group(j)), name + ": bad match witness");
          const auto p = property_p_match(g, d, ref, i, limits);
          r.check(valid_iso(p.isomorphism, d.factor_group(i), ref.factor_group(p.index)),
                  name + ": bad endomorphism-route witness");
          r.check(fingerprint(ref.factor_group(p.index)) == fingerprint(ref.factor_group(j)) &&
                      are_isomorphic(ref.factor_group(p.index), ref.factor_group(j), limits),
                  name + ": endomorphism route and matching disagree on factor " + std::to_string(i));
        }
        for (std::size_t j = 0; j < ref.size(); ++j) {
          const auto p = property_p_match(g, ref, d, j, limits);
          r.check(valid_iso(p.isomorphism, ref.factor_group(j), d.factor_group(p.index)),
                  name + ": bad reverse endomorphism-route witness");
        }
      }
    });
  }
  return r;
}

SweepResult sweep_cancellation(std::uint64_t max_order, const Limits& limits) {
  SweepResult r;
  const auto bases = build(corpus_bases(max_order), limits);
  const auto groups = corpus_groups(max_order, limits);
  for (const auto& [gname, g] : bases) {
    if (g.is_trivial()) continue;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      const auto& a = groups[i];
      if (g.order() * a.group.order() > max_order) continue;
      for (std::size_t j = i; j < groups.size(); ++j) {
        const auto& b = groups[j];
        if (b.group.order() != a.group.order()) continue;
        const std::string name = gname + " x " + a.name + " vs " + gname + " x " + b.name;
        guarded(r, name, [&] {
          const auto px = explicit_product({g, a.group}, limits);
          const auto py = explicit_product({g, b.group}, limits);
          const bool ambient = are_isomorphic(px.group, py.group, limits);
          const bool parts = are_isomorphic(a.group, b.group, limits);
          r.check(ambient == parts, name + ": cancellation verdict differs from A vs B");
          if (!ambient) return;
          const auto dx = InternalDecomposition::verified(px.group, px.factors);
          const auto dy = InternalDecomposition::verified(py.group, py.factors);
          const auto c = cancel_factor(dx, 0, dy, 0, limits);
          r.check(c.complement_x == px.factors[1] && c.complement_y == py.factors[1],
                  name + ": complements are not the A and B parts");
          r.check(valid_iso(c.isomorphism, as_group(c.complement_x).group, as_group(c.complement_y).group),
                  name + ": cancellation witness is not an isomorphism");
        });
      }
    }
  }
  return r;
}

// --- towers -----------------------------------------------------------------

bool fits(const ProfiniteTower& t, std::uint64_t max_order) {
  return std::all_of(t.levels().begin(), t.levels().end(),
                     [&](const FiniteGroup& l) { return l.order() <= max_order; });
}

void check_chain(SweepResult& r, const std::string& name, const ProfiniteTower& t, const CoherentDecomposition& c) {
  r.check(c.per_level.size() == t.depth() && c.correspondence.size() + 1 == t.depth(), name + ": chain shape");
  for (std::size_t k = 0; k + 1 < t.depth(); ++k) {
    const auto conn = t.connecting(k);
    const auto& upper = c.per_level[k + 1];
    const auto& lower = c.per_level[k];
    std::vector<std::vector<Element>> gens(lower.size());
    for (std::size_t j = 0; j < upper.size(); ++j) {
      const auto image = conn.image_of(upper.factors()[j]);
      const std::size_t i = c.correspondence[k][j];
      if (lower.size() == 0) {
        r.check(i == CoherentDecomposition::kToTrivial, name + ": expected a map to the trivial level");
        continue;
      }
      r.check(i < lower.size() && lower.factors()[i].contains(image),
              name + ": level " + std::to_string(k + 1) + " factor " + std::to_string(j) + " straddles");
      if (i < lower.size()) gens[i].insert(gens[i].end(), image.members().begin(), image.members().end());
    }
    for (std::size_t i = 0; i < lower.size(); ++i) {
      r.check(generate(lower.parent(), gens[i]) == lower.factors()[i],
              name + ": level " + std::to_string(k) + " factor " + std::to_string(i) + " not generated");
    }
  }
}

SweepResult sweep_w_bound(std::uint64_t max_order, const Limits& limits) {
  SweepResult r;
  std::vector<NamedTower> towers;
  towers.push_back({"C2^k x C3^k depth 3", cyclic_product_tower(3)});
  for (std::size_t rank = 1; rank <= 4; ++rank) {
    towers.push_back({"(C2)^k to rank " + std::to_string(rank), elementary_abelian_tower(2, rank)});
  }
  towers.push_back({"(C3)^k to rank 3", elementary_abelian_tower(3, 3)});
  for (const auto& [name, t] : towers) {
    if (!fits(t, max_order)) continue;
    guarded(r, name, [&] {
      const auto chain = tower_decompose(t, limits);
      check_chain(r, name, t, chain);
      std::set<std::uint64_t> exponents;
      for (std::uint64_t m = 1; m <= 12; ++m) exponents.insert(m);
      for (const auto& level : t.levels()) exponents.insert(level.order());
      for (const auto m : exponents) {
        for (const auto& row : w_bound(t, chain, m)) {
          r.check(row.holds, name + ": level " + std::to_string(row.level) + ", m=" + std::to_string(m) + ": " +
                                 std::to_string(row.escaping) + " escaping factors, quotient order " +
                                 std::to_string(row.quotient_order));
        }
      }
      // The bound does not depend on the chosen chain; check every level
      // decomposition as well.
      for (std::size_t k = 0; k < t.depth(); ++k) {
        for (const auto& d : all_decompositions(t.level(k), limits)) {
          for (const auto m : exponents) {
            const auto v = verbal_power_subgroup(t.level(k), m);
            std::size_t escaping = 0;
            for (const auto& f : d.factors()) escaping += !v.contains(f);
            r.check((std::uint64_t{1} << escaping) <= t.level(k).order() / v.order(),
                    name + ": bound fails for a level-" + std::to_string(k) + " decomposition");
          }
        }
      }
    });
  }
  return r;
}

SweepResult sweep_prop_shadow(std::uint64_t max_order, const Limits& limits) {
  SweepResult r;
  const auto tower = elementary_abelian_tower(2, 6);
  for (const auto& [name, spec] : elementary_fiber_specs()) {
    guarded(r, name, [&] {
      const auto fp = fiber_power(spec, limits);
      std::uint64_t law = spec.group.order() / spec.kernel.order();
      for (std::size_t j = 0; j < spec.copies; ++j) law *= spec.g0.order() / spec.m0.order();
      r.check(fp.group.order() == law && fp.predicted_order == law, name + ": order law fails");
      if (fp.group.order() > max_order) return;
      const auto w = verify_image(tower, fp.group, limits);
      r.check(w.has_value(), name + ": no level of the tower maps onto the fiber power");
      if (w) {
        r.check(w->surjection.is_surjective() && w->surjection.target().order() == fp.group.order(),
                name + ": witness is not a surjection");
        r.check(w->level + 1 >= static_cast<std::size_t>(std::countr_zero(fp.group.order())),
                name + ": image found below its rank");
      }
    });
  }
  return r;
}

SweepResult sweep_fiber_order_law(std::uint64_t max_order, const Limits& limits) {
  SweepResult r;
  Limits lim = limits;
  lim.order_cap = std::min<std::size_t>(lim.order_cap, 256);
  for (const auto& [name, g] : corpus_groups(max_order, limits)) {
    guarded(r, name, [&] {
      const auto normals = normal_subgroups(g, limits);
      for (const auto& g0 : normals) {
        for (const auto& m0 : normals) {
          if (!g0.contains(m0)) continue;
          for (const auto& n : normals) {
            if (!g0.contains(n)) continue;
            for (std::size_t copies = 0; copies <= 2; ++copies) {
              std::uint64_t law = g.order() / n.order();
              for (std::size_t j = 0; j < copies; ++j) law *= g0.order() / m0.order();
              if (law > lim.order_cap) continue;
              const auto fp = fiber_power(FiberPowerSpec{g, g0, m0, n, copies}, lim);
              // Count tuples directly over coset representatives.
              const auto qn = quotient(n), qm = quotient(m0), q0 = quotient(g0);
              std::vector<std::uint64_t> fiber_size(q0.group.order(), 0);
              std::vector<char> seen(qm.group.order(), 0);
              for (Element x = 0; x < g.order(); ++x) {
                if (!seen[qm.projection(x)]) {
                  seen[qm.projection(x)] = 1;
                  ++fiber_size[q0.projection(x)];
                }
              }
              std::vector<char> seen_n(qn.group.order(), 0);
              std::uint64_t count = 0;
              for (Element x = 0; x < g.order(); ++x) {
                if (seen_n[qn.projection(x)]) continue;
                seen_n[qn.projection(x)] = 1;
                std::uint64_t c = 1;
                for (std::size_t j = 0; j < copies; ++j) c *= fiber_size[q0.projection(x)];
                count += c;
              }
              r.check(fp.group.order() == law && count == law, name + ": fiber power order law");
            }
          }
        }
      }
    });
  }
  return r;
}

SweepResult sweep_fin(std::uint64_t max_order, const Limits& limits) {
  SweepResult r;
  for (const auto& [name, t] : tower_suite()) {
    if (!fits(t, max_order)) continue;
    guarded(r, name, [&] {
      std::vector<FinSet> sets;
      for (const std::size_t m : {1, 2, 4, 8, 16}) sets.push_back(fin_images(t, m, limits));
      for (std::size_t a = 0; a < sets.size(); ++a) {
        for (const auto& c : sets[a].classes) {
          r.check(c.representative.order() <= sets[a].max_order, name + ": class above max_order");
        }
        for (std::size_t i = 0; i < sets[a].classes.size(); ++i) {
          for (std::size_t j = i + 1; j < sets[a].classes.size(); ++j) {
            r.check(!are_isomorphic(sets[a].classes[i].representative, sets[a].classes[j].representative, limits),
                    name + ": duplicate class");
          }
        }
        for (std::size_t b = a + 1; b < sets.size(); ++b) {
          for (const auto& c : sets[a].classes) {
            r.check(sets[b].find(c.representative, limits).has_value(), name + ": fin not monotone in max_order");
          }
        }
        for (const auto& c : sets[a].classes) {
          const auto w = verify_image(t, c.representative, limits);
          r.check(w.has_value(), name + ": fin class is not found as an image");
        }
      }
    });
  }
  return r;
}

// Tower of G x T_k (or T_k x G) with maps id x connecting.
struct ProductTower {
  ProfiniteTower tower;
  std::vector<InternalDecomposition> splits;
};

ProductTower product_tower(const FiniteGroup& g, const ProfiniteTower& t, bool g_first, const Limits& limits) {
  std::vector<FiniteGroup> levels;
  std::vector<InternalDecomposition> splits;
  for (const auto& level : t.levels()) {
    auto p = g_first ? explicit_product({g, level}, limits) : explicit_product({level, g}, limits);
    splits.push_back(InternalDecomposition::verified(p.group, p.factors));
    levels.push_back(p.group);
  }
  std::vector<std::vector<Element>> maps;
  for (std::size_t k = 0; k + 1 < t.depth(); ++k) {
    const auto& src = t.level(k + 1);
    const auto& dst = t.level(k);
    std::vector<Element> map(levels[k + 1].order());
    for (Element x = 0; x < g.order(); ++x) {
      for (Element y = 0; y < src.order(); ++y) {
        const Element fy = t.maps()[k][y];
        if (g_first) {
          map[x * src.order() + y] = static_cast<Element>(x * dst.order() + fy);
        } else {
          map[y * g.order() + x] = static_cast<Element>(fy * g.order() + x);
        }
      }
    }
    maps.push_back(std::move(map));
  }
  return ProductTower{ProfiniteTower(std::move(levels), std::move(maps)), std::move(splits)};
}

SweepResult sweep_levelwise_cancellation(std::uint64_t max_order, const Limits& limits) {
  SweepResult r;
  std::vector<NamedTower> towers;
  const std::uint64_t twos[] = {2, 4, 8};
  const std::uint64_t threes[] = {3, 9};
  towers.push_back({"C2<-C4<-C8", cyclic_tower(twos)});
  towers.push_back({"C3<-C9", cyclic_tower(threes)});
  towers.push_back({"(C2)^k to rank 3", elementary_abelian_tower(2, 3)});
  towers.push_back({"C2^k x C3^k depth 2", cyclic_product_tower(2)});
  for (const char* gname : {"cyclic:2", "cyclic:3", "symmetric:3"}) {
    const auto g = named_group(gname, limits);
    for (const auto& [tname, t] : towers) {
      const std::string name = std::string(gname) + " x (" + tname + ")";
      const auto x = product_tower(g, t, true, limits);
      const auto y = product_tower(g, t, false, limits);
      if (!fits(x.tower, max_order)) continue;
      guarded(r, name, [&] {
        r.check(validate_tower(x.tower).valid && validate_tower(y.tower).valid, name + ": product tower invalid");
        const auto results = cancel_levelwise(x.tower, x.splits, 0, y.tower, y.splits, 1, limits);
        for (std::size_t k = 0; k < results.size(); ++k) {
          r.check(valid_iso(results[k].isomorphism, as_group(results[k].complement_x).group,
                            as_group(results[k].complement_y).group),
                  name + ": level " + std::to_string(k) + " witness invalid");
        }
        std::string why;
        r.check(levelwise_isomorphisms_commute(x.tower, y.tower, results, &why), name + ": " + why);
      });
    }
  }
  return r;
}

const std::vector<SweepInfo>& registry() {
  static const std::vector<SweepInfo> infos = {
      {"oracle", "normal subgroups, indecomposability, endomorphisms and isomorphism vs brute force", 12,
       sweep_oracle},
      {"group-core", "quotient preimages, verbal subgroups vs oracle and under automorphisms", 24, sweep_group_core},
      {"isomorphism", "self, relabeled and symmetric isomorphism search with valid witnesses", 48,
       sweep_isomorphism},
      {"verbal-product", "(A x B)^m = A^m x B^m for m <= 12", 48, sweep_verbal_product},
      {"fitting", "G = ker f^n (+) Im f^n iff both chains are stationary from n", 16, sweep_fitting},
      {"dichotomy", "normal endomorphisms of indecomposable groups are automorphisms or nilpotent", 16,
       sweep_dichotomy},
      {"closure", "normal endomorphisms closed under sums, composition, inverses; idempotent sums", 12,
       sweep_closure},
      {"existence", "decompose yields indecomposable factors multiplying to |G|", 64, sweep_existence},
      {"ks-uniqueness", "every maximal decomposition matches, by isomorphism and by the endomorphism route", 32,
       sweep_ks_uniqueness},
      {"cancellation", "G x A = G x B gives an explicit A -> B", 48, sweep_cancellation},
      {"w-bound", "escaping factors <= log2 |G_k / G_k^m| on coherent tower decompositions", 216, sweep_w_bound},
      {"prop-shadow", "fiber powers over elementary abelian groups are images of the tower", 64,
       sweep_prop_shadow},
      {"fiber-order-law", "fiber power order |G/N| |G0/M0|^n over all normal triples", 12, sweep_fiber_order_law},
      {"fin", "fin image sets: bounded, duplicate-free, monotone, realized as images", 64, sweep_fin},
      {"levelwise-cancellation", "per-level cancellation witnesses commute with connecting maps", 216,
       sweep_levelwise_cancellation},
  };
  return infos;
}

}  // namespace

std::span<const SweepInfo> sweeps() { return registry(); }

const SweepInfo* find_sweep(const std::string& name) {
  for (const auto& s : registry()) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

SweepResult run_sweep(const SweepInfo& info, std::uint64_t max_order, const Limits& limits) {
  const auto start = std::chrono::steady_clock::now();
  SweepResult r = info.run(max_order == 0 ? info.default_max_order : max_order, limits);
  r.name = info.name;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

ProfiniteTower cyclic_tower(std::span<const std::uint64_t> moduli) {
  std::vector<FiniteGroup> levels;
  std::vector<std::vector<Element>> maps;
  for (std::size_t k = 0; k < moduli.size(); ++k) {
    levels.push_back(named_group("cyclic:" + std::to_string(moduli[k])));
    if (k == 0) continue;
    if (moduli[k] % moduli[k - 1] != 0) {
      throw Error(ErrorKind::kDivisibilityViolated,
                  std::to_string(moduli[k - 1]) + " does not divide " + std::to_string(moduli[k]));
    }
    std::vector<Element> map(moduli[k]);
    for (std::uint64_t x = 0; x < moduli[k]; ++x) map[x] = static_cast<Element>(x % moduli[k - 1]);
    maps.push_back(std::move(map));
  }
  return ProfiniteTower(std::move(levels), std::move(maps));
}

ProfiniteTower elementary_abelian_tower(std::uint64_t p, std::size_t rank) {
  std::vector<FiniteGroup> levels;
  std::vector<std::vector<Element>> maps;
  for (std::size_t k = 1; k <= rank; ++k) {
    levels.push_back(named_group("elementary_abelian:" + std::to_string(p) + ":" + std::to_string(k)));
    if (k == 1) continue;
    const auto order = levels.back().order();
    std::vector<Element> map(order);
    for (std::size_t x = 0; x < order; ++x) map[x] = static_cast<Element>(x / p);
    maps.push_back(std::move(map));
  }
  return ProfiniteTower(std::move(levels), std::move(maps));
}

ProfiniteTower cyclic_product_tower(std::size_t depth) {
  std::uint64_t two = 1, three = 1;
  for (std::size_t k = 0; k < depth; ++k) {
    two *= 2;
    three *= 3;
  }
  const auto g = named_group("direct_product(cyclic:" + std::to_string(two) + ",cyclic:" + std::to_string(three) + ")");
  std::vector<std::uint64_t> exponents;
  for (std::uint64_t e = 6, k = 0; k < depth; ++k, e *= 6) exponents.push_back(e);
  return verbal_quotient_tower(g, exponents);
}

std::vector<NamedTower> tower_suite() {
  const std::uint64_t twos[] = {2, 4, 8};
  const std::uint64_t six[] = {6, 36};
  std::vector<NamedTower> out;
  out.push_back({"C2<-C4<-C8", cyclic_tower(twos)});
  out.push_back({"C6<-C36", cyclic_tower(six)});
  out.push_back({"C2^k x C3^k depth 3", cyclic_product_tower(3)});
  for (std::size_t rank = 2; rank <= 4; ++rank) {
    out.push_back({"(C2)^k to rank " + std::to_string(rank), elementary_abelian_tower(2, rank)});
  }
  out.push_back({"(C3)^k to rank 2", elementary_abelian_tower(3, 2)});
  return out;
}

std::vector<NamedFiberSpec> elementary_fiber_specs() {
  const auto ea = [](std::size_t rank) { return named_group("elementary_abelian:2:" + std::to_string(rank)); };
  const auto sub = [](const FiniteGroup& g, std::vector<Element> members) {
    return NormalSubgroup::verified(g, std::move(members));
  };
  std::vector<NamedFiberSpec> out;
  {
    const auto g = ea(2);  // elements 0..3, (a,b) at 2a+b
    out.push_back({"(C2)^2, |G0|=2, n=1", {g, sub(g, {0, 1}), sub(g, {0}), sub(g, {0}), 1}});
    out.push_back({"(C2)^2, G0=G, n=2", {g, sub(g, {0, 1, 2, 3}), sub(g, {0}), sub(g, {0}), 2}});
  }
  {
    const auto g = ea(3);
    out.push_back({"(C2)^3, |G0|=4, |M0|=2, |N|=2, n=2", {g, sub(g, {0, 1, 2, 3}), sub(g, {0, 1}), sub(g, {0, 2}), 2}});
    out.push_back({"(C2)^3, G0=G, |M0|=4, n=2",
                   {g, NormalSubgroup::whole(g), sub(g, {0, 1, 2, 3}), sub(g, {0}), 2}});
    out.push_back({"(C2)^3, |G0|=|N|=4, n=0", {g, sub(g, {0, 1, 2, 3}), sub(g, {0}), sub(g, {0, 1, 2, 3}), 0}});
  }
  {
    const auto g = ea(1);
    out.push_back({"C2, G0=N=G, n=3", {g, NormalSubgroup::whole(g), sub(g, {0}), NormalSubgroup::whole(g), 3}});
  }
  {
    const auto g = ea(4);
    out.push_back({"(C2)^4, |G0|=2, |N|=2, n=2", {g, sub(g, {0, 1}), sub(g, {0}), sub(g, {0, 1}), 2}});
  }
  return out;
}

}  // namespace kschmidt::verify
