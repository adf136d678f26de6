#include "ntx/localization.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

namespace ntx {

namespace {

std::uint64_t pow2(int n) { return std::uint64_t{1} << n; }

// Cosets of a subgroup k, numbered by smallest member.
std::vector<Elem> coset_labels(std::size_t order, const ElementSet& k, const std::function<Elem(Elem, Elem)>& add,
                               std::vector<Elem>& reps) {
  std::vector<Elem> label(order, static_cast<Elem>(-1));
  const auto members = k.elements();
  for (Elem x = 0; x < order; ++x) {
    if (label[x] != static_cast<Elem>(-1)) continue;
    const Elem id = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem m : members) label[add(x, m)] = id;
  }
  return label;
}

}  // namespace

MultiplicativeSet as_multiplicative(const RingPtr& r, const ElementSet& s, bool allow_zero) {
  if (!s.contains(r->one())) throw HypothesisError("multiplicative set must contain 1");
  const auto el = s.elements();
  for (Elem a : el)
    for (Elem b : el)
      if (!s.contains(r->mul(a, b)))
        throw HypothesisError("not multiplicatively closed: " + r->name(a) + "*" + r->name(b) + " = " +
                              r->name(r->mul(a, b)));
  if (s.contains(0) && !allow_zero) throw HypothesisError("0 lies in the multiplicative set; localization collapses");
  return {r, s};
}

MultiplicativeSet mult_closure(const RingPtr& r, const std::vector<Elem>& seed, bool allow_zero) {
  if (seed.empty()) throw UsageError("empty seed for a multiplicative set");
  ElementSet s(r->order());
  s.insert(r->one());
  std::vector<Elem> frontier{r->one()};
  while (!frontier.empty()) {
    std::vector<Elem> next;
    for (Elem a : frontier)
      for (Elem g : seed) {
        if (g >= r->order()) throw UsageError("seed element outside the ring");
        const Elem p = r->mul(a, g);
        if (!s.contains(p)) {
          s.insert(p);
          next.push_back(p);
        }
      }
    frontier = std::move(next);
  }
  return as_multiplicative(r, s, allow_zero);
}

MultiplicativeSet prime_complement(const Ideal& p) {
  if (!is_prime(p)) throw HypothesisError("not a prime ideal");
  return as_multiplicative(p.ambient, p.elements.complement());
}

Elem LocalizedRing::label(Elem a, Elem s_elem) const {
  const FiniteRing& r = *base();
  return coset[r.mul(a, inverse[s_elem])];
}

LocalizedRing localize(const MultiplicativeSet& s) {
  const RingPtr& r = s.ring;
  const std::size_t n = r->order();
  LocalizedRing l;
  l.s = s;
  l.kernel = ElementSet(n);
  const auto us = s.elements.elements();
  for (Elem x = 0; x < n; ++x)
    for (Elem u : us)
      if (r->mul(u, x) == 0) {
        l.kernel.insert(x);
        break;
      }
  l.coset = coset_labels(n, l.kernel, [&](Elem a, Elem b) { return r->add(a, b); }, l.representative);
  // Each s is a non-zero-divisor modulo the kernel, hence a unit there.
  l.inverse.assign(n, 0);
  for (Elem x : us) {
    bool found = false;
    for (Elem v = 0; v < n && !found; ++v)
      if (l.kernel.contains(r->sub(r->mul(x, v), r->one()))) {
        l.inverse[x] = v;
        found = true;
      }
    if (!found) throw AxiomError("no inverse of " + r->name(x) + " modulo the kernel");
  }

  const std::size_t c = l.representative.size();
  RingTables t;
  t.order = c;
  t.add.resize(c * c);
  t.mul.resize(c * c);
  for (Elem a = 0; a < c; ++a)
    for (Elem b = 0; b < c; ++b) {
      const Elem x = l.representative[a], y = l.representative[b];
      t.add[a * c + b] = l.coset[r->add(x, y)];
      t.mul[a * c + b] = l.coset[r->mul(x, y)];
    }
  t.one = l.coset[r->one()];
  t.label = "(" + r->label() + ")_S";
  for (Elem a = 0; a < c; ++a) t.names.push_back(r->name(l.representative[a]) + "/1");
  // The tables are R/kernel; verify_localization checks that x ↦ x/1 is a surjective hom, which carries the axioms over.
  ValidationOptions opts;
  opts.trusted = true;
  l.ring = make_table_ring(std::move(t), opts);
  return l;
}

LocalizationCheck verify_localization(const LocalizedRing& l, std::size_t max_pair_checks, std::uint64_t seed) {
  LocalizationCheck out;
  const FiniteRing& r = *l.base();
  const FiniteRing& q = *l.ring;
  const MapCheck h = check_ring_hom(r, q, l.coset);
  out.hom_ok = h.ok;
  if (!h.ok) out.witness = "canonical map: " + h.witness;
  const auto us = l.s.elements.elements();
  for (Elem s : us) {
    bool unit = false;
    for (Elem y = 0; y < q.order() && !unit; ++y) unit = q.mul(l.coset[s], y) == q.one();
    if (!unit) {
      out.units_ok = false;
      out.witness = r.name(s) + "/1 is not a unit";
      break;
    }
  }
  out.count_ok = q.order() * l.kernel.size() == r.order();

  // Pair relation against labels, exhaustively when affordable.
  const std::size_t pairs = r.order() * us.size();
  auto related = [&](Elem a, Elem s, Elem b, Elem t) {
    const Elem d = r.sub(r.mul(a, t), r.mul(b, s));
    for (Elem u : us)
      if (r.mul(u, d) == 0) return true;
    return false;
  };
  auto check = [&](std::size_t p, std::size_t q2) {
    const Elem a = static_cast<Elem>(p / us.size()), s = us[p % us.size()];
    const Elem b = static_cast<Elem>(q2 / us.size()), t = us[q2 % us.size()];
    ++out.pairs_checked;
    if (related(a, s, b, t) != (l.label(a, s) == l.label(b, t))) {
      out.relation_ok = false;
      out.witness = "pairs (" + r.name(a) + "," + r.name(s) + ") and (" + r.name(b) + "," + r.name(t) + ")";
    }
  };
  if (pairs * pairs <= max_pair_checks) {
    for (std::size_t p = 0; p < pairs && out.relation_ok; ++p)
      for (std::size_t q2 = 0; q2 < pairs && out.relation_ok; ++q2) check(p, q2);
  } else {
    out.sampled = true;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, pairs - 1);
    // Half the samples share a label so both directions of the equivalence get exercised.
    for (std::size_t i = 0; i < max_pair_checks / us.size() / 4 + 1 && out.relation_ok; ++i) {
      const std::size_t p = pick(rng);
      check(p, pick(rng));
      const Elem a = static_cast<Elem>(p / us.size()), s = us[p % us.size()];
      const Elem t = us[pick(rng) % us.size()];
      const Elem b = r.mul(a, t);  // (at, st) ~ (a, s)
      const Elem st = r.mul(s, t);
      const auto it = std::find(us.begin(), us.end(), st);
      if (it != us.end()) check(p, b * us.size() + static_cast<std::size_t>(it - us.begin()));
    }
  }
  return out;
}

UniversalCheck universal_property_check(const LocalizedRing& l, const std::vector<RingPtr>& targets) {
  UniversalCheck out;
  const FiniteRing& r = *l.base();
  const auto us = l.s.elements.elements();
  for (const auto& t : targets) {
    ++out.targets;
    const auto homs_r = enumerate_homomorphisms(r, *t);
    const auto homs_q = enumerate_homomorphisms(*l.ring, *t);
    for (const auto& h : homs_r) {
      bool inverts = true;
      for (Elem s : us) {
        bool unit = false;
        for (Elem y = 0; y < t->order() && !unit; ++y) unit = t->mul(h[s], y) == t->one();
        inverts = inverts && unit;
      }
      if (!inverts) continue;
      ++out.homs_inverting;
      std::size_t factorizations = 0;
      for (const auto& g : homs_q) {
        bool same = true;
        for (Elem x = 0; x < r.order() && same; ++x) same = g[l.coset[x]] == h[x];
        factorizations += same;
      }
      if (factorizations != 1 && out.ok) {
        out.ok = false;
        out.witness = std::to_string(factorizations) + " factorizations of a hom into " + t->label();
      }
    }
  }
  return out;
}

Elem LocalizedModule::label(const LocalizedRing& l, Elem m, Elem s_elem) const {
  return coset[base->act(l.inverse[s_elem], m)];
}

LocalizedModule localize_module(const ModulePtr& m, const LocalizedRing& l) {
  if (m->ring() != l.base()) throw UsageError("module is over a different ring");
  LocalizedModule out;
  out.base = m;
  const std::size_t n = m->order();
  out.kernel = ElementSet(n);
  const auto us = l.s.elements.elements();
  for (Elem x = 0; x < n; ++x)
    for (Elem u : us)
      if (m->act(u, x) == 0) {
        out.kernel.insert(x);
        break;
      }
  out.coset = coset_labels(n, out.kernel, [&](Elem a, Elem b) { return m->add(a, b); }, out.representative);
  const std::size_t c = out.representative.size();
  const std::size_t rc = l.ring->order();
  ModuleTables t;
  t.order = c;
  t.add.resize(c * c);
  t.act.resize(rc * c);
  for (Elem a = 0; a < c; ++a)
    for (Elem b = 0; b < c; ++b) t.add[a * c + b] = out.coset[m->add(out.representative[a], out.representative[b])];
  for (Elem r = 0; r < rc; ++r)
    for (Elem b = 0; b < c; ++b) t.act[r * c + b] = out.coset[m->act(l.representative[r], out.representative[b])];
  t.label = "(" + m->label() + ")_S";
  for (Elem a = 0; a < c; ++a) t.names.push_back(m->name(out.representative[a]) + "/1");
  out.module = make_table_module(l.ring, std::move(t));
  return out;
}

MultiplicativeSet total_quotient_set(const NTrivialExtension& e) {
  ElementSet s = regular_elements(*e.ring());
  for (int i = 1; i <= e.n(); ++i) s = s.intersect(zero_divisors_on(e.module(i)).complement());
  return as_multiplicative(e.ring(), s);
}

ExtensionLocalization localize_extension(const NTrivialExtension& e, const MultiplicativeSet& s) {
  std::vector<ElementSet> n;
  for (int i = 1; i <= e.n(); ++i) n.push_back(ElementSet::full(e.component_order(i)));
  return localize_extension(e, s, n);
}

ExtensionLocalization localize_extension(const NTrivialExtension& e, const MultiplicativeSet& s,
                                         const std::vector<ElementSet>& n, std::size_t max_pairs) {
  if (s.ring != e.ring()) throw UsageError("multiplicative set is over a different ring");
  if (static_cast<int>(n.size()) != e.n()) throw UsageError("need one submodule per M_i");
  for (int i = 1; i <= e.n(); ++i) {
    const ElementSet& ni = n[static_cast<std::size_t>(i - 1)];
    if (span(e.module(i), ni.elements()).elements != ni)
      throw HypothesisError("N_" + std::to_string(i) + " is not a submodule of M_" + std::to_string(i));
  }
  for (auto [i, j] : admissible_pairs(e.n())) {
    const ElementSet& a = n[static_cast<std::size_t>(i - 1)];
    const ElementSet& b = n[static_cast<std::size_t>(j - 1)];
    const ElementSet& c = n[static_cast<std::size_t>(i + j - 1)];
    a.for_each([&](Elem x) {
      b.for_each([&](Elem y) {
        if (!c.contains(e.comp_mul(i, x, j, y)))
          throw HypothesisError("N_" + std::to_string(i) + " N_" + std::to_string(j) + " is not inside N_" +
                                std::to_string(i + j));
      });
    });
  }

  ExtensionLocalization out;
  out.mult_set = ext_box(e, s.elements, n);
  out.base = localize(s);
  for (int i = 1; i <= e.n(); ++i) out.modules.push_back(localize_module(e.module(i), out.base));
  out.pairs = localize(as_multiplicative(e.flat(), out.mult_set));
  out.base_check = verify_localization(out.base);
  out.pairs_check = verify_localization(out.pairs, 1u << 20);

  // R_S ⋉ M_S with phi(x/1, y/1) = phi(x, y)/1.
  std::vector<ModulePtr> mods;
  for (const auto& m : out.modules) mods.push_back(m.module);
  std::map<std::pair<int, int>, ProductMapFamily::Table> tables;
  for (auto [i, j] : admissible_pairs(e.n())) {
    const auto& a = out.modules[static_cast<std::size_t>(i - 1)];
    const auto& b = out.modules[static_cast<std::size_t>(j - 1)];
    const auto& c = out.modules[static_cast<std::size_t>(i + j - 1)];
    ProductMapFamily::Table t(a.representative.size() * b.representative.size());
    for (Elem x = 0; x < a.representative.size(); ++x)
      for (Elem y = 0; y < b.representative.size(); ++y)
        t[x * b.representative.size() + y] = c.coset[e.comp_mul(i, a.representative[x], j, b.representative[y])];
    tables[{i, j}] = std::move(t);
  }
  out.model = make_extension(family_explicit(out.base.ring, mods, std::move(tables)));

  // The explicit map (m)/(s) ↦ (m'_0/S_0, ..., m'_n/S_0) with m' = m·tilde(s), S_0 = s_0^(2^n).
  const std::uint64_t k = pow2(e.n());
  const auto us = out.mult_set.elements();
  std::vector<Coords> tildes;
  std::vector<Elem> big_s;
  for (Elem sx : us) {
    const Coords sc = e.decode(sx);
    const Coords t = tilde(e, sc);
    Coords expected = e.zero();
    expected[0] = e.ring()->pow(sc[0], k);
    if (e.mul(sc, t) != expected && out.tilde_ok) {
      out.tilde_ok = false;
      out.witness = "s tilde(s) != (s_0^(2^n), 0, ..., 0) at s = " + e.name(sc);
    }
    tildes.push_back(t);
    big_s.push_back(expected[0]);
  }
  const std::size_t classes = out.pairs.ring->order();
  std::vector<Elem> f(classes, static_cast<Elem>(-1));
  auto image = [&](Elem m, std::size_t si) {
    const Coords mp = e.mul(e.decode(m), tildes[si]);
    Coords img(mp.size());
    img[0] = out.base.label(mp[0], big_s[si]);
    for (int i = 1; i <= e.n(); ++i) {
      const auto idx = static_cast<std::size_t>(i);
      img[idx] = out.modules[idx - 1].label(out.base, mp[idx], big_s[si]);
    }
    return out.model->encode(img);
  };
  const std::size_t total = e.order() * us.size();
  std::mt19937_64 rng(0x7117deULL);
  auto evaluate = [&](Elem m, std::size_t si) {
    ++out.pairs_evaluated;
    const Elem cls = out.pairs.label(m, us[si]);
    const Elem v = image(m, si);
    if (f[cls] == static_cast<Elem>(-1)) f[cls] = v;
    else if (f[cls] != v && out.explicit_well_defined) {
      out.explicit_well_defined = false;
      out.witness = "explicit map not well defined at " + e.name(e.decode(m)) + " / " + e.name(e.decode(us[si]));
    }
  };
  // Denominator 1 first: every class is hit.
  const std::size_t one_index = static_cast<std::size_t>(
      std::find(us.begin(), us.end(), e.encode(e.one())) - us.begin());
  for (Elem m = 0; m < e.order(); ++m) evaluate(m, one_index);
  if (total <= max_pairs) {
    for (Elem m = 0; m < e.order(); ++m)
      for (std::size_t si = 0; si < us.size(); ++si)
        if (si != one_index) evaluate(m, si);
  } else {
    out.sampled = true;
    std::uniform_int_distribution<std::size_t> pick(0, total - 1);
    for (std::size_t i = 0; i < max_pairs; ++i) {
      const std::size_t p = pick(rng);
      evaluate(static_cast<Elem>(p / us.size()), p % us.size());
    }
  }
  const RingPtr& target = out.model->flat();
  if (out.explicit_well_defined && is_bijective(f, target->order())) {
    const MapCheck h = check_ring_hom(*out.pairs.ring, *target, f);
    out.explicit_iso = h.ok;
    if (!h.ok) out.witness = "explicit map: " + h.witness;
  } else if (out.explicit_well_defined && out.witness.empty()) {
    out.witness = "explicit map is not a bijection";
  }
  if (!out.explicit_iso) {
    out.fallback_used = true;
    if (out.pairs.ring->order() == target->order()) {
      try {
        out.fallback_iso = find_isomorphism(*out.pairs.ring, *target).has_value();
      } catch (const CapExceeded&) {
        out.fallback_iso = false;
      }
    }
  }
  return out;
}

}  // namespace ntx
