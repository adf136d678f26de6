#include "ntx/factorization.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <unordered_map>

namespace ntx {

namespace {

std::string product_text(const FiniteRing& r, const std::vector<Elem>& xs) {
  std::vector<std::string> parts;
  for (Elem x : xs) parts.push_back(r.name(x));
  return join(parts, "*");
}

Elem product_of(const FiniteRing& r, const std::vector<Elem>& xs) {
  Elem p = r.one();
  for (Elem x : xs) p = r.mul(p, x);
  return p;
}

ElementSet principal_set(const FiniteRing& r, Elem x) {
  ElementSet s(r.order());
  for (Elem y = 0; y < r.order(); ++y) s.insert(r.mul(y, x));
  return s;
}

bool unit_by_scan(const FiniteRing& r, Elem x) {
  for (Elem y = 0; y < r.order(); ++y)
    if (r.mul(x, y) == r.one()) return true;
  return false;
}

// Longest strict chain in a family of distinct sets.
std::size_t chain_height(std::vector<ElementSet> sets) {
  std::sort(sets.begin(), sets.end(), [](const ElementSet& a, const ElementSet& b) { return a.size() < b.size(); });
  std::vector<std::size_t> h(sets.size(), 1);
  std::size_t best = 0;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (sets[j].size() < sets[i].size() && sets[j].subset_of(sets[i])) h[i] = std::max(h[i], h[j] + 1);
    best = std::max(best, h[i]);
  }
  return best;
}

std::vector<ElementSet> distinct_cyclics(const ModulePtr& m) {
  std::vector<ElementSet> out;
  std::unordered_map<ElementSet, int, ElementSetHash> seen;
  for (Elem x = 0; x < m->order(); ++x) {
    ElementSet c = cyclic(m, x).elements;
    if (seen.emplace(c, 0).second) out.push_back(std::move(c));
  }
  return out;
}

ElementSet nonunits_of(const FiniteRing& r) { return classify(r).units.complement(); }

// F_1 = start, F_{k+1} = {a·x : a nonunit, x ∈ F_k}; lengths from the eventually periodic sequence.
LengthReport lengths_from(std::size_t order, const ElementSet& start, const ElementSet& nonunits,
                          const std::function<Elem(Elem, Elem)>& act, const ElementSet& reported,
                          const std::function<std::string(Elem)>& name) {
  std::vector<ElementSet> seq{start};
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen{{start, 0}};
  const std::vector<Elem> scalars = nonunits.elements();
  std::size_t cycle_start = 0;
  bool cycled = false;
  while (seq.size() <= order + 1) {
    ElementSet next(order);
    seq.back().for_each([&](Elem x) {
      for (Elem a : scalars) next.insert(act(a, x));
    });
    auto [it, fresh] = seen.emplace(next, seq.size());
    if (!fresh) {
      cycle_start = it->second;
      cycled = true;
      break;
    }
    seq.push_back(std::move(next));
  }
  ElementSet recurring(order);
  if (cycled) {
    for (std::size_t k = cycle_start; k < seq.size(); ++k) recurring = recurring.unite(seq[k]);
  } else {
    recurring = seq.back();  // a product of order + 1 factors repeats a prefix
    cycle_start = seq.size() - 1;
  }
  LengthReport rep;
  rep.max_length.assign(order, std::nullopt);
  reported.for_each([&](Elem x) {
    if (recurring.contains(x)) {
      if (rep.bounded) rep.witness = name(x) + " has factorizations of every length";
      rep.bounded = false;
      return;
    }
    std::size_t best = 0;
    for (std::size_t k = 0; k < cycle_start; ++k)
      if (seq[k].contains(x)) best = k + 1;
    rep.max_length[x] = best;
    rep.bound = std::max(rep.bound, best);
  });
  return rep;
}

struct Stopwatch {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  }
};

std::string yes(bool b) { return b ? "yes" : "no"; }

}  // namespace

// ---------------------------------------------------------------- index

DivisibilityIndex::DivisibilityIndex(RingPtr r, std::size_t max_order) : ring_(std::move(r)) {
  const FiniteRing& s = *ring_;
  const std::size_t n = s.order();
  if (n > max_order)
    throw CapExceeded("divisibility index: order " + std::to_string(n) + " exceeds " + std::to_string(max_order));
  units_ = classify(s).units;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> ids;
  ideal_id_.resize(n);
  for (Elem x = 0; x < n; ++x) {
    ElementSet p = principal_set(s, x);
    auto [it, fresh] = ids.emplace(p, ideals_.size());
    if (fresh) {
      ideals_.push_back(std::move(p));
      rep_.push_back(x);
      members_.emplace_back();
      if (!units_.contains(x)) nonunit_reps_.push_back(x);
    }
    ideal_id_[x] = it->second;
    members_[it->second].push_back(x);
  }
  const std::vector<Elem> us = units_.elements();
  orbit_.resize(n);
  for (Elem x = 0; x < n; ++x) {
    Elem m = x;
    for (Elem u : us) m = std::min(m, s.mul(u, x));
    orbit_[x] = m;
  }
  const ElementSet nonunits = units_.complement();
  nonunit_multiples_.assign(n, ElementSet(n));
  for (Elem y = 0; y < n; ++y) nonunits.for_each([&](Elem c) { nonunit_multiples_[y].insert(s.mul(c, y)); });
}

bool DivisibilityIndex::cong(Elem x, Elem y) const {
  if (!sim(x, y)) return false;
  if (x == 0 && y == 0) return true;
  return !nonunit_multiples_[y].contains(x);
}

ElementSet u_of(const DivisibilityIndex& d, Elem a) {
  ElementSet out(d.order());
  for (Elem r = 0; r < d.order(); ++r)
    if (d.in_u(r, a)) out.insert(r);
  return out;
}

ElementSet u_of(const RingPtr& r, Elem a) { return u_of(DivisibilityIndex(r), a); }

// ---------------------------------------------------------------- irreducibility

namespace {

std::vector<bool> maximal_principal(const DivisibilityIndex& d) {
  const std::size_t one = d.ideal_id(d.ring()->one());
  std::vector<bool> maximal(d.ideal_count(), false);
  for (std::size_t i = 0; i < d.ideal_count(); ++i) {
    if (i == one) continue;
    bool m = true;
    for (std::size_t j = 0; j < d.ideal_count() && m; ++j)
      if (j != one && j != i && d.ideal(i).subset_of(d.ideal(j))) m = false;
    maximal[i] = m;
  }
  return maximal;
}

void record_factor_pair(const DivisibilityIndex& d, IrreducibilityProfile& p, Elem a, Elem b, Elem c) {
  if (p.irreducible && !d.sim(a, b) && !d.sim(a, c)) {
    p.irreducible = false;
    const FiniteRing& r = *d.ring();
    p.witness = r.name(a) + " = " + r.name(b) + "*" + r.name(c);
  }
  if (p.strongly && !d.approx(a, b) && !d.approx(a, c)) p.strongly = false;
  if (p.very_strongly && !d.cong(a, b) && !d.cong(a, c)) p.very_strongly = false;
}

}  // namespace

IrreducibilityProfile irreducibility_profile(const DivisibilityIndex& d, Elem a) {
  if (d.is_unit(a)) throw HypothesisError("irreducibility is defined for nonunits; " + d.ring()->name(a) + " is a unit");
  const FiniteRing& r = *d.ring();
  IrreducibilityProfile p;
  p.irreducible = p.strongly = p.very_strongly = true;
  for (Elem b = 0; b < r.order(); ++b)
    for (Elem c = b; c < r.order(); ++c)
      if (r.mul(b, c) == a) record_factor_pair(d, p, a, b, c);
  p.m_irreducible = maximal_principal(d)[d.ideal_id(a)];
  return p;
}

std::vector<IrreducibilityProfile> irreducibility_table(const DivisibilityIndex& d) {
  const FiniteRing& r = *d.ring();
  std::vector<IrreducibilityProfile> t(r.order());
  for (Elem a = 0; a < r.order(); ++a)
    if (!d.is_unit(a)) t[a].irreducible = t[a].strongly = t[a].very_strongly = true;
  for (Elem b = 0; b < r.order(); ++b)
    for (Elem c = b; c < r.order(); ++c) {
      const Elem a = r.mul(b, c);
      if (!d.is_unit(a)) record_factor_pair(d, t[a], a, b, c);
    }
  const auto maximal = maximal_principal(d);
  for (Elem a = 0; a < r.order(); ++a)
    if (!d.is_unit(a)) t[a].m_irreducible = maximal[d.ideal_id(a)];
  return t;
}

IrreducibilityProfile irreducibility_profile(const NTrivialExtension& e, const Coords& a) {
  const DivisibilityIndex d(e.flat());
  IrreducibilityProfile p = irreducibility_profile(d, e.encode(a));
  int nonzero = 0, where = -1;
  for (int i = 0; i <= e.n(); ++i)
    if (a[static_cast<std::size_t>(i)] != 0) ++nonzero, where = i;
  if (nonzero == 1 && where >= 1 && classify(*e.ring()).idempotents.size() > 2)
    p.idempotent_obstruction = p.all_false();
  return p;
}

// ---------------------------------------------------------------- structural predicates

StructuralReport structural_predicates(const NTrivialExtension& e) {
  const int n = e.n();
  StructuralReport s;
  const ModulePredicates flat = module_predicates(make_regular_module(e.flat()));
  s.presimplifiable = flat.is_presimplifiable;
  s.presimplifiable_witness = flat.presimplifiable_witness;
  s.strongly_associate = flat.strongly_associate;
  s.strongly_associate_witness = flat.strongly_associate_witness;

  for (int i = 0; i <= n; ++i) {
    const ModulePredicates p = module_predicates(i == 0 ? make_regular_module(e.ring()) : e.module(i));
    s.component_presimplifiable.push_back(p.is_presimplifiable);
    s.component_strongly_associate.push_back(p.strongly_associate);
  }
  const auto all = [](const std::vector<bool>& v, std::size_t upto) {
    return std::all_of(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(upto), [](bool b) { return b; });
  };
  s.presimplifiable_agree = s.presimplifiable == all(s.component_presimplifiable, s.component_presimplifiable.size());
  s.strongly_associate_implication =
      !s.strongly_associate || all(s.component_strongly_associate, s.component_strongly_associate.size());
  if (all(s.component_presimplifiable, static_cast<std::size_t>(n)))
    s.strongly_associate_agree = s.strongly_associate == s.component_strongly_associate.back();

  s.phi_integral.assign(static_cast<std::size_t>(n + 1), std::nullopt);
  s.phi_integral_witness.assign(static_cast<std::size_t>(n + 1), "");
  s.indecomposables.assign(static_cast<std::size_t>(n + 1), {});
  for (int i = 2; i <= n; ++i) {
    bool integral = true;
    ElementSet image(e.component_order(i));
    for (int j = 1; j < i; ++j) {
      const int k = i - j;
      for (Elem x = 0; x < e.component_order(j); ++x)
        for (Elem y = 0; y < e.component_order(k); ++y) {
          const Elem p = e.comp_mul(j, x, k, y);
          image.insert(p);
          if (integral && p == 0 && x != 0 && y != 0) {
            integral = false;
            s.phi_integral_witness[static_cast<std::size_t>(i)] =
                e.module(j)->name(x) + "*" + e.module(k)->name(y) + "=0 (M_" + std::to_string(j) + " x M_" +
                std::to_string(k) + ")";
          }
        }
    }
    s.phi_integral[static_cast<std::size_t>(i)] = integral;
    for (Elem m = 1; m < e.component_order(i); ++m)
      if (!image.contains(m)) s.indecomposables[static_cast<std::size_t>(i)].push_back(m);
  }
  for (int k = 2; k <= n; ++k) s.m1_j_integral.push_back({k, j_integral(e, 1, k)});
  for (int j = 1; j < n; ++j)
    for (int k = j; j + k <= n; ++k) {
      bool nonzero = false;
      for (Elem x = 1; x < e.component_order(j) && !nonzero; ++x)
        for (Elem y = 1; y < e.component_order(k) && !nonzero; ++y) nonzero = e.comp_mul(j, x, k, y) != 0;
      if (!nonzero) s.multiplications_nontrivial = false;
    }
  return s;
}

// ---------------------------------------------------------------- U-factorizations

bool is_u_factorization(const FiniteRing& r, const UFactorization& u, std::string* why) {
  auto fail = [&](const std::string& w) {
    if (why) *why = w;
    return false;
  };
  if (u.relevant.empty()) return fail("no relevant factor");
  std::vector<Elem> all = u.irrelevant;
  all.insert(all.end(), u.relevant.begin(), u.relevant.end());
  for (Elem x : all)
    if (unit_by_scan(r, x)) return fail(r.name(x) + " is a unit");
  if (product_of(r, all) != u.target) return fail("factors do not multiply to " + r.name(u.target));
  const Elem b = product_of(r, u.relevant);
  const ElementSet pb = principal_set(r, b);
  for (Elem a : u.irrelevant)
    if (principal_set(r, r.mul(a, b)) != pb) return fail(r.name(a) + " is not in U(" + r.name(b) + ")");
  for (std::size_t j = 0; j < u.relevant.size(); ++j) {
    std::vector<Elem> rest = u.relevant;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(j));
    const Elem q = product_of(r, rest);
    if (principal_set(r, r.mul(u.relevant[j], q)) == principal_set(r, q))
      return fail(r.name(u.relevant[j]) + " is in U(" + r.name(q) + ")");
  }
  return true;
}

std::string describe(const FiniteRing& r, const UFactorization& u) {
  return product_text(r, u.irrelevant) + "⌈" + product_text(r, u.relevant) + "⌉";
}

std::string describe(const FiniteRing& r, const Factorization& f) { return product_text(r, f.factors); }

FactorEnumeration factor_enumerate(const DivisibilityIndex& d, Elem a, std::size_t max_len, std::size_t max_results) {
  const FiniteRing& r = *d.ring();
  if (a == 0 || d.is_unit(a))
    throw HypothesisError("factor enumeration needs a nonzero nonunit, got " + r.name(a));
  if (max_len == 0) max_len = r.order();
  FactorEnumeration out;
  out.target = a;
  out.max_len = max_len;

  std::vector<Elem> pool;  // nonunit classes dividing a
  for (Elem c : d.nonunit_classes())
    if (c != 0 && d.divides(c, a)) pool.push_back(c);

  // levels[k]: product value -> (previous value, factor) over the current class sequence.
  using Level = std::unordered_map<Elem, std::pair<Elem, Elem>>;
  std::vector<Level> levels(1);
  levels[0].emplace(r.one(), std::make_pair(r.one(), r.one()));
  std::size_t nodes = 0;
  const std::size_t node_cap = max_results * 16 + 1024;

  std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t depth, std::size_t start) {
    for (std::size_t idx = start; idx < pool.size(); ++idx) {
      if (++nodes > node_cap) throw CapExceeded("factor enumeration: search cap exceeded");
      Level next;
      for (const auto& [v, back] : levels[depth])
        for (Elem m : d.class_members(pool[idx])) {
          const Elem p = r.mul(v, m);
          if (d.divides(p, a)) next.emplace(p, std::make_pair(v, m));
        }
      if (next.empty()) continue;
      levels.resize(depth + 2);
      levels[depth + 1] = std::move(next);
      if (levels[depth + 1].count(a)) {
        Factorization f;
        Elem v = a;
        for (std::size_t k = depth + 1; k >= 1; --k) {
          const auto& back = levels[k].at(v);
          f.factors.push_back(back.second);
          v = back.first;
        }
        std::reverse(f.factors.begin(), f.factors.end());
        out.factorizations.push_back(std::move(f));
        if (out.factorizations.size() > max_results) throw CapExceeded("factor enumeration: too many factorizations");
      }
      if (depth + 1 < max_len) dfs(depth + 1, idx);
    }
  };
  dfs(0, 0);

  // Split each factorization by choosing how many factors of each class are relevant.
  std::unordered_map<std::size_t, int> relevant_classes;
  for (const auto& f : out.factorizations) {
    std::vector<std::vector<Elem>> groups;
    for (Elem x : f.factors) {
      if (groups.empty() || !d.sim(groups.back().front(), x)) groups.emplace_back();
      groups.back().push_back(x);
    }
    std::vector<std::size_t> take(groups.size(), 0);
    while (true) {
      std::size_t g = 0;
      while (g < groups.size() && take[g] == groups[g].size()) take[g++] = 0;
      if (g == groups.size()) break;
      ++take[g];
      UFactorization u;
      u.target = a;
      for (std::size_t i = 0; i < groups.size(); ++i)
        for (std::size_t k = 0; k < groups[i].size(); ++k) (k < take[i] ? u.relevant : u.irrelevant).push_back(groups[i][k]);
      const Elem b = product_of(r, u.relevant);
      bool ok = std::all_of(u.irrelevant.begin(), u.irrelevant.end(), [&](Elem x) { return d.in_u(x, b); });
      for (std::size_t j = 0; j < u.relevant.size() && ok; ++j) {
        std::vector<Elem> rest = u.relevant;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(j));
        if (d.in_u(u.relevant[j], product_of(r, rest))) ok = false;
      }
      if (!ok) continue;
      for (Elem x : u.relevant) relevant_classes.emplace(d.ideal_id(x), 0);
      out.u_factorizations.push_back(std::move(u));
    }
  }
  std::sort(out.u_factorizations.begin(), out.u_factorizations.end(), [](const UFactorization& x, const UFactorization& y) {
    return std::tie(x.relevant, x.irrelevant) < std::tie(y.relevant, y.irrelevant);
  });

  FactorCensus& c = out.census;
  const auto table = irreducibility_table(d);
  std::unordered_map<std::size_t, int> atom_classes;
  for (Elem x = 1; x < r.order(); ++x)
    if (!d.is_unit(x) && table[x].irreducible && d.divides(x, a) && atom_classes.emplace(d.ideal_id(x), 0).second)
      c.atom_list.push_back(x);
  for (std::size_t i = 0; i < d.ideal_count(); ++i) c.nonassociate_divisor_count += d.ideal(i).contains(a);
  c.relevant_factor_class_count = relevant_classes.size();
  for (const auto& f : out.factorizations) {
    c.max_factorization_length_observed = std::max(c.max_factorization_length_observed, f.factors.size());
    for (std::size_t j = 0; j < f.factors.size() && c.bounded; ++j) {
      std::vector<Elem> rest = f.factors;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(j));
      if (rest.empty()) continue;
      const Elem q = product_of(r, rest);
      if (d.in_u(f.factors[j], q)) {
        c.bounded = false;
        c.unbounded_witness = r.name(f.factors[j]) + " lies in U(" + r.name(q) + ") in " + describe(r, f);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------- atomicity

AtomicReport atomic_check(const DivisibilityIndex& d) {
  const FiniteRing& r = *d.ring();
  const auto table = irreducibility_table(d);
  std::vector<Elem> atoms;
  for (Elem x = 1; x < r.order(); ++x)
    if (!d.is_unit(x) && table[x].irreducible) atoms.push_back(x);
  AtomicReport rep;
  rep.atoms = atoms.size();
  std::vector<std::size_t> depth(r.order(), 0);
  std::vector<Elem> queue;
  for (Elem x : atoms) depth[x] = 1, queue.push_back(x);
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (Elem y : atoms) {
      const Elem p = r.mul(queue[q], y);
      if (depth[p] == 0) depth[p] = depth[queue[q]] + 1, queue.push_back(p);
    }
  for (Elem x = 1; x < r.order(); ++x) {
    if (d.is_unit(x)) continue;
    if (depth[x] == 0) {
      if (rep.atomic) rep.witness = r.name(x) + " is not a product of atoms";
      rep.atomic = false;
    }
    rep.max_atoms_needed = std::max(rep.max_atoms_needed, depth[x]);
  }
  return rep;
}

namespace {

// Nondecreasing class sequences whose prefix products strictly shrink the principal ideal and stay
// nonzero; visit(reps, ideal id) is called for every such sequence that is relevant in full.
void relevant_search(const DivisibilityIndex& d, const std::vector<Elem>& classes,
                     const std::function<void(const std::vector<std::size_t>&, Elem)>& visit,
                     std::size_t cap = 2000000) {
  const FiniteRing& r = *d.ring();
  std::vector<std::size_t> seq;
  std::size_t nodes = 0;
  std::function<void(std::size_t, Elem)> dfs = [&](std::size_t start, Elem prod) {
    for (std::size_t i = start; i < classes.size(); ++i) {
      const Elem p = r.mul(prod, classes[i]);
      if (p == 0 || d.sim(p, prod)) continue;
      if (++nodes > cap) throw CapExceeded("relevant factor search cap exceeded");
      seq.push_back(i);
      bool relevant = true;
      for (std::size_t j = 0; j < seq.size() && relevant; ++j) {
        Elem rest = r.one();
        for (std::size_t k = 0; k < seq.size(); ++k)
          if (k != j) rest = r.mul(rest, classes[seq[k]]);
        if (d.sim(rest, p)) relevant = false;
      }
      if (relevant) visit(seq, p);
      dfs(i, p);
      seq.pop_back();
    }
  };
  dfs(0, r.one());
}

}  // namespace

UAtomicReport u_atomic_check(const DivisibilityIndex& d) {
  const FiniteRing& r = *d.ring();
  const auto table = irreducibility_table(d);
  // Atom classes, each with its atom members.
  std::vector<Elem> classes;
  std::vector<std::vector<Elem>> atoms_in;
  std::unordered_map<std::size_t, std::size_t> slot;
  for (Elem x = 1; x < r.order(); ++x) {
    if (d.is_unit(x) || !table[x].irreducible) continue;
    auto [it, fresh] = slot.emplace(d.ideal_id(x), classes.size());
    if (fresh) classes.push_back(d.representative(x)), atoms_in.emplace_back();
    atoms_in[it->second].push_back(x);
  }
  const ElementSet nonunits = d.units().complement();
  std::unordered_map<std::size_t, std::vector<Elem>> monoid;  // ideal id of B -> products of nonunits in U(B)
  auto monoid_of = [&](Elem b) -> const std::vector<Elem>& {
    auto [it, fresh] = monoid.emplace(d.ideal_id(b), std::vector<Elem>{});
    if (!fresh) return it->second;
    std::vector<Elem> gens;
    nonunits.for_each([&](Elem x) {
      if (d.in_u(x, b)) gens.push_back(x);
    });
    ElementSet have(r.order());
    std::vector<Elem>& out = it->second;
    have.insert(r.one());
    out.push_back(r.one());
    for (std::size_t q = 0; q < out.size(); ++q)
      for (Elem g : gens)
        if (have.insert(r.mul(out[q], g))) out.push_back(r.mul(out[q], g));
    return out;
  };

  UAtomicReport rep;
  ElementSet covered(r.order());
  relevant_search(d, classes, [&](const std::vector<std::size_t>& seq, Elem) {
    ++rep.relevant_tuples;
    ElementSet values(r.order());
    values.insert(r.one());
    for (std::size_t i : seq) {
      ElementSet next(r.order());
      values.for_each([&](Elem v) {
        for (Elem x : atoms_in[i]) next.insert(r.mul(v, x));
      });
      values = std::move(next);
    }
    values.for_each([&](Elem b) {
      for (Elem m : monoid_of(b)) covered.insert(r.mul(m, b));
    });
  });
  for (Elem x = 1; x < r.order(); ++x)
    if (!d.is_unit(x) && !covered.contains(x)) {
      if (rep.u_atomic) rep.witness = r.name(x) + " has no U-factorization with atom relevant factors";
      rep.u_atomic = false;
    }
  return rep;
}

LengthReport factorization_lengths(const DivisibilityIndex& d) {
  const FiniteRing& r = *d.ring();
  const ElementSet nonunits = d.units().complement();
  ElementSet reported = nonunits;
  reported.erase(0);
  return lengths_from(
      r.order(), nonunits, nonunits, [&](Elem a, Elem x) { return r.mul(a, x); }, reported,
      [&](Elem x) { return r.name(x); });
}

LengthReport module_factorization_lengths(const ModulePtr& m) {
  const FiniteRing& r = *m->ring();
  ElementSet reported = ElementSet::full(m->order());
  reported.erase(0);
  return lengths_from(
      m->order(), ElementSet::full(m->order()), nonunits_of(r), [&](Elem a, Elem x) { return m->act(a, x); },
      reported, [&](Elem x) { return m->name(x); });
}

RelevantLengthReport relevant_lengths(const DivisibilityIndex& d) {
  RelevantLengthReport rep;
  std::vector<ElementSet> ideals;
  for (std::size_t i = 0; i < d.ideal_count(); ++i) ideals.push_back(d.ideal(i));
  rep.chain_height = chain_height(std::move(ideals));
  std::vector<Elem> classes;
  for (Elem c : d.nonunit_classes())
    if (c != 0) classes.push_back(c);
  relevant_search(d, classes, [&](const std::vector<std::size_t>& seq, Elem) {
    ++rep.tuples;
    rep.max_relevant = std::max(rep.max_relevant, seq.size());
  });
  return rep;
}

// ---------------------------------------------------------------- reduced submodule factorizations

ReducedSubmoduleReport reduced_submodule_factorizations(const NTrivialExtension& e, int i, std::size_t max_results) {
  if (i < 1 || i > e.n()) throw UsageError("reduced submodule factorizations need 1 <= i <= n");
  const FiniteRing& r = *e.ring();
  const ModulePtr& mi = e.module(i);
  const CyclicIndex target_idx(mi);
  const DivisibilityIndex dr(e.ring());
  ReducedSubmoduleReport rep;
  rep.i = i;

  // Positive-index factor candidates: one representative per nonzero cyclic class of M_j, j <= i.
  std::vector<std::pair<int, Elem>> items;
  for (int j = 1; j <= i; ++j) {
    const CyclicIndex idx(e.module(j));
    std::unordered_map<std::size_t, int> seen;
    for (Elem x = 1; x < e.component_order(j); ++x)
      if (seen.emplace(idx.id(x), 0).second) items.push_back({j, x});
  }
  std::vector<Elem> scalars;
  for (Elem c : dr.nonunit_classes())
    if (c != 0) scalars.push_back(c);

  std::unordered_map<std::size_t, int> targets;
  std::vector<std::pair<int, Elem>> chosen;
  auto record = [&](Elem product) {
    ReducedSubmoduleFactorization f;
    f.factors = chosen;
    f.product = product;
    targets.emplace(target_idx.id(product), 0);
    rep.max_length = std::max(rep.max_length, f.factors.size());
    rep.factorizations.push_back(std::move(f));
    if (rep.factorizations.size() > max_results) throw CapExceeded("reduced submodule factorizations: cap exceeded");
  };

  // Degree 0 part: nonunit classes with strictly shrinking cyclic submodules.
  std::vector<Elem> degree0;
  std::function<void(Elem, std::size_t, Elem)> scalar_dfs = [&](Elem base, std::size_t start, Elem current) {
    for (std::size_t s = start; s < scalars.size(); ++s) {
      const Elem next = mi->act(scalars[s], current);
      if (next == 0 || target_idx.id(next) == target_idx.id(current)) continue;
      degree0.push_back(scalars[s]);
      bool reduced = true;
      for (std::size_t k = 0; k < degree0.size() && reduced; ++k) {
        Elem c = r.one();
        for (std::size_t t = 0; t < degree0.size(); ++t)
          if (t != k) c = r.mul(c, degree0[t]);
        if (target_idx.id(mi->act(c, base)) == target_idx.id(next)) reduced = false;
      }
      chosen.push_back({0, scalars[s]});
      if (reduced) record(next);
      scalar_dfs(base, s, next);
      chosen.pop_back();
      degree0.pop_back();
    }
  };

  std::function<void(std::size_t, int, Coords)> positive_dfs = [&](std::size_t start, int sum, Coords prod) {
    if (sum == i) {
      const Elem p = prod[static_cast<std::size_t>(i)];
      if (p == 0) return;
      record(p);
      scalar_dfs(p, 0, p);
      return;
    }
    for (std::size_t t = start; t < items.size(); ++t) {
      const auto [j, x] = items[t];
      if (sum + j > i) continue;
      chosen.push_back(items[t]);
      positive_dfs(t, sum + j, e.mul(prod, e.homogeneous(j, x)));
      chosen.pop_back();
    }
  };
  positive_dfs(0, 0, e.one());
  rep.cyclic_targets = targets.size();

  // Independent re-validation from the definition.
  for (const auto& f : rep.factorizations) {
    Coords prod = e.one();
    int sum = 0;
    std::vector<Elem> scalars_used;
    for (const auto& [j, x] : f.factors) {
      prod = e.mul(prod, e.homogeneous(j, x));
      sum += j;
      if (j == 0) scalars_used.push_back(x);
    }
    std::string why;
    if (sum != i) why = "index sum " + std::to_string(sum);
    else if (prod[static_cast<std::size_t>(i)] != f.product) why = "product mismatch";
    else if (f.product == 0) why = "zero product";
    for (Elem c : scalars_used)
      if (why.empty() && unit_by_scan(r, c)) why = r.name(c) + " is a unit";
    const ElementSet whole_c = cyclic(mi, f.product).elements;
    for (std::size_t k = 0; k < scalars_used.size() && why.empty(); ++k) {
      Coords without = e.one();
      bool skipped = false;
      for (const auto& [j, x] : f.factors) {
        if (j == 0 && x == scalars_used[k] && !skipped) {
          skipped = true;
          continue;
        }
        without = e.mul(without, e.homogeneous(j, x));
      }
      if (cyclic(mi, without[static_cast<std::size_t>(i)]).elements == whole_c) why = "cancelling " + r.name(scalars_used[k]) + " keeps the submodule";
    }
    if (!why.empty() && rep.revalidated) {
      rep.revalidated = false;
      rep.witness = describe(e, f) + ": " + why;
    }
  }
  return rep;
}

std::string describe(const NTrivialExtension& e, const ReducedSubmoduleFactorization& f) {
  std::vector<std::string> parts{"R"};
  for (const auto& [j, x] : f.factors) parts.push_back(e.name(e.homogeneous(j, x)));
  return join(parts, "*");
}

// ---------------------------------------------------------------- divisibility suite

std::vector<CheckRecord> divisibility_suite(const NTrivialExtension& e) {
  std::vector<CheckRecord> out;
  const int n = e.n();
  const RingPtr& flat = e.flat();
  const FiniteRing& s = *flat;
  const FiniteRing& r = *e.ring();
  const DivisibilityIndex d(flat);
  const DivisibilityIndex dr(e.ring());
  const auto table = irreducibility_table(d);
  const StructuralReport st = structural_predicates(e);
  std::vector<ModulePredicates> mp;
  for (int i = 0; i <= n; ++i) mp.push_back(module_predicates(i == 0 ? make_regular_module(e.ring()) : e.module(i)));
  const bool r_domain = classify(r).zero_divisors.empty();
  auto hom = [&](int i, Elem m) { return e.encode(e.homogeneous(i, m)); };
  auto iota = [&](Elem x) { return hom(0, x); };
  std::vector<std::vector<Elem>> coord(static_cast<std::size_t>(n + 1), std::vector<Elem>(s.order()));
  for (Elem x = 0; x < s.order(); ++x) {
    const Coords c = e.decode(x);
    for (int i = 0; i <= n; ++i) coord[static_cast<std::size_t>(i)][x] = c[static_cast<std::size_t>(i)];
  }
  auto pres_below_n = [&] {
    for (int i = 0; i < n; ++i)
      if (!mp[static_cast<std::size_t>(i)].is_presimplifiable) return false;
    return true;
  };
  const std::string needs_n2 = "needs n >= 2";

  auto run = [&](CheckRecord rec, const std::function<void(CheckRecord&)>& body) {
    Stopwatch w;
    body(rec);
    rec.runtime_ms = w.ms();
    out.push_back(std::move(rec));
  };

  // présimplifiable lift through R ⊆ S with U(S) ∩ R = U(R).
  run({"presimplifiable_lift",
       "if the extension is presimplifiable so is every R-submodule of it; R presimplifiable and 0 x M "
       "presimplifiable over R make the extension presimplifiable",
       "", Verdict::pass, {}, {}, 0},
      [&](CheckRecord& c) {
        for (Elem x = 0; x < r.order(); ++x)
          if (d.is_unit(iota(x)) != dr.is_unit(x)) {
            c.verdict = Verdict::skipped;
            c.hypotheses = "U(S) meets R outside U(R) at " + r.name(x);
            return;
          }
        c.hypotheses = "U(S) ∩ R = U(R) holds";
        auto pres_scan = [&](const std::function<bool(Elem)>& in_h) {
          for (Elem a = 0; a < r.order(); ++a) {
            if (dr.is_unit(a)) continue;
            for (Elem x = 1; x < s.order(); ++x)
              if (in_h(x) && s.mul(iota(a), x) == x) return false;
          }
          return true;
        };
        bool flat_pres = true;
        for (Elem a = 0; a < s.order() && flat_pres; ++a)
          if (!d.is_unit(a))
            for (Elem x = 1; x < s.order() && flat_pres; ++x)
              if (s.mul(a, x) == x) flat_pres = false;
        std::vector<bool> comp;
        for (int i = 0; i <= n; ++i)
          comp.push_back(pres_scan([&](Elem x) {
            for (int k = 0; k <= n; ++k)
              if (k != i && coord[static_cast<std::size_t>(k)][x] != 0) return false;
            return true;
          }));
        const bool n_pres = pres_scan([&](Elem x) { return coord[0][x] == 0; });
        const bool all_comp = std::all_of(comp.begin(), comp.end(), [](bool b) { return b; });
        c.facts.push_back("extension presimplifiable: " + yes(flat_pres));
        for (int i = 0; i <= n; ++i)
          c.facts.push_back("component " + std::to_string(i) + " presimplifiable inside S: " + yes(comp[static_cast<std::size_t>(i)]));
        c.facts.push_back("0 x M presimplifiable over R: " + yes(n_pres));
        if (flat_pres && !all_comp) c.witnesses.push_back("extension presimplifiable but a homogeneous component is not");
        if (comp[0] && n_pres && !flat_pres) c.witnesses.push_back("R and 0 x M presimplifiable but the extension is not");
        if (!c.witnesses.empty()) c.verdict = Verdict::fail;
      });

  run({"presimplifiable_equivalence", "the extension is presimplifiable iff R and every M_i are", "none", Verdict::pass,
       {}, {}, 0},
      [&](CheckRecord& c) {
        c.facts.push_back("extension: " + yes(st.presimplifiable) +
                          (st.presimplifiable ? "" : " (" + st.presimplifiable_witness + ")"));
        for (int i = 0; i <= n; ++i)
          c.facts.push_back((i == 0 ? std::string("R") : "M_" + std::to_string(i)) + ": " +
                            yes(st.component_presimplifiable[static_cast<std::size_t>(i)]) +
                            (mp[static_cast<std::size_t>(i)].is_presimplifiable
                                 ? ""
                                 : " (" + mp[static_cast<std::size_t>(i)].presimplifiable_witness + ")"));
        if (!st.presimplifiable_agree) {
          c.verdict = Verdict::fail;
          c.witnesses.push_back("sides disagree");
        }
      });

  run({"strongly_associate",
       "a strongly associate extension has strongly associate R and M_i; with R, M_1..M_{n-1} presimplifiable the "
       "extension is strongly associate iff M_n is",
       "", Verdict::pass, {}, {}, 0},
      [&](CheckRecord& c) {
        c.hypotheses = st.strongly_associate_agree ? "R, M_1..M_{n-1} presimplifiable: equivalence checked"
                                                   : "some of R, M_1..M_{n-1} not presimplifiable: implication only";
        c.facts.push_back("extension strongly associate: " + yes(st.strongly_associate) +
                          (st.strongly_associate ? "" : " (" + st.strongly_associate_witness + ")"));
        c.facts.push_back("M_n strongly associate: " + yes(st.component_strongly_associate.back()));
        if (!st.strongly_associate_implication) c.witnesses.push_back("extension strongly associate, a component is not");
        if (st.strongly_associate_agree == false) c.witnesses.push_back("equivalence with M_n fails");
        if (!c.witnesses.empty()) c.verdict = Verdict::fail;
      });

  run({"associate_lift",
       "for nonzero m, m' in M_i: m ~ m' (resp. strong, very strong) in M_i iff the homogeneous images are so in the "
       "extension",
       "none", Verdict::pass, {}, {}, 0},
      [&](CheckRecord& c) {
        std::size_t pairs = 0;
        for (int i = 1; i <= n; ++i) {
          const ModulePtr& m = e.module(i);
          for (Elem x = 1; x < m->order(); ++x)
            for (Elem y = 1; y < m->order(); ++y) {
              ++pairs;
              const AssociateReport a = relate(m, x, y);
              const AssociateReport b = d.relation(hom(i, x), hom(i, y));
              if (a.sim != b.sim || a.approx != b.approx || a.cong != b.cong) {
                c.verdict = Verdict::fail;
                if (c.witnesses.size() < 5)
                  c.witnesses.push_back("M_" + std::to_string(i) + ": " + m->name(x) + ", " + m->name(y));
              }
            }
        }
        c.facts.push_back(std::to_string(pairs) + " homogeneous pairs compared");
      });

  run({"primitive_irreducible_bridge",
       "a homogeneous element irreducible (strongly, very strongly) in the extension has primitive (strongly, very "
       "strongly) coordinate; the converse holds over a domain with torsion-free other modules, integral middle "
       "modules and an indecomposable element",
       "", Verdict::pass, {}, {}, 0},
      [&](CheckRecord& c) {
        if (n < 2) {
          c.verdict = Verdict::skipped;
          c.hypotheses = needs_n2;
          return;
        }
        std::size_t forward = 0, converse = 0;
        std::vector<std::string> converse_notes;
        for (int i = 1; i <= n; ++i) {
          std::string blocked;
          if (!r_domain) blocked = "R is not a domain";
          for (int j = 1; j <= n && blocked.empty(); ++j)
            if (j != i && !mp[static_cast<std::size_t>(j)].torsion_free)
              blocked = "M_" + std::to_string(j) + " is not torsion-free";
          for (int j = 2; j < i && blocked.empty(); ++j)
            if (!st.phi_integral[static_cast<std::size_t>(j)].value_or(false))
              blocked = "M_" + std::to_string(j) + " is not integral";
          if (blocked.empty() && i >= 2 && !st.multiplications_nontrivial) blocked = "some multiplication is zero";
          converse_notes.push_back("i=" + std::to_string(i) + ": " + (blocked.empty() ? "converse checked" : blocked));
          const ModulePtr& m = e.module(i);
          const auto& indec = st.indecomposables[static_cast<std::size_t>(i)];
          for (Elem x = 1; x < m->order(); ++x) {
            const IrreducibilityProfile& p = table[hom(i, x)];
            const PrimitivityReport q = primitivity(m, x);
            ++forward;
            auto bad = [&](const std::string& what) {
              c.verdict = Verdict::fail;
              if (c.witnesses.size() < 5) c.witnesses.push_back(what + " at " + e.name(e.homogeneous(i, x)));
            };
            if ((p.irreducible && !q.primitive) || (p.strongly && !q.strongly) || (p.very_strongly && !q.very_strongly))
              bad("irreducible without primitive");
            const bool indecomposable = i == 1 || std::find(indec.begin(), indec.end(), x) != indec.end();
            if (blocked.empty() && indecomposable) {
              ++converse;
              if ((q.primitive && !p.irreducible) || (q.strongly && !p.strongly) || (q.very_strongly && !p.very_strongly))
                bad("primitive without irreducible");
            }
          }
        }
        c.hypotheses = join(converse_notes, "; ");
        c.facts.push_back(std::to_string(forward) + " forward checks, " + std::to_string(converse) + " converse checks");
      });

  run({"idempotent_obstruction",
       "if R has a nontrivial idempotent, no nonzero homogeneous element of positive degree is irreducible", "",
       Verdict::pass, {}, {}, 0},
      [&](CheckRecord& c) {
        const ElementSet idem = classify(r).idempotents;
        if (idem.size() <= 2) {
          c.verdict = Verdict::skipped;
          c.hypotheses = "R has no nontrivial idempotent";
          return;
        }
        Elem w = 0;
        idem.for_each([&](Elem x) {
          if (w == 0 && x != 0 && x != r.one()) w = x;
        });
        c.hypotheses = "nontrivial idempotent " + r.name(w);
        std::size_t checked = 0;
        for (int i = 1; i <= n; ++i)
          for (Elem x = 1; x < e.component_order(i); ++x) {
            ++checked;
            if (!table[hom(i, x)].all_false()) {
              c.verdict = Verdict::fail;
              c.witnesses.push_back(e.name(e.homogeneous(i, x)) + " has an irreducibility flag");
            }
          }
        c.facts.push_back(std::to_string(checked) + " homogeneous elements, all flags false");
      });

  run({"decomposable_reducible", "if m_i = m_j m_k with j + k = i and j, k >= 1, the homogeneous image of m_i is not irreducible",
       "", Verdict::pass, {}, {}, 0},
      [&](CheckRecord& c) {
        if (n < 2) {
          c.verdict = Verdict::skipped;
          c.hypotheses = needs_n2;
          return;
        }
        c.hypotheses = "n >= 2";
        std::size_t checked = 0;
        for (int i = 2; i <= n; ++i) {
          const auto& indec = st.indecomposables[static_cast<std::size_t>(i)];
          for (Elem x = 1; x < e.component_order(i); ++x) {
            if (std::find(indec.begin(), indec.end(), x) != indec.end()) continue;
            ++checked;
            if (table[hom(i, x)].irreducible) {
              c.verdict = Verdict::fail;
              c.witnesses.push_back(e.name(e.homogeneous(i, x)) + " is decomposable yet irreducible");
            } else if (c.facts.empty()) {
              c.facts.push_back("first: " + table[hom(i, x)].witness);
            }
          }
        }
        c.facts.push_back(std::to_string(checked) + " decomposable elements checked");
      });

  run({"principal_chain_lemma",
       "for a, b vanishing below degree i with a_i nonzero: <a> strictly inside <b> forces b_i nonzero and <a_i> "
       "strictly inside <b_i>, when M_i is presimplifiable (i < n) or i = n",
       "", Verdict::pass, {}, {}, 0},
      [&](CheckRecord& c) {
        std::vector<std::string> notes;
        std::size_t pairs = 0;
        for (int i = 0; i <= n; ++i) {
          if (i < n && !mp[static_cast<std::size_t>(i)].is_presimplifiable) {
            notes.push_back("i=" + std::to_string(i) + " skipped (not presimplifiable)");
            continue;
          }
          notes.push_back("i=" + std::to_string(i) + " checked");
          const ModulePtr comp = i == 0 ? make_regular_module(e.ring()) : e.module(i);
          const CyclicIndex idx(comp);
          const auto& ci = coord[static_cast<std::size_t>(i)];
          std::vector<Elem> prefix_zero;
          for (Elem x = 0; x < s.order(); ++x) {
            bool z = true;
            for (int k = 0; k < i && z; ++k) z = coord[static_cast<std::size_t>(k)][x] == 0;
            if (z) prefix_zero.push_back(x);
          }
          for (Elem a : prefix_zero) {
            if (ci[a] == 0) continue;
            for (Elem b : prefix_zero) {
              if (!d.divides(b, a) || d.sim(a, b)) continue;
              ++pairs;
              const ElementSet& ra = idx.of(ci[a]).elements;
              const ElementSet& rb = idx.of(ci[b]).elements;
              if (ci[b] == 0 || !ra.subset_of(rb) || ra.size() == rb.size()) {
                c.verdict = Verdict::fail;
                if (c.witnesses.size() < 5) c.witnesses.push_back(s.name(a) + " in " + s.name(b));
              }
            }
          }
        }
        c.hypotheses = join(notes, "; ");
        c.facts.push_back(std::to_string(pairs) + " strictly contained pairs");
        if (pairs == 0) c.facts.push_back("no qualifying pair, holds vacuously");
      });

  const bool chain_hyp = n >= 2 && pres_below_n();
  const std::string chain_skip = n < 2 ? needs_n2 : "some of R, M_1..M_{n-1} not presimplifiable";

  run({"accp", "the extension has ACCP iff R has ACCP and every M_i has ACC on cyclic submodules", "", Verdict::pass,
       {}, {}, 0},
      [&](CheckRecord& c) {
        if (!chain_hyp) {
          c.verdict = Verdict::skipped;
          c.hypotheses = chain_skip;
          return;
        }
        c.hypotheses = "R, M_1..M_{n-1} presimplifiable";
        std::vector<ElementSet> ideals;
        for (std::size_t k = 0; k < d.ideal_count(); ++k) ideals.push_back(d.ideal(k));
        c.facts.push_back("extension: longest principal chain " + std::to_string(chain_height(ideals)));
        std::vector<ElementSet> base;
        for (std::size_t k = 0; k < dr.ideal_count(); ++k) base.push_back(dr.ideal(k));
        c.facts.push_back("R: longest principal chain " + std::to_string(chain_height(base)));
        for (int i = 1; i <= n; ++i)
          c.facts.push_back("M_" + std::to_string(i) + ": longest cyclic chain " +
                            std::to_string(chain_height(distinct_cyclics(e.module(i)))));
        c.facts.push_back("finite chains on both sides");
      });

  const AtomicReport atomic = atomic_check(d);
  run({"atomic", "R with ACCP, M_1..M_{n-1} with ACC on cyclic submodules and M_n with MCC make the extension atomic",
       "", Verdict::pass, {}, {}, 0},
      [&](CheckRecord& c) {
        if (!chain_hyp) {
          c.verdict = Verdict::skipped;
          c.hypotheses = chain_skip;
          return;
        }
        c.hypotheses = "R, M_1..M_{n-1} presimplifiable";
        bool mcc = true;
        for (Elem x = 0; x < e.component_order(n) && mcc; ++x) mcc = !maximal_cyclic_over(e.module(n), x).empty();
        c.facts.push_back("M_n has MCC: " + yes(mcc));
        c.facts.push_back("atomic: " + yes(atomic.atomic) + ", " + std::to_string(atomic.atoms) + " atoms, at most " +
                          std::to_string(atomic.max_atoms_needed) + " needed");
        if (mcc && !atomic.atomic) {
          c.verdict = Verdict::fail;
          c.witnesses.push_back(atomic.witness);
        }
      });

  run({"zero_prefix_products", "a product of j elements with zero R-coordinate vanishes in degrees below j", "",
       Verdict::pass, {}, {}, 0},
      [&](CheckRecord& c) {
        c.hypotheses = "none";
        std::vector<Elem> z;
        for (Elem x = 0; x < s.order(); ++x)
          if (coord[0][x] == 0) z.push_back(x);
        ElementSet prods = ElementSet::of(s.order(), z);
        for (int j = 2; j <= n + 1; ++j) {
          ElementSet next(s.order());
          prods.for_each([&](Elem p) {
            for (Elem y : z) next.insert(s.mul(p, y));
          });
          prods = std::move(next);
          prods.for_each([&](Elem p) {
            for (int k = 0; k < j && k <= n; ++k)
              if (coord[static_cast<std::size_t>(k)][p] != 0 && c.witnesses.size() < 5) {
                c.verdict = Verdict::fail;
                c.witnesses.push_back(std::to_string(j) + "-fold product " + s.name(p));
                break;
              }
          });
          c.facts.push_back(std::to_string(j) + "-fold products: " + std::to_string(prods.size()) + " values");
        }
      });

  const LengthReport flat_lengths = factorization_lengths(d);
  const LengthReport base_lengths = factorization_lengths(dr);
  run({"bfr", "over a domain with torsion-free M_1..M_{n-1}: the extension is a BFR iff R is a BFD and every M_i is a BF-module",
       "", Verdict::pass, {}, {}, 0},
      [&](CheckRecord& c) {
        std::string blocked = n < 2 ? needs_n2 : (!r_domain ? "R is not a domain" : "");
        for (int i = 1; i < n && blocked.empty(); ++i)
          if (!mp[static_cast<std::size_t>(i)].torsion_free) blocked = "M_" + std::to_string(i) + " is not torsion-free";
        if (!blocked.empty()) {
          c.verdict = Verdict::skipped;
          c.hypotheses = blocked;
          return;
        }
        c.hypotheses = "R a domain, M_1..M_{n-1} torsion-free";
        bool rhs = base_lengths.bounded;
        c.facts.push_back("R bounded: " + yes(base_lengths.bounded));
        for (int i = 1; i <= n; ++i) {
          const LengthReport m = module_factorization_lengths(e.module(i));
          rhs = rhs && m.bounded;
          c.facts.push_back("M_" + std::to_string(i) + " BF: " + yes(m.bounded) + ", longest " + std::to_string(m.bound));
        }
        c.facts.push_back("extension BFR: " + yes(flat_lengths.bounded) + ", longest factorization " +
                          std::to_string(flat_lengths.bound) + " <= order " + std::to_string(s.order()));
        if (rhs != flat_lengths.bounded) {
          c.verdict = Verdict::fail;
          c.witnesses.push_back(flat_lengths.bounded ? "components unbounded" : flat_lengths.witness);
        }
      });

  const RelevantLengthReport flat_relevant = relevant_lengths(d);
  std::vector<ReducedSubmoduleReport> reduced;
  if (n >= 2)
    for (int i = 1; i <= n; ++i) reduced.push_back(reduced_submodule_factorizations(e, i));

  run({"u_bfr",
       "a U-BFR extension has R a U-BFR and every M_i U-BF, and R a BFR when R is presimplifiable; over a domain, R "
       "a BFD with every M_i U-BF gives a U-BFR",
       "", Verdict::pass, {}, {}, 0},
      [&](CheckRecord& c) {
        if (n < 2) {
          c.verdict = Verdict::skipped;
          c.hypotheses = needs_n2;
          return;
        }
        c.hypotheses = "n >= 2";
        const bool flat_ubfr = flat_relevant.max_relevant <= flat_relevant.chain_height;
        const RelevantLengthReport base_relevant = relevant_lengths(dr);
        const bool base_ubfr = base_relevant.max_relevant <= base_relevant.chain_height;
        c.facts.push_back("extension: longest relevant part " + std::to_string(flat_relevant.max_relevant) +
                          ", principal chain height " + std::to_string(flat_relevant.chain_height));
        c.facts.push_back("R: longest relevant part " + std::to_string(base_relevant.max_relevant));
        for (const auto& rr : reduced)
          c.facts.push_back("M_" + std::to_string(rr.i) + ": longest reduced submodule factorization " +
                            std::to_string(rr.max_length));
        if (flat_ubfr && !base_ubfr) c.witnesses.push_back("R is not a U-BFR");
        if (flat_ubfr && mp[0].is_presimplifiable && !base_lengths.bounded) c.witnesses.push_back(base_lengths.witness);
        if (r_domain && base_lengths.bounded && !flat_ubfr) c.witnesses.push_back("converse fails");
        if (!c.witnesses.empty()) c.verdict = Verdict::fail;
      });

  run({"u_ffr",
       "a U-FFR extension has R an FFR and every M_i U-FF; over a domain with M_n integral and torsion-free, only "
       "finitely many principal ideals <(d, m)> and <(0, .., m, ..)> occur",
       "", Verdict::info, {}, {}, 0},
      [&](CheckRecord& c) {
        if (n < 2) {
          c.verdict = Verdict::skipped;
          c.hypotheses = needs_n2;
          return;
        }
        c.hypotheses = "reported only: the direct implication is not claimed at finite scale";
        std::unordered_map<std::size_t, int> classes;
        relevant_search(d, [&] {
          std::vector<Elem> cl;
          for (Elem x : d.nonunit_classes())
            if (x != 0) cl.push_back(x);
          return cl;
        }(), [&](const std::vector<std::size_t>& seq, Elem) {
          for (std::size_t k : seq) classes.emplace(k, 0);
        });
        c.facts.push_back("extension: finitely many relevant factor classes (" + std::to_string(classes.size()) +
                          "), so U-WFFR and U-FFR hold");
        c.facts.push_back("R FFR (bounded factorization lengths): " + yes(base_lengths.bounded));
        for (const auto& rr : reduced)
          c.facts.push_back("M_" + std::to_string(rr.i) + ": " + std::to_string(rr.factorizations.size()) +
                            " reduced submodule factorizations, finite");
        if (!base_lengths.bounded)
          c.facts.push_back("conclusion (1) fails here while the extension is U-FFR: " + base_lengths.witness);
        const bool extra = r_domain && st.phi_integral.back().value_or(n < 2) && mp[static_cast<std::size_t>(n)].torsion_free;
        if (extra) {
          std::size_t count = 0;
          std::unordered_map<std::size_t, int> seen;
          for (Elem x = 0; x < s.order(); ++x) {
            const Elem x0 = coord[0][x];
            if (x0 != 0 && !dr.is_unit(x0) && seen.emplace(d.ideal_id(x), 0).second) ++count;
          }
          c.facts.push_back("principal ideals <(d, m)> with d a nonzero nonunit: " + std::to_string(count));
        }
      });

  run({"u_atomic",
       "with R, M_1..M_{n-1} presimplifiable, R with ACCP and M_1..M_{n-1} with ACC on cyclic submodules, the "
       "extension is atomic iff it is U-atomic",
       "", Verdict::pass, {}, {}, 0},
      [&](CheckRecord& c) {
        if (!chain_hyp) {
          c.verdict = Verdict::skipped;
          c.hypotheses = chain_skip;
          return;
        }
        c.hypotheses = "R, M_1..M_{n-1} presimplifiable; chain conditions hold at finite size";
        const UAtomicReport u = u_atomic_check(d);
        c.facts.push_back("atomic: " + yes(atomic.atomic));
        c.facts.push_back("U-atomic: " + yes(u.u_atomic) + " (" + std::to_string(u.relevant_tuples) + " relevant atom tuples)");
        if (atomic.atomic != u.u_atomic) {
          c.verdict = Verdict::fail;
          c.witnesses.push_back(atomic.atomic ? u.witness : atomic.witness);
        }
      });

  run({"reduced_submodule_factorizations",
       "reduced submodule factorizations with mixed factors of index sum i, checked against the definition", "",
       Verdict::pass, {}, {}, 0},
      [&](CheckRecord& c) {
        if (n < 2) {
          c.verdict = Verdict::skipped;
          c.hypotheses = needs_n2;
          return;
        }
        c.hypotheses = "n >= 2";
        for (const auto& rr : reduced) {
          c.facts.push_back("M_" + std::to_string(rr.i) + ": " + std::to_string(rr.factorizations.size()) +
                            " factorizations onto " + std::to_string(rr.cyclic_targets) + " cyclic submodules, longest " +
                            std::to_string(rr.max_length));
          if (!rr.revalidated) {
            c.verdict = Verdict::fail;
            c.witnesses.push_back(rr.witness);
          }
        }
      });
  return out;
}

}  // namespace ntx
