#include "ntx/ideals.hpp"

#include <algorithm>
#include <unordered_set>

namespace ntx {

namespace {

void require_same(const Ideal& a, const Ideal& b) {
  if (a.ambient != b.ambient) throw UsageError("ideals live in different rings");
}

// Smallest exponent 2^t with 2^t >= order: x^k ∈ I for some k iff x^(2^t) ∈ I.
std::uint64_t radical_exponent(std::size_t order) {
  std::uint64_t e = 1;
  while (e < order) e <<= 1;
  return e;
}

}  // namespace

bool is_ideal(const FiniteRing& r, const ElementSet& s) {
  if (s.universe() != r.order() || !s.contains(0)) return false;
  bool ok = true;
  s.for_each([&](Elem a) {
    if (!ok) return;
    s.for_each([&](Elem b) { ok = ok && s.contains(r.add(a, b)); });
    for (Elem x = 0; x < r.order() && ok; ++x) ok = s.contains(r.mul(x, a));
  });
  return ok;
}

Ideal principal(const RingPtr& r, Elem a) {
  ElementSet s(r->order());
  for (Elem x = 0; x < r->order(); ++x) s.insert(r->mul(x, a));
  return {r, {a}, std::move(s)};
}

Ideal zero_ideal(const RingPtr& r) {
  ElementSet s(r->order());
  s.insert(0);
  return {r, {}, std::move(s)};
}

Ideal unit_ideal(const RingPtr& r) { return {r, {r->one()}, ElementSet::full(r->order())}; }

Ideal ideal_from_set(const RingPtr& r, const ElementSet& s) {
  if (!is_ideal(*r, s)) throw AxiomError("subset is not an ideal");
  Ideal out = zero_ideal(r);
  s.for_each([&](Elem x) {
    if (!out.contains(x)) out = ideal_sum(out, principal(r, x));
  });
  return out;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same(a, b);
  if (b.elements.subset_of(a.elements)) return a;
  if (a.elements.subset_of(b.elements)) return b;
  const FiniteRing& r = *a.ambient;
  // The running result is a union of cosets of a, so p ∈ result means p + a ⊆ result.
  Ideal out{a.ambient, a.generators, a.elements};
  const auto base = a.elements.elements();
  b.elements.for_each([&](Elem p) {
    if (out.elements.contains(p)) return;
    for (Elem i : base) out.elements.insert(r.add(p, i));
  });
  out.generators.insert(out.generators.end(), b.generators.begin(), b.generators.end());
  return out;
}

Ideal generate(const RingPtr& r, const std::vector<Elem>& gens) {
  Ideal out = zero_ideal(r);
  for (Elem g : gens) out = ideal_sum(out, principal(r, g));
  out.generators = gens;
  return out;
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
  require_same(a, b);
  if (a.elements.subset_of(b.elements)) return a;
  if (b.elements.subset_of(a.elements)) return b;
  return ideal_from_set(a.ambient, a.elements.intersect(b.elements));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same(a, b);
  const FiniteRing& r = *a.ambient;
  // IJ = sum over generators g of I of gJ, and each gJ is already an ideal.
  Ideal out = zero_ideal(a.ambient);
  std::vector<Elem> gens = a.generators;
  if (gens.empty() && a.size() > 1) gens = a.elements.elements();
  for (Elem g : gens) {
    ElementSet gj(r.order());
    b.elements.for_each([&](Elem y) { gj.insert(r.mul(g, y)); });
    std::vector<Elem> pg;
    for (Elem h : b.generators) pg.push_back(r.mul(g, h));
    out = ideal_sum(out, Ideal{a.ambient, pg, std::move(gj)});
  }
  return out;
}

Ideal ideal_colon(const Ideal& a, const Ideal& b) {
  require_same(a, b);
  const FiniteRing& r = *a.ambient;
  std::vector<Elem> gens = b.generators;
  if (gens.empty()) gens = b.elements.elements();
  ElementSet s(r.order());
  for (Elem x = 0; x < r.order(); ++x) {
    bool in = true;
    for (Elem g : gens)
      if (!a.contains(r.mul(x, g))) {
        in = false;
        break;
      }
    if (in) s.insert(x);
  }
  return ideal_from_set(a.ambient, s);
}

Ideal ideal_radical(const Ideal& a) {
  const FiniteRing& r = *a.ambient;
  const std::uint64_t k = radical_exponent(r.order());
  ElementSet s(r.order());
  for (Elem x = 0; x < r.order(); ++x)
    if (a.contains(r.pow(x, k))) s.insert(x);
  if (s == a.elements) return a;
  return ideal_from_set(a.ambient, s);
}

bool is_prime(const Ideal& p) {
  if (!p.proper()) return false;
  const FiniteRing& r = *p.ambient;
  const ElementSet out = p.elements.complement();
  const auto outside = out.elements();
  for (Elem a : outside)
    for (Elem b : outside)
      if (p.contains(r.mul(a, b))) return false;
  return true;
}

bool is_maximal(const Ideal& m) {
  if (!m.proper()) return false;
  const FiniteRing& r = *m.ambient;
  // R/m is a field: every a outside m has b with ab - 1 ∈ m.
  for (Elem a = 0; a < r.order(); ++a) {
    if (m.contains(a)) continue;
    bool inv = false;
    for (Elem b = 0; b < r.order() && !inv; ++b) inv = m.contains(r.sub(r.mul(a, b), r.one()));
    if (!inv) return false;
  }
  return true;
}

bool is_radical(const Ideal& a) { return ideal_radical(a) == a; }

std::vector<Ideal> enumerate_ideals(const RingPtr& r, std::size_t max_ideals) {
  std::vector<Ideal> principals;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  for (Elem x = 0; x < r->order(); ++x) {
    Ideal p = principal(r, x);
    if (seen.insert(p.elements).second) principals.push_back(std::move(p));
  }
  std::vector<Ideal> all = principals;
  if (all.size() > max_ideals) throw CapExceeded("more than " + std::to_string(max_ideals) + " ideals");
  for (std::size_t i = 0; i < all.size(); ++i)
    for (const auto& p : principals) {
      if (p.elements.subset_of(all[i].elements)) continue;
      Ideal s = ideal_sum(all[i], p);
      if (seen.insert(s.elements).second) {
        all.push_back(std::move(s));
        if (all.size() > max_ideals) throw CapExceeded("more than " + std::to_string(max_ideals) + " ideals");
      }
    }
  std::sort(all.begin(), all.end(), [](const Ideal& a, const Ideal& b) { return canonical_less(a.elements, b.elements); });
  return all;
}

Spectrum spectrum(const RingPtr& r, std::size_t max_ideals) {
  Spectrum s{enumerate_ideals(r, max_ideals), {}, {}, {}, zero_ideal(r), unit_ideal(r), 0};
  for (const auto& i : s.ideals) {
    if (!i.proper()) continue;
    if (is_prime(i)) s.primes.push_back(i);
    if (is_radical(i)) s.radicals.push_back(i);
  }
  for (const auto& p : s.primes) {
    bool maximal = true;
    for (const auto& q : s.primes)
      if (q.size() > p.size() && p.elements.subset_of(q.elements)) maximal = false;
    if (maximal) s.maximals.push_back(p);
  }
  s.nilradical = ideal_radical(zero_ideal(r));
  ElementSet jac = ElementSet::full(r->order());
  for (const auto& m : s.maximals) jac = jac.intersect(m.elements);
  s.jacobson = ideal_from_set(r, jac);
  // Longest strictly increasing chain of primes (primes sorted by size).
  std::vector<std::size_t> depth(s.primes.size(), 0);
  for (std::size_t i = 0; i < s.primes.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (s.primes[j].size() < s.primes[i].size() && s.primes[j].elements.subset_of(s.primes[i].elements))
        depth[i] = std::max(depth[i], depth[j] + 1);
  for (std::size_t d : depth) s.krull_dimension = std::max(s.krull_dimension, d);
  return s;
}

ElementSet ext_box(const NTrivialExtension& e, const ElementSet& base, const std::vector<ElementSet>& parts) {
  ElementSet out(e.order());
  Coords c = e.zero();
  // Odometer over base × N_1 × ... × N_n.
  std::vector<std::vector<Elem>> lists;
  lists.push_back(base.elements());
  for (const auto& p : parts) lists.push_back(p.elements());
  for (const auto& l : lists)
    if (l.empty()) return out;
  std::vector<std::size_t> pos(lists.size(), 0);
  while (true) {
    for (std::size_t i = 0; i < lists.size(); ++i) c[i] = lists[i][pos[i]];
    out.insert(e.encode(c));
    std::size_t k = lists.size();
    while (k-- > 0) {
      if (++pos[k] < lists[k].size()) break;
      pos[k] = 0;
    }
    if (k == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

ElementSet ideal_times_module(const ModulePtr& m, const ElementSet& ideal) {
  // I·M is the subgroup generated by {a m}; for an ideal I this set is already a submodule once closed.
  ElementSet gens(m->order());
  ideal.for_each([&](Elem a) {
    for (Elem x = 0; x < m->order(); ++x) gens.insert(m->act(a, x));
  });
  return span(m, gens.elements()).elements;
}

ElementSet extension_of_ideal(const NTrivialExtension& e, const ElementSet& ideal) {
  std::vector<ElementSet> parts;
  for (int i = 1; i <= e.n(); ++i) parts.push_back(ideal_times_module(e.module(i), ideal));
  return ext_box(e, ideal, parts);
}

namespace {

std::vector<ElementSet> full_parts(const NTrivialExtension& e) {
  std::vector<ElementSet> parts;
  for (int i = 1; i <= e.n(); ++i) parts.push_back(ElementSet::full(e.module(i)->order()));
  return parts;
}

ElementSet coordinate_image(const NTrivialExtension& e, const ElementSet& s, int i) {
  ElementSet out(e.component_order(i));
  s.for_each([&](Elem x) { out.insert(e.decode(x)[static_cast<std::size_t>(i)]); });
  return out;
}

}  // namespace

std::string describe(const Ideal& i, std::size_t max_listed) {
  const FiniteRing& r = *i.ambient;
  std::vector<std::string> gens;
  for (Elem g : i.generators) gens.push_back(r.name(g));
  std::string out = "<" + join(gens, ", ") + "> size " + std::to_string(i.size());
  if (i.size() <= max_listed) {
    std::vector<std::string> el;
    i.elements.for_each([&](Elem x) { el.push_back(r.name(x)); });
    out += " {" + join(el, ", ") + "}";
  }
  return out;
}

std::vector<FormCheck> extension_spectrum_checks(const NTrivialExtension& e, std::size_t max_ideals) {
  const RingPtr& r = e.ring();
  const RingPtr& s = e.flat();
  const Spectrum base = spectrum(r, max_ideals);
  const Spectrum ext = spectrum(s, max_ideals);
  const auto full = full_parts(e);
  std::vector<FormCheck> out;

  auto form_check = [&](const std::string& name, const std::vector<Ideal>& ext_list,
                        const std::vector<Ideal>& base_list) {
    FormCheck fc;
    fc.name = name;
    std::unordered_set<ElementSet, ElementSetHash> expected;
    for (const auto& p : base_list) expected.insert(ext_box(e, p.elements, full));
    for (const auto& j : ext_list)
      if (!expected.count(j.elements)) {
        fc.ok = false;
        fc.witnesses.push_back(describe(j) + " is not of the form P ⋉ M");
      }
    if (ext_list.size() != base_list.size()) {
      fc.ok = false;
      fc.witnesses.push_back("count " + std::to_string(ext_list.size()) + " over the extension vs " +
                             std::to_string(base_list.size()) + " over R");
    }
    fc.facts.emplace_back("count", std::to_string(ext_list.size()));
    fc.facts.emplace_back("count_over_R", std::to_string(base_list.size()));
    out.push_back(std::move(fc));
  };
  form_check("primes have the form P ⋉ M", ext.primes, base.primes);
  form_check("maximal ideals have the form P ⋉ M", ext.maximals, base.maximals);
  form_check("radical ideals have the form I ⋉ M", ext.radicals, base.radicals);

  {
    FormCheck fc;
    fc.name = "nilradical and Jacobson radical are Nil(R) ⋉ M and J(R) ⋉ M";
    if (ext.nilradical.elements != ext_box(e, base.nilradical.elements, full)) {
      fc.ok = false;
      fc.witnesses.push_back("nilradical " + describe(ext.nilradical));
    }
    if (ext.jacobson.elements != ext_box(e, base.jacobson.elements, full)) {
      fc.ok = false;
      fc.witnesses.push_back("Jacobson radical " + describe(ext.jacobson));
    }
    fc.facts.emplace_back("nilradical_size", std::to_string(ext.nilradical.size()));
    fc.facts.emplace_back("jacobson_size", std::to_string(ext.jacobson.size()));
    out.push_back(std::move(fc));
  }
  {
    FormCheck fc;
    fc.name = "Krull dimension equals that of R";
    fc.ok = ext.krull_dimension == base.krull_dimension;
    fc.facts.emplace_back("krull_dimension", std::to_string(ext.krull_dimension));
    fc.facts.emplace_back("krull_dimension_R", std::to_string(base.krull_dimension));
    if (!fc.ok) fc.witnesses.push_back("dimensions differ");
    out.push_back(std::move(fc));
  }
  {
    FormCheck fc;
    fc.name = "ideals containing 0 ⋉ M have the form K ⋉ M";
    ElementSet zero_base(r->order());
    zero_base.insert(0);
    const ElementSet zm = ext_box(e, zero_base, full);
    std::size_t count = 0;
    for (const auto& j : ext.ideals) {
      if (!zm.subset_of(j.elements)) continue;
      ++count;
      const ElementSet k = coordinate_image(e, j.elements, 0);
      if (!is_ideal(*r, k) || ext_box(e, k, full) != j.elements) {
        fc.ok = false;
        fc.witnesses.push_back(describe(j));
      }
    }
    fc.facts.emplace_back("ideals_containing_0xM", std::to_string(count));
    out.push_back(std::move(fc));
  }
  {
    FormCheck fc;
    fc.name = "I ⋉ IM is the ideal generated by the image of I";
    for (const auto& i : base.ideals) {
      const ElementSet ext_i = extension_of_ideal(e, i.elements);
      std::vector<Elem> lifted;
      for (Elem g : i.generators) lifted.push_back(e.encode(e.homogeneous(0, g)));
      const Ideal generated = generate(s, lifted);
      if (generated.elements != ext_i || !is_ideal(*s, ext_i)) {
        fc.ok = false;
        fc.witnesses.push_back("I = " + describe(i));
      }
    }
    fc.facts.emplace_back("ideals_of_R", std::to_string(base.ideals.size()));
    out.push_back(std::move(fc));
  }
  {
    FormCheck fc;
    fc.name = "ker pi_m = 0 ⋉ ... ⋉ 0 ⋉ M_{m+1} ⋉ ... ⋉ M_n";
    for (int m = 0; m < e.n(); ++m) {
      const HomCheck h = check_pi(e, m);
      ElementSet kernel(e.order());
      for (Elem x = 0; x < e.order(); ++x)
        if (h.table[x] == 0) kernel.insert(x);
      std::vector<ElementSet> parts;
      for (int i = 1; i <= e.n(); ++i) {
        ElementSet p(e.module(i)->order());
        if (i > m) p = ElementSet::full(e.module(i)->order());
        else p.insert(0);
        parts.push_back(p);
      }
      ElementSet zero_base(r->order());
      zero_base.insert(0);
      if (!h.ok || kernel != ext_box(e, zero_base, parts)) {
        fc.ok = false;
        fc.witnesses.push_back("pi_" + std::to_string(m) + (h.ok ? " kernel has the wrong shape" : ": " + h.witness));
      }
    }
    out.push_back(std::move(fc));
  }
  out.front().facts.emplace_back("ideals_of_extension", std::to_string(ext.ideals.size()));
  return out;
}

}  // namespace ntx
