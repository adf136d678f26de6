#include "ntx/module.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace ntx {

namespace {

ElementSet unit_set(const FiniteRing& r) {
  ElementSet u(r.order());
  for (Elem x = 0; x < r.order(); ++x)
    for (Elem y = 0; y < r.order(); ++y)
      if (r.mul(x, y) == r.one()) {
        u.insert(x);
        break;
      }
  return u;
}

std::vector<std::vector<Elem>> radix_coords(const std::vector<int>& factors, std::size_t order) {
  std::vector<std::vector<Elem>> coords(order, std::vector<Elem>(factors.size()));
  for (std::size_t idx = 0; idx < order; ++idx) {
    std::size_t rest = idx;
    for (std::size_t i = factors.size(); i-- > 0;) {
      coords[idx][i] = static_cast<Elem>(rest % static_cast<std::size_t>(factors[i]));
      rest /= static_cast<std::size_t>(factors[i]);
    }
  }
  return coords;
}

Elem radix_encode(const std::vector<int>& factors, const std::vector<Elem>& c) {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) idx = idx * static_cast<std::size_t>(factors[i]) + c[i];
  return static_cast<Elem>(idx);
}

ModuleTables radix_group(const std::vector<int>& factors) {
  ModuleTables t;
  std::size_t order = 1;
  for (int d : factors) {
    if (d < 1) throw AxiomError("invariant factors must be positive");
    order *= static_cast<std::size_t>(d);
  }
  t.order = order;
  t.invariant_factors = factors;
  const auto coords = radix_coords(factors, order);
  t.add.resize(order * order);
  std::vector<Elem> s(factors.size());
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      for (std::size_t i = 0; i < factors.size(); ++i)
        s[i] = static_cast<Elem>((coords[a][i] + coords[b][i]) % static_cast<Elem>(factors[i]));
      t.add[a * order + b] = radix_encode(factors, s);
    }
  for (std::size_t idx = 0; idx < order; ++idx) {
    if (factors.size() == 1) {
      t.names.push_back(std::to_string(coords[idx][0]));
      continue;
    }
    std::vector<std::string> parts;
    for (Elem c : coords[idx]) parts.push_back(std::to_string(c));
    t.names.push_back("(" + join(parts, ",") + ")");
  }
  std::vector<std::string> labels;
  for (int d : factors) labels.push_back("Z" + std::to_string(d));
  t.label = join(labels, "x");
  return t;
}

std::vector<Elem> greedy_generators(const ModulePtr& m, const ElementSet& elems) {
  std::vector<Elem> gens;
  ElementSet covered(m->order());
  covered.insert(0);
  elems.for_each([&](Elem x) {
    if (covered.contains(x)) return;
    gens.push_back(x);
    covered = span(m, gens).elements;
  });
  return gens;
}

}  // namespace

FiniteModule::FiniteModule(RingPtr ring, ModuleTables t, const ValidationOptions& opts)
    : ring_(std::move(ring)),
      order_(t.order),
      add_(std::move(t.add)),
      act_(std::move(t.act)),
      invariant_factors_(std::move(t.invariant_factors)),
      label_(std::move(t.label)),
      names_(std::move(t.names)),
      generator_(t.generator) {
  if (!ring_) throw AxiomError("module without a ring");
  if (order_ < 1) throw AxiomError("module carrier must be nonempty");
  if (add_.size() != order_ * order_) throw AxiomError("module addition table has wrong size");
  if (act_.size() != ring_->order() * order_) throw AxiomError("action table has wrong size");
  for (Elem v : add_)
    if (v >= order_) throw AxiomError("module addition leaves the carrier");
  for (Elem v : act_)
    if (v >= order_) throw AxiomError("action leaves the carrier");
  if (generator_ && *generator_ >= order_) throw AxiomError("generator outside the carrier");
  if (names_.size() != order_) {
    names_.resize(order_);
    for (std::size_t i = 0; i < order_; ++i) names_[i] = std::to_string(i);
  }
  neg_.assign(order_, 0);
  for (Elem a = 0; a < order_; ++a) {
    bool found = false;
    for (Elem b = 0; b < order_ && !found; ++b)
      if (add(a, b) == 0) {
        neg_[a] = b;
        found = true;
      }
    if (!found) throw AxiomError("module element " + names_[a] + " has no additive inverse");
  }
  if (order_ == 1) warnings_.push_back("zero module");
  if (!opts.trusted) validate(opts);
}

void FiniteModule::validate(const ValidationOptions& opts) {
  const FiniteRing& r = *ring_;
  const std::size_t n = order_;
  for (Elem a = 0; a < n; ++a) {
    if (add(0, a) != a) throw AxiomError("zero vector is not an identity at " + names_[a]);
    if (act(r.one(), a) != a) throw AxiomError("action not unitary: 1*" + names_[a] + " != " + names_[a]);
    for (Elem b = 0; b < n; ++b)
      if (add(a, b) != add(b, a))
        throw AxiomError("module addition not commutative at (" + names_[a] + ", " + names_[b] + ")");
  }
  if (n <= opts.exhaustive_cap) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c)
          if (add(add(a, b), c) != add(a, add(b, c)))
            throw AxiomError("module addition not associative at (" + names_[a] + ", " + names_[b] + ", " +
                             names_[c] + ")");
  }
  for (Elem s = 0; s < r.order(); ++s) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        if (act(s, add(a, b)) != add(act(s, a), act(s, b)))
          throw AxiomError("action not additive in the module: " + r.name(s) + "*(" + names_[a] + "+" +
                           names_[b] + ")");
    for (Elem t = 0; t < r.order(); ++t)
      for (Elem a = 0; a < n; ++a) {
        if (act(r.add(s, t), a) != add(act(s, a), act(t, a)))
          throw AxiomError("action not additive in the ring: (" + r.name(s) + "+" + r.name(t) + ")*" + names_[a]);
        if (act(r.mul(s, t), a) != act(s, act(t, a)))
          throw AxiomError("action not associative: (" + r.name(s) + "*" + r.name(t) + ")*" + names_[a]);
      }
  }
}

std::optional<Elem> FiniteModule::parse(const std::string& text) const {
  for (Elem i = 0; i < order_; ++i)
    if (names_[i] == text) return i;
  try {
    std::size_t pos = 0;
    const unsigned long v = std::stoul(text, &pos);
    if (pos == text.size() && v < order_) return static_cast<Elem>(v);
  } catch (const std::exception&) {
  }
  return std::nullopt;
}

ModulePtr make_regular_module(const RingPtr& r) {
  ModuleTables t;
  t.order = r->order();
  t.add = r->add_table();
  t.act = r->mul_table();
  t.label = r->label();
  for (Elem x = 0; x < r->order(); ++x) t.names.push_back(r->name(x));
  t.generator = r->one();
  if (r->modulus()) t.invariant_factors = {r->modulus()};
  ValidationOptions trusted;
  trusted.trusted = true;
  return std::make_shared<FiniteModule>(r, std::move(t), trusted);
}

ModulePtr make_explicit_module(const RingPtr& r, const std::vector<int>& factors, std::vector<Elem> action) {
  ModuleTables t = radix_group(factors);
  t.act = std::move(action);
  return std::make_shared<FiniteModule>(r, std::move(t));
}

ModulePtr make_scalar_module(const RingPtr& r, const std::vector<int>& factors) {
  if (r->additive_order(r->one()) != r->order())
    throw AxiomError("scalar action needs an additively cyclic ring (Z/m)");
  const std::size_t m = r->order();
  for (int d : factors)
    if (d < 1 || m % static_cast<std::size_t>(d) != 0)
      throw AxiomError("scalar module factor " + std::to_string(d) + " does not divide " + std::to_string(m));
  std::vector<Elem> as_int(m);
  Elem x = 0;
  for (std::size_t k = 0; k < m; ++k) {
    as_int[x] = static_cast<Elem>(k);
    x = r->add(x, r->one());
  }
  ModuleTables t = radix_group(factors);
  const auto coords = radix_coords(factors, t.order);
  t.act.resize(m * t.order);
  std::vector<Elem> c(factors.size());
  for (Elem s = 0; s < m; ++s)
    for (std::size_t v = 0; v < t.order; ++v) {
      for (std::size_t i = 0; i < factors.size(); ++i)
        c[i] = static_cast<Elem>((static_cast<std::uint64_t>(as_int[s]) * coords[v][i]) %
                                 static_cast<std::uint64_t>(factors[i]));
      t.act[s * t.order + v] = radix_encode(factors, c);
    }
  if (factors.size() == 1 && t.order > 1) t.generator = 1;
  return std::make_shared<FiniteModule>(r, std::move(t));
}

ModulePtr make_direct_sum(const std::vector<ModulePtr>& parts) {
  if (parts.empty()) throw AxiomError("direct sum of no modules");
  const RingPtr& r = parts.front()->ring();
  std::vector<int> sizes;
  for (const auto& p : parts) {
    if (p->ring() != r) throw AxiomError("direct sum of modules over different rings");
    sizes.push_back(static_cast<int>(p->order()));
  }
  const auto coords = radix_coords(sizes, [&] {
    std::size_t o = 1;
    for (int s : sizes) o *= static_cast<std::size_t>(s);
    return o;
  }());
  const std::size_t order = coords.size();
  ModuleTables t;
  t.order = order;
  t.add.resize(order * order);
  t.act.resize(r->order() * order);
  std::vector<Elem> c(parts.size());
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      for (std::size_t i = 0; i < parts.size(); ++i) c[i] = parts[i]->add(coords[a][i], coords[b][i]);
      t.add[a * order + b] = radix_encode(sizes, c);
    }
    for (Elem s = 0; s < r->order(); ++s) {
      for (std::size_t i = 0; i < parts.size(); ++i) c[i] = parts[i]->act(s, coords[a][i]);
      t.act[s * order + a] = radix_encode(sizes, c);
    }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < parts.size(); ++i) names.push_back(parts[i]->name(coords[a][i]));
    t.names.push_back("(" + join(names, ",") + ")");
  }
  std::vector<std::string> labels;
  for (const auto& p : parts) {
    labels.push_back(p->label());
    for (int d : p->invariant_factors()) t.invariant_factors.push_back(d);
  }
  t.label = join(labels, "+");
  ValidationOptions trusted;
  trusted.trusted = true;
  return std::make_shared<FiniteModule>(r, std::move(t), trusted);
}

ModulePtr make_algebra_module(const RingPtr& r, const RingPtr& t, const std::vector<Elem>& hom) {
  const MapCheck ok = check_ring_hom(*r, *t, hom, true);
  if (!ok.ok) throw AxiomError("algebra structure map is not a ring homomorphism: " + ok.witness);
  ModuleTables mt;
  mt.order = t->order();
  mt.add = t->add_table();
  mt.act.resize(r->order() * mt.order);
  for (Elem s = 0; s < r->order(); ++s)
    for (Elem x = 0; x < mt.order; ++x) mt.act[s * mt.order + x] = t->mul(hom[s], x);
  mt.label = t->label();
  for (Elem x = 0; x < mt.order; ++x) mt.names.push_back(t->name(x));
  return std::make_shared<FiniteModule>(r, std::move(mt));
}

std::vector<Elem> canonical_hom_from_zm(const RingPtr& r, const RingPtr& t) {
  if (r->additive_order(r->one()) != r->order())
    throw AxiomError("canonical map needs an additively cyclic source ring");
  std::vector<Elem> f(r->order());
  Elem x = 0;
  for (std::size_t k = 0; k < r->order(); ++k) {
    f[x] = t->integer(k);
    x = r->add(x, r->one());
  }
  const MapCheck ok = check_ring_hom(*r, *t, f, true);
  if (!ok.ok) throw AxiomError(t->label() + " is not an algebra over " + r->label() + ": " + ok.witness);
  return f;
}

ModulePtr make_zero_module(const RingPtr& r) {
  ModuleTables t;
  t.order = 1;
  t.add = {0};
  t.act.assign(r->order(), 0);
  t.label = "0";
  t.names = {"0"};
  return std::make_shared<FiniteModule>(r, std::move(t));
}

ModulePtr make_table_module(const RingPtr& r, ModuleTables t, const ValidationOptions& opts) {
  return std::make_shared<FiniteModule>(r, std::move(t), opts);
}

Submodule cyclic(const ModulePtr& m, Elem x) {
  ElementSet s(m->order());
  for (Elem r = 0; r < m->ring()->order(); ++r) s.insert(m->act(r, x));
  return {m, {x}, std::move(s)};
}

Submodule zero_submodule(const ModulePtr& m) {
  ElementSet s(m->order());
  s.insert(0);
  return {m, {}, std::move(s)};
}

Submodule whole(const ModulePtr& m) {
  Submodule s{m, {}, ElementSet::full(m->order())};
  s.generators = greedy_generators(m, s.elements);
  return s;
}

Submodule sum(const Submodule& a, const Submodule& b) {
  if (a.module != b.module) throw UsageError("sum of submodules of different modules");
  if (b.elements.subset_of(a.elements)) return a;
  if (a.elements.subset_of(b.elements)) return b;
  ElementSet s(a.module->order());
  a.elements.for_each([&](Elem x) { b.elements.for_each([&](Elem y) { s.insert(a.module->add(x, y)); }); });
  std::vector<Elem> gens = a.generators;
  gens.insert(gens.end(), b.generators.begin(), b.generators.end());
  return {a.module, std::move(gens), std::move(s)};
}

Submodule span(const ModulePtr& m, const std::vector<Elem>& gens) {
  Submodule s = zero_submodule(m);
  for (Elem g : gens) {
    if (s.contains(g)) {
      s.generators.push_back(g);
      continue;
    }
    s = sum(s, cyclic(m, g));
  }
  s.generators = gens;
  return s;
}

Submodule intersect(const Submodule& a, const Submodule& b) {
  if (a.module != b.module) throw UsageError("intersection of submodules of different modules");
  ElementSet s = a.elements.intersect(b.elements);
  auto gens = greedy_generators(a.module, s);
  return {a.module, std::move(gens), std::move(s)};
}

std::vector<Submodule> enumerate_submodules(const ModulePtr& m, std::size_t max_order) {
  if (m->order() > max_order)
    throw CapExceeded("submodule enumeration limited to modules of order " + std::to_string(max_order));
  std::vector<Submodule> cyclics;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  for (Elem x = 0; x < m->order(); ++x) {
    Submodule c = cyclic(m, x);
    if (seen.insert(c.elements).second) cyclics.push_back(std::move(c));
  }
  std::vector<Submodule> all = cyclics;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (const auto& c : cyclics) {
      if (c.elements.subset_of(all[i].elements)) continue;
      Submodule s = sum(all[i], c);
      if (seen.insert(s.elements).second) all.push_back(std::move(s));
    }
  std::sort(all.begin(), all.end(),
            [](const Submodule& a, const Submodule& b) { return canonical_less(a.elements, b.elements); });
  return all;
}

std::vector<Submodule> maximal_cyclic_over(const ModulePtr& m, Elem x) {
  std::vector<Submodule> cyclics;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  for (Elem y = 0; y < m->order(); ++y) {
    Submodule c = cyclic(m, y);
    if (seen.insert(c.elements).second) cyclics.push_back(std::move(c));
  }
  const ElementSet rx = cyclic(m, x).elements;
  std::vector<Submodule> out;
  for (const auto& c : cyclics) {
    if (!rx.subset_of(c.elements)) continue;
    bool maximal = true;
    for (const auto& d : cyclics)
      if (d.elements.size() > c.elements.size() && c.elements.subset_of(d.elements)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(c);
  }
  std::sort(out.begin(), out.end(),
            [](const Submodule& a, const Submodule& b) { return canonical_less(a.elements, b.elements); });
  return out;
}

SubmoduleAsModule submodule_as_module(const Submodule& s) {
  const ModulePtr& m = s.module;
  std::vector<Elem> embed = s.elements.elements();
  std::vector<Elem> back(m->order(), 0);
  for (std::size_t i = 0; i < embed.size(); ++i) back[embed[i]] = static_cast<Elem>(i);
  const std::size_t k = embed.size();
  const RingPtr& r = m->ring();
  ModuleTables t;
  t.order = k;
  t.add.resize(k * k);
  t.act.resize(r->order() * k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) t.add[a * k + b] = back[m->add(embed[a], embed[b])];
    for (Elem x = 0; x < r->order(); ++x) t.act[x * k + a] = back[m->act(x, embed[a])];
    t.names.push_back(m->name(embed[a]));
  }
  t.label = "N<" + m->label() + ">";
  ValidationOptions trusted;
  trusted.trusted = true;
  return {std::make_shared<FiniteModule>(r, std::move(t), trusted), std::move(embed)};
}

ModulePtr restrict_scalars(const ModulePtr& m, const RingPtr& s, const std::vector<Elem>& f) {
  ModuleTables t;
  t.order = m->order();
  t.add = m->add_table();
  t.act.resize(s->order() * t.order);
  for (Elem x = 0; x < s->order(); ++x)
    for (Elem v = 0; v < t.order; ++v) t.act[x * t.order + v] = m->act(f[x], v);
  t.label = m->label();
  for (Elem v = 0; v < t.order; ++v) t.names.push_back(m->name(v));
  t.invariant_factors = m->invariant_factors();
  return std::make_shared<FiniteModule>(s, std::move(t));
}

ModulePtr corner_module(const ModulePtr& m, Elem idempotent, const RingPtr& sub, const std::vector<Elem>& lift) {
  ElementSet image(m->order());
  for (Elem v = 0; v < m->order(); ++v) image.insert(m->act(idempotent, v));
  const std::vector<Elem> embed = image.elements();
  std::vector<Elem> back(m->order(), 0);
  for (std::size_t i = 0; i < embed.size(); ++i) back[embed[i]] = static_cast<Elem>(i);
  const std::size_t k = embed.size();
  ModuleTables t;
  t.order = k;
  t.add.resize(k * k);
  t.act.resize(sub->order() * k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      const Elem s = m->add(embed[a], embed[b]);
      if (!image.contains(s)) throw AxiomError("corner submodule not closed under addition");
      t.add[a * k + b] = back[s];
    }
    for (Elem x = 0; x < sub->order(); ++x) {
      const Elem v = m->act(lift[x], embed[a]);
      if (!image.contains(v)) throw AxiomError("corner submodule not closed under the action");
      t.act[x * k + a] = back[v];
    }
    t.names.push_back(m->name(embed[a]));
  }
  t.label = "e" + m->label();
  return std::make_shared<FiniteModule>(sub, std::move(t));
}

ElementSet annihilator(const ModulePtr& m, Elem x) {
  ElementSet out(m->ring()->order());
  for (Elem r = 0; r < m->ring()->order(); ++r)
    if (m->act(r, x) == 0) out.insert(r);
  return out;
}

ElementSet annihilator(const ModulePtr& m) {
  ElementSet out = ElementSet::full(m->ring()->order());
  for (Elem x = 0; x < m->order(); ++x) out = out.intersect(annihilator(m, x));
  return out;
}

ElementSet zero_divisors_on(const ModulePtr& m) {
  ElementSet out(m->ring()->order());
  for (Elem r = 0; r < m->ring()->order(); ++r)
    for (Elem x = 1; x < m->order(); ++x)
      if (m->act(r, x) == 0) {
        out.insert(r);
        break;
      }
  return out;
}

ElementSet scaled(const ModulePtr& m, Elem s) {
  ElementSet out(m->order());
  for (Elem x = 0; x < m->order(); ++x) out.insert(m->act(s, x));
  return out;
}

bool saturated_by(const ModulePtr& m, Elem s) { return scaled(m, s).size() == m->order(); }

std::optional<std::pair<Elem, Elem>> presimplifiable_counterexample(const ModulePtr& m) {
  const ElementSet units = unit_set(*m->ring());
  for (Elem r = 0; r < m->ring()->order(); ++r) {
    if (units.contains(r)) continue;
    for (Elem x = 1; x < m->order(); ++x)
      if (m->act(r, x) == x) return std::make_pair(r, x);
  }
  return std::nullopt;
}

CyclicIndex::CyclicIndex(const ModulePtr& m) : units_(unit_set(*m->ring())) {
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> ids;
  cyclics_.reserve(m->order());
  ids_.reserve(m->order());
  for (Elem x = 0; x < m->order(); ++x) {
    cyclics_.push_back(cyclic(m, x));
    auto [it, fresh] = ids.emplace(cyclics_.back().elements, ids.size());
    ids_.push_back(it->second);
  }
}

ModulePredicates module_predicates(const ModulePtr& m) {
  const FiniteRing& r = *m->ring();
  ModulePredicates p;
  p.zero_divisors = zero_divisors_on(m);
  if (auto w = presimplifiable_counterexample(m)) {
    p.presimplifiable_witness = r.name(w->first) + "*" + m->name(w->second) + "=" + m->name(w->second);
  } else {
    p.is_presimplifiable = true;
  }
  p.divisible = true;
  regular_elements(r).for_each([&](Elem s) {
    if (p.divisible && !saturated_by(m, s)) {
      p.divisible = false;
      p.divisible_witness = r.name(s) + "M != M";
    }
  });
  p.torsion_free = true;
  for (Elem s = 1; s < r.order() && p.torsion_free; ++s)
    for (Elem x = 1; x < m->order(); ++x)
      if (m->act(s, x) == 0) {
        p.torsion_free = false;
        break;
      }
  for (Elem x = 0; x < m->order() && !p.is_cyclic; ++x) p.is_cyclic = cyclic(m, x).size() == m->order();

  // x ~ y ⇒ x ≈ y: every class of equal cyclic submodules is a single unit orbit.
  const CyclicIndex idx(m);
  p.strongly_associate = true;
  std::vector<char> done(m->order(), 0);
  for (Elem x = 0; x < m->order() && p.strongly_associate; ++x) {
    if (done[x]) continue;
    ElementSet orbit(m->order());
    idx.units().for_each([&](Elem u) { orbit.insert(m->act(u, x)); });
    for (Elem y = 0; y < m->order(); ++y) {
      if (idx.id(y) != idx.id(x)) continue;
      done[y] = 1;
      if (!orbit.contains(y)) {
        p.strongly_associate = false;
        p.strongly_associate_witness = m->name(x) + " ~ " + m->name(y) + " but not strong associates";
        break;
      }
    }
  }
  return p;
}

namespace {

bool unit_multiple(const ModulePtr& m, const ElementSet& units, Elem x, Elem y) {
  bool found = false;
  units.for_each([&](Elem u) { found = found || m->act(u, y) == x; });
  return found;
}

bool cong_with(const ModulePtr& m, const CyclicIndex& idx, Elem x, Elem y) {
  if (idx.id(x) != idx.id(y)) return false;
  if (x == 0 && y == 0) return true;
  for (Elem r = 0; r < m->ring()->order(); ++r)
    if (m->act(r, y) == x && !idx.units().contains(r)) return false;
  return true;
}

}  // namespace

AssociateReport relate(const ModulePtr& m, Elem x, Elem y) {
  if (x >= m->order() || y >= m->order()) throw UsageError("element outside the module");
  const CyclicIndex idx(m);
  AssociateReport rep;
  rep.sim = idx.id(x) == idx.id(y);
  rep.approx = unit_multiple(m, idx.units(), x, y);
  rep.cong = cong_with(m, idx, x, y);
  return rep;
}

PrimitivityReport primitivity(const ModulePtr& m, Elem x) {
  const FiniteRing& r = *m->ring();
  const CyclicIndex idx(m);
  PrimitivityReport rep;
  rep.primitive = rep.strongly = rep.very_strongly = true;
  for (Elem a = 0; a < r.order(); ++a)
    for (Elem f = 0; f < m->order(); ++f) {
      if (m->act(a, f) != x) continue;
      if (idx.id(x) != idx.id(f)) rep.primitive = false;
      if (!unit_multiple(m, idx.units(), x, f)) rep.strongly = false;
      if (!cong_with(m, idx, x, f)) rep.very_strongly = false;
    }
  rep.superprimitive = true;
  for (Elem b = 0; b < r.order() && rep.superprimitive; ++b) {
    const Elem bx = m->act(b, x);
    for (Elem a = 0; a < r.order() && rep.superprimitive; ++a) {
      bool hit = false;
      for (Elem f = 0; f < m->order() && !hit; ++f) hit = m->act(a, f) == bx;
      if (!hit) continue;
      bool divides = false;
      for (Elem c = 0; c < r.order() && !divides; ++c) divides = r.mul(c, a) == b;
      if (!divides) rep.superprimitive = false;
    }
  }
  const ElementSet& rx = idx.of(x).elements;
  rep.maximal_cyclic = true;
  for (Elem y = 0; y < m->order(); ++y) {
    const ElementSet& ry = idx.of(y).elements;
    if (ry.size() > rx.size() && rx.subset_of(ry)) {
      rep.maximal_cyclic = false;
      break;
    }
  }
  return rep;
}

}  // namespace ntx
