#include "ntx/ring_properties.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace ntx {

namespace {

// Non-owning handle for APIs that take a RingPtr.
RingPtr borrow(const FiniteRing& r) { return RingPtr(RingPtr{}, &r); }

std::string ideal_text(const Ideal& i) { return describe(i, 6); }

// Generating set found greedily in carrier order.
std::vector<Elem> module_generators(const ModulePtr& m) {
  std::vector<Elem> gens;
  ElementSet have = zero_submodule(m).elements;
  for (Elem x = 0; x < m->order(); ++x) {
    if (have.contains(x)) continue;
    gens.push_back(x);
    have = span(m, gens).elements;
  }
  return gens;
}

struct PrimeProducts {
  std::unordered_map<ElementSet, std::vector<std::size_t>, ElementSetHash> factorization;
};

// All products of primes, each with one factorization (indices into primes), found breadth first.
PrimeProducts prime_products(const std::vector<Ideal>& primes, std::size_t max_length) {
  PrimeProducts out;
  std::vector<std::pair<Ideal, std::vector<std::size_t>>> frontier;
  for (std::size_t i = 0; i < primes.size(); ++i)
    if (out.factorization.emplace(primes[i].elements, std::vector<std::size_t>{i}).second)
      frontier.push_back({primes[i], {i}});
  for (std::size_t len = 2; len <= max_length && !frontier.empty(); ++len) {
    std::vector<std::pair<Ideal, std::vector<std::size_t>>> next;
    for (const auto& [ideal, fac] : frontier)
      for (std::size_t i = fac.back(); i < primes.size(); ++i) {
        Ideal p = ideal_product(ideal, primes[i]);
        auto f = fac;
        f.push_back(i);
        if (out.factorization.emplace(p.elements, f).second) next.push_back({std::move(p), std::move(f)});
      }
    frontier = std::move(next);
  }
  return out;
}

std::string factor_text(const std::vector<std::size_t>& f, const std::vector<Ideal>& primes) {
  std::vector<std::string> parts;
  for (std::size_t i : f) {
    std::vector<std::string> gens;
    for (Elem g : primes[i].generators) gens.push_back(primes[i].ambient->name(g));
    parts.push_back("<" + join(gens, ",") + ">");
  }
  return join(parts, "");
}

}  // namespace

RingPredicates ring_predicates(const FiniteRing& r) {
  RingPredicates p;
  const RingClassification c = classify(r);
  p.is_domain = c.zero_divisors.empty();
  p.is_field = c.units.size() + 1 == r.order();
  const RingPtr self = borrow(r);
  p.is_local = spectrum(self).maximals.size() == 1;
  const ModulePredicates m = module_predicates(make_regular_module(self));
  p.is_presimplifiable = m.is_presimplifiable;
  p.presimplifiable_witness = m.presimplifiable_witness;
  p.is_strongly_associate = m.strongly_associate;
  p.strongly_associate_witness = m.strongly_associate_witness;
  return p;
}

PropertyVerdict chained_verdict(const std::vector<Ideal>& ideals) {
  PropertyVerdict v{true, "", ""};
  for (std::size_t i = 0; i < ideals.size() && v.holds; ++i)
    for (std::size_t j = i + 1; j < ideals.size() && v.holds; ++j)
      if (!ideals[i].elements.subset_of(ideals[j].elements) && !ideals[j].elements.subset_of(ideals[i].elements)) {
        v.holds = false;
        v.witness = ideal_text(ideals[i]) + " and " + ideal_text(ideals[j]) + " are incomparable";
      }
  if (v.holds) v.certificate = "chain of " + std::to_string(ideals.size()) + " ideals";
  return v;
}

RingPropertyReport ring_property_checks(const RingPtr& r, std::size_t max_ideals) {
  RingPropertyReport rep;
  const Spectrum sp = spectrum(r, max_ideals);
  rep.ideal_count = sp.ideals.size();
  rep.noetherian = {true, "finite ring: " + std::to_string(sp.ideals.size()) + " ideals, every chain stabilizes", ""};
  rep.artinian = rep.noetherian;
  rep.chained = chained_verdict(sp.ideals);

  rep.arithmetical.holds = true;
  for (const auto& m : sp.maximals) {
    const LocalizedRing l = localize(prime_complement(m));
    const PropertyVerdict c = chained_verdict(enumerate_ideals(l.ring, max_ideals));
    if (!c.holds) {
      rep.arithmetical.holds = false;
      rep.arithmetical.witness = "localization at " + ideal_text(m) + ": " + c.witness;
      break;
    }
  }
  if (rep.arithmetical.holds)
    rep.arithmetical.certificate = "chained at all " + std::to_string(sp.maximals.size()) + " maximal ideals";

  // PIR: each ideal equals some principal ideal.
  std::unordered_map<ElementSet, Elem, ElementSetHash> principal_of;
  for (Elem x = 0; x < r->order(); ++x) principal_of.emplace(principal(r, x).elements, x);
  rep.pir.holds = true;
  for (const auto& i : sp.ideals)
    if (!principal_of.count(i.elements)) {
      rep.pir.holds = false;
      rep.pir.witness = ideal_text(i) + " is not principal";
      break;
    }
  if (rep.pir.holds) rep.pir.certificate = std::to_string(sp.ideals.size()) + " ideals, all principal";

  const PrimeProducts pp = prime_products(sp.primes, sp.ideals.size());
  rep.zpi.holds = true;
  rep.pi_ring.holds = true;
  std::size_t proper = 0, proper_principal = 0;
  for (const auto& i : sp.ideals) {
    if (!i.proper()) continue;
    ++proper;
    const bool is_principal = principal_of.count(i.elements) > 0;
    proper_principal += is_principal;
    if (pp.factorization.count(i.elements)) continue;
    if (rep.zpi.holds) {
      rep.zpi.holds = false;
      rep.zpi.witness = ideal_text(i) + " is not a product of primes";
    }
    if (is_principal && rep.pi_ring.holds) {
      rep.pi_ring.holds = false;
      rep.pi_ring.witness = ideal_text(i) + " is not a product of primes";
    }
  }
  auto certificate = [&](bool principal_only) {
    std::vector<std::string> parts;
    for (const auto& i : sp.ideals) {
      if (!i.proper() || (principal_only && !principal_of.count(i.elements))) continue;
      if (parts.size() == 6) {
        parts.push_back("...");
        break;
      }
      parts.push_back(ideal_text(i) + " = " + factor_text(pp.factorization.at(i.elements), sp.primes));
    }
    return join(parts, "; ");
  };
  if (rep.zpi.holds) rep.zpi.certificate = std::to_string(proper) + " proper ideals factored: " + certificate(false);
  if (rep.pi_ring.holds)
    rep.pi_ring.certificate = std::to_string(proper_principal) + " proper principal ideals factored: " + certificate(true);
  return rep;
}

ExtensionPropertyReport extension_property_checks(const NTrivialExtension& e, std::size_t max_ideals) {
  ExtensionPropertyReport out;
  out.ring = ring_property_checks(e.flat(), max_ideals);
  out.base = ring_property_checks(e.ring(), max_ideals);
  const RingPtr& r = e.ring();
  const int n = e.n();

  // 0 ⋉ M is generated by the homogeneous images of generators of each M_i.
  {
    std::vector<std::string> parts;
    std::vector<Elem> gens;
    for (int i = 1; i <= n; ++i) {
      const ModulePtr& m = e.module(i);
      const auto g = module_generators(m);
      parts.push_back("M_" + std::to_string(i) + ": " + std::to_string(g.size()) + " generators");
      for (Elem x : g) gens.push_back(e.encode(e.homogeneous(i, x)));
    }
    std::vector<ElementSet> full;
    for (int i = 1; i <= n; ++i) full.push_back(ElementSet::full(e.component_order(i)));
    ElementSet zero(r->order());
    zero.insert(0);
    out.finitely_generated = generate(e.flat(), gens).elements == ext_box(e, zero, full);
    out.generation_certificate = join(parts, ", ");
  }

  bool some_nonzero = false;
  for (int i = 1; i <= n; ++i) some_nonzero = some_nonzero || !e.module(i)->is_zero();
  if (n < 2) {
    out.chained_skip = "needs n >= 2";
  } else if (!some_nonzero) {
    out.chained_skip = "every M_i is zero";
  } else {
    const RingPredicates rp = ring_predicates(*r);
    const bool valuation = rp.is_domain && out.base.chained.holds;
    bool divisible = true, ladder = true, sub_chained = true;
    for (int i = 1; i <= n; ++i) {
      divisible = divisible && module_predicates(e.module(i)).divisible;
      const auto subs = enumerate_submodules(e.module(i));
      for (std::size_t a = 0; a < subs.size(); ++a)
        for (std::size_t b = a + 1; b < subs.size(); ++b)
          if (!subs[a].elements.subset_of(subs[b].elements) && !subs[b].elements.subset_of(subs[a].elements))
            sub_chained = false;
    }
    // Read with i < j and e ≠ 0: for i = j or e = 0 the literal statement can never hold.
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        if (e.module(i)->is_zero() || e.module(j)->is_zero()) continue;
        if (e.module(j - i)->is_zero()) {
          ladder = false;
          continue;
        }
        for (Elem x = 1; x < e.component_order(j - i); ++x) {
          ElementSet img(e.component_order(j));
          for (Elem y = 0; y < e.component_order(i); ++y) img.insert(e.comp_mul(j - i, x, i, y));
          if (img.size() != e.component_order(j)) ladder = false;
        }
      }
    out.chained_parts = {{"R is a valuation domain", valuation},
                         {"every M_i is divisible", divisible},
                         {"e M_i = M_j for nonzero e in M_{j-i}", ladder},
                         {"submodules of each M_i are chained", sub_chained}};
    out.chained_conditions = valuation && divisible && ladder && sub_chained;
    out.chained_agree = *out.chained_conditions == out.ring.chained.holds;
  }

  // Idempotent maximal ideals of R and all their products (empty product = R).
  const Spectrum sp = spectrum(r, max_ideals);
  std::vector<Ideal> idem;
  for (const auto& m : sp.maximals)
    if (ideal_product(m, m) == m) idem.push_back(m);
  std::vector<ElementSet> products{ElementSet::full(r->order())};
  for (std::size_t mask = 1; mask < (std::size_t{1} << idem.size()); ++mask) {
    Ideal p = unit_ideal(r);
    for (std::size_t k = 0; k < idem.size(); ++k)
      if (mask & (std::size_t{1} << k)) p = ideal_product(p, idem[k]);
    products.push_back(p.elements);
  }
  for (int i = 1; i <= n && out.modules_cyclic_idempotent; ++i) {
    const ModulePtr& m = e.module(i);
    if (m->is_zero()) continue;
    const ModulePredicates mp = module_predicates(m);
    const ElementSet ann = annihilator(m);
    const bool ann_ok = std::find(products.begin(), products.end(), ann) != products.end();
    if (!mp.is_cyclic || !ann_ok) {
      out.modules_cyclic_idempotent = false;
      out.module_condition_witness = "M_" + std::to_string(i) +
                                     (mp.is_cyclic ? " has annihilator outside the products of idempotent maximal ideals"
                                                   : " is not cyclic");
    }
  }
  out.pir_agree = out.ring.pir.holds == (out.base.pir.holds && out.modules_cyclic_idempotent);
  out.zpi_agree = out.ring.zpi.holds == (out.base.zpi.holds && out.modules_cyclic_idempotent);
  out.pi_agree = out.ring.pi_ring.holds == (out.base.pi_ring.holds && out.modules_cyclic_idempotent);
  return out;
}

}  // namespace ntx
