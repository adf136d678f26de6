#pragma once

#include <string>
#include <vector>

#include "ntx/extension.hpp"

namespace ntx {

struct Ideal {
  RingPtr ambient;
  std::vector<Elem> generators;
  ElementSet elements;

  bool contains(Elem x) const { return elements.contains(x); }
  std::size_t size() const { return elements.size(); }
  bool proper() const { return !elements.contains(ambient->one()); }
  friend bool operator==(const Ideal& a, const Ideal& b) { return a.elements == b.elements; }
  friend bool operator!=(const Ideal& a, const Ideal& b) { return !(a == b); }
};

bool is_ideal(const FiniteRing& r, const ElementSet& s);

Ideal principal(const RingPtr& r, Elem a);
Ideal generate(const RingPtr& r, const std::vector<Elem>& gens);
Ideal zero_ideal(const RingPtr& r);
Ideal unit_ideal(const RingPtr& r);
/// Wraps a closed set; throws AxiomError if it is not an ideal.
Ideal ideal_from_set(const RingPtr& r, const ElementSet& s);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_intersect(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
/// (a : b) = {x : xb ⊆ a}.
Ideal ideal_colon(const Ideal& a, const Ideal& b);
/// {x : x^k ∈ a for some k}.
Ideal ideal_radical(const Ideal& a);

bool is_prime(const Ideal& p);
bool is_maximal(const Ideal& m);
bool is_radical(const Ideal& a);

/// Every ideal exactly once, canonical order (size, then elements). Throws CapExceeded.
std::vector<Ideal> enumerate_ideals(const RingPtr& r, std::size_t max_ideals = 100000);

struct Spectrum {
  std::vector<Ideal> ideals;
  std::vector<Ideal> primes;
  std::vector<Ideal> maximals;
  std::vector<Ideal> radicals;
  Ideal nilradical;
  Ideal jacobson;
  std::size_t krull_dimension = 0;
};

Spectrum spectrum(const RingPtr& r, std::size_t max_ideals = 100000);

/// Subsets of the extension carrier of the shape S ⋉ N_1 ⋉ ... ⋉ N_n.
ElementSet ext_box(const NTrivialExtension& e, const ElementSet& base, const std::vector<ElementSet>& parts);
/// I ⋉ IM_1 ⋉ ... ⋉ IM_n.
ElementSet extension_of_ideal(const NTrivialExtension& e, const ElementSet& ideal);
/// I·M_i as a set.
ElementSet ideal_times_module(const ModulePtr& m, const ElementSet& ideal);

struct FormCheck {
  std::string name;
  bool ok = true;
  std::vector<std::string> witnesses;
  std::vector<std::pair<std::string, std::string>> facts;
};

/// Spectrum of the flattened extension compared with closed forms over R.
std::vector<FormCheck> extension_spectrum_checks(const NTrivialExtension& e, std::size_t max_ideals = 100000);

std::string describe(const Ideal& i, std::size_t max_listed = 12);

}  // namespace ntx
