#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ntx/ring.hpp"

namespace ntx {

struct ModuleTables {
  std::size_t order = 0;
  std::vector<Elem> add;   ///< order x order
  std::vector<Elem> act;   ///< |R| x order, act[r * order + m] = r·m
  std::vector<int> invariant_factors;
  std::string label;
  std::vector<std::string> names;
  std::optional<Elem> generator;
};

class FiniteModule;
using ModulePtr = std::shared_ptr<const FiniteModule>;

/// Unitary module over a FiniteRing; carrier {0..order-1} with 0 the zero vector.
class FiniteModule {
 public:
  FiniteModule(RingPtr ring, ModuleTables t, const ValidationOptions& opts = {});

  const RingPtr& ring() const { return ring_; }
  std::size_t order() const { return order_; }
  bool is_zero() const { return order_ == 1; }
  Elem add(Elem a, Elem b) const { return add_[a * order_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg_[b]); }
  Elem act(Elem r, Elem m) const { return act_[r * order_ + m]; }

  const std::string& label() const { return label_; }
  const std::string& name(Elem m) const { return names_[m]; }
  std::optional<Elem> parse(const std::string& text) const;
  const std::vector<int>& invariant_factors() const { return invariant_factors_; }
  /// Designated cyclic generator, when one was declared.
  std::optional<Elem> generator() const { return generator_; }
  const std::vector<Elem>& add_table() const { return add_; }
  const std::vector<Elem>& act_table() const { return act_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  void validate(const ValidationOptions& opts);

  RingPtr ring_;
  std::size_t order_ = 0;
  std::vector<Elem> add_, neg_, act_;
  std::vector<int> invariant_factors_;
  std::string label_;
  std::vector<std::string> names_;
  std::optional<Elem> generator_;
  std::vector<std::string> warnings_;
};

/// R acting on itself.
ModulePtr make_regular_module(const RingPtr& r);
/// Z_{d1} x ... x Z_{dk} (first factor most significant) with a given action table.
ModulePtr make_explicit_module(const RingPtr& r, const std::vector<int>& factors, std::vector<Elem> action);
/// Z_{d1} x ... x Z_{dk} where r acts as the integer k with r = k·1. Needs R additively cyclic.
ModulePtr make_scalar_module(const RingPtr& r, const std::vector<int>& factors);
ModulePtr make_direct_sum(const std::vector<ModulePtr>& parts);
/// T as an R-module through a ring homomorphism h: R -> T.
ModulePtr make_algebra_module(const RingPtr& r, const RingPtr& t, const std::vector<Elem>& hom);
/// k ↦ k·1_T for R = Z/m; throws if that is not a ring homomorphism.
std::vector<Elem> canonical_hom_from_zm(const RingPtr& r, const RingPtr& t);
ModulePtr make_zero_module(const RingPtr& r);
ModulePtr make_table_module(const RingPtr& r, ModuleTables t, const ValidationOptions& opts = {});

struct Submodule {
  ModulePtr module;
  std::vector<Elem> generators;
  ElementSet elements;

  bool contains(Elem m) const { return elements.contains(m); }
  std::size_t size() const { return elements.size(); }
  friend bool operator==(const Submodule& a, const Submodule& b) { return a.elements == b.elements; }
};

Submodule cyclic(const ModulePtr& m, Elem x);
Submodule span(const ModulePtr& m, const std::vector<Elem>& gens);
Submodule zero_submodule(const ModulePtr& m);
Submodule whole(const ModulePtr& m);
Submodule sum(const Submodule& a, const Submodule& b);
Submodule intersect(const Submodule& a, const Submodule& b);
/// Every submodule exactly once, canonical order. Throws CapExceeded above max_order.
std::vector<Submodule> enumerate_submodules(const ModulePtr& m, std::size_t max_order = 256);
/// Maximal elements of the poset of cyclic submodules that contain Rx.
std::vector<Submodule> maximal_cyclic_over(const ModulePtr& m, Elem x);
/// Submodule given as its own module (carrier indices renumbered in increasing order).
struct SubmoduleAsModule {
  ModulePtr module;
  std::vector<Elem> embed;  ///< new index -> old index
};
SubmoduleAsModule submodule_as_module(const Submodule& s);
/// Restriction of scalars along a surjective ring hom f: S -> R (ring of M); S acts by f(s)·m.
ModulePtr restrict_scalars(const ModulePtr& m, const RingPtr& s, const std::vector<Elem>& f);
/// A ring R with an ideal-stable subset N of M: the R-module rN for idempotent r, acting via a
/// ring Re ≅ R_j (used for product decompositions). Builds the module over `sub` where
/// `lift[x]` is the element of R that x ∈ sub corresponds to.
ModulePtr corner_module(const ModulePtr& m, Elem idempotent, const RingPtr& sub, const std::vector<Elem>& lift);

ElementSet annihilator(const ModulePtr& m, Elem x);
ElementSet annihilator(const ModulePtr& m);
/// {r : rm = 0 for some m != 0}.
ElementSet zero_divisors_on(const ModulePtr& m);
/// sM as a set.
ElementSet scaled(const ModulePtr& m, Elem s);

struct ModulePredicates {
  ElementSet zero_divisors;
  bool is_presimplifiable = false;
  std::string presimplifiable_witness;
  bool divisible = false;  ///< sM = M for every regular s
  std::string divisible_witness;
  bool torsion_free = false;  ///< rm = 0 forces r = 0 or m = 0
  bool is_cyclic = false;
  bool strongly_associate = false;
  std::string strongly_associate_witness;
};

ModulePredicates module_predicates(const ModulePtr& m);
bool saturated_by(const ModulePtr& m, Elem s);
/// First (r, m) with rm = m, m != 0, r not a unit.
std::optional<std::pair<Elem, Elem>> presimplifiable_counterexample(const ModulePtr& m);

struct AssociateReport {
  bool sim = false;     ///< Rx = Ry
  bool approx = false;  ///< x = uy for a unit u
  bool cong = false;    ///< x ~ y and (x = y = 0 or x = ry forces r a unit)
};

AssociateReport relate(const ModulePtr& m, Elem x, Elem y);

struct PrimitivityReport {
  bool primitive = false;
  bool strongly = false;
  bool very_strongly = false;
  bool superprimitive = false;
  bool maximal_cyclic = false;  ///< Rx is a maximal cyclic submodule
};

PrimitivityReport primitivity(const ModulePtr& m, Elem x);

/// Precomputed principal data used by the relation and primitivity scans.
class CyclicIndex {
 public:
  explicit CyclicIndex(const ModulePtr& m);
  const Submodule& of(Elem x) const { return cyclics_[x]; }
  /// Canonical id of Rx: equal ids ⇔ equal cyclic submodules.
  std::size_t id(Elem x) const { return ids_[x]; }
  const ElementSet& units() const { return units_; }

 private:
  std::vector<Submodule> cyclics_;
  std::vector<std::size_t> ids_;
  ElementSet units_;
};

}  // namespace ntx
