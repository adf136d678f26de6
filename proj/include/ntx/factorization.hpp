#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ntx/homogeneity.hpp"
#include "ntx/report.hpp"
#include "ntx/ring_properties.hpp"

namespace ntx {

/// Principal ideals, units and associate relations of a ring, precomputed once.
class DivisibilityIndex {
 public:
  explicit DivisibilityIndex(RingPtr r, std::size_t max_order = 4096);

  const RingPtr& ring() const { return ring_; }
  std::size_t order() const { return ring_->order(); }
  const ElementSet& units() const { return units_; }
  bool is_unit(Elem x) const { return units_.contains(x); }
  /// ⟨x⟩.
  const ElementSet& principal(Elem x) const { return ideals_[ideal_id_[x]]; }
  /// Equal ids ⇔ equal principal ideals.
  std::size_t ideal_id(Elem x) const { return ideal_id_[x]; }
  std::size_t ideal_count() const { return ideals_.size(); }
  const ElementSet& ideal(std::size_t id) const { return ideals_[id]; }
  bool divides(Elem d, Elem a) const { return principal(d).contains(a); }

  bool sim(Elem x, Elem y) const { return ideal_id_[x] == ideal_id_[y]; }
  /// x = uy for a unit u.
  bool approx(Elem x, Elem y) const { return orbit_[x] == orbit_[y]; }
  /// x ~ y and (x = y = 0 or x = ry forces r a unit).
  bool cong(Elem x, Elem y) const;
  AssociateReport relation(Elem x, Elem y) const { return {sim(x, y), approx(x, y), cong(x, y)}; }

  /// r ∈ U(a) ⇔ r⟨a⟩ = ⟨a⟩.
  bool in_u(Elem r, Elem a) const { return ideal_id_[ring_->mul(r, a)] == ideal_id_[a]; }
  /// Smallest element associate to x.
  Elem representative(Elem x) const { return rep_[ideal_id_[x]]; }
  /// Smallest element of each associate class of nonunits, increasing.
  const std::vector<Elem>& nonunit_classes() const { return nonunit_reps_; }
  /// Members of the associate class of x.
  const std::vector<Elem>& class_members(Elem x) const { return members_[ideal_id_[x]]; }

 private:
  RingPtr ring_;
  ElementSet units_;
  std::vector<ElementSet> ideals_;
  std::vector<std::size_t> ideal_id_;
  std::vector<Elem> rep_;
  std::vector<std::vector<Elem>> members_;
  std::vector<Elem> nonunit_reps_;
  std::vector<std::size_t> orbit_;
  std::vector<ElementSet> nonunit_multiples_;  ///< y -> {ry : r a nonunit}
};

/// {r : r⟨a⟩ = ⟨a⟩}.
ElementSet u_of(const DivisibilityIndex& d, Elem a);
ElementSet u_of(const RingPtr& r, Elem a);

struct IrreducibilityProfile {
  bool irreducible = false;
  bool strongly = false;
  bool very_strongly = false;
  bool m_irreducible = false;  ///< ⟨a⟩ maximal among proper principal ideals
  std::string witness;         ///< a = bc with neither factor associate to a
  /// Homogeneous element of an extension whose R has a nontrivial idempotent: true iff all flags are false.
  std::optional<bool> idempotent_obstruction;
  bool all_false() const { return !irreducible && !strongly && !very_strongly && !m_irreducible; }
};

/// Throws HypothesisError for a unit.
IrreducibilityProfile irreducibility_profile(const DivisibilityIndex& d, Elem a);
/// Profile in the flattened extension, with the idempotent obstruction asserted for homogeneous elements.
IrreducibilityProfile irreducibility_profile(const NTrivialExtension& e, const Coords& a);
/// Profiles of every element in one pass over the multiplication table; units get all-false entries.
std::vector<IrreducibilityProfile> irreducibility_table(const DivisibilityIndex& d);

struct StructuralReport {
  bool presimplifiable = false;
  std::string presimplifiable_witness;
  std::vector<bool> component_presimplifiable;  ///< index 0 is R
  bool presimplifiable_agree = true;            ///< extension ⇔ R and every M_i
  bool strongly_associate = false;
  std::string strongly_associate_witness;
  std::vector<bool> component_strongly_associate;
  bool strongly_associate_implication = true;  ///< extension strongly associate ⇒ R and every M_i
  /// R, M_1..M_{n-1} présimplifiable: extension strongly associate ⇔ M_n strongly associate.
  std::optional<bool> strongly_associate_agree;
  std::vector<std::optional<bool>> phi_integral;  ///< index i >= 2
  std::vector<std::string> phi_integral_witness;
  std::vector<std::pair<int, bool>> m1_j_integral;  ///< (k, M_1 k-integral) for k = 2..n
  std::vector<std::vector<Elem>> indecomposables;    ///< index i >= 2
  bool multiplications_nontrivial = true;            ///< every φ_{j,k} with j + k <= n is nonzero
  bool ok() const {
    return presimplifiable_agree && strongly_associate_implication && strongly_associate_agree.value_or(true);
  }
};

StructuralReport structural_predicates(const NTrivialExtension& e);

/// Realizing elements, one per factor, in increasing class order.
struct Factorization {
  std::vector<Elem> factors;
};

struct UFactorization {
  Elem target = 0;
  std::vector<Elem> irrelevant;
  std::vector<Elem> relevant;
};

/// Checks the defining conditions directly from the ring tables.
bool is_u_factorization(const FiniteRing& r, const UFactorization& u, std::string* why = nullptr);
std::string describe(const FiniteRing& r, const UFactorization& u);
std::string describe(const FiniteRing& r, const Factorization& f);

struct FactorCensus {
  std::vector<Elem> atom_list;  ///< representatives of atom classes dividing the target
  std::size_t nonassociate_divisor_count = 0;
  std::size_t relevant_factor_class_count = 0;
  std::size_t max_factorization_length_observed = 0;
  bool bounded = true;  ///< false when some factor lies in U of the rest, so padding never ends
  std::string unbounded_witness;
};

struct FactorEnumeration {
  Elem target = 0;
  std::size_t max_len = 0;
  std::vector<Factorization> factorizations;
  std::vector<UFactorization> u_factorizations;
  FactorCensus census;
};

/// Factorizations into nonunits up to order and associates, with length <= max_len (0: ring order).
/// Throws HypothesisError unless a is a nonzero nonunit, CapExceeded past max_results.
FactorEnumeration factor_enumerate(const DivisibilityIndex& d, Elem a, std::size_t max_len = 0,
                                   std::size_t max_results = 200000);

/// Every nonzero nonunit is a product of atoms.
struct AtomicReport {
  bool atomic = true;
  std::size_t atoms = 0;
  std::size_t max_atoms_needed = 0;
  std::string witness;
};
AtomicReport atomic_check(const DivisibilityIndex& d);

/// Every nonzero nonunit has a U-factorization whose relevant factors are atoms.
struct UAtomicReport {
  bool u_atomic = true;
  std::size_t relevant_tuples = 0;
  std::string witness;
};
UAtomicReport u_atomic_check(const DivisibilityIndex& d);

/// Longest factorization length per element, from the eventually periodic sets of k-fold products.
struct LengthReport {
  std::vector<std::optional<std::size_t>> max_length;  ///< nonzero nonunits only; nullopt: unbounded
  bool bounded = true;
  std::size_t bound = 0;  ///< largest finite length seen
  std::string witness;
};
LengthReport factorization_lengths(const DivisibilityIndex& d);
/// Same for h = a_1 ... a_{s-1} h_s in a module, a_i nonunits of R.
LengthReport module_factorization_lengths(const ModulePtr& m);

/// Longest relevant part b_1..b_t of any U-factorization of a nonzero element.
struct RelevantLengthReport {
  std::size_t max_relevant = 0;
  std::size_t chain_height = 0;  ///< longest strict chain of principal ideals
  std::size_t tuples = 0;
};
RelevantLengthReport relevant_lengths(const DivisibilityIndex& d);

/// Reduced submodule factorization R d_1 ... d_s of a cyclic submodule of M_i, factors drawn from
/// M_0..M_n with index sum i; degree 0 factors are nonunits of R. Stored up to order and associates.
struct ReducedSubmoduleFactorization {
  std::vector<std::pair<int, Elem>> factors;  ///< (index, representative)
  Elem product = 0;                           ///< in M_i
};
struct ReducedSubmoduleReport {
  int i = 0;
  std::vector<ReducedSubmoduleFactorization> factorizations;
  std::size_t max_length = 0;
  std::size_t cyclic_targets = 0;  ///< distinct nonzero cyclic submodules reached
  bool revalidated = true;
  std::string witness;
};
ReducedSubmoduleReport reduced_submodule_factorizations(const NTrivialExtension& e, int i,
                                                        std::size_t max_results = 200000);
std::string describe(const NTrivialExtension& e, const ReducedSubmoduleFactorization& f);

/// The divisibility theorems on one extension, hypotheses first; skipped checks are never failures.
std::vector<CheckRecord> divisibility_suite(const NTrivialExtension& e);

}  // namespace ntx
