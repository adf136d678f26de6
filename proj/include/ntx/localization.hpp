#pragma once

#include <string>
#include <vector>

#include "ntx/ideals.hpp"

namespace ntx {

struct MultiplicativeSet {
  RingPtr ring;
  ElementSet elements;
  bool contains_zero() const { return elements.contains(0); }
};

/// Smallest multiplicative set containing 1 and the seed. Throws HypothesisError when 0 lands
/// in it, unless allow_zero is set.
MultiplicativeSet mult_closure(const RingPtr& r, const std::vector<Elem>& seed, bool allow_zero = false);
/// Checks that the set contains 1 and is closed under products; throws HypothesisError otherwise.
MultiplicativeSet as_multiplicative(const RingPtr& r, const ElementSet& s, bool allow_zero = false);
/// R - P for a prime P.
MultiplicativeSet prime_complement(const Ideal& p);

/// R_S by pair classes: (a,s) ~ (b,t) iff u(at - bs) = 0 for some u ∈ S.
struct LocalizedRing {
  MultiplicativeSet s;
  ElementSet kernel;              ///< {x : ux = 0 for some u ∈ S}
  std::vector<Elem> coset;        ///< element of R -> class of x/1
  std::vector<Elem> inverse;      ///< s ∈ S -> v with sv - 1 ∈ kernel
  std::vector<Elem> representative;  ///< class -> smallest x with x/1 in it
  RingPtr ring;

  const RingPtr& base() const { return s.ring; }
  /// Class of a/s.
  Elem label(Elem a, Elem s_elem) const;
  /// x ↦ x/1.
  const std::vector<Elem>& canonical() const { return coset; }
};

LocalizedRing localize(const MultiplicativeSet& s);

struct LocalizationCheck {
  bool hom_ok = true;        ///< canonical map is a ring hom
  bool units_ok = true;      ///< every s/1 is a unit
  bool count_ok = true;      ///< number of classes = |R| / |kernel|
  bool relation_ok = true;   ///< class labels agree with the pair relation
  bool sampled = false;
  std::size_t pairs_checked = 0;
  std::string witness;
  bool ok() const { return hom_ok && units_ok && count_ok && relation_ok; }
};

LocalizationCheck verify_localization(const LocalizedRing& l, std::size_t max_pair_checks = 4000000,
                                      std::uint64_t seed = 0x10ca1ULL);

/// For each hom h: R -> T inverting S there is exactly one g: R_S -> T with g∘can = h.
struct UniversalCheck {
  bool ok = true;
  std::size_t homs_inverting = 0;
  std::size_t targets = 0;
  std::string witness;
};
UniversalCheck universal_property_check(const LocalizedRing& l, const std::vector<RingPtr>& targets);

struct LocalizedModule {
  ModulePtr base;
  ElementSet kernel;          ///< {m : um = 0 for some u ∈ S}
  std::vector<Elem> coset;    ///< m -> class of m/1
  std::vector<Elem> representative;
  ModulePtr module;           ///< over the localized ring
  Elem label(const LocalizedRing& l, Elem m, Elem s_elem) const;
};

LocalizedModule localize_module(const ModulePtr& m, const LocalizedRing& l);

/// (R ⋉ M)_{S ⋉ N} against R_S ⋉ M_S.
struct ExtensionLocalization {
  ElementSet mult_set;      ///< S ⋉ N inside the flattened extension
  LocalizedRing base;       ///< R_S
  std::vector<LocalizedModule> modules;
  LocalizedRing pairs;      ///< (R ⋉ M)_{S ⋉ N} by pair classes
  LocalizationCheck base_check;
  LocalizationCheck pairs_check;
  ExtensionPtr model;       ///< R_S ⋉ M_S
  bool tilde_ok = true;     ///< s · tilde(s) = (s_0^(2^n), 0, ..., 0) for every s ∈ S ⋉ N
  bool explicit_well_defined = true;
  bool explicit_iso = false;
  bool fallback_used = false;
  bool fallback_iso = false;
  std::size_t pairs_evaluated = 0;
  bool sampled = false;
  std::string witness;
  bool ok() const {
    return base_check.ok() && pairs_check.ok() && tilde_ok && (explicit_iso || fallback_iso);
  }
};

/// Throws HypothesisError when N is not a family of submodules with N_i N_j ⊆ N_{i+j}.
ExtensionLocalization localize_extension(const NTrivialExtension& e, const MultiplicativeSet& s,
                                         const std::vector<ElementSet>& n, std::size_t max_pairs = 4000000);
/// N = M.
ExtensionLocalization localize_extension(const NTrivialExtension& e, const MultiplicativeSet& s);
/// S = R - (Z(R) ∪ Z(M_1) ∪ ... ∪ Z(M_n)), N = M.
MultiplicativeSet total_quotient_set(const NTrivialExtension& e);

}  // namespace ntx
