#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ntx/localization.hpp"

namespace ntx {

struct PropertyVerdict {
  bool holds = false;
  std::string certificate;  ///< short positive evidence
  std::string witness;      ///< counterexample when it fails
};

struct RingPropertyReport {
  std::size_t ideal_count = 0;
  PropertyVerdict noetherian;  ///< finite rings: always, with generator counts as certificate
  PropertyVerdict artinian;
  PropertyVerdict chained;     ///< ideals totally ordered
  PropertyVerdict arithmetical;  ///< every localization at a maximal ideal is chained
  PropertyVerdict pir;         ///< every ideal principal
  PropertyVerdict zpi;         ///< every proper ideal a product of primes
  PropertyVerdict pi_ring;     ///< every proper principal ideal a product of primes
};

RingPropertyReport ring_property_checks(const RingPtr& r, std::size_t max_ideals = 100000);

/// The closed-form side of each characterization over an extension.
struct ExtensionPropertyReport {
  RingPropertyReport ring;  ///< the flattened extension, decided directly
  RingPropertyReport base;  ///< R
  /// Finite generation of every M_i, and 0 ⋉ M generated by the homogeneous generators.
  bool finitely_generated = true;
  std::string generation_certificate;
  /// Chained: R a valuation domain, M_i divisible, the ladder condition, submodules of M_i chained.
  std::optional<bool> chained_conditions;
  std::vector<std::pair<std::string, bool>> chained_parts;
  std::string chained_skip;
  /// PIR / ZPI / pi-ring: base property plus M_i cyclic with Ann(M_i) a product of idempotent maximal ideals.
  bool modules_cyclic_idempotent = true;
  std::string module_condition_witness;
  bool pir_agree = true, zpi_agree = true, pi_agree = true, chained_agree = true;
};

ExtensionPropertyReport extension_property_checks(const NTrivialExtension& e, std::size_t max_ideals = 100000);

/// Ideals totally ordered by inclusion; the witness names an incomparable pair.
PropertyVerdict chained_verdict(const std::vector<Ideal>& ideals);

}  // namespace ntx
