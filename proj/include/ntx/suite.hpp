#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ntx/factorization.hpp"
#include "ntx/homogeneity.hpp"
#include "ntx/localization.hpp"
#include "ntx/report.hpp"
#include "ntx/ring_properties.hpp"

namespace ntx {

struct SuiteOptions {
  std::size_t max_ideals = 100000;
  /// Elements whose squares and tilde products are written into the report.
  std::vector<Coords> recorded;
  /// Multiplicative set for the localization check; defaults to the total quotient set.
  std::optional<MultiplicativeSet> mult_set;
  std::string mult_set_name;
  /// Ideal classes for the homogeneity checks; empty means the default selection.
  std::vector<std::pair<std::string, ClassSelector>> classes;
  /// Check filter by base name (the part before ':'); empty runs everything.
  std::vector<std::string> only;
  bool wants(const std::string& name) const;
};

/// Every suite check name in execution order. Per-class homogeneity records use "homogeneity_class:<class>".
const std::vector<std::string>& suite_check_names();
bool is_suite_check(const std::string& base_name);

/// Refusal record for an exploratory extension, carrying a nonassociativity or noncommutativity witness.
std::optional<CheckRecord> exploratory_refusal(const NTrivialExtension& e);

std::vector<CheckRecord> structure_checks(const NTrivialExtension& e, const SuiteOptions& o);
std::vector<CheckRecord> localization_checks(const NTrivialExtension& e, const SuiteOptions& o);
std::vector<CheckRecord> spectrum_checks(const NTrivialExtension& e, const SuiteOptions& o);
std::vector<CheckRecord> homogeneity_checks(const NTrivialExtension& e, const SuiteOptions& o);
std::vector<CheckRecord> property_checks(const NTrivialExtension& e, const SuiteOptions& o);
/// divisibility_suite filtered by the options.
std::vector<CheckRecord> divisibility_checks(const NTrivialExtension& e, const SuiteOptions& o);

/// All of the above in fixed order.
std::vector<CheckRecord> run_suite(const NTrivialExtension& e, const SuiteOptions& o);

/// Default ideal classes: regular, pi0_zero, pi_prefix_zero(j) for 1 <= j < n, and all when R is a field.
std::vector<std::pair<std::string, ClassSelector>> default_classes(const NTrivialExtension& e);

}  // namespace ntx
