#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ntx/ideals.hpp"

namespace ntx {

/// Candidate decomposition K ⋉ N_1 ⋉ ... ⋉ N_n.
struct HomogeneousData {
  ElementSet k;
  std::vector<ElementSet> n;  ///< n[i-1] ⊆ M_i
};

/// K M_i ⊆ N_i and N_i M_j ⊆ N_{i+j}; the condition for K ⋉ N to be an ideal.
bool is_ideal_data(const NTrivialExtension& e, const HomogeneousData& d);
ElementSet box(const NTrivialExtension& e, const HomogeneousData& d);
/// "K x| N_1 x| ... x| N_n" with full and zero parts abbreviated.
std::string describe_data(const NTrivialExtension& e, const HomogeneousData& d);
/// K = Pi_0(J), N_i = Pi_i(J).
HomogeneousData hull(const NTrivialExtension& e, const ElementSet& j);

struct HomogeneityReport {
  bool is_homogeneous = false;
  bool contained_in_hull = false;
  HomogeneousData hull;
  std::size_t ideal_size = 0;
  std::size_t hull_size = 0;
  /// For principal ideals: J equals aR ⋉ (Rm_1 + aM_1) ⋉ ... and the two verdicts coincide.
  std::optional<bool> principal_form_equal;
  std::optional<bool> principal_form_consistent;
  std::string witness;  ///< element of the hull outside J
};

HomogeneityReport homogeneity(const NTrivialExtension& e, const Ideal& j);
HomogeneityReport homogeneity_principal(const NTrivialExtension& e, const Coords& generator);
/// The explicit form aR ⋉ (Rm_1 + aM_1) ⋉ ... ⋉ (Rm_n + aM_n + sum_{i+j=n} m_i M_j).
ElementSet principal_explicit_form(const NTrivialExtension& e, const Coords& g);

/// Submodule of M_{i+j} generated by the products A·B, A ⊆ M_i, B ⊆ M_j (M_0 = R).
ElementSet component_product(const NTrivialExtension& e, int i, const ElementSet& a, int j, const ElementSet& b);
/// Additive closure inside M_k (M_0 = R).
ElementSet component_span(const NTrivialExtension& e, int k, const ElementSet& gens);

struct ArithmeticReport {
  std::size_t homogeneous_ideals = 0;
  std::size_t pairs = 0;
  bool sum_ok = true, intersection_ok = true, product_ok = true, colon_ok = true;
  bool radical_ok = true;  ///< over every ideal, not only homogeneous ones
  std::size_t ideals_for_radical = 0;
  std::vector<std::string> witnesses;
  bool ok() const { return sum_ok && intersection_ok && product_ok && colon_ok && radical_ok; }
};

ArithmeticReport homogeneous_arith_check(const NTrivialExtension& e, std::size_t max_ideals = 100000);

/// Which ideals a class check ranges over.
struct ClassSelector {
  enum class Kind { pi0_meets, pi0_meets_ann, regular, pi0_zero, pi_prefix_zero, all } kind;
  std::vector<Elem> s;  ///< for pi0_meets / pi0_meets_ann
  int j = 1;            ///< for pi_prefix_zero
};

std::optional<ClassSelector> parse_selector(const std::string& text, const FiniteRing& r);
std::string to_string(const ClassSelector& c);

struct ClassCheck {
  std::string selector;
  bool hypotheses_ok = true;
  std::string reason;  ///< why the hypotheses fail
  std::size_t class_size = 0;
  bool side_a = false;            ///< every ideal of the class is homogeneous
  bool side_a_principal = false;  ///< every principal ideal of the class is homogeneous
  bool side_b = false;            ///< module-theoretic condition
  /// A further equivalent clause (ideal form, comparability, or the global condition), when the statement has one.
  std::optional<bool> side_c;
  std::string side_c_name;
  std::vector<std::string> witnesses;
  std::vector<std::pair<std::string, std::string>> facts;
  bool agree() const {
    return side_a == side_b && side_a == side_a_principal && (!side_c || *side_c == side_a);
  }
};

ClassCheck homogeneity_class_check(const NTrivialExtension& e, const ClassSelector& sel,
                                   std::size_t max_ideals = 100000);

/// M_i is j-integral: a product of j nonzero elements of M_i is nonzero (ij <= n).
bool j_integral(const NTrivialExtension& e, int i, int j);

}  // namespace ntx
