#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "ntx/product_maps.hpp"

namespace ntx {

enum class Strictness { strict, exploratory };

/// Tuple (m_0, ..., m_n) with m_0 in R and m_i in M_i, as carrier indices.
using Coords = std::vector<Elem>;

/// R ⋉_n M_1 ⋉ ... ⋉ M_n.
class NTrivialExtension {
 public:
  explicit NTrivialExtension(ProductMapFamily family, Strictness strictness = Strictness::strict);

  int n() const { return family_.n(); }
  const RingPtr& ring() const { return family_.ring(); }
  const ModulePtr& module(int i) const { return family_.module(i); }
  const ProductMapFamily& family() const { return family_; }
  Strictness strictness() const { return strictness_; }
  const ValidationReport& report() const { return report_; }
  const std::vector<std::string>& warnings() const { return warnings_; }
  std::string label() const;

  /// |M_i|, with M_0 = R.
  std::size_t component_order(int i) const { return sizes_[static_cast<std::size_t>(i)]; }
  std::size_t order() const { return order_; }

  /// Mixed radix, m_0 most significant.
  Elem encode(const Coords& c) const;
  Coords decode(Elem e) const;

  Elem comp_add(int i, Elem a, Elem b) const;
  Elem comp_neg(int i, Elem a) const;
  /// a ∈ M_i, b ∈ M_j, i + j <= n; the product in M_{i+j} (M_0 = R acts).
  Elem comp_mul(int i, Elem a, int j, Elem b) const;

  Coords zero() const { return Coords(static_cast<std::size_t>(n() + 1), 0); }
  Coords one() const;
  Coords add(const Coords& x, const Coords& y) const;
  Coords neg(const Coords& x) const;
  /// Convolution: (xy)_k = sum over i + j = k of x_i y_j.
  Coords mul(const Coords& x, const Coords& y) const;
  /// m placed at coordinate i, zero elsewhere.
  Coords homogeneous(int i, Elem m) const;

  std::string name(const Coords& c) const;
  /// Comma separated coordinates, each an element name or carrier index.
  std::optional<Coords> parse(const std::string& text) const;

  /// The extension as a FiniteRing on {0..order-1}; strict mode only. Built once.
  const RingPtr& flat() const;

  struct Triple {
    Coords a, b, c;
    Coords lhs, rhs;
  };
  /// A homogeneous triple with (ab)c != a(bc), when one exists.
  std::optional<Triple> nonassociative_witness() const;
  /// Homogeneous (a, b) with ab != ba.
  std::optional<std::pair<Coords, Coords>> noncommutative_witness() const;

 private:
  void require_strict(const char* what) const;

  ProductMapFamily family_;
  Strictness strictness_;
  ValidationReport report_;
  std::vector<std::string> warnings_;
  std::vector<std::size_t> sizes_;
  std::size_t order_ = 1;
  mutable std::once_flag flat_once_;
  mutable RingPtr flat_;
};

using ExtensionPtr = std::shared_ptr<const NTrivialExtension>;

ExtensionPtr make_extension(ProductMapFamily family, Strictness strictness = Strictness::strict);
/// Same modules and maps with only M_1..M_m kept.
ProductMapFamily restrict_family(const ProductMapFamily& f, int m);

/// Upper triangular Toeplitz matrix; entry (r, c) for c >= r is the degree c - r coordinate.
struct ToeplitzMatrix {
  int size = 0;
  /// entries[r][c]: nullopt below the diagonal.
  std::vector<std::vector<std::optional<Elem>>> entries;
  bool is_toeplitz() const;
};

ToeplitzMatrix matrix_view(const NTrivialExtension& e, const Coords& x);
/// Formal product with entry products delegated to the action and the maps.
ToeplitzMatrix matrix_product(const NTrivialExtension& e, const ToeplitzMatrix& a, const ToeplitzMatrix& b);

struct MatrixCheck {
  bool ok = true;
  std::size_t pairs_checked = 0;
  std::string witness;
};
MatrixCheck matrix_check(const NTrivialExtension& e, std::size_t max_pairs = 1u << 22);

enum class GradingKind { n0_truncated, z_mod, gamma };
std::string to_string(GradingKind k);

struct GradingMonoid {
  GradingKind kind;
  int n;
  /// Degree of a product of degrees a and b; nullopt means the product is forced to be 0.
  std::optional<int> combine(int a, int b) const;
};

struct GradingReport {
  GradingKind kind;
  bool monoid_ok = true;
  bool products_ok = true;
  std::size_t homogeneous_count = 0;  ///< includes 0
  std::string witness;
};

GradingReport grading_check(const NTrivialExtension& e, GradingKind kind);
/// Elements with at most one nonzero coordinate.
ElementSet homogeneous_elements(const NTrivialExtension& e);

struct HomCheck {
  std::string name;
  std::vector<Elem> table;
  bool ok = false;
  std::string witness;
  std::size_t kernel_size = 0;
};

/// pi_m: truncation onto R ⋉_m M_1 ⋉ ... ⋉ M_m (pi_0 onto R); checked to be a surjective ring hom.
HomCheck check_pi(const NTrivialExtension& e, int m);
/// Pi_i: coordinate i; ring hom for i = 0, R-module hom otherwise.
HomCheck check_big_pi(const NTrivialExtension& e, int i);
/// iota: r ↦ (r, 0, ..., 0); checked to be an injective ring hom.
HomCheck check_iota(const NTrivialExtension& e);

/// The factor built by successive negation: f_k = (c_0, 0, .., -c_k, .., 0), c ← c f_k.
Coords tilde(const NTrivialExtension& e, const Coords& x);

struct SetComparison {
  std::string name;
  ElementSet closed_form;
  ElementSet brute_force;
  bool agree() const { return closed_form == brute_force; }
  /// Smallest element in the symmetric difference.
  std::optional<Elem> offending() const;
};

struct ExtensionClassification {
  std::vector<SetComparison> sets;  ///< units, zero_divisors, idempotents, nilradical, jacobson
  bool all_agree() const;
};

ExtensionClassification classify_extension(const NTrivialExtension& e);

struct IsoCheck {
  bool ok = false;
  std::string witness;
  std::vector<Elem> map;
  std::size_t table_entries_checked = 0;
};

/// (a_0, ..., a_n) ↦ a_0 + a_1 X + ... + a_n X^n onto R[X]/(X^{n+1}).
IsoCheck poly_iso(const NTrivialExtension& e);
/// R = R_1 x ... x R_k: compare with the product of R_j ⋉ e_j M_1 ⋉ ... ⋉ e_j M_n.
IsoCheck product_iso(const NTrivialExtension& e);
/// Component extensions R_j ⋉ e_j M; R must be built as a product.
std::vector<ExtensionPtr> product_components(const NTrivialExtension& e);

}  // namespace ntx
