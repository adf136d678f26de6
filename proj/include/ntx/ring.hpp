#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ntx/common.hpp"

namespace ntx {

struct ValidationOptions {
  /// Orders above this are spot-checked on random triples instead of exhaustively.
  std::size_t exhaustive_cap = 4096;
  std::size_t samples = 200000;
  std::uint64_t seed = 0x5eed5eedULL;
  /// Skip validation; only for constructions whose axioms are established elsewhere.
  bool trusted = false;
};

struct RingTables {
  std::size_t order = 0;
  std::vector<Elem> add;
  std::vector<Elem> mul;
  Elem one = 0;
  std::string label;
  std::vector<std::string> names;
};

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

/// Commutative ring with identity on the carrier {0..order-1}, zero = 0.
class FiniteRing {
 public:
  explicit FiniteRing(RingTables t, const ValidationOptions& opts = {});

  std::size_t order() const { return order_; }
  Elem zero() const { return 0; }
  Elem one() const { return one_; }
  Elem add(Elem a, Elem b) const { return add_[a * order_ + b]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * order_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg_[b]); }
  Elem pow(Elem a, std::uint64_t k) const;
  /// k·1 for an integer k >= 0.
  Elem integer(std::uint64_t k) const;
  std::size_t additive_order(Elem a) const;

  const std::string& label() const { return label_; }
  const std::string& name(Elem a) const { return names_[a]; }
  /// Parses an element by its printed name or by its carrier index.
  std::optional<Elem> parse(const std::string& text) const;

  /// Modulus m when built as Z/m, else 0.
  int modulus() const { return modulus_; }
  /// Factor rings when built as a direct product (declared order, first factor most significant).
  const std::vector<RingPtr>& factors() const { return factors_; }
  std::vector<Elem> factor_coords(Elem a) const;
  Elem from_factor_coords(const std::vector<Elem>& c) const;

  const std::vector<std::string>& warnings() const { return warnings_; }
  const std::vector<Elem>& add_table() const { return add_; }
  const std::vector<Elem>& mul_table() const { return mul_; }

 private:
  friend RingPtr make_zm(int, const ValidationOptions&);
  friend RingPtr make_product(const std::vector<RingPtr>&, const ValidationOptions&);
  void validate(const ValidationOptions& opts);

  std::size_t order_ = 0;
  Elem one_ = 0;
  std::vector<Elem> add_, mul_, neg_;
  std::string label_;
  std::vector<std::string> names_;
  int modulus_ = 0;
  std::vector<RingPtr> factors_;
  std::vector<std::string> warnings_;
};

RingPtr make_zm(int m, const ValidationOptions& opts = {});
RingPtr make_product(const std::vector<RingPtr>& factors, const ValidationOptions& opts = {});
/// R/I; throws AxiomError if I is not a proper ideal.
RingPtr make_quotient(const RingPtr& r, const ElementSet& ideal, const ValidationOptions& opts = {});
/// R[X]/(f) for monic f = X^d + c_{d-1}X^{d-1} + ... + c_0, given low = (c_0..c_{d-1}).
/// Elements are coefficient tuples (a_0..a_{d-1}), a_0 most significant in the index.
RingPtr make_poly_quotient(const RingPtr& base, const std::vector<Elem>& low, const ValidationOptions& opts = {});
/// R[X]/(X^d).
RingPtr make_truncated_poly(const RingPtr& base, int d, const ValidationOptions& opts = {});
/// GF(p^k) as Z/p[X]/(f) with the lexicographically first monic irreducible f.
RingPtr make_galois_field(int p, int k);
RingPtr make_table_ring(RingTables t, const ValidationOptions& opts = {});

struct RingClassification {
  ElementSet units;
  ElementSet zero_divisors;  ///< x != 0 with xy = 0 for some y != 0
  ElementSet idempotents;
  ElementSet nilpotents;
};

RingClassification classify(const FiniteRing& r);

/// x with x·y = 0 only for y = 0 (0 itself excluded).
ElementSet regular_elements(const FiniteRing& r);
/// {x : 1 - xy is a unit for every y}.
ElementSet jacobson_by_units(const FiniteRing& r);

struct RingPredicates {
  bool is_domain = false;
  bool is_field = false;
  bool is_local = false;
  bool is_presimplifiable = false;
  bool is_strongly_associate = false;
  std::string presimplifiable_witness;
  std::string strongly_associate_witness;
};

RingPredicates ring_predicates(const FiniteRing& r);

// Maps between rings, given as index tables A -> B.
struct MapCheck {
  bool ok = true;
  std::string witness;
};

MapCheck check_ring_hom(const FiniteRing& a, const FiniteRing& b, const std::vector<Elem>& f,
                        bool unital = true);
bool is_bijective(const std::vector<Elem>& f, std::size_t codomain);
/// Greedy additive generating set, starting with 1.
std::vector<Elem> additive_generators(const FiniteRing& r);
/// All unital ring homomorphisms A -> B.
std::vector<std::vector<Elem>> enumerate_homomorphisms(const FiniteRing& a, const FiniteRing& b);
/// Exhaustive search; throws CapExceeded above max_order.
std::optional<std::vector<Elem>> find_isomorphism(const FiniteRing& a, const FiniteRing& b,
                                                  std::size_t max_order = 256);

}  // namespace ntx
