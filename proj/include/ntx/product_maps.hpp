#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ntx/module.hpp"

namespace ntx {

enum class MapOrigin { explicit_tables, structure_constants, algebra, zero, truncated };

std::string to_string(MapOrigin o);

/// Counterexample to one of the family laws. Indices and elements are carrier indices.
struct MapWitness {
  std::string law;  ///< "additive-left", "additive-right", "homogeneous", "symmetric", "associative"
  int i = 0, j = 0, k = 0;
  Elem a = 0, b = 0, c = 0;
  Elem lhs = 0, rhs = 0;
  std::string text;
};

struct ValidationReport {
  bool bilinear_ok = true;
  bool symmetric_ok = true;
  bool associative_ok = true;
  std::vector<MapWitness> witnesses;
};

/// Maps phi_{i,j}: M_i x M_j -> M_{i+j} for i, j >= 1 and i + j <= n.
class ProductMapFamily {
 public:
  using Table = std::vector<Elem>;

  ProductMapFamily(RingPtr ring, std::vector<ModulePtr> modules, std::map<std::pair<int, int>, Table> tables,
                   MapOrigin origin);

  int n() const { return static_cast<int>(modules_.size()); }
  const RingPtr& ring() const { return ring_; }
  /// M_i for 1 <= i <= n.
  const ModulePtr& module(int i) const { return modules_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<ModulePtr>& modules() const { return modules_; }
  Elem apply(int i, int j, Elem a, Elem b) const {
    return tables_[static_cast<std::size_t>(i * (n() + 1) + j)][a * module(j)->order() + b];
  }
  const Table& table(int i, int j) const { return tables_[static_cast<std::size_t>(i * (n() + 1) + j)]; }
  MapOrigin origin() const { return origin_; }
  /// r_{i,j} = phi_{i,j}(g_i, g_j) when built from structure constants.
  const std::map<std::pair<int, int>, Elem>& constants() const { return constants_; }
  /// phi_{i,j} replaced by the zero map whenever i + j >= boundary.
  ProductMapFamily truncated(int boundary) const;

  ValidationReport validate(std::size_t max_witnesses = 8) const;

 private:
  friend ProductMapFamily family_structure_constants(const RingPtr&, const std::vector<ModulePtr>&,
                                                     const std::map<std::pair<int, int>, Elem>&);
  RingPtr ring_;
  std::vector<ModulePtr> modules_;
  std::vector<Table> tables_;
  MapOrigin origin_;
  std::map<std::pair<int, int>, Elem> constants_;
};

/// Every admissible (i, j), in increasing lexicographic order.
std::vector<std::pair<int, int>> admissible_pairs(int n);

ProductMapFamily family_explicit(const RingPtr& r, const std::vector<ModulePtr>& modules,
                                 std::map<std::pair<int, int>, ProductMapFamily::Table> tables);
ProductMapFamily family_zero(const RingPtr& r, const std::vector<ModulePtr>& modules);
/// Each M_i cyclic with a declared generator g_i; phi(a g_i, b g_j) = ab r_{i,j} g_{i+j}.
/// Throws AxiomError when a constant is missing or the rule is not well defined.
ProductMapFamily family_structure_constants(const RingPtr& r, const std::vector<ModulePtr>& modules,
                                            const std::map<std::pair<int, int>, Elem>& constants);
/// R ⋉ R ⋉ ... ⋉ R with ring multiplication throughout.
ProductMapFamily family_ring_multiplication(const RingPtr& r, int n);
/// M_i embedded in an R-algebra T by injective maps emb_i; products computed in T.
ProductMapFamily family_algebra(const RingPtr& r, const RingPtr& t, const std::vector<ModulePtr>& modules,
                                const std::vector<std::vector<Elem>>& embeddings);
/// M_i = R^k as a scalar module over R = Z/m; products coordinatewise.
ProductMapFamily family_componentwise(const RingPtr& r, const std::vector<ModulePtr>& modules);
/// R ⋉ R ⋉ ... ⋉ R ⋉ M: ring multiplication for i + j < n, zero maps at i + j = n.
ProductMapFamily family_polynomial_tail(const RingPtr& r, int n, const ModulePtr& m);
/// R ⋉ T/J_1 ⋉ ... ⋉ T/J_n for ideals J_1 ⊆ ... ⊆ J_n of an R-algebra T (structure map hom).
ProductMapFamily family_quotient_tower(const RingPtr& r, const RingPtr& t, const std::vector<Elem>& hom,
                                       const std::vector<ElementSet>& ideals);
/// R ⋉ N_1 ⋉ ... ⋉ N_{n-1} ⋉ Ra: N_i ideals of R, Ra cyclic with generator a;
/// ring products for i + j < n and n_i n_j = (n_i n_j)·a at i + j = n.
ProductMapFamily family_ideal_chain(const RingPtr& r, const std::vector<ElementSet>& ideals, const ModulePtr& top);

}  // namespace ntx
