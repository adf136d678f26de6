#pragma once

#include <set>
#include <string>
#include <vector>

#include "ntx/factorization.hpp"
#include "ntx/homogeneity.hpp"
#include "ntx/localization.hpp"
#include "oracles.hpp"

namespace th {

inline oracle::Set to_set(const ntx::ElementSet& s) {
  oracle::Set out;
  s.for_each([&](ntx::Elem e) { out.insert(static_cast<int>(e)); });
  return out;
}

inline std::set<oracle::Set> to_sets(const std::vector<ntx::Ideal>& v) {
  std::set<oracle::Set> out;
  for (const auto& i : v) out.insert(to_set(i.elements));
  return out;
}

inline ntx::ElementSet from_set(std::size_t universe, const oracle::Set& s) {
  ntx::ElementSet out(universe);
  for (int x : s) out.insert(static_cast<ntx::Elem>(x));
  return out;
}

/// The library ring's tables copied into the oracle form.
inline oracle::Tab tab_of(const ntx::FiniteRing& r) {
  oracle::Tab t;
  t.n = static_cast<int>(r.order());
  t.one = static_cast<int>(r.one());
  for (ntx::Elem x : r.add_table()) t.add.push_back(static_cast<int>(x));
  for (ntx::Elem x : r.mul_table()) t.mul.push_back(static_cast<int>(x));
  return t;
}

/// True when the library tables agree entry by entry with an independently built oracle ring.
inline bool same_tables(const ntx::FiniteRing& r, const oracle::Tab& t) {
  if (static_cast<int>(r.order()) != t.n || static_cast<int>(r.one()) != t.one) return false;
  for (int a = 0; a < t.n; ++a)
    for (int b = 0; b < t.n; ++b)
      if (static_cast<int>(r.add(a, b)) != t.plus(a, b) || static_cast<int>(r.mul(a, b)) != t.times(a, b))
        return false;
  return true;
}

/// Z_m x|_n Z_m x| ... x| Z_m with ring multiplication.
inline ntx::ExtensionPtr zm_power(int m, int n) {
  return ntx::make_extension(ntx::family_ring_multiplication(ntx::make_zm(m), n));
}

/// F2 x|_n F4 x| ... x| F4.
inline ntx::ExtensionPtr f2_f4(int n) {
  auto r = ntx::make_zm(2);
  auto t = ntx::make_galois_field(2, 2);
  auto h = ntx::canonical_hom_from_zm(r, t);
  std::vector<ntx::ModulePtr> mods;
  for (int i = 0; i < n; ++i) mods.push_back(ntx::make_algebra_module(r, t, h));
  std::vector<ntx::Elem> id(t->order());
  for (std::size_t x = 0; x < id.size(); ++x) id[x] = static_cast<ntx::Elem>(x);
  return ntx::make_extension(
      ntx::family_algebra(r, t, mods, std::vector<std::vector<ntx::Elem>>(static_cast<std::size_t>(n), id)));
}

/// F2 x|_2 F2^2 x| F2^2 with coordinatewise products.
inline ntx::ExtensionPtr f2_f2sq() {
  auto r = ntx::make_zm(2);
  std::vector<ntx::ModulePtr> mods{ntx::make_scalar_module(r, {2, 2}), ntx::make_scalar_module(r, {2, 2})};
  return ntx::make_extension(ntx::family_componentwise(r, mods));
}

inline const ntx::CheckRecord* find_record(const std::vector<ntx::CheckRecord>& v, const std::string& name) {
  for (const auto& c : v)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace th
