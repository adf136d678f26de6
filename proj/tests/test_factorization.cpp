#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace ntx;

namespace {

Elem product(const FiniteRing& r, const std::vector<Elem>& xs) {
  Elem p = r.one();
  for (Elem x : xs) p = r.mul(p, x);
  return p;
}

}  // namespace

TEST(Factorization, USets) {
  auto z6 = make_zm(6);
  EXPECT_EQ(th::to_set(u_of(z6, 3)), (oracle::Set{1, 3, 5}));
  EXPECT_EQ(th::to_set(u_of(z6, 0)), (oracle::Set{0, 1, 2, 3, 4, 5}));
  EXPECT_EQ(th::to_set(u_of(make_zm(4), 1)), (oracle::Set{1, 3}));
}

TEST(Factorization, USetsMatchOracle) {
  for (const auto& r : {make_zm(12), make_zm(8), th::zm_power(4, 2)->flat(), th::zm_power(6, 1)->flat()}) {
    const auto t = th::tab_of(*r);
    const DivisibilityIndex d(r);
    for (Elem a = 0; a < r->order(); ++a) EXPECT_EQ(th::to_set(u_of(d, a)), oracle::u_of(t, static_cast<int>(a)));
  }
}

TEST(Factorization, ThreeInZ6HasUFactorizationWithUnboundedPadding) {
  const DivisibilityIndex d(make_zm(6));
  const auto fe = factor_enumerate(d, 3, 6);
  bool found = false;
  for (const auto& u : fe.u_factorizations)
    if (u.irrelevant == std::vector<Elem>{3} && u.relevant == std::vector<Elem>{3}) found = true;
  EXPECT_TRUE(found);
  UFactorization u{3, {3}, {3}};
  std::string why;
  EXPECT_TRUE(is_u_factorization(*d.ring(), u, &why)) << why;
  EXPECT_EQ(describe(*d.ring(), u), "3⌈3⌉");
  // 3 = 3·3 = 3·3·3 = ...
  EXPECT_FALSE(fe.census.bounded);
  EXPECT_FALSE(fe.census.unbounded_witness.empty());
  EXPECT_FALSE(is_u_factorization(*d.ring(), UFactorization{3, {}, {3, 3}}));
  EXPECT_FALSE(is_u_factorization(*d.ring(), UFactorization{3, {5}, {3}}));
}

TEST(Factorization, TwoInZ4IsAnAtom) {
  const DivisibilityIndex d(make_zm(4));
  const auto p = irreducibility_profile(d, 2);
  EXPECT_TRUE(p.irreducible);
  EXPECT_TRUE(p.strongly);
  EXPECT_TRUE(p.very_strongly);
  EXPECT_TRUE(p.m_irreducible);
  EXPECT_THROW(irreducibility_profile(d, 1), HypothesisError);
}

TEST(Factorization, IrreducibilityMatchesOracle) {
  for (const auto& r : {make_zm(12), make_zm(8), make_zm(6), th::zm_power(4, 2)->flat(), th::f2_f4(2)->flat()}) {
    const auto t = th::tab_of(*r);
    const DivisibilityIndex d(r);
    const auto table = irreducibility_table(d);
    for (Elem a = 0; a < r->order(); ++a) {
      if (d.is_unit(a)) continue;
      EXPECT_EQ(table[a].irreducible, oracle::irreducible(t, static_cast<int>(a))) << r->label() << " " << a;
      EXPECT_EQ(table[a].irreducible, irreducibility_profile(d, a).irreducible);
      if (table[a].very_strongly) EXPECT_TRUE(table[a].strongly);
      if (table[a].strongly) EXPECT_TRUE(table[a].irreducible);
    }
  }
}

TEST(Factorization, SquareInExtension) {
  auto e = th::zm_power(2, 2);
  const DivisibilityIndex d(e->flat());
  const Elem target = e->encode({0, 0, 1});
  const Elem x = e->encode({0, 1, 0});
  const auto fe = factor_enumerate(d, target);
  bool found = false;
  for (const auto& f : fe.factorizations) {
    EXPECT_EQ(product(*d.ring(), f.factors), target);
    if (f.factors.size() == 2 && d.sim(f.factors[0], x) && d.sim(f.factors[1], x)) found = true;
  }
  EXPECT_TRUE(found);
}

TEST(Factorization, NoIndecomposablesInTopModule) {
  const auto s = structural_predicates(*th::zm_power(2, 2));
  ASSERT_GE(s.indecomposables.size(), 3u);
  EXPECT_TRUE(s.indecomposables[2].empty());
  EXPECT_TRUE(s.ok());
}

TEST(Factorization, AtomicIffUAtomicOnF2F4F4) {
  const DivisibilityIndex d(th::f2_f4(2)->flat());
  const auto a = atomic_check(d);
  const auto u = u_atomic_check(d);
  EXPECT_EQ(a.atomic, u.u_atomic);
  EXPECT_EQ(a.atomic, oracle::atomic(oracle::f2_f4(2)));
}

TEST(Factorization, AtomicMatchesOracle) {
  for (const auto& r : {make_zm(12), make_zm(6), th::zm_power(4, 2)->flat(), th::zm_power(6, 1)->flat(),
                        th::f2_f2sq()->flat()}) {
    const DivisibilityIndex d(r);
    EXPECT_EQ(atomic_check(d).atomic, oracle::atomic(th::tab_of(*r))) << r->label();
  }
}

// Seeded: enumerations grow with max_len, the atom list never depends on it, and every
// reported factorization revalidates from the tables.
TEST(Factorization, SeededLengthMonotoneAndRevalidated) {
  oracle::Gen g(8080);
  for (const auto& r : {make_zm(12), make_zm(8), th::zm_power(4, 2)->flat(), th::zm_power(6, 1)->flat()}) {
    const DivisibilityIndex d(r);
    for (int trial = 0; trial < 6; ++trial) {
      const Elem a = static_cast<Elem>(g.uniform(1, static_cast<int>(r->order()) - 1));
      if (d.is_unit(a)) continue;
      std::size_t prev = 0;
      std::vector<Elem> atoms;
      for (std::size_t len = 1; len <= 5; ++len) {
        const auto fe = factor_enumerate(d, a, len);
        EXPECT_GE(fe.factorizations.size(), prev);
        prev = fe.factorizations.size();
        if (len == 1) atoms = fe.census.atom_list;
        EXPECT_EQ(fe.census.atom_list, atoms);
        for (const auto& f : fe.factorizations) {
          EXPECT_LE(f.factors.size(), len);
          EXPECT_EQ(product(*r, f.factors), a);
        }
        for (const auto& u : fe.u_factorizations) {
          std::string why;
          EXPECT_TRUE(is_u_factorization(*r, u, &why)) << describe(*r, u) << ": " << why;
        }
      }
    }
  }
}

TEST(Factorization, AssociateImplications) {
  for (const auto& r : {make_zm(12), th::zm_power(4, 2)->flat(), th::zm_power(6, 1)->flat()}) {
    const auto t = th::tab_of(*r);
    const DivisibilityIndex d(r);
    for (Elem x = 0; x < r->order(); ++x)
      for (Elem y = 0; y < r->order(); ++y) {
        if (d.cong(x, y)) EXPECT_TRUE(d.approx(x, y));
        if (d.approx(x, y)) EXPECT_TRUE(d.sim(x, y));
        EXPECT_EQ(d.sim(x, y), oracle::associates(t, static_cast<int>(x), static_cast<int>(y)));
      }
  }
}

TEST(Factorization, IdempotentObstruction) {
  // Z6 has the nontrivial idempotent 3, so (0, m) carries no irreducibility flag
  auto e = th::zm_power(6, 1);
  const auto units = classify(*e->flat()).units;
  std::size_t seen = 0;
  homogeneous_elements(*e).for_each([&](Elem x) {
    const Coords c = e->decode(x);
    if (x == 0 || units.contains(x) || c[0] != 0) return;
    const auto p = irreducibility_profile(*e, c);
    ASSERT_TRUE(p.idempotent_obstruction.has_value());
    EXPECT_TRUE(*p.idempotent_obstruction) << e->name(c);
    ++seen;
  });
  EXPECT_GT(seen, 0u);
}

TEST(Factorization, DivisibilitySuiteOnZ4AndZ6) {
  for (const auto& e : {th::zm_power(4, 2), th::zm_power(4, 1), th::zm_power(6, 1), th::zm_power(6, 2)}) {
    const auto recs = divisibility_suite(*e);
    for (const auto& c : recs) EXPECT_NE(c.verdict, Verdict::fail) << e->label() << " " << c.name;
    const auto* pe = th::find_record(recs, "presimplifiable_equivalence");
    ASSERT_NE(pe, nullptr);
    EXPECT_EQ(pe->verdict, Verdict::pass) << e->label();
  }
  const auto z4 = divisibility_suite(*th::zm_power(4, 2));
  const auto* lift = th::find_record(z4, "associate_lift");
  ASSERT_NE(lift, nullptr);
  EXPECT_EQ(lift->verdict, Verdict::pass);
}

TEST(Factorization, LengthsAndChainHeight) {
  const DivisibilityIndex d(make_zm(8));
  const auto l = factorization_lengths(d);
  EXPECT_TRUE(l.bounded);
  // 4 = 2·2 is the longest for 4; 2 has length 1
  ASSERT_TRUE(l.max_length[4].has_value());
  EXPECT_EQ(*l.max_length[4], 2u);
  // <0> < <4> < <2> < <1>, counted as four ideals
  EXPECT_EQ(relevant_lengths(d).chain_height, 4u);
  EXPECT_FALSE(factorization_lengths(DivisibilityIndex(make_zm(6))).bounded);
}

TEST(Factorization, ReducedSubmoduleFactorizations) {
  const auto rep = reduced_submodule_factorizations(*th::zm_power(2, 2), 2);
  EXPECT_TRUE(rep.revalidated) << rep.witness;
  EXPECT_FALSE(rep.factorizations.empty());
}
