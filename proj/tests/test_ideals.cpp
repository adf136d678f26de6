#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace ntx;

TEST(Ideals, SumIntersectionProductColonInZ12) {
  auto r = make_zm(12);
  const auto i4 = principal(r, 4), i6 = principal(r, 6);
  EXPECT_EQ(ideal_sum(i4, i6), principal(r, 2));
  EXPECT_EQ(ideal_intersect(i4, i6), zero_ideal(r));
  EXPECT_EQ(ideal_product(i4, i6), zero_ideal(r));
  // 6x ∈ <4> forces x even
  EXPECT_EQ(ideal_colon(i4, i6), principal(r, 2));
  EXPECT_EQ(ideal_radical(i4), principal(r, 2));
  EXPECT_EQ(ideal_radical(zero_ideal(r)), principal(r, 6));
  EXPECT_EQ(generate(r, {4, 6}), principal(r, 2));
}

TEST(Ideals, PrimeMaximalRadicalPredicates) {
  auto r = make_zm(12);
  EXPECT_TRUE(is_prime(principal(r, 2)));
  EXPECT_TRUE(is_maximal(principal(r, 3)));
  EXPECT_FALSE(is_prime(principal(r, 4)));
  EXPECT_TRUE(is_radical(principal(r, 6)));
  EXPECT_FALSE(is_radical(principal(r, 4)));
  EXPECT_FALSE(unit_ideal(r).proper());
  EXPECT_THROW(ideal_from_set(r, ElementSet::of(12, {0, 5})), AxiomError);
}

TEST(Ideals, EnumerationMatchesOracle) {
  std::vector<RingPtr> rings{make_zm(12), make_zm(8), make_product({make_zm(2), make_zm(2), make_zm(3)}),
                             th::zm_power(4, 2)->flat(), th::zm_power(6, 1)->flat(), th::f2_f4(2)->flat(),
                             th::f2_f2sq()->flat()};
  for (const auto& r : rings) {
    const auto t = th::tab_of(*r);
    const auto lib = enumerate_ideals(r);
    EXPECT_EQ(th::to_sets(lib), oracle::ideals(t)) << r->label();
    // canonical order: sizes never decrease
    for (std::size_t i = 1; i < lib.size(); ++i) EXPECT_LE(lib[i - 1].size(), lib[i].size());
    const auto sp = spectrum(r);
    std::set<oracle::Set> primes, maxes;
    for (const auto& s : oracle::ideals(t))
      if (oracle::is_prime(t, s)) primes.insert(s);
    EXPECT_EQ(th::to_sets(sp.primes), primes) << r->label();
    EXPECT_EQ(th::to_sets(sp.maximals), oracle::maximal_ideals(t)) << r->label();
    EXPECT_EQ(th::to_set(sp.nilradical.elements), oracle::nilpotents(t)) << r->label();
    EXPECT_EQ(th::to_set(sp.jacobson.elements), oracle::jacobson(t)) << r->label();
  }
}

TEST(Ideals, RadicalOfDegreeZeroPrincipal) {
  auto e = th::zm_power(4, 2);
  auto s = e->flat();
  const auto rad = ideal_radical(principal(s, e->encode({2, 0, 0})));
  EXPECT_EQ(rad.size(), 32u);
  rad.elements.for_each([&](Elem x) { EXPECT_EQ(e->decode(x)[0] % 2, 0u); });
}

TEST(Ideals, Z12CubeHasTwoPrimes) {
  auto e = th::zm_power(12, 2);
  const auto sp = spectrum(e->flat());
  EXPECT_EQ(sp.primes.size(), 2u);
  EXPECT_EQ(sp.maximals.size(), 2u);
  EXPECT_EQ(sp.krull_dimension, 0u);
  for (const auto& fc : extension_spectrum_checks(*e)) EXPECT_TRUE(fc.ok) << fc.name;
}

TEST(Ideals, F2F4F4IsLocalWithMaximalZeroTimesM) {
  auto e = th::f2_f4(2);
  const auto sp = spectrum(e->flat());
  ASSERT_EQ(sp.maximals.size(), 1u);
  EXPECT_EQ(sp.maximals[0].size(), 16u);
  sp.maximals[0].elements.for_each([&](Elem x) { EXPECT_EQ(e->decode(x)[0], 0u); });
}

TEST(Ideals, NilradicalOfZ6TimesZ6) {
  auto e = th::zm_power(6, 1);
  const auto sp = spectrum(e->flat());
  EXPECT_EQ(sp.nilradical.size(), 6u);
  sp.nilradical.elements.for_each([&](Elem x) { EXPECT_EQ(e->decode(x)[0], 0u); });
}

TEST(Ideals, ClosedFormChecksPassOnTestExtensions) {
  for (const auto& e : {th::zm_power(4, 2), th::zm_power(6, 1), th::f2_f4(2), th::f2_f2sq()})
    for (const auto& fc : extension_spectrum_checks(*e)) {
      EXPECT_TRUE(fc.ok) << e->label() << ": " << fc.name;
      for (const auto& w : fc.witnesses) ADD_FAILURE() << w;
    }
}

TEST(Ideals, ExtensionOfIdeal) {
  auto e = th::zm_power(4, 1);
  const auto ext = extension_of_ideal(*e, ElementSet::of(4, {0, 2}));
  // 2Z4 x| 2Z4
  EXPECT_EQ(ext.size(), 4u);
  EXPECT_TRUE(is_ideal(*e->flat(), ext));
  EXPECT_EQ(ideal_times_module(e->module(1), ElementSet::of(4, {0, 2})).size(), 2u);
}

TEST(Ideals, EnumerationCap) { EXPECT_THROW(enumerate_ideals(th::zm_power(4, 2)->flat(), 3), CapExceeded); }

// Seeded: ideal arithmetic laws on random ideal pairs.
TEST(Ideals, SeededLatticeLaws) {
  oracle::Gen g(99);
  for (const auto& r : {make_zm(24), th::zm_power(4, 2)->flat(), th::f2_f4(2)->flat()}) {
    const auto all = enumerate_ideals(r);
    for (int k = 0; k < 60; ++k) {
      const auto& a = all[static_cast<std::size_t>(g.uniform(0, static_cast<int>(all.size()) - 1))];
      const auto& b = all[static_cast<std::size_t>(g.uniform(0, static_cast<int>(all.size()) - 1))];
      const auto prod = ideal_product(a, b), inter = ideal_intersect(a, b);
      EXPECT_TRUE(prod.elements.subset_of(inter.elements));
      EXPECT_TRUE(ideal_colon(a, b).elements.contains(0));
      // (a : b) b ⊆ a
      EXPECT_TRUE(ideal_product(ideal_colon(a, b), b).elements.subset_of(a.elements));
      EXPECT_EQ(ideal_radical(ideal_radical(a)), ideal_radical(a));
      EXPECT_EQ(ideal_radical(inter), ideal_intersect(ideal_radical(a), ideal_radical(b)));
    }
  }
}
