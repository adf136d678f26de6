#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace ntx;

TEST(Localization, Closures) {
  auto z12 = make_zm(12);
  EXPECT_EQ(th::to_set(mult_closure(z12, {2}).elements), (oracle::Set{1, 2, 4, 8}));
  EXPECT_EQ(th::to_set(mult_closure(z12, {1}).elements), (oracle::Set{1}));
  EXPECT_THROW(mult_closure(z12, {}), UsageError);
  EXPECT_EQ(th::to_set(mult_closure(make_zm(6), {5}).elements), (oracle::Set{1, 5}));
  EXPECT_THROW(mult_closure(z12, {6}), HypothesisError);
  EXPECT_TRUE(mult_closure(z12, {6}, true).contains_zero());
  EXPECT_THROW(as_multiplicative(z12, ElementSet::of(12, {1, 2})), HypothesisError);
}

TEST(Localization, Z12AtPowersOfTwoIsZ3) {
  auto z12 = make_zm(12);
  const auto l = localize(mult_closure(z12, {2}));
  ASSERT_EQ(l.ring->order(), 3u);
  EXPECT_TRUE(find_isomorphism(*l.ring, *make_zm(3)).has_value());
  EXPECT_EQ(th::to_set(l.kernel), (oracle::Set{0, 3, 6, 9}));
  EXPECT_TRUE(verify_localization(l).ok());
  // 1/2 times 2/1 is 1
  EXPECT_EQ(l.ring->mul(l.label(1, 2), l.coset[2]), l.ring->one());
}

TEST(Localization, TrivialSetIsIdentity) {
  auto z12 = make_zm(12);
  const auto l = localize(mult_closure(z12, {1}));
  EXPECT_EQ(l.ring->order(), 12u);
  EXPECT_EQ(l.kernel.size(), 1u);
  EXPECT_TRUE(check_ring_hom(*z12, *l.ring, l.coset).ok);
  EXPECT_TRUE(is_bijective(l.coset, 12));
}

TEST(Localization, AtAPrimeIsLocal) {
  auto z12 = make_zm(12);
  for (Elem p : {2u, 3u}) {
    const auto l = localize(prime_complement(principal(z12, p)));
    EXPECT_TRUE(ring_predicates(*l.ring).is_local) << p;
  }
  EXPECT_EQ(localize(prime_complement(principal(z12, 2))).ring->order(), 4u);
  EXPECT_EQ(localize(prime_complement(principal(z12, 3))).ring->order(), 3u);
}

TEST(Localization, SizesMatchPairOracle) {
  oracle::Gen g(555);
  std::vector<RingPtr> rings{make_zm(12), make_zm(18), make_zm(8), th::zm_power(6, 1)->flat(),
                             make_product({make_zm(2), make_zm(4)})};
  for (const auto& r : rings) {
    const auto t = th::tab_of(*r);
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<Elem> seed{static_cast<Elem>(g.uniform(1, static_cast<int>(r->order()) - 1))};
      MultiplicativeSet s;
      try {
        s = mult_closure(r, seed);
      } catch (const HypothesisError&) {
        continue;
      }
      const auto l = localize(s);
      EXPECT_EQ(static_cast<int>(l.ring->order()), oracle::localization_size(t, th::to_set(s.elements)))
          << r->label() << " seed " << seed[0];
      // |R_S| = |R| / |kernel|
      EXPECT_EQ(l.ring->order() * l.kernel.size(), r->order());
      EXPECT_TRUE(verify_localization(l).ok());
    }
  }
}

TEST(Localization, UniversalProperty) {
  auto z12 = make_zm(12);
  const auto l = localize(mult_closure(z12, {2}));
  const auto u = universal_property_check(l, {make_zm(2), make_zm(3), make_zm(4), make_zm(6), make_zm(12)});
  EXPECT_TRUE(u.ok) << u.witness;
  // only reduction Z12 -> Z3 inverts 2 among these targets
  EXPECT_EQ(u.homs_inverting, 1u);
}

TEST(Localization, ExtensionTheoremOnZ12Cube) {
  auto e = th::zm_power(12, 2);
  const auto s = mult_closure(e->ring(), {2});
  const auto loc = localize_extension(*e, s);
  EXPECT_TRUE(loc.ok()) << loc.witness;
  EXPECT_TRUE(loc.explicit_iso);
  EXPECT_TRUE(loc.tilde_ok);
  EXPECT_EQ(loc.base.ring->order(), 3u);
  EXPECT_EQ(loc.pairs.ring->order(), 27u);
  EXPECT_EQ(loc.model->order(), 27u);
}

TEST(Localization, TotalQuotientSet) {
  auto e = th::zm_power(6, 1);
  const auto s = total_quotient_set(*e);
  EXPECT_EQ(th::to_set(s.elements), (oracle::Set{1, 5}));
  const auto loc = localize_extension(*e, s);
  EXPECT_TRUE(loc.ok());
  EXPECT_EQ(loc.pairs.ring->order(), 36u);
}

TEST(Localization, ModuleLocalization) {
  auto z12 = make_zm(12);
  const auto l = localize(mult_closure(z12, {3}));
  const auto lm = localize_module(make_regular_module(z12), l);
  EXPECT_EQ(lm.module->order(), l.ring->order());
  EXPECT_EQ(lm.module->order(), 4u);
}
