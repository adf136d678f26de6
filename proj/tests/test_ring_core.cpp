#include <gtest/gtest.h>

#include "helpers.hpp"
#include "ntx/ideals.hpp"

using namespace ntx;

TEST(RingCore, ZmArithmetic) {
  auto z4 = make_zm(4);
  EXPECT_EQ(z4->mul(2, 2), 0u);
  EXPECT_EQ(z4->add(3, 3), 2u);
  EXPECT_EQ(z4->neg(1), 3u);
  EXPECT_EQ(z4->integer(7), 3u);
  EXPECT_EQ(z4->additive_order(2), 2u);
  EXPECT_TRUE(th::same_tables(*z4, oracle::zm(4)));
  for (int m : {2, 3, 5, 6, 8, 9, 12}) EXPECT_TRUE(th::same_tables(*make_zm(m), oracle::zm(m))) << m;
}

TEST(RingCore, ProductOfTwoFields) {
  auto z2 = make_zm(2);
  auto p = make_product({z2, z2});
  ASSERT_EQ(p->order(), 4u);
  const auto cls = classify(*p);
  // 0, 1 and the two coordinate idempotents: three nonzero idempotents
  EXPECT_EQ(cls.idempotents.size(), 4u);
  EXPECT_EQ(th::to_set(cls.idempotents), oracle::idempotents(th::tab_of(*p)));
  EXPECT_EQ(cls.zero_divisors.size(), 2u);
  EXPECT_EQ(p->factor_coords(p->from_factor_coords({1, 0})), (std::vector<Elem>{1, 0}));
}

TEST(RingCore, QuotientOfZ4ByTwoIsZ2) {
  auto z4 = make_zm(4);
  auto q = make_quotient(z4, ElementSet::of(4, {0, 2}));
  ASSERT_EQ(q->order(), 2u);
  auto iso = find_isomorphism(*q, *make_zm(2));
  EXPECT_TRUE(iso.has_value());
  EXPECT_THROW(make_quotient(z4, ElementSet::of(4, {0, 1})), AxiomError);
  EXPECT_THROW(make_quotient(z4, ElementSet::full(4)), AxiomError);
}

TEST(RingCore, ClassificationOfZ6AndZ4) {
  const auto c6 = classify(*make_zm(6));
  EXPECT_EQ(th::to_set(c6.units), (oracle::Set{1, 5}));
  EXPECT_EQ(th::to_set(c6.idempotents), (oracle::Set{0, 1, 3, 4}));
  EXPECT_EQ(th::to_set(c6.zero_divisors), (oracle::Set{2, 3, 4}));
  EXPECT_EQ(th::to_set(c6.nilpotents), (oracle::Set{0}));
  const auto c4 = classify(*make_zm(4));
  EXPECT_EQ(th::to_set(c4.nilpotents), (oracle::Set{0, 2}));
  EXPECT_EQ(th::to_set(c4.units), (oracle::Set{1, 3}));
}

TEST(RingCore, ClassificationAgreesWithOracle) {
  std::vector<RingPtr> rings{make_zm(8), make_zm(12), make_product({make_zm(2), make_zm(4)}),
                             make_galois_field(2, 2), make_truncated_poly(make_zm(3), 2),
                             make_galois_field(3, 2)};
  for (const auto& r : rings) {
    const auto t = th::tab_of(*r);
    const auto c = classify(*r);
    EXPECT_EQ(th::to_set(c.units), oracle::units(t)) << r->label();
    EXPECT_EQ(th::to_set(c.zero_divisors), oracle::zero_divisors(t)) << r->label();
    EXPECT_EQ(th::to_set(c.idempotents), oracle::idempotents(t)) << r->label();
    EXPECT_EQ(th::to_set(c.nilpotents), oracle::nilpotents(t)) << r->label();
    EXPECT_EQ(th::to_set(jacobson_by_units(*r)), oracle::jacobson(t)) << r->label();
  }
}

TEST(RingCore, GaloisFieldTables) {
  auto f4 = make_galois_field(2, 2);
  ASSERT_EQ(f4->order(), 4u);
  EXPECT_EQ(static_cast<int>(f4->one()), oracle::gf4_one);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      EXPECT_EQ(static_cast<int>(f4->mul(a, b)), oracle::gf4_mul(a, b));
      EXPECT_EQ(static_cast<int>(f4->add(a, b)), a ^ b);
    }
  EXPECT_TRUE(ring_predicates(*f4).is_field);
  EXPECT_THROW(make_galois_field(4, 1), AxiomError);
}

TEST(RingCore, Predicates) {
  const auto p4 = ring_predicates(*make_zm(4));
  EXPECT_TRUE(p4.is_presimplifiable);
  EXPECT_TRUE(p4.is_local);
  EXPECT_FALSE(p4.is_domain);
  const auto p6 = ring_predicates(*make_zm(6));
  EXPECT_FALSE(p6.is_presimplifiable);
  EXPECT_FALSE(p6.presimplifiable_witness.empty());
  // 3·3 = 3 with 3 nonzero and not a unit
  auto z6 = make_zm(6);
  EXPECT_EQ(z6->mul(3, 3), 3u);
  EXPECT_FALSE(classify(*z6).units.contains(3));
  const auto p5 = ring_predicates(*make_zm(5));
  EXPECT_TRUE(p5.is_field);
  EXPECT_TRUE(p5.is_domain);
}

TEST(RingCore, PresimplifiableMatchesDefinition) {
  for (int m = 2; m <= 30; ++m) {
    const auto t = oracle::zm(m);
    const auto u = oracle::units(t);
    bool expect = true;
    for (int a = 1; a < m && expect; ++a)
      for (int b = 0; b < m; ++b)
        if (t.times(a, b) == a && !u.count(b)) expect = false;
    EXPECT_EQ(ring_predicates(*make_zm(m)).is_presimplifiable, expect) << m;
  }
}

TEST(RingCore, TrivialAndBrokenTablesRejected) {
  EXPECT_THROW(make_zm(1), AxiomError);
  RingTables t;
  t.order = 1;
  t.add = {0};
  t.mul = {0};
  EXPECT_THROW(make_table_ring(t), AxiomError);
  // Z3 addition with a multiplication that is not distributive
  RingTables bad;
  bad.order = 3;
  bad.one = 1;
  bad.add = {0, 1, 2, 1, 2, 0, 2, 0, 1};
  bad.mul = {0, 0, 0, 0, 1, 2, 0, 2, 2};
  try {
    make_table_ring(bad);
    FAIL() << "accepted a non-ring";
  } catch (const AxiomError& e) {
    EXPECT_NE(std::string(e.what()).find("at"), std::string::npos);
  }
}

TEST(RingCore, HomomorphismsAndIsomorphisms) {
  auto z6 = make_zm(6);
  auto prod = make_product({make_zm(2), make_zm(3)});
  auto iso = find_isomorphism(*z6, *prod);
  ASSERT_TRUE(iso.has_value());
  EXPECT_TRUE(check_ring_hom(*z6, *prod, *iso).ok);
  EXPECT_TRUE(is_bijective(*iso, prod->order()));
  EXPECT_FALSE(find_isomorphism(*make_zm(4), *make_product({make_zm(2), make_zm(2)})).has_value());
  // unital homs Z4 -> Z2: only reduction
  EXPECT_EQ(enumerate_homomorphisms(*make_zm(4), *make_zm(2)).size(), 1u);
  EXPECT_EQ(enumerate_homomorphisms(*make_zm(2), *make_zm(4)).size(), 0u);
}

TEST(RingCore, TruncatedPolyMatchesOracle) {
  // R[X]/(X^3) stores (a_0, a_1, a_2) with a_0 most significant, like the oracle
  EXPECT_TRUE(th::same_tables(*make_truncated_poly(make_zm(3), 3), oracle::truncated_zm(3, 2)));
  EXPECT_TRUE(th::same_tables(*make_truncated_poly(make_zm(4), 2), oracle::truncated_zm(4, 1)));
}

// Seeded properties: ring laws on random small products of cyclic rings.
TEST(RingCore, SeededProductLaws) {
  oracle::Gen g(20261016);
  const std::vector<int> moduli{2, 3, 4, 5, 6};
  for (int trial = 0; trial < 25; ++trial) {
    const int k = g.uniform(1, 3);
    std::vector<RingPtr> fs;
    std::vector<int> radix;
    for (int i = 0; i < k; ++i) {
      const int m = g.pick(moduli);
      fs.push_back(make_zm(m));
      radix.push_back(m);
    }
    auto p = make_product(fs);
    for (int s = 0; s < 200; ++s) {
      const int a = g.uniform(0, static_cast<int>(p->order()) - 1);
      const int b = g.uniform(0, static_cast<int>(p->order()) - 1);
      auto x = oracle::digits(a, radix), y = oracle::digits(b, radix);
      std::vector<int> sum(k), prodv(k);
      for (int i = 0; i < k; ++i) {
        sum[i] = (x[i] + y[i]) % radix[i];
        prodv[i] = (x[i] * y[i]) % radix[i];
      }
      ASSERT_EQ(static_cast<int>(p->add(a, b)), oracle::undigits(sum, radix));
      ASSERT_EQ(static_cast<int>(p->mul(a, b)), oracle::undigits(prodv, radix));
    }
    // units of a product are tuples of units
    const auto c = classify(*p);
    EXPECT_EQ(th::to_set(c.units), oracle::units(th::tab_of(*p)));
  }
}

TEST(RingCore, ElementSetBasics) {
  ElementSet s(130);
  EXPECT_TRUE(s.insert(129));
  EXPECT_FALSE(s.insert(129));
  s.insert(3);
  EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(s.elements(), (std::vector<Elem>{3, 129}));
  EXPECT_EQ(s.complement().size(), 128u);
  EXPECT_TRUE(s.subset_of(ElementSet::full(130)));
  s.erase(3);
  EXPECT_EQ(s.size(), 1u);
  EXPECT_TRUE(canonical_less(ElementSet::of(130, {5}), ElementSet::of(130, {1, 2})));
}
