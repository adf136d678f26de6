#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace ntx;

namespace {

const SetComparison& set_named(const ExtensionClassification& c, const std::string& name) {
  for (const auto& s : c.sets)
    if (s.name == name) return s;
  throw std::runtime_error("no set " + name);
}

}  // namespace

TEST(Extension, FlatTablesMatchOracles) {
  EXPECT_TRUE(th::same_tables(*th::zm_power(4, 2)->flat(), oracle::truncated_zm(4, 2)));
  EXPECT_TRUE(th::same_tables(*th::zm_power(6, 1)->flat(), oracle::truncated_zm(6, 1)));
  EXPECT_TRUE(th::same_tables(*th::zm_power(3, 3)->flat(), oracle::truncated_zm(3, 3)));
  EXPECT_TRUE(th::same_tables(*th::f2_f4(2)->flat(), oracle::f2_f4(2)));
  EXPECT_TRUE(th::same_tables(*th::f2_f2sq()->flat(), oracle::f2_f2sq()));
}

TEST(Extension, WorkedSquares) {
  auto e = th::zm_power(4, 2);
  EXPECT_EQ(e->mul({2, 1, 2}, {2, 1, 2}), (Coords{0, 0, 1}));
  EXPECT_EQ(e->mul({0, 1, 0}, {0, 1, 0}), (Coords{0, 0, 1}));
  EXPECT_EQ(e->name(e->mul({2, 1, 2}, {2, 1, 2})), "(0,0,1)");
}

TEST(Extension, EncodingRoundTrip) {
  auto e = th::zm_power(4, 2);
  EXPECT_EQ(e->order(), 64u);
  EXPECT_EQ(e->encode({1, 2, 3}), 1u * 16 + 2 * 4 + 3);
  for (Elem x = 0; x < e->order(); ++x) EXPECT_EQ(e->encode(e->decode(x)), x);
  EXPECT_EQ(e->one(), (Coords{1, 0, 0}));
  auto parsed = e->parse("2,1,2");
  ASSERT_TRUE(parsed.has_value());
  EXPECT_EQ(*parsed, (Coords{2, 1, 2}));
  EXPECT_FALSE(e->parse("2,1").has_value());
}

TEST(Extension, ClassificationCounts) {
  const auto c = classify_extension(*th::zm_power(4, 2));
  EXPECT_TRUE(c.all_agree());
  EXPECT_EQ(set_named(c, "units").closed_form.size(), 32u);
  EXPECT_EQ(set_named(c, "nilradical").closed_form.size(), 32u);
  const auto c6 = classify_extension(*th::zm_power(6, 1));
  EXPECT_TRUE(c6.all_agree());
  // idempotents of Z6 x| Z6 are (e, 0)
  EXPECT_EQ(th::to_set(set_named(c6, "idempotents").closed_form), (oracle::Set{0, 6, 18, 24}));
}

TEST(Extension, ClassificationAgreesWithOracle) {
  struct Case {
    ExtensionPtr e;
    oracle::Tab t;
  };
  for (const auto& [e, t] : std::vector<Case>{{th::zm_power(4, 2), oracle::truncated_zm(4, 2)},
                                              {th::zm_power(6, 1), oracle::truncated_zm(6, 1)},
                                              {th::f2_f4(2), oracle::f2_f4(2)},
                                              {th::f2_f2sq(), oracle::f2_f2sq()}}) {
    const auto c = classify_extension(*e);
    EXPECT_EQ(th::to_set(set_named(c, "units").closed_form), oracle::units(t)) << e->label();
    EXPECT_EQ(th::to_set(set_named(c, "zero_divisors").closed_form), oracle::zero_divisors(t)) << e->label();
    EXPECT_EQ(th::to_set(set_named(c, "idempotents").closed_form), oracle::idempotents(t)) << e->label();
    EXPECT_EQ(th::to_set(set_named(c, "nilradical").closed_form), oracle::nilpotents(t)) << e->label();
    EXPECT_EQ(th::to_set(set_named(c, "jacobson").closed_form), oracle::jacobson(t)) << e->label();
  }
}

TEST(Extension, CanonicalHoms) {
  auto e = th::zm_power(4, 2);
  for (int m = 0; m <= 2; ++m) {
    const auto h = check_pi(*e, m);
    EXPECT_TRUE(h.ok) << h.name << " " << h.witness;
  }
  EXPECT_EQ(check_pi(*e, 0).kernel_size, 16u);
  for (int i = 0; i <= 2; ++i) EXPECT_TRUE(check_big_pi(*e, i).ok);
  const auto iota = check_iota(*e);
  EXPECT_TRUE(iota.ok);
  EXPECT_EQ(iota.table[3], e->encode({3, 0, 0}));
}

TEST(Extension, TildeLemmaExhaustive) {
  auto e = th::zm_power(4, 2);
  const auto t = oracle::truncated_zm(4, 2);
  for (Elem x = 0; x < e->order(); ++x) {
    const Coords c = e->decode(x);
    const Coords prod = e->mul(c, tilde(*e, c));
    // m_0^(2^n) with n = 2
    int p = static_cast<int>(c[0]);
    p = (p * p) % 4;
    p = (p * p) % 4;
    EXPECT_EQ(prod, (Coords{static_cast<Elem>(p), 0, 0})) << e->name(c);
    // the same product through the oracle's tables
    EXPECT_EQ(t.times(static_cast<int>(x), static_cast<int>(e->encode(tilde(*e, c)))),
              static_cast<int>(e->encode(prod)));
  }
}

TEST(Extension, Gradings) {
  auto e = th::zm_power(4, 2);
  const auto g0 = grading_check(*e, GradingKind::n0_truncated);
  EXPECT_TRUE(g0.monoid_ok && g0.products_ok);
  EXPECT_EQ(g0.homogeneous_count, 10u);
  EXPECT_EQ(homogeneous_elements(*e).size(), 10u);
  const auto gz = grading_check(*e, GradingKind::z_mod);
  EXPECT_TRUE(gz.products_ok);
  // the Gamma monoid fails associativity for n >= 2
  const auto gg = grading_check(*e, GradingKind::gamma);
  EXPECT_FALSE(gg.monoid_ok);
  EXPECT_FALSE(gg.witness.empty());
}

TEST(Extension, PolynomialIso) {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{3, 2}, {4, 2}, {2, 3}, {6, 1}}) {
    const auto iso = poly_iso(*th::zm_power(m, n));
    EXPECT_TRUE(iso.ok) << m << " " << n << " " << iso.witness;
  }
  const auto z3 = poly_iso(*th::zm_power(3, 2));
  // addition and multiplication tables, 27 x 27 each
  EXPECT_EQ(z3.table_entries_checked, 2u * 27u * 27u);
}

TEST(Extension, ProductIso) {
  auto r = make_product({make_zm(2), make_zm(3)});
  auto e = make_extension(family_ring_multiplication(r, 1));
  const auto iso = product_iso(*e);
  EXPECT_TRUE(iso.ok) << iso.witness;
  EXPECT_TRUE(is_bijective(iso.map, e->order()));
  const auto parts = product_components(*e);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0]->order(), 4u);
  EXPECT_EQ(parts[1]->order(), 9u);
  EXPECT_THROW(product_iso(*th::zm_power(4, 1)), HypothesisError);
}

TEST(Extension, AugmentationIdealNilpotent) {
  // every product of n + 1 elements with zero R-part vanishes
  for (auto [m, n] : std::vector<std::pair<int, int>>{{4, 2}, {3, 3}, {2, 4}}) {
    auto e = th::zm_power(m, n);
    std::vector<Coords> aug;
    for (Elem x = 0; x < e->order(); ++x)
      if (e->decode(x)[0] == 0) aug.push_back(e->decode(x));
    oracle::Gen g(static_cast<std::uint64_t>(m * 10 + n));
    for (int trial = 0; trial < 500; ++trial) {
      Coords p = g.pick(aug);
      for (int k = 0; k < n; ++k) p = e->mul(p, g.pick(aug));
      EXPECT_EQ(p, e->zero());
    }
  }
}

TEST(Extension, MatrixRepresentation) {
  auto e = th::zm_power(3, 2);
  const auto mc = matrix_check(*e);
  EXPECT_TRUE(mc.ok) << mc.witness;
  EXPECT_EQ(mc.pairs_checked, 27u * 27u);
  const auto mv = matrix_view(*e, {1, 2, 0});
  EXPECT_TRUE(mv.is_toeplitz());
  EXPECT_EQ(mv.size, 3);
}

TEST(Extension, ExploratoryExtensionKeepsWitnesses) {
  auto r = make_zm(5);
  std::vector<ModulePtr> mods(3, make_regular_module(r));
  auto e = make_extension(family_structure_constants(r, mods, {{{1, 1}, 1}, {{1, 2}, 1}, {{2, 1}, 2}}),
                          Strictness::exploratory);
  EXPECT_TRUE(e->nonassociative_witness().has_value());
  EXPECT_TRUE(e->noncommutative_witness().has_value());
  EXPECT_THROW(e->flat(), std::exception);
  EXPECT_THROW(make_extension(family_structure_constants(r, mods, {{{1, 1}, 1}, {{1, 2}, 1}, {{2, 1}, 2}})),
               AxiomError);
}

TEST(Extension, SeededRingLawsOnRandomFamilies) {
  oracle::Gen g(4242);
  for (int trial = 0; trial < 12; ++trial) {
    const int m = g.pick(std::vector<int>{2, 3, 4, 6});
    const int n = g.uniform(1, 3);
    auto e = th::zm_power(m, n);
    const auto t = oracle::truncated_zm(m, n);
    for (int k = 0; k < 300; ++k) {
      const Elem a = static_cast<Elem>(g.uniform(0, static_cast<int>(e->order()) - 1));
      const Elem b = static_cast<Elem>(g.uniform(0, static_cast<int>(e->order()) - 1));
      EXPECT_EQ(static_cast<int>(e->encode(e->mul(e->decode(a), e->decode(b)))),
                t.times(static_cast<int>(a), static_cast<int>(b)));
      EXPECT_EQ(static_cast<int>(e->encode(e->add(e->decode(a), e->decode(b)))),
                t.plus(static_cast<int>(a), static_cast<int>(b)));
    }
  }
}
