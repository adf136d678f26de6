#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace ntx;

namespace {

std::vector<ModulePtr> regulars(const RingPtr& r, int n) {
  return std::vector<ModulePtr>(static_cast<std::size_t>(n), make_regular_module(r));
}

bool has_law(const ValidationReport& v, const std::string& law) {
  for (const auto& w : v.witnesses)
    if (w.law == law) return true;
  return false;
}

}  // namespace

TEST(ProductMaps, AdmissiblePairs) {
  EXPECT_EQ(admissible_pairs(3), (std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}}));
  EXPECT_TRUE(admissible_pairs(1).empty());
}

TEST(ProductMaps, Z5ConstantsFailBothLaws) {
  auto r = make_zm(5);
  const auto f = family_structure_constants(r, regulars(r, 3), {{{1, 1}, 1}, {{1, 2}, 1}, {{2, 1}, 2}});
  const auto v = f.validate();
  EXPECT_TRUE(v.bilinear_ok);
  EXPECT_FALSE(v.symmetric_ok);
  EXPECT_FALSE(v.associative_ok);
  EXPECT_TRUE(has_law(v, "symmetric"));
  EXPECT_TRUE(has_law(v, "associative"));
  // phi(g1, g2) = 1 g3, phi(g2, g1) = 2 g3
  EXPECT_EQ(f.apply(1, 2, 1, 1), 1u);
  EXPECT_EQ(f.apply(2, 1, 1, 1), 2u);
}

TEST(ProductMaps, Z11ConstantsSymmetricButNotAssociative) {
  auto r = make_zm(11);
  const auto f = family_structure_constants(
      r, regulars(r, 4),
      {{{1, 1}, 1}, {{1, 2}, 2}, {{2, 1}, 2}, {{2, 2}, 3}, {{1, 3}, 4}, {{3, 1}, 4}});
  const auto v = f.validate();
  EXPECT_TRUE(v.bilinear_ok);
  EXPECT_TRUE(v.symmetric_ok);
  EXPECT_FALSE(v.associative_ok);
  ASSERT_TRUE(has_law(v, "associative"));
  // (g1 g1) g2 = r11 r22 g4 = 3 g4 while g1 (g1 g2) = r12 r13 g4 = 8 g4
  EXPECT_EQ(f.apply(2, 2, f.apply(1, 1, 1, 1), 1), 3u);
  EXPECT_EQ(f.apply(1, 3, 1, f.apply(1, 2, 1, 1)), 8u);
}

TEST(ProductMaps, AllOnesOverZ3IsCommutativeAndAssociative) {
  auto r = make_zm(3);
  const auto f = family_structure_constants(r, regulars(r, 3), {{{1, 1}, 1}, {{1, 2}, 1}, {{2, 1}, 1}});
  const auto v = f.validate();
  EXPECT_TRUE(v.bilinear_ok && v.symmetric_ok && v.associative_ok);
  EXPECT_TRUE(v.witnesses.empty());
}

TEST(ProductMaps, ZeroFamilyIsValid) {
  auto r = make_zm(6);
  const auto f = family_zero(r, regulars(r, 3));
  const auto v = f.validate();
  EXPECT_TRUE(v.bilinear_ok && v.symmetric_ok && v.associative_ok);
  for (auto [i, j] : admissible_pairs(3))
    for (Elem a = 0; a < 6; ++a)
      for (Elem b = 0; b < 6; ++b) EXPECT_EQ(f.apply(i, j, a, b), 0u);
}

TEST(ProductMaps, ExplicitTableNotBilinear) {
  auto r = make_zm(2);
  // phi(0, b) = 1 cannot be additive in the first slot
  try {
    family_explicit(r, regulars(r, 2), {{{1, 1}, {1, 1, 0, 0}}});
    FAIL() << "accepted a non-additive table";
  } catch (const AxiomError& e) {
    EXPECT_NE(std::string(e.what()).find("not additive"), std::string::npos);
  }
}

TEST(ProductMaps, Truncation) {
  auto r = make_zm(4);
  const auto f = family_ring_multiplication(r, 3).truncated(3);
  EXPECT_EQ(f.apply(1, 1, 1, 1), 1u);
  EXPECT_EQ(f.apply(1, 2, 1, 1), 0u);
  EXPECT_TRUE(f.validate().associative_ok);
}

TEST(ProductMaps, RingMultiplicationMatchesRing) {
  auto r = make_zm(6);
  const auto f = family_ring_multiplication(r, 2);
  for (Elem a = 0; a < 6; ++a)
    for (Elem b = 0; b < 6; ++b) EXPECT_EQ(f.apply(1, 1, a, b), r->mul(a, b));
}

// Seeded: over Z_p with n = 3 and r11 != 0, symmetric ⇔ associative.
TEST(ProductMaps, SeededSymmetricIffAssociative) {
  oracle::Gen g(31337);
  for (int trial = 0; trial < 60; ++trial) {
    const int p = g.pick(std::vector<int>{2, 3, 5, 7});
    auto r = make_zm(p);
    const Elem r11 = static_cast<Elem>(g.uniform(1, p - 1));
    const Elem r12 = static_cast<Elem>(g.uniform(0, p - 1));
    const Elem r21 = g.uniform(0, 1) ? r12 : static_cast<Elem>(g.uniform(0, p - 1));
    const auto v = family_structure_constants(r, regulars(r, 3), {{{1, 1}, r11}, {{1, 2}, r12}, {{2, 1}, r21}})
                       .validate();
    EXPECT_TRUE(v.bilinear_ok);
    EXPECT_EQ(v.symmetric_ok, r12 == r21);
    EXPECT_EQ(v.symmetric_ok, v.associative_ok) << p << " " << r11 << " " << r12 << " " << r21;
  }
}

TEST(ProductMaps, MissingConstantRejected) {
  auto r = make_zm(5);
  EXPECT_THROW(family_structure_constants(r, regulars(r, 3), {{{1, 1}, 1}}), AxiomError);
}
