#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace ntx;

namespace {

bool oracle_chained(const oracle::Tab& t) {
  const auto all = oracle::ideals(t);
  for (const auto& a : all)
    for (const auto& b : all)
      if (!std::includes(a.begin(), a.end(), b.begin(), b.end()) &&
          !std::includes(b.begin(), b.end(), a.begin(), a.end()))
        return false;
  return true;
}

bool oracle_pir(const oracle::Tab& t) {
  std::set<oracle::Set> principals;
  for (int a = 0; a < t.n; ++a) principals.insert(oracle::principal(t, a));
  return principals == oracle::ideals(t);
}

}  // namespace

TEST(RingProperties, F2TimesF2IsChained) {
  auto e = th::zm_power(2, 1);
  const auto rep = ring_property_checks(e->flat());
  EXPECT_TRUE(rep.chained.holds);
  EXPECT_TRUE(rep.pir.holds);
  const auto ext = extension_property_checks(*e);
  EXPECT_TRUE(ext.chained_agree);
}

TEST(RingProperties, Z4TimesZ4IsNotPir) {
  auto e = th::zm_power(4, 1);
  const auto rep = ring_property_checks(e->flat());
  EXPECT_FALSE(rep.pir.holds);
  // the witness is <2> x| Z4
  EXPECT_NE(rep.pir.witness.find("(2,0)"), std::string::npos) << rep.pir.witness;
  const auto ext = extension_property_checks(*e);
  EXPECT_TRUE(ext.pir_agree);
  EXPECT_FALSE(ext.modules_cyclic_idempotent);
}

TEST(RingProperties, Z6IsPirAndZpi) {
  const auto rep = ring_property_checks(make_zm(6));
  EXPECT_TRUE(rep.pir.holds);
  EXPECT_TRUE(rep.zpi.holds);
  EXPECT_TRUE(rep.pi_ring.holds);
  EXPECT_FALSE(rep.pir.certificate.empty());
  EXPECT_FALSE(rep.chained.holds);
  EXPECT_TRUE(rep.arithmetical.holds);
  EXPECT_TRUE(rep.noetherian.holds && rep.artinian.holds);
}

TEST(RingProperties, VerdictsMatchOracle) {
  std::vector<RingPtr> rings{make_zm(4), make_zm(6), make_zm(8), make_zm(12), th::zm_power(2, 1)->flat(),
                             th::zm_power(4, 1)->flat(), th::zm_power(2, 2)->flat(), th::f2_f4(2)->flat(),
                             th::f2_f2sq()->flat(), make_product({make_zm(2), make_zm(2)})};
  for (const auto& r : rings) {
    const auto t = th::tab_of(*r);
    const auto rep = ring_property_checks(r);
    EXPECT_EQ(rep.chained.holds, oracle_chained(t)) << r->label();
    EXPECT_EQ(rep.pir.holds, oracle_pir(t)) << r->label();
    EXPECT_EQ(rep.ideal_count, oracle::ideals(t).size()) << r->label();
  }
}

TEST(RingProperties, CharacterizationsAgree) {
  for (const auto& e : {th::zm_power(2, 1), th::zm_power(4, 1), th::zm_power(6, 1), th::zm_power(2, 2),
                        th::f2_f4(2), th::f2_f2sq()}) {
    const auto rep = extension_property_checks(*e);
    EXPECT_TRUE(rep.pir_agree) << e->label();
    EXPECT_TRUE(rep.zpi_agree) << e->label();
    EXPECT_TRUE(rep.pi_agree) << e->label();
    EXPECT_TRUE(rep.chained_agree) << e->label();
    EXPECT_TRUE(rep.finitely_generated) << e->label();
  }
}

TEST(RingProperties, ChainedVerdictWitness) {
  const auto v = chained_verdict(enumerate_ideals(make_zm(6)));
  EXPECT_FALSE(v.holds);
  EXPECT_FALSE(v.witness.empty());
  EXPECT_TRUE(chained_verdict(enumerate_ideals(make_zm(8))).holds);
}
