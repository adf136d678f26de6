#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace ntx;

namespace {

/// Oracle view of a module: xor/modular addition and the scalar maps from the library's action table
/// are replaced by independent formulas in each test, so only the expected counts come from here.
std::set<oracle::Set> oracle_submodules(const ModulePtr& m, const std::function<int(int, int)>& add,
                                        const std::function<int(int, int)>& act) {
  std::vector<std::function<int(int)>> scalars;
  for (int r = 0; r < static_cast<int>(m->ring()->order()); ++r) scalars.push_back([=](int v) { return act(r, v); });
  return oracle::submodules_by_subsets(static_cast<int>(m->order()), add, scalars);
}

std::set<oracle::Set> library_submodules(const ModulePtr& m) {
  std::set<oracle::Set> out;
  for (const auto& s : enumerate_submodules(m)) out.insert(th::to_set(s.elements));
  return out;
}

ModulePtr f4_over_f2() {
  auto r = make_zm(2);
  auto t = make_galois_field(2, 2);
  return make_algebra_module(r, t, canonical_hom_from_zm(r, t));
}

}  // namespace

TEST(ModuleCore, F4OverF2HasFiveSubmodules) {
  auto m = f4_over_f2();
  const auto lib = library_submodules(m);
  EXPECT_EQ(lib.size(), 5u);
  EXPECT_EQ(lib, oracle_submodules(m, [](int a, int b) { return a ^ b; }, [](int r, int v) { return r ? v : 0; }));
}

TEST(ModuleCore, SubmodulesOfScalarModulesMatchOracle) {
  struct Case {
    int m;
    std::vector<int> factors;
  };
  for (const auto& c : std::vector<Case>{{4, {4}}, {4, {2, 4}}, {6, {6}}, {6, {2, 3}}, {2, {2, 2}}, {8, {2, 4}}}) {
    auto r = make_zm(c.m);
    auto mod = make_scalar_module(r, c.factors);
    const auto& f = c.factors;
    auto add = [&](int a, int b) {
      auto x = oracle::digits(a, f), y = oracle::digits(b, f);
      for (std::size_t i = 0; i < f.size(); ++i) x[i] = (x[i] + y[i]) % f[i];
      return oracle::undigits(x, f);
    };
    auto act = [&](int s, int v) {
      auto x = oracle::digits(v, f);
      for (std::size_t i = 0; i < f.size(); ++i) x[i] = (s * x[i]) % f[i];
      return oracle::undigits(x, f);
    };
    EXPECT_EQ(library_submodules(mod), oracle_submodules(mod, add, act)) << c.m;
  }
}

TEST(ModuleCore, CyclicAndZeroDivisors) {
  auto z4 = make_zm(4);
  auto m = make_regular_module(z4);
  EXPECT_EQ(th::to_set(cyclic(m, 2).elements), (oracle::Set{0, 2}));
  EXPECT_EQ(th::to_set(cyclic(m, 1).elements), (oracle::Set{0, 1, 2, 3}));
  const auto z = zero_divisors_on(m);
  EXPECT_TRUE(z.contains(2));
  EXPECT_FALSE(z.contains(1));
  EXPECT_FALSE(z.contains(3));
  EXPECT_EQ(th::to_set(annihilator(m, 2)), (oracle::Set{0, 2}));
  EXPECT_EQ(th::to_set(annihilator(m)), (oracle::Set{0}));
  EXPECT_EQ(th::to_set(scaled(m, 2)), (oracle::Set{0, 2}));
}

TEST(ModuleCore, SumAndIntersection) {
  auto m = make_regular_module(make_zm(12));
  const auto s = sum(cyclic(m, 4), cyclic(m, 6));
  EXPECT_EQ(s, cyclic(m, 2));
  const auto i = intersect(cyclic(m, 4), cyclic(m, 6));
  EXPECT_EQ(i, cyclic(m, 0));
  EXPECT_EQ(span(m, {4, 6}), cyclic(m, 2));
  EXPECT_EQ(zero_submodule(m).size(), 1u);
  EXPECT_EQ(whole(m).size(), 12u);
}

TEST(ModuleCore, Predicates) {
  const auto pf = module_predicates(f4_over_f2());
  EXPECT_TRUE(pf.divisible);
  EXPECT_TRUE(pf.torsion_free);
  EXPECT_FALSE(pf.is_cyclic);
  const auto p4 = module_predicates(make_regular_module(make_zm(4)));
  EXPECT_TRUE(p4.is_cyclic);
  EXPECT_TRUE(p4.is_presimplifiable);
  EXPECT_FALSE(p4.torsion_free);
  const auto p6 = module_predicates(make_regular_module(make_zm(6)));
  EXPECT_FALSE(p6.is_presimplifiable);
  EXPECT_FALSE(p6.presimplifiable_witness.empty());
  ASSERT_TRUE(presimplifiable_counterexample(make_regular_module(make_zm(6))).has_value());
}

TEST(ModuleCore, AssociatesInZ4) {
  auto m = make_regular_module(make_zm(4));
  const auto rel = relate(m, 1, 3);
  EXPECT_TRUE(rel.sim);
  EXPECT_TRUE(rel.approx);
  EXPECT_TRUE(rel.cong);
  EXPECT_FALSE(relate(m, 1, 2).sim);
}

TEST(ModuleCore, PrimitiveElement) {
  auto r = make_zm(2);
  auto m = make_scalar_module(r, {2, 2});
  const Elem e10 = 2;  // (1,0)
  const auto p = primitivity(m, e10);
  EXPECT_TRUE(p.primitive);
  EXPECT_TRUE(p.maximal_cyclic);
  EXPECT_FALSE(primitivity(make_regular_module(make_zm(4)), 2).primitive);
}

// Over every test module: ≅ ⇒ ≈ ⇒ ∼, the primitivity ladder, and primitive ⇔ maximal cyclic.
TEST(ModuleCore, RelationAndPrimitivityImplications) {
  auto r6 = make_zm(6), r4 = make_zm(4), r8 = make_zm(8);
  std::vector<ModulePtr> mods{make_regular_module(r6), make_regular_module(r4), make_scalar_module(r4, {2, 4}),
                              make_scalar_module(r8, {4, 8}), f4_over_f2(), make_scalar_module(make_zm(12), {6})};
  for (const auto& m : mods) {
    for (Elem x = 0; x < m->order(); ++x) {
      for (Elem y = 0; y < m->order(); ++y) {
        const auto rel = relate(m, x, y);
        if (rel.cong) EXPECT_TRUE(rel.approx) << m->label() << " " << x << " " << y;
        if (rel.approx) EXPECT_TRUE(rel.sim) << m->label() << " " << x << " " << y;
        // sim from the definition: equal cyclic submodules
        EXPECT_EQ(rel.sim, cyclic(m, x) == cyclic(m, y));
      }
      const auto p = primitivity(m, x);
      if (p.very_strongly) EXPECT_TRUE(p.strongly);
      if (p.strongly) EXPECT_TRUE(p.primitive);
      EXPECT_EQ(p.primitive, p.maximal_cyclic) << m->label() << " " << x;
    }
  }
}

TEST(ModuleCore, DirectSumAndZeroModule) {
  auto r = make_zm(4);
  auto s = make_direct_sum({make_regular_module(r), make_scalar_module(r, {2})});
  EXPECT_EQ(s->order(), 8u);
  auto z = make_zero_module(r);
  EXPECT_TRUE(z->is_zero());
  EXPECT_EQ(enumerate_submodules(z).size(), 1u);
}

TEST(ModuleCore, ScalarModuleNeedsDividingFactors) {
  EXPECT_THROW(make_scalar_module(make_zm(4), {3}), AxiomError);
  EXPECT_THROW(make_scalar_module(make_galois_field(2, 2), {2}), AxiomError);
}

TEST(ModuleCore, SeededSubmoduleLattice) {
  oracle::Gen g(77);
  for (int trial = 0; trial < 20; ++trial) {
    const int m = g.pick(std::vector<int>{4, 6, 8, 12});
    std::vector<int> divs;
    for (int d = 2; d <= m; ++d)
      if (m % d == 0) divs.push_back(d);
    auto mod = make_scalar_module(make_zm(m), {g.pick(divs), g.pick(divs)});
    const auto subs = enumerate_submodules(mod);
    for (int k = 0; k < 20; ++k) {
      const auto& a = subs[static_cast<std::size_t>(g.uniform(0, static_cast<int>(subs.size()) - 1))];
      const auto& b = subs[static_cast<std::size_t>(g.uniform(0, static_cast<int>(subs.size()) - 1))];
      const auto s = sum(a, b), i = intersect(a, b);
      EXPECT_TRUE(a.elements.subset_of(s.elements));
      EXPECT_TRUE(i.elements.subset_of(b.elements));
      // |A + B| |A ∩ B| = |A| |B| for finite abelian groups
      EXPECT_EQ(s.size() * i.size(), a.size() * b.size());
    }
  }
}
