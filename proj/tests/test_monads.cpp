#include <gtest/gtest.h>

#include "catfrob/set_comonad.hpp"

using namespace catfrob;

namespace {

template <class C>
void expect_laws(const ComonoidalMonad<C>& t, std::size_t budget) {
  const C& c = t.ambient();
  auto objs = probe_objects(c, 3, budget);
  auto mors = probe_morphisms(c, objs, 3, 1);
  auto r = check_monad_laws(t, objs, mors);
  for (const auto& law : r.laws())
    EXPECT_EQ(law.verdict, Verdict::pass) << t.name() << " " << law.id << " "
                                          << (law.witness ? law.witness->context : "");
}

}  // namespace

TEST(MonadsLaws, ShippedMonads) {
  expect_laws(IdentityMonad<FinVect>{}, 4);
  expect_laws(*induced_module_monad(group_algebra(1)), 4);
  expect_laws(*induced_module_monad(group_algebra(2)), 4);
  expect_laws(*induced_module_monad(group_algebra(3)), 3);
  expect_laws(*induced_module_monad(sweedler_algebra()), 3);
  expect_laws(*induced_module_monad(graded_nilpotent_algebra()), 5);
  expect_laws(*set_product_monad(2), 4);
}

TEST(MonadsInduced, TrivialAlgebraGivesIdentity) {
  auto t = induced_module_monad(group_algebra(1));
  FinVect c;
  for (auto x : probe_objects(c, 0, 4)) {
    EXPECT_EQ(t->obj(x), x);
    EXPECT_TRUE(c.equal(t->mu(x), c.id(x)));
    EXPECT_TRUE(c.equal(t->eta(x), c.id(x)));
    EXPECT_TRUE(c.equal(fusion_left(*t, x, x), c.id(c.tensor(x, x))));
  }
}

TEST(MonadsInduced, T2AtUnitIsComultiplication) {
  auto h = group_algebra(2);
  auto t = induced_module_monad(h);
  EXPECT_TRUE(h.cat.equal(t->t2(h.cat.unit(), h.cat.unit()), h.d));
}

TEST(MonadsInduced, GradedT2CarriesKoszulSigns) {
  auto h = graded_nilpotent_algebra();
  auto t = induced_module_monad(h);
  auto odd = GrVect::obj(0, 1);
  auto m = t->t2(odd, odd).matrix;
  // y⊗y'⊗x contributes -(y⊗x)⊗(y'⊗1): with basis y⊗y'⊗{1,x} ↦ (y⊗{1,x})⊗(y'⊗{1,x})
  // column 1 (input y⊗y'⊗x) has +1 at (y⊗1)⊗(y'⊗x) = index 1 and -1 at (y⊗x)⊗(y'⊗1) = index 2
  EXPECT_EQ(m, (RationalMatrix{{1, 0}, {0, 1}, {0, -1}, {0, 0}}));
}

TEST(MonadsInduced, CorruptedComultiplicationFailsConstruction) {
  auto h = group_algebra(2);
  // Δ(g) = g⊗1 is not coassociative
  h.d = h.cat.from_matrix(h.carrier, h.cat.tensor(h.carrier, h.carrier),
                          RationalMatrix{{1, 0}, {0, 0}, {0, 1}, {0, 0}});
  EXPECT_THROW(induced_module_monad(h), ConstructionError);
}

TEST(MonadsFusion, GroupAlgebraAtUnitMatchesPermutationOracle) {
  auto t = induced_module_monad(group_algebra(2));
  FinVect c;
  auto f = fusion_left(*t, c.unit(), c.unit());
  // h⊗k ↦ k⊗hk
  RationalMatrix expected(4, 4);
  for (std::size_t h = 0; h < 2; ++h)
    for (std::size_t k = 0; k < 2; ++k) expected.set(k * 2 + (h + k) % 2, h * 2 + k, Rational(1));
  EXPECT_EQ(f.matrix, expected);
  EXPECT_TRUE(c.inverse(f));
}

TEST(MonadsFusion, FinSetProductAtPointIsBijection) {
  auto t = set_product_monad(2);
  FinSet c;
  auto f = fusion_left(*t, c.unit(), c.unit());
  EXPECT_EQ(f.dom.size, 4u);
  EXPECT_TRUE(c.inverse(f));
}

template <class C>
void expect_fusion_identities(const MonadPtr<C>& t, std::size_t budget) {
  const C& c = t->ambient();
  auto objs = probe_objects(c, 1, budget);
  for (const auto& x : objs)
    for (const auto& y : objs) {
      auto lhs = c.compose(fusion_left(*t, x, y), t->map(c.tensor(c.id(x), t->eta(y))));
      EXPECT_TRUE(c.equal(lhs, t->t2(x, y))) << c.describe(x) << "," << c.describe(y);
      auto rhs = c.compose(fusion_right(*t, x, y), t->map(c.tensor(t->eta(x), c.id(y))));
      EXPECT_TRUE(c.equal(rhs, t->t2(x, y)));
    }
  auto mors = probe_morphisms(c, objs, 9, 1);
  for (const auto& f : mors)
    for (const auto& g : mors) {
      auto lhs = c.compose(fusion_left(*t, c.cod(f), c.cod(g)), t->map(c.tensor(f, t->map(g))));
      auto rhs = c.compose(c.tensor(t->map(f), t->map(g)), fusion_left(*t, c.dom(f), c.dom(g)));
      EXPECT_TRUE(c.equal(lhs, rhs));
    }
}

TEST(MonadsFusion, DegeneracyAndNaturality) {
  expect_fusion_identities(induced_module_monad(group_algebra(2)), 4);
  expect_fusion_identities(induced_module_monad(sweedler_algebra()), 3);
  expect_fusion_identities(induced_module_monad(graded_nilpotent_algebra()), 4);
  expect_fusion_identities(set_product_monad(3), 4);
}

TEST(MonadsHopf, ShippedMonadsAreHopfOnProbes) {
  auto check = [](const auto& t, std::size_t budget) {
    auto objs = probe_objects(t->ambient(), 0, budget);
    auto l = is_left_hopf(*t, objs);
    auto r = is_right_hopf(*t, objs);
    EXPECT_TRUE(l.holds) << t->name() << l.witness;
    EXPECT_TRUE(r.holds) << t->name() << r.witness;
    EXPECT_EQ(l.checked, objs.size() * objs.size());
  };
  check(induced_module_monad(group_algebra(2)), 4);
  check(induced_module_monad(group_algebra(3)), 4);
  check(induced_module_monad(sweedler_algebra()), 4);
  check(induced_module_monad(graded_nilpotent_algebra()), 6);
  check(set_product_monad(2), 4);
}

TEST(MonadsHopf, NonHopfBialgebraIsRefuted) {
  // the monoid {0,1} under multiplication with diagonal comonoid is a bialgebra in
  // FinSet without antipode; its fusion operator is not bijective
  FinSet c;
  auto g = FinSet::obj(2);
  HopfAlgebraData<FinSet> h{"mult{0,1}", c, g, c.make(c.tensor(g, g), g, {0, 0, 0, 1}), c.make(c.unit(), g, {1}),
                            c.make(g, c.tensor(g, g), {0, 3}), c.make(g, c.unit(), {0, 0}), c.id(g)};
  TensorMonad<FinSet> t(h);
  auto v = is_left_hopf(t, probe_objects(c, 0, 3));
  EXPECT_FALSE(v.holds);
  EXPECT_EQ(v.witness, "({1},{1})");
}

TEST(MonadsDescent, Examples) {
  FinVect fv;
  auto objs = probe_objects(fv, 0, 4);
  EXPECT_TRUE(descent_type_check(IdentityMonad<FinVect>{}, objs).holds);
  EXPECT_TRUE(descent_type_check(*induced_module_monad(group_algebra(2)), objs).holds);
  EXPECT_TRUE(descent_type_check(*induced_module_monad(sweedler_algebra()), objs).holds);
  auto t = set_product_monad(2);
  EXPECT_TRUE(descent_holds_at(*t, FinSet::obj(0)));
  EXPECT_TRUE(descent_type_check(*t, probe_objects(FinSet{}, 0, 4)).holds);
  EXPECT_TRUE(tensor_unit_monic_check(*t, FinSet::obj(1), probe_objects(FinSet{}, 0, 4)).holds);
}

TEST(MonadsComonad, TrivialGroupIsIdentity) {
  SetHomComonad g(1);
  FinSet c;
  for (std::size_t n : {0u, 1u, 2u, 3u}) {
    auto x = FinSet::obj(n);
    EXPECT_EQ(g.obj(x)->size, n);
    EXPECT_TRUE(c.equal(*g.delta(x), c.id(x)));
    EXPECT_TRUE(c.equal(*g.cofusion_left(x, x), c.id(c.tensor(x, x))));
  }
}

TEST(MonadsComonad, LawsHold) {
  for (std::size_t n : {1u, 2u, 3u}) {
    SetHomComonad g(n);
    auto r = check_comonad_laws(g, probe_objects(FinSet{}, 0, 4));
    for (const auto& law : r.laws()) EXPECT_EQ(law.verdict, Verdict::pass) << n << " " << law.id;
  }
}

TEST(MonadsComonad, CofusionCardinality) {
  SetHomComonad g(2);
  auto two = FinSet::obj(2);
  auto v = check_cofusion_left(g, two, two);
  EXPECT_EQ(v.dom_size, 16u);
  EXPECT_EQ(v.cod_size, 64u);
  EXPECT_EQ(v.outcome, CofusionOutcome::refuted);
  EXPECT_EQ(v.witness, "cardinality 16 vs 64");
  // exhaustive enumeration of GX×GY: 2^2 · 2^2 pairs; G(GX×Y): (4·2)^2
  EXPECT_LT(v.dom_size, v.cod_size);
  for (std::size_t n : {0u, 1u, 2u, 3u}) {
    auto w = check_cofusion_left(g, FinSet::obj(1), FinSet::obj(n));
    EXPECT_TRUE(w.injective) << n;
  }
}

TEST(MonadsComonad, CapGivesUndecided) {
  SetHomComonad g(2, 100);
  auto v = check_cofusion_left(g, FinSet::obj(3), FinSet::obj(3));
  EXPECT_EQ(v.outcome, CofusionOutcome::undecided);
}
