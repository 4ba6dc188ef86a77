#include <gtest/gtest.h>

#include "catfrob/algebra_catalog.hpp"
#include "catfrob/lindist.hpp"
#include "catfrob/probes.hpp"

using namespace catfrob;

namespace {

using Adj = FreeForgetful<FinVect>;
using D = EMCategory<FinVect>;

void expect_all_pass(const LawReport& r, const std::string& what) {
  EXPECT_FALSE(r.empty()) << what;
  for (const auto& law : r.laws())
    EXPECT_EQ(law.verdict, Verdict::pass) << what << " " << law.id << " "
                                          << (law.witness ? law.witness->context + " " + law.witness->note : "");
}

Verdict verdict(const LawReport& r, const std::string& id) {
  const auto* law = r.find(id);
  return law ? law->verdict : Verdict::undecided;
}

std::vector<FinVect::Obj> probes(std::size_t budget) { return probe_objects(FinVect{}, 0, budget); }

BiHopfTriple<FinVect> triple(const HopfAlgebraData<FinVect>& h, const std::vector<FinVect::Obj>& xs) {
  auto adj = std::make_shared<const Adj>(induced_module_monad(h));
  auto res = frobenius_structure_search(adj->cat_d(), unit_comonoid(*adj));
  if (res.outcome != SearchOutcome::found) throw std::runtime_error(res.detail);
  WirthmullerInput<FinVect> w{adj, adj->cat_c().unit(), res.u->underlying, res.m->underlying, true};
  return bihopf_triple(right_adjoint_construct(w, xs));
}

const char* const kLfIds[] = {"lf1.costrength_left", "lf1.costrength_right", "lf1.strength_left",
                              "lf1.strength_right",  "lf2.costrength_left",  "lf2.costrength_right",
                              "lf2.strength_left",   "lf2.strength_right",   "lf3.costrengths",
                              "lf3.strengths",       "lf4.a",                "lf4.b",
                              "lf4.c",               "lf4.d",                "lf5.a",
                              "lf5.b",               "lf5.c",                "lf5.d"};

}  // namespace

TEST(LinDistDegenerate, StrongMonoidalFunctors) {
  FinVect c;
  auto xs = probes(4);
  auto r = check_lf_axioms(c, c, degenerate_lindist(identity_functor(c)), xs);
  expect_all_pass(r, "identity");
  for (const char* id : kLfIds) EXPECT_NE(r.find(id), nullptr) << id;

  auto f = identity_functor(c);
  f.f2 = [c](const FinVect::Obj& x, const FinVect::Obj& y) { return c.scale(Rational(3), c.id(c.tensor(x, y))); };
  f.f0 = c.scale(Rational(1, 3), c.id(c.unit()));
  f.F2 = [c](const FinVect::Obj& x, const FinVect::Obj& y) { return c.scale(Rational(1, 3), c.id(c.tensor(x, y))); };
  f.F0 = c.scale(Rational(3), c.id(c.unit()));
  expect_all_pass(check_lf_axioms(c, c, degenerate_lindist(f), xs), "rescaled identity");
}

TEST(LinDistDegenerate, FrobeniusMonoidalTensorFunctor) {
  FinVect c;
  auto xs = probes(3);
  auto nil = nilpotent_frobenius();
  ASSERT_TRUE(check_frobenius_monoid(c, nil).all_pass());
  auto f = tensor_functor(c, nil);
  expect_all_pass(check_frobenius_monoidal_functor(c, c, f, xs), "A⊗- functor");
  expect_all_pass(check_lf_axioms(c, c, degenerate_lindist(f), xs), "A⊗- lindist");
  expect_all_pass(check_lindist_unit_objects(c, c, degenerate_lindist(f)), "A⊗- unit objects");
}

TEST(LinDistDegenerate, PerturbedCostrengthBreaksLF2) {
  FinVect c;
  auto xs = probes(3);
  auto f = degenerate_lindist(identity_functor(c));
  auto good = f.nu_L_l;
  f.nu_L_l = [good, c](const FinVect::Obj& x, const FinVect::Obj& y) {
    auto xy = c.tensor(x, y);
    std::mt19937_64 rng(1000 * x.dim + y.dim);
    return c.add(good(x, y), random_morphism(c, xy, xy, rng));
  };
  auto r = check_lf_axioms(c, c, f, xs);
  EXPECT_EQ(verdict(r, "lf2.costrength_left"), Verdict::fail);
  EXPECT_TRUE(r.find("lf2.costrength_left")->witness.has_value());
}

TEST(LinDistCompose, IdentityIsNeutral) {
  FinVect c;
  auto xs = probes(3);
  auto nil = degenerate_lindist(tensor_functor(c, nilpotent_frobenius()));
  auto id = degenerate_lindist(identity_functor(c));
  for (const auto& g : {compose_lindist(c, id, nil), compose_lindist(c, nil, id)})
    for (const auto& x : xs)
      for (const auto& y : xs) {
        EXPECT_TRUE(c.equal(g.nu_R_r(x, y), nil.nu_R_r(x, y)));
        EXPECT_TRUE(c.equal(g.nu_L_l(x, y), nil.nu_L_l(x, y)));
        EXPECT_TRUE(c.equal(g.r2(x, y), nil.r2(x, y)));
        EXPECT_TRUE(c.equal(g.L2(x, y), nil.L2(x, y)));
      }
  // composing two degenerate functors gives the degenerate composite
  auto twice = compose_lindist(c, nil, nil);
  expect_all_pass(check_lf_axioms(c, c, twice, probes(2)), "A⊗A⊗-");
}

TEST(LinDistBiHopf, GroupAlgebraLFAxioms) {
  auto xs = probes(3);
  auto b = triple(group_algebra(2), xs);
  auto f = strengths_from_bihopf(b, xs);
  FinVect c;
  auto r = check_lf_axioms(c, b.adj->cat_d(), f, xs);
  expect_all_pass(r, "kZ2 triple");
  for (const char* id : kLfIds) EXPECT_NE(r.find(id), nullptr) << id;
  expect_all_pass(check_lindist_unit_objects(c, b.adj->cat_d(), f), "kZ2 unit objects");
}

TEST(LinDistBiHopf, CorruptedCounitBreaksLF1) {
  FinVect c;
  auto xs = probes(3);
  auto b = triple(group_algebra(2), xs);
  auto good = b.right.eps;
  b.right.eps = [good, c](const FinVect::Obj& x) { return c.scale(Rational(-1), good(x)); };
  auto f = strengths_from_bihopf(b, xs);
  auto r = check_lf_axioms(c, b.adj->cat_d(), f, xs);
  EXPECT_EQ(verdict(r, "lf1.costrength_left"), Verdict::fail);
  ASSERT_TRUE(r.find("lf1.costrength_left")->witness.has_value());
  EXPECT_TRUE(r.find("lf1.costrength_left")->witness->index.has_value());
}

TEST(LinDistBiHopf, AdjunctionUnitAndCounit) {
  auto xs = probes(3);
  auto b = triple(group_algebra(2), xs);
  auto f = strengths_from_bihopf(b, xs);
  auto as = algebra_probes(*b.adj, xs);
  auto r = check_lindist_adjunction(b, f, xs, as);
  expect_all_pass(r, "kZ2 (co)unit");
  for (const char* id : {"unit.ln.rho_monoidal", "unit.ln.rho_monoidal_unit", "unit.ln.lambda_comonoidal",
                         "unit.ln.lambda_comonoidal_counit", "unit.ln.costrength_left", "unit.ln.costrength_right",
                         "unit.ln.strength_left", "unit.ln.strength_right", "counit.ln.strength_right"})
    EXPECT_NE(r.find(id), nullptr) << id;
}

TEST(LinDistBiHopf, NaturalTransformationChecks) {
  FinVect c;
  auto xs = probes(3);
  auto b = triple(group_algebra(2), xs);
  const auto& d = b.adj->cat_d();
  auto f = strengths_from_bihopf(b, xs);
  LinDistNatTrans<FinVect, D> id{[&](const FinVect::Obj& x) { return d.id(f.R(x)); },
                                 [&](const FinVect::Obj& x) { return d.id(f.L(x)); }};
  expect_all_pass(check_lindist_nat(c, d, id, f, f, xs), "identity");
  LinDistNatTrans<FinVect, D> doubled{[&](const FinVect::Obj& x) {
                                        auto i = d.id(f.R(x));
                                        return d.trusted(i.dom, i.cod, c.scale(Rational(2), i.underlying));
                                      },
                                      id.lambda};
  auto r = check_lindist_nat(c, d, doubled, f, f, xs);
  EXPECT_EQ(verdict(r, "ln.rho_monoidal_unit"), Verdict::fail);
}

TEST(LinDistBiHopf, InverseFormulas) {
  auto xs = probes(3);
  for (auto h : {group_algebra(2), group_algebra(3)}) {
    auto b = triple(h, xs);
    auto f = strengths_from_bihopf(b, xs);
    auto as = algebra_probes(*b.adj, xs);
    auto r = hopf_inverses_from_lindist(b, f, xs, as);
    expect_all_pass(r, h.name);
    for (const char* id : {"inverse.hopf_left", "inverse.hopf_right", "inverse.cohopf_left", "inverse.cohopf_right"})
      EXPECT_NE(r.find(id), nullptr) << id;
  }
}

TEST(LinDistBiHopf, PerturbedUnitBreaksInverseFormula) {
  auto xs = probes(3);
  auto b = triple(group_algebra(2), xs);
  auto f = strengths_from_bihopf(b, xs);
  const auto& d = b.adj->cat_d();
  auto good = b.right.eta;
  b.right.eta = [good, &d](const TAlgebra<FinVect>& a) {
    auto g = good(a);
    return d.trusted(g.dom, g.cod, FinVect{}.scale(Rational(2), g.underlying));
  };
  auto r = hopf_inverses_from_lindist(b, f, xs, algebra_probes(*b.adj, xs));
  EXPECT_EQ(verdict(r, "inverse.hopf_left"), Verdict::fail);
}

TEST(LinDistBiHopf, SweedlerTriple) {
  FinVect c;
  auto xs = probes(2);
  auto b = triple(sweedler_algebra(), xs);
  auto f = strengths_from_bihopf(b, xs);
  auto as = algebra_probes(*b.adj, xs);
  expect_all_pass(check_lf_axioms(c, b.adj->cat_d(), f, xs), "Sweedler LF");
  expect_all_pass(hopf_inverses_from_lindist(b, f, xs, as), "Sweedler inverses");
  expect_all_pass(check_lindist_adjunction(b, f, xs, as), "Sweedler (co)unit");
}

TEST(LinDistCompose, EndoCompositeOfGroupAlgebraTriple) {
  FinVect c;
  auto xs = probes(2);
  auto b = triple(group_algebra(2), xs);
  auto f = strengths_from_bihopf(b, xs);
  auto uf = compose_lindist(c, f, degenerate_lindist(forgetful_functor(b.adj)));
  expect_all_pass(check_lf_axioms(c, c, uf, xs), "UF");
  expect_all_pass(check_lf_axioms(c, c, compose_lindist(c, uf, uf), xs), "UF∘UF");
}
