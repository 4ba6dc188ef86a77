#include <gtest/gtest.h>

#include <array>

#include "catfrob/algebra_catalog.hpp"
#include "catfrob/frobenius_search.hpp"

using namespace catfrob;

namespace {

void expect_all_pass(const LawReport& r) {
  ASSERT_FALSE(r.empty());
  for (const auto& law : r.laws()) EXPECT_EQ(law.verdict, Verdict::pass) << law.id;
}

// Sweedler product computed directly from the presentation: elements are
// coefficient vectors over (1, g, x, gx), words reduced with g² = 1, x² = 0, xg = -gx.
using Elem = std::array<Rational, 4>;
Elem sweedler_mul(const Elem& a, const Elem& b) {
  // table[i][j] = (sign, index) of basis_i * basis_j, index 4 meaning zero
  const int table[4][4][2] = {
      {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
      {{1, 1}, {1, 0}, {1, 3}, {1, 2}},
      {{1, 2}, {-1, 3}, {1, 4}, {1, 4}},   // x·g = -gx, x·x = 0, x·gx = -g x x = 0
      {{1, 3}, {-1, 2}, {1, 4}, {1, 4}},   // gx·g = -g g x = -x
  };
  Elem out{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      int idx = table[i][j][1];
      if (idx == 4) continue;
      out[idx] += a[i] * b[j] * Rational(table[i][j][0]);
    }
  return out;
}

}  // namespace

TEST(AlgebraHopf, GroupAlgebraZ2Constants) {
  auto h = group_algebra(2);
  EXPECT_EQ(h.m.matrix, (RationalMatrix{{1, 0, 0, 1}, {0, 1, 1, 0}}));
  EXPECT_EQ(h.d.matrix, (RationalMatrix{{1, 0}, {0, 0}, {0, 0}, {0, 1}}));
  EXPECT_EQ(h.s.matrix, RationalMatrix::identity(2));
  EXPECT_EQ(h.e.matrix, (RationalMatrix{{1, 1}}));
  expect_all_pass(check_hopf(h));
}

TEST(AlgebraHopf, CatalogPasses) {
  expect_all_pass(check_hopf(group_algebra(1)));
  expect_all_pass(check_hopf(group_algebra(3)));
  expect_all_pass(check_hopf(group_algebra(5)));
  expect_all_pass(check_hopf(cyclic_group_set(2)));
  expect_all_pass(check_hopf(cyclic_group_set(3)));
  auto sw = sweedler_algebra();
  EXPECT_EQ(sw.carrier.dim, 4u);
  expect_all_pass(check_hopf(sw));
  auto gn = graded_nilpotent_algebra();
  EXPECT_EQ(gn.carrier, GrVect::obj(1, 1));
  EXPECT_EQ(gn.s.matrix, (RationalMatrix{{1, 0}, {0, -1}}));
  expect_all_pass(check_hopf(gn));
}

TEST(AlgebraHopf, SweedlerMultiplicationMatchesPresentation) {
  auto h = sweedler_algebra();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      Elem a{}, b{};
      a[i] = 1;
      b[j] = 1;
      Elem p = sweedler_mul(a, b);
      for (std::size_t r = 0; r < 4; ++r) EXPECT_EQ(h.m.matrix.at(r, i * 4 + j), p[r]) << i << "," << j;
    }
}

TEST(AlgebraHopf, SweedlerWithIdentityAntipodeFailsAtX) {
  auto h = sweedler_algebra();
  h.s = h.cat.id(h.carrier);
  auto r = check_hopf(h);
  const LawResult* law = r.find("hopf.antipode");
  ASSERT_TRUE(law);
  EXPECT_EQ(law->verdict, Verdict::fail);
  ASSERT_TRUE(law->witness && law->witness->index);
  EXPECT_EQ(*law->witness->index, 2u);  // basis element x: m(x⊗1 + g⊗x) = x + gx ≠ 0
  EXPECT_EQ(law->witness->lhs, (std::vector<std::string>{"0/1", "0/1", "1/1", "1/1"}));
  EXPECT_EQ(r.find("hopf.bialgebra")->verdict, Verdict::pass);
}

TEST(AlgebraHopf, UngradedNilpotentIsNotABialgebra) {
  // the graded constants read in FinVect lose the Koszul sign
  auto g = graded_nilpotent_algebra();
  FinVect c;
  auto a = FinVect::obj(2);
  HopfAlgebraData<FinVect> h{"ungraded", c, a, c.from_matrix(c.tensor(a, a), a, g.m.matrix),
                             c.from_matrix(c.unit(), a, g.u.matrix), c.from_matrix(a, c.tensor(a, a), g.d.matrix),
                             c.from_matrix(a, c.unit(), g.e.matrix), c.from_matrix(a, a, g.s.matrix)};
  EXPECT_EQ(check_hopf(h).find("hopf.bialgebra")->verdict, Verdict::fail);
}

TEST(AlgebraHopf, ShapeMismatchIsContractViolation) {
  auto h = group_algebra(2);
  h.s = h.cat.id(FinVect::obj(3));
  EXPECT_THROW(check_hopf(h), ContractViolation);
}

TEST(AlgebraDualPair, Examples) {
  FinVect c;
  auto one = c.unit();
  EXPECT_TRUE(check_dual_pair(c, DualPairData<FinVect>{one, one, c.id(one), c.id(one)}));
  auto two = FinVect::obj(2);
  auto ev = c.from_matrix(c.tensor(two, two), one, RationalMatrix{{1, 0, 0, 1}});
  auto coev = c.from_matrix(one, c.tensor(two, two), RationalMatrix{{1}, {0}, {0}, {1}});
  EXPECT_TRUE(check_dual_pair(c, DualPairData<FinVect>{two, two, ev, coev}));
  EXPECT_FALSE(check_dual_pair(c, DualPairData<FinVect>{two, two, ev, c.scale(Rational(2), coev)}));
}

TEST(AlgebraDualPair, InducesTensorAdjunction) {
  FinVect c;
  auto one = c.unit();
  auto x = FinVect::obj(2);
  // a non-symmetric pairing and the copairing given by its inverse
  RationalMatrix p{{1, 2}, {0, 1}};
  RationalMatrix q = *try_inverse(p);
  RationalMatrix ev(1, 4), coev(4, 1);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      ev.set(0, i * 2 + j, p.at(i, j));
      coev.set(i * 2 + j, 0, q.at(i, j));  // Σ q_ij e_i⊗e_j
    }
  DualPairData<FinVect> dp{x, x, c.from_matrix(c.tensor(x, x), one, ev), c.from_matrix(one, c.tensor(x, x), coev)};
  ASSERT_TRUE(check_dual_pair(c, dp));
  for (std::size_t n : {0u, 1u, 2u, 3u}) {
    auto z = FinVect::obj(n);
    auto iz = c.id(z);
    // X⊗- ⊣ Y⊗- with unit coev⊗1 and counit ev⊗1
    auto left = c.compose(c.tensor(dp.ev, c.id(c.tensor(x, z))), tensor_all(c, c.id(x), dp.coev, iz));
    EXPECT_TRUE(c.equal(left, c.id(c.tensor(x, z))));
    auto right = c.compose(tensor_all(c, c.id(x), dp.ev, iz), c.tensor(dp.coev, c.id(c.tensor(x, z))));
    EXPECT_TRUE(c.equal(right, c.id(c.tensor(x, z))));
  }
}

TEST(AlgebraFrobenius, Examples) {
  FinVect c;
  auto one = c.unit();
  auto i1 = c.id(one);
  expect_all_pass(check_frobenius_monoid(c, FrobeniusData<FinVect>{one, i1, i1, i1, i1}));
  expect_all_pass(check_frobenius_monoid(c, nilpotent_frobenius()));
  auto h = group_algebra(2);
  auto r = check_frobenius_monoid(c, FrobeniusData<FinVect>{h.carrier, h.m, h.u, h.d, h.e});
  bool square_failed = r.find("frobenius.square_left")->verdict == Verdict::fail ||
                       r.find("frobenius.square_right")->verdict == Verdict::fail;
  EXPECT_TRUE(square_failed);
}

TEST(AlgebraFrobeniusSearch, CopyComonoidOnUnit) {
  FinVect c;
  auto one = c.unit();
  auto res = frobenius_structure_search(c, ComonoidData<FinVect>{one, c.id(one), c.id(one)});
  ASSERT_EQ(res.outcome, SearchOutcome::found);
  EXPECT_TRUE(c.equal(*res.u, c.id(one)));
  EXPECT_TRUE(c.equal(*res.m, c.id(one)));
}

TEST(AlgebraFrobeniusSearch, FoundStructuresPassTheChecker) {
  FinVect c;
  for (auto h : {group_algebra(2), group_algebra(3), sweedler_algebra()}) {
    auto res = frobenius_structure_search(c, h.comonoid());
    ASSERT_EQ(res.outcome, SearchOutcome::found) << h.name << " " << res.detail;
    expect_all_pass(check_frobenius_monoid(c, FrobeniusData<FinVect>{h.carrier, *res.m, *res.u, h.d, h.e}));
  }
  auto nf = nilpotent_frobenius();
  auto res = frobenius_structure_search(c, ComonoidData<FinVect>{nf.carrier, nf.d, nf.e});
  ASSERT_EQ(res.outcome, SearchOutcome::found);
  expect_all_pass(check_frobenius_monoid(c, FrobeniusData<FinVect>{nf.carrier, *res.m, *res.u, nf.d, nf.e}));
}

TEST(AlgebraFrobeniusSearch, GradedNilpotentRefuted) {
  auto h = graded_nilpotent_algebra();
  auto res = frobenius_structure_search(h.cat, h.comonoid());
  EXPECT_EQ(res.outcome, SearchOutcome::refuted) << res.detail;
  EXPECT_EQ(res.unit_space_dim, 1u);
  EXPECT_FALSE(res.u);
}

TEST(AlgebraFrobeniusSearch, BudgetGivesUndecided) {
  FinVect c;
  auto h = group_algebra(7);
  auto res = frobenius_structure_search(c, h.comonoid());
  EXPECT_EQ(res.outcome, SearchOutcome::undecided);
}
