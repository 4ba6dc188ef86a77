#include <gtest/gtest.h>

#include <random>

#include "catfrob/category.hpp"
#include "catfrob/probes.hpp"

using namespace catfrob;

TEST(CategoriesFinVect, SymmetryExamples) {
  FinVect c;
  EXPECT_EQ(c.symmetry(FinVect::obj(1), FinVect::obj(3)).matrix, RationalMatrix::identity(3));
  // (i,k) ↦ (k,i) on 2⊗2 swaps the middle basis vectors e01 and e10
  RationalMatrix expected{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};
  EXPECT_EQ(c.symmetry(FinVect::obj(2), FinVect::obj(2)).matrix, expected);
}

TEST(CategoriesFinVect, EqualizerExamples) {
  FinVect c;
  auto f = c.from_matrix(FinVect::obj(2), FinVect::obj(1), RationalMatrix{{1, 0}});
  auto g = c.from_matrix(FinVect::obj(2), FinVect::obj(1), RationalMatrix{{0, 1}});
  auto [e, inc] = c.equalizer(f, g);
  EXPECT_EQ(e.dim, 1u);
  EXPECT_EQ(inc.matrix, (RationalMatrix{{1}, {1}}));
  auto [e2, inc2] = c.equalizer(f, f);
  EXPECT_EQ(e2.dim, 2u);
  EXPECT_TRUE(c.equal(inc2, c.id(FinVect::obj(2))));
  EXPECT_THROW(c.equalizer(f, c.id(FinVect::obj(2))), ContractViolation);
}

TEST(CategoriesFinVect, RejectsBadShapes) {
  FinVect c;
  EXPECT_THROW(c.from_matrix(FinVect::obj(2), FinVect::obj(2), RationalMatrix(2, 3)), ContractViolation);
  EXPECT_THROW(c.compose(c.id(FinVect::obj(2)), c.id(FinVect::obj(3))), ContractViolation);
}

TEST(CategoriesFinSet, EqualizerExample) {
  FinSet c;
  auto f = c.make(FinSet::obj(3), FinSet::obj(2), {0, 0, 1});
  auto g = c.make(FinSet::obj(3), FinSet::obj(2), {0, 1, 1});
  auto [e, inc] = c.equalizer(f, g);
  EXPECT_EQ(e.size, 2u);
  EXPECT_EQ(inc.table, (std::vector<std::size_t>{0, 2}));
  EXPECT_THROW(c.make(FinSet::obj(2), FinSet::obj(1), {0, 1}), ContractViolation);
}

TEST(CategoriesFinSet, TensorAndSymmetryTables) {
  FinSet c;
  auto s = c.symmetry(FinSet::obj(2), FinSet::obj(3));
  // (x,y) = 3x+y goes to (y,x) = 2y+x
  EXPECT_EQ(s.table, (std::vector<std::size_t>{0, 2, 4, 1, 3, 5}));
  auto f = c.make(FinSet::obj(2), FinSet::obj(2), {1, 0});
  auto g = c.make(FinSet::obj(1), FinSet::obj(3), {2});
  EXPECT_EQ(c.tensor(f, g).table, (std::vector<std::size_t>{5, 2}));
}

TEST(CategoriesGrVect, KoszulSign) {
  GrVect c;
  auto odd = GrVect::obj(0, 1);
  EXPECT_EQ(c.symmetry(odd, odd).matrix, (RationalMatrix{{-1}}));
  auto x = GrVect::obj(1, 1);
  // basis of x⊗x: (0,0) even, (0,1) odd, (1,0) odd, (1,1) even
  EXPECT_EQ(c.tensor(x, x).degrees, (std::vector<std::uint8_t>{0, 1, 1, 0}));
  RationalMatrix expected{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, -1}};
  EXPECT_EQ(c.symmetry(x, x).matrix, expected);
  EXPECT_TRUE(c.equal(c.compose(c.symmetry(x, x), c.symmetry(x, x)), c.id(c.tensor(x, x))));
}

TEST(CategoriesGrVect, RejectsDegreeViolations) {
  GrVect c;
  EXPECT_THROW(c.from_matrix(GrVect::obj(1, 0), GrVect::obj(0, 1), RationalMatrix{{1}}), ContractViolation);
  EXPECT_NO_THROW(c.from_matrix(GrVect::obj(1, 1), GrVect::obj(1, 1), RationalMatrix{{2, 0}, {0, 3}}));
}

TEST(CategoriesGrVect, DegreewiseEqualizer) {
  GrVect c;
  auto x = GrVect::obj(2, 1);
  auto f = c.from_matrix(x, GrVect::obj(1, 1), RationalMatrix{{1, 1, 0}, {0, 0, 0}});
  auto z = c.zero(x, GrVect::obj(1, 1));
  auto [e, inc] = c.equalizer(f, z);
  EXPECT_EQ(e.degrees, (std::vector<std::uint8_t>{0, 1}));
  EXPECT_EQ(inc.matrix, (RationalMatrix{{-1, 0}, {1, 0}, {0, 1}}));
  EXPECT_TRUE(c.is_homogeneous(e, x, inc.matrix));
}

TEST(CategoriesProbes, EnumerationRule) {
  EXPECT_EQ(probe_objects(FinVect{}, 7, 4), (std::vector<FinVect::Obj>{{1}, {0}, {2}, {3}}));
  EXPECT_EQ(probe_objects(FinVect{}, 99, 4), probe_objects(FinVect{}, 1, 4));
  EXPECT_EQ(probe_objects(FinSet{}, 42, 3), (std::vector<FinSet::Obj>{{1}, {0}, {2}}));
  EXPECT_EQ(probe_objects(GrVect{}, 42, 4),
            (std::vector<GrVect::Obj>{GrVect::obj(1, 0), GrVect::obj(0, 0), GrVect::obj(0, 1), GrVect::obj(1, 1)}));
  EXPECT_EQ(probe_objects(GrVect{}, 42, 100).size(), 10u);
  EXPECT_THROW(probe_objects(FinVect{}, 1, 0), ContractViolation);
}

TEST(CategoriesProbes, MorphismsAreSeedDeterministic) {
  FinVect c;
  auto objs = probe_objects(c, 1, 4);
  auto a = probe_morphisms(c, objs, 42);
  auto b = probe_morphisms(c, objs, 42);
  auto d = probe_morphisms(c, objs, 43);
  ASSERT_EQ(a.size(), 48u);
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_TRUE(c.equal(a[i], b[i]));
    differs = differs || !c.equal(a[i], d[i]);
  }
  EXPECT_TRUE(differs);
}

template <class C>
void expect_category_laws(std::size_t budget) {
  C c;
  auto objs = probe_objects(c, 5, budget);
  auto mors = probe_morphisms(c, objs, 5, 2);
  auto report = check_category_laws(c, objs, mors);
  for (const auto& law : report.laws()) {
    EXPECT_EQ(law.verdict, Verdict::pass) << law.id << " " << (law.witness ? law.witness->context : "");
    EXPECT_GT(law.instances, 0u) << law.id;
  }
  EXPECT_TRUE(report.find("symmetry.hexagon"));
}

TEST(CategoriesLaws, FinVect) { expect_category_laws<FinVect>(4); }
TEST(CategoriesLaws, FinSet) { expect_category_laws<FinSet>(4); }
TEST(CategoriesLaws, GrVect) { expect_category_laws<GrVect>(5); }

// Universal property: maps through the equalizer factor uniquely; other maps do not factor.
template <class C>
void expect_equalizer_universal(std::uint64_t seed) {
  C c;
  std::mt19937_64 rng(seed);
  auto objs = probe_objects(c, seed, 4);
  for (const auto& x : objs)
    for (const auto& y : objs) {
      if (c.size(y) == 0 && c.size(x) > 0) continue;
      for (int trial = 0; trial < 3; ++trial) {
        auto f = random_morphism(c, x, y, rng);
        auto g = trial == 0 ? f : random_morphism(c, x, y, rng);
        auto [e, inc] = c.equalizer(f, g);
        EXPECT_LE(c.size(e), c.size(x));
        EXPECT_TRUE(c.is_mono(inc));
        EXPECT_TRUE(c.equal(c.compose(f, inc), c.compose(g, inc)));
        for (const auto& w : objs) {
          if (c.size(e) == 0 && c.size(w) > 0) continue;
          auto k = random_morphism(c, w, e, rng);
          auto h = c.compose(inc, k);
          auto fac = c.factor_through(inc, h);
          ASSERT_TRUE(fac);
          EXPECT_TRUE(c.equal(*fac, k));
          if (c.size(x) == 0) continue;
          auto other = random_morphism(c, w, x, rng);
          bool equalizes = c.equal(c.compose(f, other), c.compose(g, other));
          EXPECT_EQ(c.factor_through(inc, other).has_value(), equalizes);
        }
      }
    }
}

TEST(CategoriesEqualizer, UniversalFinVect) { expect_equalizer_universal<FinVect>(3); }
TEST(CategoriesEqualizer, UniversalFinSet) { expect_equalizer_universal<FinSet>(4); }
TEST(CategoriesEqualizer, UniversalGrVect) { expect_equalizer_universal<GrVect>(5); }
