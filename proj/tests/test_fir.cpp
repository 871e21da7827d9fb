#include <gtest/gtest.h>

#include "firwb/error.hpp"
#include "firwb/fir.hpp"
#include "gen.hpp"

using namespace firwb;

namespace {
RatFunc R(const char* s) { return parse_ratfunc(s); }
}  // namespace

TEST(Fir, InjectionCounts) {
  EXPECT_EQ(injections(1, 1).size(), 1u);
  EXPECT_EQ(injections(2, 3).size(), 6u);
  EXPECT_TRUE(injections(3, 2).empty());
  for (std::uint32_t m = 0; m <= 6; ++m) {
    for (std::uint32_t n = 0; n <= m; ++n) {
      std::uint64_t expect = 1;
      for (std::uint32_t i = m - n + 1; i <= m; ++i) expect *= i;
      EXPECT_EQ(injections(n, m).size(), expect);
    }
  }
  auto l = injections(2, 3);
  EXPECT_TRUE(std::is_sorted(l.begin(), l.end()));
}

TEST(Fir, ComposeExamples) {
  FirMorphism f = FirMorphism::single(1, 2, {1}, R("1"));
  FirMorphism g = FirMorphism::single(2, 3, {1, 3}, R("t3"));
  EXPECT_EQ(compose(f, g), FirMorphism::single(1, 3, {1}, R("t3")));
  FirMorphism f2 = FirMorphism::single(1, 2, {1}, R("t2"));
  FirMorphism sw = FirMorphism::single(2, 2, {2, 1}, R("1"));
  EXPECT_EQ(compose(f2, sw), FirMorphism::single(1, 2, {2}, R("t1")));
  EXPECT_THROW(compose(f, f), Error);
}

TEST(Fir, RealizeExamples) {
  StdMap m = realize(FirMorphism::single(1, 2, {1}, R("t2")));
  EXPECT_EQ(m.images()[0], TruncElement::basis(StdObject::J(1), 2, 0, {1}).scaled(R("x2")));
  EXPECT_EQ(realize(FirMorphism::identity(3)), StdMap::identity(StdObject::J(3)));
  FirMorphism s = FirMorphism::single(1, 2, {1}, R("1")) + FirMorphism::single(1, 2, {2}, R("1"));
  ExactMatrix lm = level_matrix(realize(s), 2);
  // column of (1,2) is the first J^2 label
  EXPECT_EQ(lm(0, 0), R("1"));
  EXPECT_EQ(lm(1, 0), R("1"));
}

TEST(Fir, RealizeOracleForCompose) {
  FirMorphism f = FirMorphism::single(1, 2, {1}, R("1"));
  FirMorphism g = FirMorphism::single(2, 3, {1, 3}, R("t3"));
  EXPECT_EQ(level_matrix(realize(compose(f, g)), 4), level_matrix(realize(f), 4) * level_matrix(realize(g), 4));
}

TEST(Fir, CategoryLawsProperty) {
  gen::Gen g;
  for (int k = 0; k < 25; ++k) {
    std::uint32_t n = static_cast<std::uint32_t>(g.index(3));
    std::uint32_t m = n + static_cast<std::uint32_t>(g.index(2));
    std::uint32_t u = m + static_cast<std::uint32_t>(g.index(2));
    std::uint32_t w = u + static_cast<std::uint32_t>(g.index(2));
    auto f = gen::random_fir(g, n, m, 2);
    auto h = gen::random_fir(g, m, u, 2);
    auto q = gen::random_fir(g, u, w, 1);
    EXPECT_EQ(compose(compose(f, h), q), compose(f, compose(h, q)));
    EXPECT_EQ(compose(f, FirMorphism::identity(m)), f);
    EXPECT_EQ(compose(FirMorphism::identity(n), f), f);
  }
}

TEST(Fir, ContravariantFunctorialityProperty) {
  gen::Gen g;
  for (int k = 0; k < 15; ++k) {
    std::uint32_t n = 1 + static_cast<std::uint32_t>(g.index(2));
    std::uint32_t m = n + static_cast<std::uint32_t>(g.index(2));
    std::uint32_t u = m + static_cast<std::uint32_t>(g.index(2));
    auto f = gen::random_fir(g, n, m, 2);
    auto h = gen::random_fir(g, m, u, 2);
    std::uint32_t N = u + static_cast<std::uint32_t>(g.index(2));
    EXPECT_EQ(level_matrix(realize(compose(f, h)), N), level_matrix(realize(f), N) * level_matrix(realize(h), N));
    EXPECT_EQ(realize(compose(f, h)), compose(realize(f), realize(h)));
  }
}
