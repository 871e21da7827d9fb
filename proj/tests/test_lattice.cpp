#include <gtest/gtest.h>

#include "firwb/error.hpp"
#include "firwb/firmod.hpp"
#include "firwb/functional.hpp"
#include "gen.hpp"
#include "oracles.hpp"
#include "presentations.hpp"

using namespace firwb;
using pres::R;

namespace {

SubspaceV span(std::initializer_list<const char*> fs) {
  std::vector<RatFunc> v;
  for (auto f : fs) v.push_back(R(f));
  return SubspaceV::from_functions(v);
}

RatFunc random_t(gen::Gen& g, unsigned deg) {
  RatFunc f = g.ratfunc({tvar(1)}, deg);
  if (g.coin()) f = RatFunc(f.num());
  return f;
}

}  // namespace

TEST(Functional, ConstantsAndShifts) {
  FunctionalSystem sys(tvar(1), 0);
  sys.add_function(Poly(1), 4);
  std::size_t c = sys.add_constant();
  // f(t1) - f(t2) = 0 and f(t1) = c
  sys.add_equation({{R("1"), false, 0, tvar(1)}, {R("-1"), false, 0, tvar(2)}});
  sys.add_equation({{R("1"), false, 0, tvar(1)}, {R("-1"), true, c, Var()}});
  auto sol = sys.solve();
  ASSERT_EQ(sol.size(), 1u);
  EXPECT_TRUE(sol[0].functions[0] == RatFunc(sol[0].constants[0]));
}

TEST(Functional, UnivariateContent) {
  EXPECT_EQ(univariate_content(R("(t1 - 1)*t2 + (t1 - 1)*t1").num(), tvar(1).id()).monic(), R("t1 - 1").num());
  EXPECT_TRUE(univariate_content(R("t2").num(), tvar(1).id()).is_constant());
}

TEST(Lattice, KernelExamples) {
  EXPECT_EQ(kernel_from_P1({FirMorphism::identity(1)}, 6).dim(), 0u);
  FirMorphism f = FirMorphism::single(1, 2, {1}, R("1")) - FirMorphism::single(1, 2, {2}, R("1"));
  EXPECT_EQ(kernel_from_P1({f}, 6), span({"1"}));
  FirMorphism g = FirMorphism::single(1, 2, {1}, R("t2")) - FirMorphism::single(1, 2, {2}, R("t1"));
  SubspaceV v = kernel_from_P1({g}, 6);
  EXPECT_EQ(v, span({"t1"}));
  EXPECT_EQ(v.complete_up_to_degree, 6u);
}

TEST(Lattice, KernelFindsDenominators) {
  // c(t1) (t2 - 1) = c(t2) (t1 - 1) forces c in k / (t - 1)
  FirMorphism f = FirMorphism::single(1, 2, {1}, R("t2 - 1")) - FirMorphism::single(1, 2, {2}, R("t1 - 1"));
  EXPECT_EQ(kernel_from_P1({f}, 3), span({"t1 - 1"}));
  FirMorphism h = FirMorphism::single(1, 2, {1}, R("1/(t2 + 2)")) - FirMorphism::single(1, 2, {2}, R("1/(t1 + 2)"));
  EXPECT_EQ(kernel_from_P1({h}, 3), span({"1/(t1 + 2)"}));
}

TEST(Lattice, KernelMatchesOracle) {
  gen::Gen g(gen::seed() + 11);
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<FirMorphism> fs;
    if (trial % 3 == 0) {
      fs.push_back(gen::random_fir(g, 1, 1 + static_cast<std::uint32_t>(g.index(3)), 2));
    } else {
      std::vector<RatFunc> basis;
      std::size_t n = 1 + g.index(2);
      for (std::size_t k = 0; k < n; ++k) basis.push_back(random_t(g, 2));
      SubspaceV v;
      try {
        v = SubspaceV::from_functions(basis);
      } catch (const Error&) {
        continue;
      }
      fs.push_back(oracle::fir_of_generator(subspace_to_generator(v)));
    }
    SubspaceV got = kernel_from_P1(fs, 6);
    SubspaceV want = oracle::p1_kernel(fs, 6, gen::seed() + trial);
    EXPECT_EQ(got, want) << "trial " << trial;
    for (const auto& c : got.basis) EXPECT_TRUE(annihilated_by(c, fs));
  }
}

TEST(Lattice, GeneratorExamples) {
  EXPECT_EQ(subspace_to_generator(span({"1"})), [] {
    TruncElement e(StdObject::I(1), 2);
    e.add(0, {1}, R("1"));
    e.add(0, {2}, R("-1"));
    return e;
  }());
  TruncElement g = subspace_to_generator(span({"t1"}));
  EXPECT_EQ(g.get(0, {1}), R("x2"));
  EXPECT_EQ(g.get(0, {2}), R("-x1"));
  TruncElement h = subspace_to_generator(span({"1", "t1"}));
  EXPECT_EQ(h.get(0, {1}), R("x2 - x3"));
  EXPECT_EQ(h.get(0, {2}), R("-(x1 - x3)"));
  EXPECT_EQ(h.get(0, {3}), R("x1 - x2"));
  EXPECT_THROW(SubspaceV::from_functions({R("t1"), R("2*t1")}), Error);
}

TEST(Lattice, SubspaceExamples) {
  EXPECT_EQ(generator_to_subspace({subspace_to_generator(span({"1"}))}, 6), span({"1"}));
  EXPECT_EQ(generator_to_subspace({subspace_to_generator(span({"t1"}))}, 6), span({"t1"}));
  TruncElement whole = TruncElement::basis(StdObject::I(1), 1, 0, {1});
  EXPECT_EQ(generator_to_subspace({whole}, 6).dim(), 0u);
}

TEST(Lattice, RoundtripAndCodimension) {
  gen::Gen g(gen::seed() + 12);
  int done = 0;
  for (int trial = 0; trial < 12; ++trial) {
    std::size_t n = 1 + g.index(3);
    std::vector<RatFunc> basis;
    for (std::size_t k = 0; k < n; ++k) basis.push_back(random_t(g, n == 3 ? 2 : 3));
    SubspaceV v;
    try {
      v = SubspaceV::from_functions(basis);
    } catch (const Error&) {
      continue;
    }
    TruncElement gen = subspace_to_generator(v);
    EXPECT_EQ(generator_to_subspace({gen}, 3), v) << "trial " << trial;
    for (std::uint32_t N = n + 1; N <= n + 4; ++N) {
      auto cert = codim_certificate(v, gen, N);
      EXPECT_TRUE(cert.holds(n)) << "trial " << trial << " N " << N << " rank " << cert.span_rank;
    }
    ++done;
  }
  EXPECT_GE(done, 8);
}

TEST(Lattice, OrderReversal) {
  gen::Gen g(gen::seed() + 13);
  for (int trial = 0; trial < 6; ++trial) {
    RatFunc a = random_t(g, 2), b = random_t(g, 2);
    SubspaceV small, big;
    try {
      small = SubspaceV::from_functions({a});
      big = SubspaceV::from_functions({a, b});
    } catch (const Error&) {
      continue;
    }
    ASSERT_TRUE(big.contains(small));
    TruncElement gs = subspace_to_generator(small), gb = subspace_to_generator(big);
    EXPECT_TRUE(apply_functional(a, gb).is_zero());
    // span of big's translates inside span of small's at level 4
    const std::uint32_t N = 4;
    IndependenceTracker tr(N, 0, false);
    for (const auto& inj : labels({Kind::J, 2}, N)) {
      Perm p(inj.begin(), inj.end());
      for (std::uint32_t i = 1; i <= N; ++i) {
        if (std::find(p.begin(), p.end(), i) == p.end()) p.push_back(i);
      }
      tr.add(gs.at_level(N).act(p).to_vector());
    }
    EXPECT_EQ(tr.rank(), N - 1);
    for (const auto& inj : labels({Kind::J, 3}, N)) {
      Perm p(inj.begin(), inj.end());
      for (std::uint32_t i = 1; i <= N; ++i) {
        if (std::find(p.begin(), p.end(), i) == p.end()) p.push_back(i);
      }
      EXPECT_FALSE(tr.add(gb.at_level(N).act(p).to_vector()));
    }
  }
}
