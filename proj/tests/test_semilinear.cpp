#include <gtest/gtest.h>

#include "firwb/error.hpp"
#include "firwb/fir.hpp"
#include "gen.hpp"

using namespace firwb;

namespace {

RatFunc R(const char* s) { return parse_ratfunc(s); }

TruncElement I1(std::uint32_t level, std::initializer_list<std::pair<std::uint32_t, const char*>> cs) {
  TruncElement e(StdObject::I(1), level);
  for (auto [i, c] : cs) e.add(0, {i}, R(c));
  return e;
}

StdMap example_i2_i1() { return StdMap(StdObject::I(2), StdObject::I(1), {I1(2, {{1, "x2"}, {2, "x1"}})}); }

Perm random_perm(gen::Gen& g, std::size_t n) {
  Perm p = identity_perm(n);
  std::shuffle(p.begin(), p.end(), g.engine());
  return p;
}

}  // namespace

TEST(Semilinear, LevelDimensions) {
  for (std::uint32_t N = 0; N <= 8; ++N) {
    for (std::uint32_t r = 0; r <= 4; ++r) {
      EXPECT_EQ(StdObject::I(r).level_dim(N), binomial(N, r));
      EXPECT_EQ(StdObject::J(r).level_dim(N), falling(N, r));
      EXPECT_EQ(labels({Kind::J, r}, N).size(), falling(N, r));
    }
  }
}

TEST(Semilinear, CheckInvariance) {
  EXPECT_TRUE(check_invariance(I1(2, {{1, "x2"}, {2, "x1"}}), 2));
  EXPECT_FALSE(check_invariance(I1(2, {{1, "x2"}}), 2));
  EXPECT_TRUE(check_invariance(TruncElement::basis(StdObject::I(2), 2, 0, {1, 2}), 2));
  EXPECT_FALSE(check_invariance(I1(3, {{3, "1"}}), 2));
  EXPECT_THROW(StdMap(StdObject::I(2), StdObject::I(1), {I1(2, {{1, "x2"}})}), Error);
}

TEST(Semilinear, ApplyExamples) {
  StdMap f = example_i2_i1();
  EXPECT_EQ(apply(f, 0, {1, 3}, 3), I1(3, {{1, "x3"}, {3, "x1"}}));
  StdMap id = StdMap::identity(StdObject::I(2));
  EXPECT_EQ(apply(id, 0, {2, 4}, 5), TruncElement::basis(StdObject::I(2), 5, 0, {2, 4}));
  StdMap r = realize(FirMorphism::single(1, 2, {1}, R("t2")));
  EXPECT_EQ(apply(r, 0, {2, 3}, 3), TruncElement::basis(StdObject::J(1), 3, 0, {2}).scaled(R("x3")));
  EXPECT_THROW(apply(f, 0, {3, 1}, 3), Error);
  EXPECT_THROW(apply(f, 0, {1, 4}, 3), Error);
}

TEST(Semilinear, ApplyIndependentOfExtension) {
  // any permutation carrying [r] onto the label gives the same image
  StdMap f = example_i2_i1();
  for (const auto& sigma : all_perms(4)) {
    Label l = {sigma[0], sigma[1]};
    std::sort(l.begin(), l.end());
    EXPECT_EQ(apply(f, 0, l, 4), f.images()[0].at_level(4).act(sigma));
  }
}

TEST(Semilinear, LevelMatrixExamples) {
  EXPECT_EQ(level_matrix(StdMap::identity(StdObject::I(1)), 3), ExactMatrix::identity(3));
  ExactMatrix m = level_matrix(example_i2_i1(), 3);
  // columns {1,2},{1,3},{2,3}
  EXPECT_EQ(m.column(1), (Vec{R("x3"), R("0"), R("x1")}));
  EXPECT_THROW(level_matrix(example_i2_i1(), 1), Error);
}

TEST(Semilinear, EquivarianceProperty) {
  gen::Gen g;
  for (int k = 0; k < 20; ++k) {
    std::uint32_t N = 3 + static_cast<std::uint32_t>(g.index(3));
    auto f = realize(gen::random_fir(g, 1 + static_cast<std::uint32_t>(g.index(2)), 3, 2));
    auto labs = labels(f.source().summands[0], N);
    Label l = labs[g.index(labs.size())];
    Perm s = random_perm(g, N);
    Label sl(l.size());
    for (std::size_t i = 0; i < l.size(); ++i) sl[i] = s[l[i] - 1];
    EXPECT_EQ(apply(f, 0, sl, N), apply(f, 0, l, N).act(s));
  }
}

TEST(Semilinear, CompositionIsMatrixProduct) {
  StdMap f = example_i2_i1();
  StdMap g(StdObject::I(1), StdObject::I(0),
           {[] {
             TruncElement e(StdObject::I(0), 1);
             e.add(0, {}, R("x1^2 + 1"));
             return e;
           }()});
  for (std::uint32_t N = 2; N <= 5; ++N) EXPECT_EQ(level_matrix(compose(g, f), N), level_matrix(g, N) * level_matrix(f, N));
}

TEST(Semilinear, HomBasisCounts) {
  for (std::uint32_t r = 0; r <= 5; ++r) {
    for (std::uint32_t s = 0; s <= 5; ++s) {
      HomBasis hb = hom_basis(r, s);
      EXPECT_EQ(hb.k_basis.size(), binomial(r, s));
      EXPECT_EQ(hb.invariant.size(), binomial(r, s));
      for (const auto& e : hb.invariant) EXPECT_TRUE(check_invariance(e, r));
    }
  }
}

TEST(Semilinear, ShiftDecomposition) {
  ShiftDecomposition sd1(1);
  auto y = sd1.forward(TruncElement::basis(StdObject::I(1), 4, 0, {1}));
  EXPECT_EQ(y, TruncElement::basis(sd1.split_object(), 3, 1, {}));
  ShiftDecomposition sd2(2);
  EXPECT_EQ(sd2.forward(TruncElement::basis(StdObject::I(2), 4, 0, {1, 3})),
            TruncElement::basis(sd2.split_object(), 3, 1, {2}));
  for (std::uint32_t r = 1; r <= 4; ++r) {
    ShiftDecomposition sd(r);
    for (std::uint32_t N = r; N <= 6; ++N) {
      ExactMatrix f = sd.forward_matrix(N), b = sd.backward_matrix(N);
      EXPECT_EQ(f * b, ExactMatrix::identity(f.rows()));
      EXPECT_EQ(b * f, ExactMatrix::identity(b.rows()));
    }
  }
}

TEST(Semilinear, ShiftRoundTripAndEquivarianceProperty) {
  gen::Gen g;
  for (int k = 0; k < 20; ++k) {
    std::uint32_t r = 1 + static_cast<std::uint32_t>(g.index(3));
    std::uint32_t N = r + static_cast<std::uint32_t>(g.index(3));
    ShiftDecomposition sd(r);
    TruncElement x(StdObject::I(r), N + 1);
    auto labs = labels({Kind::I, r}, N + 1);
    std::vector<Var> vars;
    for (std::uint32_t i = 1; i <= N + 1; ++i) vars.push_back(xi(i));
    for (int t = 0; t < 3; ++t) x.add(0, labs[g.index(labs.size())], g.ratfunc(vars, 2));
    EXPECT_EQ(sd.backward(sd.forward(x)), x);
    Perm s = random_perm(g, N);
    EXPECT_EQ(sd.forward(x.act(ShiftDecomposition::sharp(s))), sd.forward(x).act(s));
  }
}

TEST(Semilinear, OmegaToSigma) {
  EXPECT_EQ(omega_to_sigma(StdObject::I(0), 1, 1).rows(), 1u);
  ExactMatrix m = omega_to_sigma(StdObject::I(1), 1, 4);
  EXPECT_EQ(m.rows(), 4u);
  EXPECT_EQ(rank(m), 3u);
  EXPECT_TRUE(m.row(0) == Vec(3));
  EXPECT_THROW(omega_to_sigma(StdObject::I(2), 2, 3), Error);
  for (const auto& obj : {StdObject::I(0), StdObject::I(1), StdObject::I(2), StdObject::J(1)}) {
    for (std::uint32_t n = 1; n <= 2; ++n) {
      for (std::uint32_t N = n + obj.max_degree(); N <= 7; ++N) {
        ExactMatrix a = omega_to_sigma(obj, n, N);
        EXPECT_EQ(rank(a), a.cols());
      }
    }
  }
}

TEST(Semilinear, GeneratedInDegree) {
  StdMap z = StdMap::zero(StdObject{}, StdObject::I(1));
  EXPECT_TRUE(generated_in_degree(z, 1, 3));
  EXPECT_FALSE(generated_in_degree(z, 0, 3));
  EXPECT_THROW(generated_in_degree(z, 2, 3), Error);
  StdMap phi2 = phi_decomposed(2);
  EXPECT_TRUE(generated_in_degree(phi2, 1, 5));
  EXPECT_FALSE(generated_in_degree(phi2, 0, 5));
}

TEST(Semilinear, JStructure) {
  for (std::uint32_t n = 0; n <= 2; ++n) {
    JStructure js = j_structure(n);
    EXPECT_EQ(js.to_j.source().summands.size(), falling(n, n));
    for (std::uint32_t N = n; N <= 5; ++N) {
      ExactMatrix a = level_matrix(js.to_j, N), b = level_matrix(js.from_j, N);
      EXPECT_EQ(a * b, ExactMatrix::identity(a.rows()));
      EXPECT_EQ(b * a, ExactMatrix::identity(b.rows()));
    }
  }
}
