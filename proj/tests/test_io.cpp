#include <gtest/gtest.h>

#include "firwb/io.hpp"
#include "gen.hpp"
#include "presentations.hpp"

using namespace firwb;
using io::Json;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST(Io, DocumentedLayouts) {
  auto f = io::fir_from_json(Json::parse(R"({"source":1,"target":2,"terms":[{"inj":[1],"coef":"t2"}]})"), 0);
  EXPECT_EQ(io::to_json(f).dump(), R"({"source":1,"target":2,"terms":[{"inj":[1],"coef":"t2"}]})");

  auto e = io::element_from_json(
      Json::parse(R"({"level":3,"coords":[{"summand":0,"label":[1,3],"coef":"x3"}]})"), 0,
      [] { static StdObject o = StdObject::I(2); return &o; }());
  EXPECT_EQ(e.get(0, {1, 3}), parse_ratfunc("x3"));
  EXPECT_EQ(io::to_json(e).dump(), R"({"level":3,"coords":[{"summand":0,"label":[1,3],"coef":"x3"}],"object":["I2"]})");

  EXPECT_EQ(io::to_json(ClassVector{{0, -1}, {1, 1}}).dump(), R"({"0":-1,"1":1})");
  EXPECT_EQ(io::to_json(ClassVector{{2, 1}, {10, 3}}).dump(), R"({"2":1,"10":3})");
}

TEST(Io, FirRoundtrip) {
  gen::Gen g(gen::seed() + 40);
  for (int trial = 0; trial < 30; ++trial) {
    auto n = static_cast<std::uint32_t>(g.index(3));
    auto m = n + static_cast<std::uint32_t>(g.index(3));
    std::uint64_t p = trial % 3 == 0 ? 101 : 0;
    auto f = gen::random_fir(g, n, m, 2, p);
    EXPECT_EQ(io::fir_from_json(Json::parse(io::to_json(f).dump()), p), f);
  }
}

TEST(Io, PresentationRoundtrip) {
  for (const auto& [name, p] : pres::resolvable()) {
    auto q = io::presentation_from_json(Json::parse(io::to_json(p).dump()), 0);
    EXPECT_EQ(q.gens, p.gens) << name;
    EXPECT_EQ(q.rel_degrees, p.rel_degrees) << name;
    EXPECT_EQ(q.rels, p.rels) << name;
  }
  auto p = io::presentation_from_json(
      Json::parse(R"({"gens":[2,1],"rel_degrees":[0],"rels":[[null,{"source":0,"target":1,"terms":[{"inj":[]}]}]]})"), 0);
  ASSERT_EQ(p.rels.size(), 1u);
  EXPECT_FALSE(p.rels[0][0].has_value());
  EXPECT_EQ(p.rels[0][1]->coefficient({}), RatFunc(1));
}

TEST(Io, MapsAndElementsRoundtrip) {
  auto phi = phi_decomposed(2);
  EXPECT_EQ(io::map_from_json(Json::parse(io::to_json(phi).dump()), 0), phi);
  auto j = j_structure(2);
  EXPECT_EQ(io::map_from_json(io::to_json(j.to_j), 0), j.to_j);
  for (const auto& x : hom_basis(3, 2).invariant) {
    EXPECT_EQ(io::element_from_json(io::to_json(x), 0), x);
  }
}

TEST(Io, RepresentationRoundtrip) {
  gen::Gen g(gen::seed() + 41);
  for (int trial = 0; trial < 6; ++trial) {
    auto action = gen::random_action(g, 2 + g.index(2));
    auto rep = SemilinearRep::coboundary(action, gen::random_basis_change(g, action.n(), 1 + g.index(3), 1));
    auto back = io::rep_from_json(Json::parse(io::to_json(rep).dump()), 0);
    EXPECT_EQ(back.matrices(), rep.matrices());
  }
}

TEST(Io, SubspaceRoundtrip) {
  auto v = SubspaceV::from_functions({parse_ratfunc("1/(t1 + 1)"), parse_ratfunc("t1/(t1 + 1)")});
  v.complete_up_to_degree = 5;
  auto w = io::subspace_from_json(io::to_json(v), 0);
  EXPECT_EQ(w, v);
  EXPECT_EQ(w.complete_up_to_degree, 5u);
  EXPECT_EQ(io::subspace_from_json(Json::parse(R"(["1","t1"])"), 0).dim(), 2u);
}

TEST(Io, Errors) {
  EXPECT_EQ(kind_of([] { io::load("{\"gens\": [1,"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { io::load("/nonexistent/file.json"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { io::presentation_from_json(Json::parse("{}"), 0); }), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { io::fir_from_json(Json::parse(R"({"source":2,"target":2,"terms":[{"inj":[2,2]}]})"), 0); }),
            ErrorKind::NonInjectiveMap);
  EXPECT_EQ(kind_of([] { io::object_from_json(Json::parse(R"(["K1"])")); }), ErrorKind::InvalidInput);
  EXPECT_EQ(kind_of([] { io::ratfunc_from_json(Json("1/(t1 - t1)"), 0); }), ErrorKind::ZeroDenominator);
  EXPECT_EQ(kind_of([] { io::subspace_from_json(Json::parse(R"(["t1","2*t1"])"), 0); }), ErrorKind::DependentBasis);
  EXPECT_EQ(kind_of([] { io::class_from_json(Json::parse(R"({"x":1})")); }), ErrorKind::InvalidInput);
}

TEST(Io, ErrorPayloadUsesStableNames) {
  auto j = io::error_json(Error(ErrorKind::SyzygySearchExhausted, "x"));
  EXPECT_EQ(j["error"], "SyzygySearchExhausted");
}
