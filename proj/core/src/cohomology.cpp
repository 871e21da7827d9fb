#include "firwb/cohomology.hpp"

#include "firwb/error.hpp"

namespace firwb {

namespace {

bool only_xi_upto(const RatFunc& f, std::uint32_t n) {
  for (auto id : f.variables()) {
    Var v = Var::from_id(id);
    if (v.family() != Family::xi || v.index() > n) return false;
  }
  return true;
}

// Candidate base-field points 0, 1, -1, 2, -2, ...
Scalar candidate(std::uint64_t k, std::uint64_t p) {
  long v = static_cast<long>((k + 1) / 2);
  if (k % 2 == 0) v = -v;
  return p ? Scalar::modular(v, p) : Scalar(v);
}

}  // namespace

Split split_symmetric_cocycle(const RatFunc& f) {
  if (!only_xi_upto(f, 2)) fail(ErrorKind::InvalidInput, "expected a function of x1 and x2");
  RatFunc fxy = f;
  RatFunc fyz = f.rename_indices(Family::xi, {{1, 2}, {2, 3}});
  RatFunc fxz = f.rename_indices(Family::xi, {{2, 3}});
  if (fxy + fyz != fxz) fail(ErrorKind::NotACocycle, "f(x,y) + f(y,z) != f(x,z)");
  const std::uint64_t p = f.modulus();
  // Over Q a bad point is a root of the x1- or x2-leading coefficient of the
  // denominator, so a short scan always succeeds.
  std::uint64_t tries = p ? p : 2 * (f.den().total_degree() + 1) + 1;
  for (std::uint64_t k = 0; k < tries; ++k) {
    Scalar y0 = candidate(k, p);
    try {
      RatFunc g = f.eval_at({{xi(2), y0}});
      RatFunc h = f.eval_at({{xi(1), y0}}).rename_indices(Family::xi, {{2, 1}});
      // a point where a denominator factor specializes to zero leaves a
      // rational function that no longer reassembles f
      if (g + h.rename_indices(Family::xi, {{1, 2}}) != f) continue;
      return {g, h, y0};
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::DenominatorVanishes) throw;
    }
  }
  fail(ErrorKind::NoGoodPoint, "every candidate point is a pole");
}

std::vector<TruncElement> transposition_values(const TruncElement& c12) {
  TruncElement c = c12.at_level(3);
  TruncElement c13 = c.act(transposition(3, 2, 3));
  TruncElement c23(c.object(), 3);
  return {c, c13, c23};
}

bool satisfies_cocycle_relations(const TruncElement& c12) {
  TruncElement c = c12.at_level(3);
  TruncElement inv = c;
  inv += c.act(transposition(3, 1, 2));
  if (!inv.is_zero()) return false;
  TruncElement braid = c.act(transposition(3, 2, 3));
  braid += c.act(transposition(3, 1, 3));
  return braid == c;
}

bool verify_coboundary(const TruncElement& c12, const TruncElement& b) {
  auto vals = transposition_values(c12);
  TruncElement b3 = b.at_level(3);
  const Perm ts[3] = {transposition(3, 1, 2), transposition(3, 1, 3), transposition(3, 2, 3)};
  for (int k = 0; k < 3; ++k) {
    TruncElement d = b3;
    d -= b3.act(ts[k]);
    if (d != vals[k]) return false;
  }
  return true;
}

CocycleSolution solve_transposition_cocycle(std::uint32_t r, const TruncElement& c12) {
  if (c12.object().summands.size() != 1 || !(c12.object().summands[0] == Summand{Kind::I, r}))
    fail(ErrorKind::ObjectMismatch, "cocycle value must lie in I^r");
  if (c12.level() != 2) fail(ErrorKind::InvalidInput, "cocycle value must be given at level 2");
  for (const auto& [k, c] : c12.coords()) {
    if (!only_xi_upto(c, 2)) fail(ErrorKind::InvalidInput, "cocycle value must have coefficients in x1, x2");
  }
  CocycleSolution sol;
  if (r >= 2) {
    if (!c12.is_zero()) fail(ErrorKind::NonZeroObstruction, "a cocycle into I^r with r >= 2 must vanish");
    sol.zero = true;
    return sol;
  }
  if (c12.is_zero()) {
    sol.zero = true;
    return sol;
  }
  if (!satisfies_cocycle_relations(c12)) fail(ErrorKind::NotACocycle, "transposition relations fail");
  TruncElement b(StdObject::I(r), 1);
  if (r == 0) {
    Split s = split_symmetric_cocycle(c12.get(0, {}));
    b.add(0, {}, s.g);
  } else {
    RatFunc h = c12.get(0, {1});
    if (!only_xi_upto(h, 1)) fail(ErrorKind::NotACocycle, "e1 coefficient depends on x2");
    b.add(0, {1}, h);
  }
  if (!verify_coboundary(c12, b)) fail(ErrorKind::NotACocycle, "recovered generator does not reproduce the cocycle");
  sol.generator = std::move(b);
  return sol;
}

}  // namespace firwb
