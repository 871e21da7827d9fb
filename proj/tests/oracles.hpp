#pragma once

#include <random>

#include "firwb/firmod.hpp"
#include "firwb/matrix.hpp"

namespace oracle {

using namespace firwb;

inline std::optional<Scalar> eval(const RatFunc& f, const std::map<std::uint32_t, Scalar>& pt) {
  Scalar d = f.den().substitute(pt).constant_value();
  if (d.is_zero()) return std::nullopt;
  return f.num().substitute(pt).constant_value() / d;
}

/// Multiple of the k[v]-content of f: gcd of two random specializations
/// of the other variables.
inline Poly content_multiple(const Poly& f, Var v, std::mt19937_64& rng) {
  Poly g;
  for (int k = 0; k < 2; ++k) {
    std::map<std::uint32_t, Scalar> pt;
    for (auto id : f.variables()) {
      if (id != v.id()) pt[id] = Scalar(static_cast<long>(rng() % 2001) - 1000);
    }
    g = Poly::gcd(g, f.substitute(pt));
  }
  Poly t = g.rename([&](std::uint32_t id) { return id == v.id() ? tvar(1).id() : id; });
  return t.is_zero() ? Poly(1) : t.monic();
}

/// Kernel of c -> (c [empty]) o f_i over Q, by evaluation at random points
/// with a generous denominator and numerator degree D + deg.
inline SubspaceV p1_kernel(const std::vector<FirMorphism>& fs, std::uint32_t D, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::map<std::uint32_t, RatFunc>> eqs;
  Poly q(1);
  std::uint32_t m = 1;
  for (const auto& f : fs) {
    std::map<std::uint32_t, RatFunc> a;
    for (const auto& [phi, c] : f.terms()) a[phi[0]] = a[phi[0]] + c;
    for (const auto& [j, aj] : a) {
      q = q * content_multiple(aj.num(), tvar(j), rng);
      for (const auto& [k, ak] : a) q = q * content_multiple(ak.den(), tvar(j), rng);
    }
    m = std::max(m, f.target());
    eqs.push_back(std::move(a));
  }
  const std::uint32_t deg = D + q.degree_in(tvar(1).id());
  const std::size_t unknowns = deg + 1;
  std::vector<Vec> rows;
  for (const auto& a : eqs) {
    std::size_t got = 0;
    while (got < unknowns + 6) {
      std::map<std::uint32_t, Scalar> pt;
      for (std::uint32_t i = 1; i <= m; ++i) pt[tvar(i).id()] = Scalar(static_cast<long>(rng() % 100001) - 50000);
      Vec row(unknowns);
      bool ok = true;
      for (const auto& [j, aj] : a) {
        auto av = eval(aj, pt);
        Scalar x = pt[tvar(j).id()];
        Scalar qx = q.substitute({{tvar(1).id(), x}}).constant_value();
        if (!av || qx.is_zero()) {
          ok = false;
          break;
        }
        Scalar w = *av / qx;
        for (std::size_t e = 0; e < unknowns; ++e) {
          row[e] = row[e] + RatFunc(w);
          w = w * x;
        }
      }
      if (!ok) continue;
      rows.push_back(std::move(row));
      ++got;
    }
  }
  std::vector<RatFunc> fsol;
  if (rows.empty()) return SubspaceV{};
  ExactMatrix mat(rows.size(), unknowns);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t e = 0; e < unknowns; ++e) mat(r, e) = rows[r][e];
  }
  for (const auto& v : kernel_basis(mat)) {
    Poly num;
    Poly pw(1);
    for (std::size_t e = 0; e < unknowns; ++e) {
      if (!v[e].is_zero()) num += pw.scaled(v[e].constant_value());
      pw = pw * Poly::variable(tvar(1));
    }
    fsol.push_back(RatFunc::normalize(num, q));
  }
  return SubspaceV::from_functions(fsol);
}

/// The map [1] -> [n+1] whose kernel condition is the functional
/// condition of g.
inline FirMorphism fir_of_generator(const TruncElement& g) {
  FirMorphism f(1, g.level());
  for (const auto& [coord, c] : g.coords()) f.add_term(coord.second, xi_to_t(c));
  return f;
}

}  // namespace oracle
