#include <algorithm>

#include "firwb/error.hpp"
#include "firwb/firmod.hpp"
#include "firwb/functional.hpp"
#include "firwb/matrix.hpp"
#include "firwb/perm.hpp"

namespace firwb {

namespace {

const Var kT = tvar(1);

std::uint64_t modulus_of(const RatFunc& c) { return c.num().modulus(); }

Poly rename_to_t1(const Poly& p, Var v) {
  return p.rename([&](std::uint32_t id) { return id == v.id() ? kT.id() : id; });
}

/// a(xi_i) for a written in t_1.
RatFunc at_xi(const RatFunc& a, std::uint32_t i) {
  RatFunc x = t_to_xi(a);
  if (i == 1) return x;
  return x.rename_indices(Family::xi, {{1, i}});
}

/// Permutation of [N] extending an injection [k] -> [N], remaining
/// points in increasing order.
Perm extend(const Label& inj, std::uint32_t N) {
  Perm p(inj.begin(), inj.end());
  std::vector<bool> used(N + 1, false);
  for (auto i : inj) used[i] = true;
  for (std::uint32_t i = 1; i <= N; ++i) {
    if (!used[i]) p.push_back(i);
  }
  return p;
}

SubspaceV solve_single(FunctionalSystem& sys, std::uint32_t D, std::uint64_t p) {
  std::vector<RatFunc> fs;
  for (auto& s : sys.solve()) fs.push_back(s.functions[0]);
  SubspaceV v = SubspaceV::from_functions(fs, p);
  v.complete_up_to_degree = D;
  return v;
}

}  // namespace

SubspaceV SubspaceV::from_functions(const std::vector<RatFunc>& fs, std::uint64_t modulus) {
  for (const auto& f : fs) {
    for (auto id : f.num().variables()) {
      if (id != kT.id()) fail(ErrorKind::InvalidInput, "subspace functions must be in t1");
    }
    for (auto id : f.den().variables()) {
      if (id != kT.id()) fail(ErrorKind::InvalidInput, "subspace functions must be in t1");
    }
  }
  SubspaceV v;
  v.modulus = modulus;
  v.basis = canonical_span(fs, kT);
  if (v.basis.size() != fs.size()) fail(ErrorKind::DependentBasis, "subspace basis is dependent");
  return v;
}

bool SubspaceV::contains(const RatFunc& a) const {
  auto fs = basis;
  fs.push_back(a);
  return canonical_span(fs, kT).size() == basis.size();
}

bool SubspaceV::contains(const SubspaceV& o) const {
  return std::all_of(o.basis.begin(), o.basis.end(), [&](const RatFunc& a) { return contains(a); });
}

std::optional<Poly> forced_denominator(const std::map<std::uint32_t, RatFunc>& a, Family family) {
  std::optional<Poly> q;
  for (const auto& [j, aj] : a) {
    if (aj.is_zero()) continue;
    Var v(family, j);
    Poly b = univariate_content(aj.num(), v.id()).monic();
    for (const auto& [k, ak] : a) {
      if (k == j || ak.is_zero()) continue;
      b = b * univariate_content(ak.den(), v.id()).monic();
    }
    b = rename_to_t1(b, v);
    q = q ? Poly::gcd(*q, b).monic() : b.monic();
  }
  return q;
}

bool annihilated_by(const RatFunc& c, const std::vector<FirMorphism>& fs) {
  FirMorphism z(0, 1);
  if (!c.is_zero()) z.add_term({}, c);
  return std::all_of(fs.begin(), fs.end(), [&](const FirMorphism& f) { return compose(z, f).is_zero(); });
}

SubspaceV kernel_from_P1(const std::vector<FirMorphism>& fs, std::uint32_t D) {
  std::uint64_t p = 0;
  std::vector<std::map<std::uint32_t, RatFunc>> eqs;
  std::optional<Poly> q;
  for (const auto& f : fs) {
    if (f.source() != 1) fail(ErrorKind::ObjectMismatch, "kernel_from_P1 needs maps out of [1]");
    std::map<std::uint32_t, RatFunc> a;
    for (const auto& [phi, c] : f.terms()) {
      p = modulus_of(c);
      a[phi[0]] = a.count(phi[0]) ? a[phi[0]] + c : c;
    }
    if (auto b = forced_denominator(a, Family::t)) q = q ? Poly::gcd(*q, *b).monic() : *b;
    eqs.push_back(std::move(a));
  }
  Poly den = q ? *q : Poly(p ? Scalar::modular(1, p) : Scalar(1));
  FunctionalSystem sys(kT, p);
  sys.add_function(den, D + den.degree_in(kT.id()));
  for (const auto& a : eqs) {
    std::vector<FunctionalSystem::Term> terms;
    for (const auto& [j, aj] : a) terms.push_back({aj, false, 0, tvar(j)});
    sys.add_equation(std::move(terms));
  }
  SubspaceV v = solve_single(sys, D, p);
  for (const auto& c : v.basis) {
    if (!annihilated_by(c, fs)) fail(ErrorKind::CertificateFailure, "kernel element fails composition check");
  }
  return v;
}

TruncElement subspace_to_generator(const SubspaceV& v) {
  const std::size_t n = v.dim();
  if (n == 0) fail(ErrorKind::InvalidInput, "subspace_to_generator needs dim >= 1");
  std::vector<std::vector<RatFunc>> rows(n, std::vector<RatFunc>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= n; ++j) rows[i][j] = at_xi(v.basis[i], j + 1);
  }
  TruncElement g(StdObject::I(1), n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    ExactMatrix minor(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0, c = 0; k <= n; ++k) {
        if (k != j) minor(i, c++) = rows[i][k];
      }
    }
    RatFunc d = determinant(minor);
    if (d.is_zero()) continue;
    g.add(0, {static_cast<std::uint32_t>(j + 1)}, j % 2 ? -d : d);
  }
  if (g.is_zero()) fail(ErrorKind::DependentBasis, "generator determinant vanishes");
  return g;
}

RatFunc apply_functional(const RatFunc& a, const TruncElement& g) {
  RatFunc s;
  for (const auto& [coord, c] : g.coords()) s = s + c * at_xi(a, coord.second[0]);
  return s;
}

SubspaceV generator_to_subspace(const std::vector<TruncElement>& gens, std::uint32_t D) {
  if (gens.empty()) fail(ErrorKind::InvalidInput, "generator_to_subspace needs generators");
  std::uint64_t p = 0;
  std::optional<Poly> q;
  std::vector<std::map<std::uint32_t, RatFunc>> eqs;
  for (const auto& g : gens) {
    if (!(g.object() == StdObject::I(1))) fail(ErrorKind::ObjectMismatch, "generators must lie in I^1");
    std::map<std::uint32_t, RatFunc> a;
    for (const auto& [coord, c] : g.coords()) {
      p = modulus_of(c);
      a[coord.second[0]] = c;
    }
    if (auto b = forced_denominator(a, Family::xi)) q = q ? Poly::gcd(*q, *b).monic() : *b;
    eqs.push_back(std::move(a));
  }
  Poly den = q ? *q : Poly(p ? Scalar::modular(1, p) : Scalar(1));
  FunctionalSystem sys(kT, p);
  sys.add_function(den, D + den.degree_in(kT.id()));
  for (const auto& a : eqs) {
    std::vector<FunctionalSystem::Term> terms;
    for (const auto& [i, c] : a) terms.push_back({c, false, 0, xi(i)});
    sys.add_equation(std::move(terms));
  }
  SubspaceV v = solve_single(sys, D, p);
  for (const auto& a : v.basis) {
    for (const auto& g : gens) {
      if (!apply_functional(a, g).is_zero()) fail(ErrorKind::CertificateFailure, "functional does not annihilate");
    }
  }
  return v;
}

CodimCertificate codim_certificate(const SubspaceV& v, const TruncElement& g, std::uint32_t N) {
  if (N < g.level()) fail(ErrorKind::LevelTooSmall, "codimension level below generator level");
  const std::size_t n = v.dim();
  CodimCertificate cert;
  cert.level = N;
  cert.annihilated = std::all_of(v.basis.begin(), v.basis.end(),
                                 [&](const RatFunc& a) { return apply_functional(a, g).is_zero(); });
  ExactMatrix f(n, N);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::uint32_t i = 1; i <= N; ++i) f(k, i - 1) = at_xi(v.basis[k], i);
  }
  cert.functionals_independent = n == 0 || modular_rank_bound(f) == n;
  const std::size_t target = N >= n ? N - n : 0;
  IndependenceTracker tr(N, v.modulus, false);
  TruncElement top = g.at_level(N);
  for (const auto& inj : labels({Kind::J, g.level()}, N)) {
    if (tr.rank() >= target) break;
    tr.add(top.act(extend(inj, N)).to_vector());
  }
  cert.span_rank = tr.rank();
  return cert;
}

}  // namespace firwb
