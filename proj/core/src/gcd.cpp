// Multivariate gcd over a field by content / primitive-part recursion with
// a primitive pseudo-remainder sequence in the main variable.

#include <algorithm>

#include "firwb/error.hpp"
#include "firwb/poly.hpp"

namespace firwb {

namespace {

using UPoly = std::vector<Poly>;  // dense in the main variable, low degree first

void trim(UPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

int udeg(const UPoly& a) { return static_cast<int>(a.size()) - 1; }

Poly content_of(const UPoly& a) {
  Poly g;
  for (const auto& c : a) {
    if (c.is_zero()) continue;
    g = Poly::gcd(g, c);
    if (g.is_constant()) return Poly(1);
  }
  return g;
}

UPoly divide_all(const UPoly& a, const Poly& c) {
  if (c.is_constant() && c.constant_value().is_one()) return a;
  UPoly out;
  out.reserve(a.size());
  for (const auto& x : a) {
    auto q = Poly::divide_exact(x, c);
    if (!q) fail(ErrorKind::InvalidInput, "internal: content does not divide coefficient");
    out.push_back(std::move(*q));
  }
  return out;
}

UPoly primitive(const UPoly& a) {
  Poly c = content_of(a);
  UPoly p = divide_all(a, c);
  // normalize the sign/scale so that the leading coefficient is monic
  Scalar s = p.back().lc().inverse();
  for (auto& x : p) x = x.scaled(s);
  return p;
}

// Sparse pseudo-remainder of a by b.
UPoly prem(UPoly a, const UPoly& b) {
  const Poly& lb = b.back();
  int db = udeg(b);
  trim(a);
  while (!a.empty() && udeg(a) >= db) {
    Poly la = a.back();
    int shift = udeg(a) - db;
    for (auto& x : a) x *= lb;
    for (int i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    trim(a);
  }
  return a;
}

Poly monomial_gcd_with(const Monomial& m, const Poly& p) {
  Monomial g = m;
  for (const auto& t : p.terms()) {
    g = Monomial::gcd(g, t.mono);
    if (g.is_one()) break;
  }
  return Poly::term(g, Scalar(1));
}

// Degree in v of gcd(a, b) after specializing the other variables at a
// pseudo-random point mod P, or -1 if a leading coefficient vanishes there
// or a coefficient is not representable. A result of 0 proves that v does
// not occur in gcd(a, b): a factor of positive degree in v would survive the
// specialization since the leading coefficients do.
int specialized_gcd_degree(const Poly& a, const Poly& b, std::uint32_t v, std::uint64_t P) {
  auto point = [P](std::uint32_t var) {
    std::uint64_t x = var * 0x9E3779B97F4A7C15ULL + 0x632BE59BD9B4E019ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return (x ^ (x >> 31)) % P;
  };
  auto reduce = [&](const Poly& f, std::vector<std::uint64_t>& out) {
    auto cs = f.coefficients_in(v);
    out.resize(cs.size());
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (!cs[i].eval_mod(P, point, out[i])) return false;
    }
    return !out.empty() && out.back() != 0;
  };
  std::vector<std::uint64_t> x, y;
  if (!reduce(a, x) || !reduce(b, y)) return -1;
  auto strip = [](std::vector<std::uint64_t>& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
  };
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    // x <- x mod y
    std::uint64_t inv = invmod(y.back(), P);
    while (x.size() >= y.size()) {
      std::uint64_t q = mulmod(x.back(), inv, P);
      std::size_t shift = x.size() - y.size();
      for (std::size_t i = 0; i < y.size(); ++i) {
        x[i + shift] = (x[i + shift] + P - mulmod(q, y[i], P)) % P;
      }
      strip(x);
      if (x.empty()) break;
    }
    std::swap(x, y);
  }
  return static_cast<int>(x.size()) - 1;
}

// gcd of the coefficients of p viewed in `var`.
Poly content_in(const Poly& p, std::uint32_t var) { return content_of(p.coefficients_in(var)); }

}  // namespace

Poly Poly::gcd(const Poly& a0, const Poly& b0) {
  if (a0.is_zero()) return b0.monic();
  if (b0.is_zero()) return a0.monic();
  if (a0.is_constant() || b0.is_constant()) return Poly(1);
  if (a0 == b0) return a0.monic();
  if (a0.is_monomial()) return monomial_gcd_with(a0.leading().mono, b0);
  if (b0.is_monomial()) return monomial_gcd_with(b0.leading().mono, a0);

  Poly a = a0, b = b0;
  auto va = a.variables();
  auto vb = b.variables();
  // A variable present in only one argument cannot occur in the gcd.
  for (auto v : va) {
    if (!vb.count(v)) {
      a = content_in(a, v);
      if (a.is_constant()) return Poly(1);
    }
  }
  for (auto v : vb) {
    if (!va.count(v)) {
      b = content_in(b, v);
      if (b.is_constant()) return Poly(1);
    }
  }
  va = a.variables();
  vb = b.variables();
  if (va != vb || va.empty()) return gcd(a, b);

  // A variable proven absent from the gcd reduces to the gcd of contents.
  const std::uint64_t P = a.modulus() ? a.modulus() : b.modulus() ? b.modulus() : (1ULL << 61) - 1;
  for (auto v : va) {
    if (specialized_gcd_degree(a, b, v, P) == 0) return gcd(content_in(a, v), content_in(b, v));
  }

  // Cheap divisibility probes.
  if (b.size() <= a.size()) {
    if (Poly::divide_exact(a, b)) return b.monic();
  } else if (Poly::divide_exact(b, a)) {
    return a.monic();
  }

  std::uint32_t v = *va.begin();
  UPoly ua = a.coefficients_in(v);
  UPoly ub = b.coefficients_in(v);
  Poly ca = content_of(ua);
  Poly cb = content_of(ub);
  Poly c = gcd(ca, cb);
  UPoly pa = divide_all(ua, ca);
  UPoly pb = divide_all(ub, cb);
  if (udeg(pa) < udeg(pb)) std::swap(pa, pb);

  UPoly g;
  for (;;) {
    UPoly r = prem(pa, pb);
    if (r.empty()) {
      g = primitive(pb);
      break;
    }
    if (udeg(r) == 0) {
      g = UPoly{Poly(1)};
      break;
    }
    pa = std::move(pb);
    pb = primitive(r);
  }
  return (c * Poly::from_coefficients(v, g)).monic();
}

}  // namespace firwb
