#include "firwb/functional.hpp"

#include <map>

#include "firwb/error.hpp"
#include "firwb/matrix.hpp"

namespace firwb {

namespace {

Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_constant()) return b.monic();
  if (b.is_constant()) return a.monic();
  Poly g = Poly::gcd(a, b);
  return (*Poly::divide_exact(a, g) * b).monic();
}

Poly rename_var(const Poly& p, Var from, Var to) {
  if (from == to) return p;
  return p.rename([&](std::uint32_t id) { return id == from.id() ? to.id() : id; });
}

Scalar one(std::uint64_t p) { return p ? Scalar::modular(1, p) : Scalar(1); }

}  // namespace

std::size_t FunctionalSystem::add_function(const Poly& den, std::uint32_t num_degree) {
  if (den.is_zero()) fail(ErrorKind::ZeroDenominator, "ansatz denominator is zero");
  for (auto v : den.variables()) {
    if (v != s_.id()) fail(ErrorKind::InvalidInput, "ansatz denominator must be univariate");
  }
  funcs_.push_back({den.monic(), num_degree, nunknowns_});
  nunknowns_ += num_degree + 1;
  return funcs_.size() - 1;
}

std::size_t FunctionalSystem::add_constant() {
  const_offset_.push_back(nunknowns_);
  ++nunknowns_;
  return nconst_++;
}

void FunctionalSystem::add_equation(std::vector<Term> terms) { eqs_.push_back(std::move(terms)); }

std::vector<FunctionalSystem::Solution> FunctionalSystem::solve() const {
  // One linear row per monomial of each cleared equation.
  std::vector<std::map<std::size_t, Scalar>> rows;
  for (const auto& eq : eqs_) {
    std::vector<Poly> dens;
    Poly l(1);
    for (const auto& t : eq) {
      Poly d = t.coef.den();
      if (!t.constant) d = d * rename_var(funcs_[t.unknown].den, s_, t.arg);
      dens.push_back(d);
      l = lcm(l, d);
    }
    // unknown index -> polynomial multiplying it
    std::map<std::size_t, Poly> contrib;
    for (std::size_t k = 0; k < eq.size(); ++k) {
      const auto& t = eq[k];
      if (t.coef.is_zero()) continue;
      Poly base = t.coef.num() * *Poly::divide_exact(l, dens[k]);
      if (t.constant) {
        contrib[const_offset_[t.unknown]] += base;
        continue;
      }
      const Func& f = funcs_[t.unknown];
      Poly x = Poly::variable(t.arg);
      Poly pw(one(p_));
      for (std::uint32_t e = 0; e <= f.deg; ++e) {
        contrib[f.offset + e] += base * pw;
        pw = pw * x;
      }
    }
    std::map<std::vector<Monomial::Entry>, std::map<std::size_t, Scalar>> by_mono;
    for (const auto& [u, poly] : contrib) {
      for (const auto& term : poly.terms()) by_mono[term.mono.entries()][u] = term.coef;
    }
    for (auto& [m, row] : by_mono) rows.push_back(std::move(row));
  }
  ExactMatrix a(rows.size(), nunknowns_);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& [u, c] : rows[r]) a(r, u) = RatFunc(c);
  }
  std::vector<Vec> ker;
  if (rows.empty()) {
    for (std::size_t u = 0; u < nunknowns_; ++u) {
      Vec v(nunknowns_);
      v[u] = RatFunc(one(p_));
      ker.push_back(std::move(v));
    }
  } else {
    ker = kernel_basis(a);
  }
  std::vector<Solution> out;
  for (const auto& v : ker) {
    Solution s;
    for (const auto& f : funcs_) {
      Poly num;
      Poly x = Poly::variable(s_);
      Poly pw(one(p_));
      for (std::uint32_t e = 0; e <= f.deg; ++e) {
        const RatFunc& c = v[f.offset + e];
        if (!c.is_zero()) num += pw.scaled(c.constant_value());
        pw = pw * x;
      }
      s.functions.push_back(RatFunc::normalize(num, f.den));
    }
    for (std::size_t c = 0; c < nconst_; ++c) {
      const RatFunc& x = v[const_offset_[c]];
      s.constants.push_back(x.is_zero() ? Scalar(0) : x.constant_value());
    }
    out.push_back(std::move(s));
  }
  return out;
}

Poly univariate_content(const Poly& f, std::uint32_t var) {
  // group terms by the monomial in the other variables
  std::map<std::vector<Monomial::Entry>, std::vector<Term>> groups;
  for (const auto& t : f.terms()) {
    std::uint32_t e = t.mono.degree_in(var);
    std::vector<Monomial::Entry> es;
    if (e) es.emplace_back(var, e);
    groups[t.mono.without(var).entries()].push_back({Monomial(es), t.coef});
  }
  Poly g;
  for (auto& [m, ts] : groups) {
    g = Poly::gcd(g, Poly::from_terms(ts));
    if (g.is_constant() && !g.is_zero()) return g;
  }
  return g;
}

std::vector<RatFunc> canonical_span(const std::vector<RatFunc>& fs, Var s) {
  if (fs.empty()) return {};
  Poly q(1);
  for (const auto& f : fs) q = lcm(q, f.den());
  std::vector<Poly> nums;
  std::uint32_t deg = 0;
  for (const auto& f : fs) {
    Poly n = f.num() * *Poly::divide_exact(q, f.den());
    deg = std::max(deg, n.total_degree());
    nums.push_back(std::move(n));
  }
  // columns by descending power
  ExactMatrix m(nums.size(), deg + 1);
  for (std::size_t i = 0; i < nums.size(); ++i) {
    auto cs = nums[i].coefficients_in(s.id());
    for (std::size_t e = 0; e < cs.size(); ++e) {
      if (!cs[e].is_zero()) m(i, deg - e) = RatFunc(cs[e].constant_value());
    }
  }
  RrefResult rr = rref(m);
  std::vector<RatFunc> out;
  for (std::size_t k = 0; k < rr.rank; ++k) {
    std::vector<Poly> cs(deg + 1);
    for (std::uint32_t e = 0; e <= deg; ++e) {
      const RatFunc& c = rr.reduced(k, deg - e);
      if (!c.is_zero()) cs[e] = Poly(c.constant_value());
    }
    out.push_back(RatFunc::normalize(Poly::from_coefficients(s.id(), cs), q));
  }
  return out;
}

}  // namespace firwb
