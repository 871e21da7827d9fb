#include "firwb/firmod.hpp"

#include <algorithm>

#include "firwb/error.hpp"

namespace firwb {

Presentation Presentation::free(std::vector<std::uint32_t> gens) {
  Presentation p;
  p.gens = std::move(gens);
  return p;
}

void Presentation::validate() {
  if (rel_degrees.size() > rels.size()) fail(ErrorKind::InvalidInput, "more relation degrees than relations");
  rel_degrees.resize(rels.size(), UINT32_MAX);
  for (std::size_t j = 0; j < rels.size(); ++j) {
    if (rels[j].size() != gens.size()) fail(ErrorKind::InvalidInput, "relation row length differs from generator count");
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const auto& e = rels[j][i];
      if (!e) continue;
      if (e->target() != gens[i]) fail(ErrorKind::InvalidInput, "relation entry target differs from generator degree");
      if (rel_degrees[j] == UINT32_MAX) rel_degrees[j] = e->source();
      if (e->source() != rel_degrees[j]) fail(ErrorKind::InvalidInput, "relation entries disagree on the relation degree");
    }
    if (rel_degrees[j] == UINT32_MAX) fail(ErrorKind::InvalidInput, "relation degree cannot be inferred from an empty row");
  }
}

std::uint32_t Presentation::max_degree() const {
  std::uint32_t m = 0;
  for (auto g : gens) m = std::max(m, g);
  for (auto a : rel_degrees) m = std::max(m, a);
  return m;
}

void Presentation::add_relation(std::uint32_t degree, std::vector<std::optional<FirMorphism>> row) {
  rel_degrees.push_back(degree);
  rels.push_back(std::move(row));
  validate();
}

Presentation Presentation::direct_sum(const Presentation& o) const {
  Presentation p;
  p.gens = gens;
  p.gens.insert(p.gens.end(), o.gens.begin(), o.gens.end());
  for (std::size_t j = 0; j < rels.size(); ++j) {
    auto row = rels[j];
    row.resize(p.gens.size());
    p.rels.push_back(std::move(row));
    p.rel_degrees.push_back(rel_degrees[j]);
  }
  for (std::size_t j = 0; j < o.rels.size(); ++j) {
    std::vector<std::optional<FirMorphism>> row(gens.size());
    row.insert(row.end(), o.rels[j].begin(), o.rels[j].end());
    p.rels.push_back(std::move(row));
    p.rel_degrees.push_back(o.rel_degrees[j]);
  }
  return p;
}

ExactMatrix relation_matrix(const Presentation& p, std::uint32_t N) {
  if (N < p.max_degree()) fail(ErrorKind::LevelTooSmall, "level below the presentation degrees");
  std::vector<std::size_t> row_off{0}, col_off{0};
  for (auto a : p.rel_degrees) row_off.push_back(row_off.back() + falling(N, a));
  for (auto n : p.gens) col_off.push_back(col_off.back() + falling(N, n));
  ExactMatrix m(row_off.back(), col_off.back());
  for (std::size_t j = 0; j < p.rels.size(); ++j) {
    for (std::size_t i = 0; i < p.gens.size(); ++i) {
      const auto& e = p.rels[j][i];
      if (!e || e->is_zero()) continue;
      ExactMatrix b = level_matrix(realize(*e), N);
      for (std::size_t r = 0; r < b.rows(); ++r) {
        for (std::size_t c = 0; c < b.cols(); ++c) m(row_off[j] + r, col_off[i] + c) = b(r, c);
      }
    }
  }
  return m;
}

std::size_t dual_level_dim(const Presentation& p, std::uint32_t N) {
  ExactMatrix m = relation_matrix(p, N);
  return m.cols() - (m.rows() ? rank(m) : 0);
}

ClassFit fit_class(const std::function<std::size_t(std::uint32_t)>& dims, std::uint32_t n0, std::uint32_t max_r) {
  ClassFit fit;
  fit.first_level = n0;
  const std::uint32_t k = max_r + 1;
  for (std::uint32_t t = 0; t < k + 2; ++t) fit.dims.push_back(dims(n0 + t));
  ExactMatrix b(k, k);
  Vec rhs(k);
  for (std::uint32_t t = 0; t < k; ++t) {
    for (std::uint32_t r = 0; r < k; ++r) b(t, r) = RatFunc(static_cast<long>(binomial(n0 + t, r)));
    rhs[t] = RatFunc(static_cast<long>(fit.dims[t]));
  }
  auto sol = solve(b, rhs);
  if (!sol) fail(ErrorKind::InconsistentFit, "binomial system has no solution");
  for (std::uint32_t r = 0; r < k; ++r) {
    const RatFunc& a = (*sol)[r];
    if (!a.is_constant()) fail(ErrorKind::InconsistentFit, "non-constant coefficient");
    const mpq_class q = a.constant_value().rational_value();
    if (q.get_den() != 1) fail(ErrorKind::InconsistentFit, "non-integer class coefficient");
    if (q != 0) fit.cls[r] = q.get_num().get_si();
  }
  for (std::uint32_t t = k; t < k + 2; ++t) {
    long long v = 0;
    for (const auto& [r, a] : fit.cls) v += a * static_cast<long long>(binomial(n0 + t, r));
    if (v != static_cast<long long>(fit.dims[t]))
      fail(ErrorKind::InconsistentFit, "class does not cross-validate at level " + std::to_string(n0 + t));
  }
  return fit;
}

ClassFit grothendieck_fit(const Presentation& p) {
  std::uint32_t n = p.max_degree();
  std::uint32_t n0 = n + static_cast<std::uint32_t>(p.rels.size());
  return fit_class([&](std::uint32_t N) { return dual_level_dim(p, N); }, n0, n);
}

ClassVector grothendieck_class(const Presentation& p) { return grothendieck_fit(p).cls; }

long long euler_pairing(std::uint32_t r, const ClassVector& c) {
  long long v = 0;
  for (const auto& [s, a] : c) v += a * static_cast<long long>(binomial(r, s));
  return v;
}

ClassVector operator+(const ClassVector& a, const ClassVector& b) {
  ClassVector c = a;
  for (const auto& [r, v] : b) {
    c[r] += v;
    if (c[r] == 0) c.erase(r);
  }
  return c;
}

namespace {

// rename(c, inj^{-1}) from t variables to xi: t_k -> xi_{inj^{-1}(k)}.
RatFunc pull_back(const RatFunc& c, const Label& perm) {
  std::map<std::uint32_t, std::uint32_t> j;
  for (std::size_t i = 0; i < perm.size(); ++i) j[perm[i]] = static_cast<std::uint32_t>(i + 1);
  return t_to_xi(c.rename_indices(Family::t, j));
}

}  // namespace

TopEvaluation top_degree_evaluate(const Presentation& p) {
  TopEvaluation te;
  te.n = 0;
  for (auto g : p.gens) te.n = std::max(te.n, g);
  const std::uint32_t n = te.n;
  for (std::size_t i = 0; i < p.gens.size(); ++i) {
    if (p.gens[i] == n) te.top_gens.push_back(i);
  }
  te.perms = labels({Kind::J, n}, n);
  std::map<Label, std::size_t> pidx;
  for (std::size_t k = 0; k < te.perms.size(); ++k) pidx[te.perms[k]] = k;
  const std::size_t np = te.perms.size();
  const std::size_t dim = te.top_gens.size() * np;

  std::vector<Vec> rows;
  for (std::size_t j = 0; j < p.rels.size(); ++j) {
    if (p.rel_degrees[j] != n) continue;
    for (const auto& rho : te.perms) {
      Vec v(dim);
      bool any = false;
      for (std::size_t g = 0; g < te.top_gens.size(); ++g) {
        const auto& e = p.rels[j][te.top_gens[g]];
        if (!e) continue;
        for (const auto& [phi, c] : e->terms()) {
          Label comp(n);
          for (std::uint32_t i = 0; i < n; ++i) comp[i] = phi[rho[i] - 1];
          v[g * np + pidx.at(comp)] += pull_back(c, comp);
          any = true;
        }
      }
      if (any) rows.push_back(std::move(v));
    }
  }
  te.relations = rows.empty() ? RrefResult{0, {}, ExactMatrix(0, dim)} : rref(ExactMatrix::from_rows(rows, dim));
  std::vector<bool> piv(dim, false);
  for (auto c : te.relations.pivots) piv[c] = true;
  std::vector<std::size_t> pos(dim, SIZE_MAX);
  for (std::size_t c = 0; c < dim; ++c) {
    if (!piv[c]) {
      pos[c] = te.kept.size();
      te.kept.push_back(c);
    }
  }
  // reduce a unit vector e_c modulo the relations, in kept coordinates
  auto reduce_unit = [&](std::size_t c) {
    Vec out(te.kept.size());
    if (!piv[c]) {
      out[pos[c]] = RatFunc(1);
      return out;
    }
    std::size_t k = static_cast<std::size_t>(std::find(te.relations.pivots.begin(), te.relations.pivots.end(), c) -
                                             te.relations.pivots.begin());
    for (std::size_t q = 0; q < te.kept.size(); ++q) out[q] = -te.relations.reduced(k, te.kept[q]);
    return out;
  };
  GroupAction action = GroupAction::symmetric(n);
  std::vector<ExactMatrix> mats;
  for (const auto& sigma : action.elements()) {
    // (M_sigma) maps e_(g, psi sigma) to e_(g, psi)
    Perm sinv = inverse(sigma);
    ExactMatrix m(te.kept.size(), te.kept.size());
    for (std::size_t q = 0; q < te.kept.size(); ++q) {
      std::size_t c = te.kept[q];
      std::size_t g = c / np;
      const Label& psi = te.perms[c % np];
      Label target(n);
      for (std::uint32_t i = 0; i < n; ++i) target[i] = psi[sinv[i] - 1];
      Vec col = reduce_unit(g * np + pidx.at(target));
      for (std::size_t r = 0; r < col.size(); ++r) m(r, q) = col[r];
    }
    mats.push_back(std::move(m));
  }
  te.rep = SemilinearRep::from_elements(std::move(action), te.kept.size(), std::move(mats));
  return te;
}

}  // namespace firwb
