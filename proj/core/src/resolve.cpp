#include <numeric>

#include "firwb/error.hpp"
#include "firwb/firmod.hpp"
#include "firwb/functional.hpp"
#include "firwb/matrix.hpp"

namespace firwb {

namespace {

Label top_label(std::uint32_t n) {
  Label l(n);
  std::iota(l.begin(), l.end(), 1u);
  return l;
}

RatFunc one_in(std::uint64_t p) { return p ? RatFunc(Scalar::modular(1, p)) : RatFunc(1); }

std::uint64_t field_of(const Presentation& p) {
  for (const auto& row : p.rels) {
    for (const auto& e : row) {
      if (!e) continue;
      for (const auto& [phi, c] : e->terms()) {
        if (auto m = c.num().modulus()) return m;
      }
    }
  }
  return 0;
}

StdMap to_field(const StdMap& f, std::uint64_t p) {
  if (!p) return f;
  std::vector<TruncElement> imgs;
  for (const auto& e : f.images()) {
    imgs.push_back(e.map_coefficients([&](const RatFunc& c) { return c.to_field(p); }));
  }
  return StdMap(f.source(), f.target(), std::move(imgs));
}

TruncElement relocate(const TruncElement& e, const StdObject& obj, std::size_t offset) {
  TruncElement t(obj, e.level());
  for (const auto& [coord, c] : e.coords()) t.add(offset + coord.first, coord.second, c);
  return t;
}

const JStructure& jstruct(std::uint32_t n, std::uint64_t p) {
  static std::map<std::pair<std::uint32_t, std::uint64_t>, JStructure> cache;
  auto key = std::make_pair(n, p);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  JStructure js = j_structure(n);
  js.to_j = to_field(js.to_j, p);
  js.from_j = to_field(js.from_j, p);
  return cache.emplace(key, std::move(js)).first->second;
}

/// A sum of J^m and its decomposition into copies of I^m.
struct Refinement {
  StdObject obj;
  StdMap to;    // X -> refined
  StdMap from;  // refined -> X
  std::vector<std::size_t> origin;
};

Refinement refine(const StdObject& x, std::uint64_t p) {
  Refinement r;
  r.obj.base = x.base;
  std::vector<std::size_t> offset;
  for (std::size_t i = 0; i < x.summands.size(); ++i) {
    const auto& js = jstruct(x.summands[i].degree, p);
    offset.push_back(r.obj.summands.size());
    for (const auto& s : js.from_j.target().summands) {
      r.obj.summands.push_back(s);
      r.origin.push_back(i);
    }
  }
  std::vector<TruncElement> to_imgs, from_imgs;
  for (std::size_t i = 0; i < x.summands.size(); ++i) {
    const auto& js = jstruct(x.summands[i].degree, p);
    to_imgs.push_back(relocate(js.from_j.images()[0], r.obj, offset[i]));
    for (const auto& e : js.to_j.images()) from_imgs.push_back(relocate(e, x, i));
  }
  r.to = StdMap(x, r.obj, std::move(to_imgs));
  r.from = StdMap(r.obj, x, std::move(from_imgs));
  return r;
}

StdObject gens_object(const Presentation& p) {
  StdObject y;
  for (auto n : p.gens) y.summands.push_back({Kind::J, n});
  return y;
}

StdObject rels_object(const Presentation& p) {
  StdObject z;
  for (auto a : p.rel_degrees) z.summands.push_back({Kind::J, a});
  return z;
}

/// Top-degree cancellation: E_0 = (I^n)^d + refined lower generators,
/// E_1 = refined relations of degree < n.
struct Stage0 {
  std::uint32_t n = 0;
  std::uint64_t p = 0;
  StdObject Y, Z, E0, E1;
  StdMap R, gamma, beta, rho;
  std::vector<std::size_t> e1_relation;
  std::size_t d = 0;
};

Stage0 build_stage0(const Presentation& pres) {
  Stage0 s;
  s.n = pres.max_degree();
  s.p = field_of(pres);
  const std::uint32_t n = s.n;
  const Label top = top_label(n);
  s.Y = gens_object(pres);
  s.Z = rels_object(pres);
  s.R = relation_map(pres);
  Refinement ry = refine(s.Y, s.p), rz = refine(s.Z, s.p);
  StdMap rhat = compose(rz.to, compose(s.R, ry.from));

  std::vector<std::size_t> ys, zt;
  for (std::size_t i = 0; i < ry.obj.summands.size(); ++i) {
    if (ry.obj.summands[i].degree == n) ys.push_back(i);
  }
  for (std::size_t i = 0; i < rz.obj.summands.size(); ++i) {
    if (rz.obj.summands[i].degree == n) zt.push_back(i);
  }
  const std::size_t m = ys.size(), ht = zt.size();
  // [Rt | 1] in reduced form gives the pivots and the row operations.
  ExactMatrix aug(ht, m + ht);
  for (std::size_t b = 0; b < m; ++b) {
    const TruncElement& img = rhat.images()[ys[b]];
    for (std::size_t a = 0; a < ht; ++a) aug(a, b) = img.get(zt[a], top);
  }
  for (std::size_t a = 0; a < ht; ++a) aug(a, m + a) = one_in(s.p);
  RrefResult rr = ht ? rref(aug) : RrefResult{};
  std::vector<std::size_t> pivot;
  std::vector<bool> is_pivot(m, false);
  for (std::size_t k = 0; k < rr.rank; ++k) {
    if (rr.pivots[k] >= m) break;
    pivot.push_back(rr.pivots[k]);
    is_pivot[rr.pivots[k]] = true;
  }
  std::vector<std::size_t> free_cols;
  std::vector<std::size_t> free_pos(m, SIZE_MAX);
  for (std::size_t b = 0; b < m; ++b) {
    if (!is_pivot[b]) {
      free_pos[b] = free_cols.size();
      free_cols.push_back(b);
    }
  }
  s.d = free_cols.size();

  s.E0.base = s.Y.base;
  for (std::size_t f = 0; f < s.d; ++f) s.E0.summands.push_back({Kind::I, n});
  std::vector<std::size_t> low_index(ry.obj.summands.size(), SIZE_MAX);
  for (std::size_t i = 0; i < ry.obj.summands.size(); ++i) {
    if (ry.obj.summands[i].degree < n) {
      low_index[i] = s.E0.summands.size();
      s.E0.summands.push_back(ry.obj.summands[i]);
    }
  }
  std::vector<std::size_t> ypos(ry.obj.summands.size(), SIZE_MAX);
  for (std::size_t b = 0; b < m; ++b) ypos[ys[b]] = b;

  std::vector<TruncElement> sel;
  for (std::size_t i = 0; i < ry.obj.summands.size(); ++i) {
    std::uint32_t deg = ry.obj.summands[i].degree;
    if (deg == n) {
      std::size_t f = free_pos[ypos[i]];
      sel.push_back(f == SIZE_MAX ? TruncElement(s.E0, n) : TruncElement::basis(s.E0, n, f, top));
    } else {
      sel.push_back(TruncElement::basis(s.E0, deg, low_index[i], top_label(deg)));
    }
  }
  s.gamma = compose(StdMap(ry.obj, s.E0, std::move(sel)), ry.to);

  std::vector<TruncElement> kvec;
  for (std::size_t f = 0; f < s.d; ++f) {
    TruncElement t(ry.obj, n);
    t.add(ys[free_cols[f]], top, one_in(s.p));
    for (std::size_t k = 0; k < pivot.size(); ++k) {
      const RatFunc& c = rr.reduced(k, free_cols[f]);
      if (!c.is_zero()) t.add(ys[pivot[k]], top, -c);
    }
    kvec.push_back(std::move(t));
  }
  for (std::size_t i = 0; i < ry.obj.summands.size(); ++i) {
    std::uint32_t deg = ry.obj.summands[i].degree;
    if (deg < n) kvec.push_back(TruncElement::basis(ry.obj, deg, i, top_label(deg)));
  }
  StdMap kmap(s.E0, ry.obj, std::move(kvec));

  s.E1.base = s.Z.base;
  std::vector<std::size_t> e1_index(rz.obj.summands.size(), SIZE_MAX);
  for (std::size_t i = 0; i < rz.obj.summands.size(); ++i) {
    if (rz.obj.summands[i].degree < n) {
      e1_index[i] = s.E1.summands.size();
      s.E1.summands.push_back(rz.obj.summands[i]);
      s.e1_relation.push_back(rz.origin[i]);
    }
  }
  std::vector<TruncElement> pi_low, ser;
  for (std::size_t i = 0; i < rz.obj.summands.size(); ++i) {
    std::uint32_t deg = rz.obj.summands[i].degree;
    if (deg == n) {
      pi_low.push_back(TruncElement(s.E1, n));
      std::size_t a = static_cast<std::size_t>(std::find(zt.begin(), zt.end(), i) - zt.begin());
      TruncElement x(ry.obj, n);
      for (std::size_t k = 0; k < pivot.size(); ++k) {
        const RatFunc& c = rr.reduced(k, m + a);
        if (!c.is_zero()) x.add(ys[pivot[k]], top, c);
      }
      ser.push_back(std::move(x));
    } else {
      pi_low.push_back(TruncElement::basis(s.E1, deg, e1_index[i], top_label(deg)));
      ser.push_back(TruncElement(ry.obj, deg));
    }
  }
  StdMap pl(rz.obj, s.E1, std::move(pi_low));
  StdMap se(rz.obj, ry.obj, std::move(ser));
  s.beta = compose(pl, compose(rhat, kmap));
  s.rho = compose(pl, rz.to) - compose(pl, compose(rhat, compose(se, rz.to)));
  return s;
}

Presentation drop_relation(const Presentation& p, std::size_t j) {
  Presentation q = p;
  q.rels.erase(q.rels.begin() + static_cast<std::ptrdiff_t>(j));
  q.rel_degrees.erase(q.rel_degrees.begin() + static_cast<std::ptrdiff_t>(j));
  return q;
}

Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_constant()) return b.monic();
  if (b.is_constant()) return a.monic();
  return (*Poly::divide_exact(a, Poly::gcd(a, b)) * b).monic();
}

/// A relation of degree 1 that is a K_1-combination of the others, found
/// as a map E_1 -> I^1 killing the image of d_0.
std::optional<std::size_t> degree_one_redundant(const Stage0& s) {
  std::vector<std::size_t> js;
  for (std::size_t t = 0; t < s.E1.summands.size(); ++t) {
    if (s.E1.summands[t].degree == 1) js.push_back(t);
  }
  if (js.empty()) return std::nullopt;
  std::vector<std::vector<RatFunc>> rows;
  for (std::size_t e = 0; e < s.E0.summands.size(); ++e) {
    std::uint32_t r = s.E0.summands[e].degree;
    if (r == 0) continue;
    const TruncElement& img = s.beta.images()[e];
    std::vector<RatFunc> cs;
    for (auto t : js) cs.push_back(img.get(t, {1}));
    if (r == 1) {
      rows.push_back(cs);
      continue;
    }
    // coefficients in k(xi_1)(xi_2): clear denominators, split powers of xi_2
    Poly l(1);
    for (const auto& c : cs) l = lcm(l, c.den());
    std::vector<std::vector<Poly>> parts;
    std::size_t len = 0;
    for (const auto& c : cs) {
      Poly num = c.num() * *Poly::divide_exact(l, c.den());
      parts.push_back(num.coefficients_in(xi(2).id()));
      len = std::max(len, parts.back().size());
    }
    for (std::size_t k = 0; k < len; ++k) {
      std::vector<RatFunc> row;
      for (const auto& pt : parts) row.push_back(k < pt.size() ? RatFunc(pt[k]) : RatFunc());
      rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) return s.e1_relation[js[0]];
  ExactMatrix a(rows.size(), js.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < js.size(); ++j) a(i, j) = rows[i][j];
  }
  auto ker = kernel_basis(a);
  if (ker.empty()) return std::nullopt;
  for (std::size_t j = 0; j < js.size(); ++j) {
    if (!ker[0][j].is_zero()) return s.e1_relation[js[j]];
  }
  return std::nullopt;
}

struct Syzygies {
  std::vector<std::size_t> fidx, cidx;
  std::vector<FunctionalSystem::Solution> sols;
};

/// Maps E_1 -> I^0 killing the image of d_0 within the ansatz.
Syzygies degree_zero_syzygies(const Stage0& s, std::uint32_t D) {
  Syzygies out;
  const Var x1 = xi(1);
  Poly q(s.p ? Scalar::modular(1, s.p) : Scalar(1));
  for (const auto& img : s.beta.images()) {
    for (const auto& [coord, c] : img.coords()) {
      for (std::uint32_t i = 1; i <= img.level(); ++i) {
        Poly b = univariate_content(c.num(), xi(i).id()).monic() * univariate_content(c.den(), xi(i).id()).monic();
        b = b.rename([&](std::uint32_t id) { return id == xi(i).id() ? x1.id() : id; });
        q = lcm(q, b);
      }
    }
  }
  FunctionalSystem sys(x1, s.p);
  out.fidx.assign(s.E1.summands.size(), SIZE_MAX);
  out.cidx.assign(s.E1.summands.size(), SIZE_MAX);
  for (std::size_t t = 0; t < s.E1.summands.size(); ++t) {
    if (s.E1.summands[t].degree == 1) {
      out.fidx[t] = sys.add_function(q, D + q.degree_in(x1.id()));
    } else {
      out.cidx[t] = sys.add_constant();
    }
  }
  for (const auto& img : s.beta.images()) {
    std::vector<FunctionalSystem::Term> terms;
    for (const auto& [coord, c] : img.coords()) {
      std::size_t t = coord.first;
      if (out.fidx[t] != SIZE_MAX) {
        terms.push_back({c, false, out.fidx[t], xi(coord.second[0])});
      } else {
        terms.push_back({c, true, out.cidx[t], Var()});
      }
    }
    sys.add_equation(std::move(terms));
  }
  out.sols = sys.solve();
  return out;
}

LevelCheck check_level(const Presentation& orig, const StdMap& R, const StdMap& gamma,
                       const std::vector<StdObject>& duals, const std::vector<StdMap>& diffs, std::uint32_t N) {
  LevelCheck c;
  c.level = N;
  c.dual_dim = dual_level_dim(orig, N);
  for (const auto& e : duals) c.dims.push_back(e.level_dim(N));
  for (const auto& d : diffs) {
    ExactMatrix m = level_matrix(d, N);
    c.ranks.push_back(m.rows() && m.cols() ? modular_rank_bound(m) : 0);
  }
  ExactMatrix r = level_matrix(R, N), g = level_matrix(gamma, N);
  ExactMatrix st(r.rows() + g.rows(), g.cols());
  for (std::size_t i = 0; i < r.rows(); ++i) {
    for (std::size_t j = 0; j < r.cols(); ++j) st(i, j) = r(i, j);
  }
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) st(r.rows() + i, j) = g(i, j);
  }
  c.injective = st.cols() == 0 || (st.rows() && modular_rank_bound(st) == st.cols());
  for (std::size_t i = 0; i < c.dims.size(); ++i) {
    c.euler += (i % 2 ? -1 : 1) * static_cast<long long>(c.dims[i]);
  }
  bool ok = c.injective && c.dims[0] - (c.ranks.empty() ? 0 : c.ranks[0]) == c.dual_dim;
  for (std::size_t i = 1; i < c.dims.size(); ++i) {
    std::size_t out = i < c.ranks.size() ? c.ranks[i] : 0;
    ok = ok && c.ranks[i - 1] + out == c.dims[i];
  }
  c.exact = ok;
  return c;
}

std::pair<std::uint32_t, std::uint32_t> check_window(const Presentation& p, std::uint32_t extra) {
  std::uint32_t lo = stable_level(p);
  std::uint32_t n = p.max_degree();
  return {lo, std::max(lo + 2, n + extra)};
}

}  // namespace

std::uint32_t stable_level(const Presentation& p) {
  return p.max_degree() + static_cast<std::uint32_t>(p.rels.size());
}

StdMap relation_map(const Presentation& p) {
  StdObject y = gens_object(p), z = rels_object(p);
  std::vector<TruncElement> imgs;
  for (std::size_t i = 0; i < p.gens.size(); ++i) {
    TruncElement img(z, p.gens[i]);
    for (std::size_t j = 0; j < p.rels.size(); ++j) {
      const auto& e = p.rels[j][i];
      if (!e || e->is_zero()) continue;
      img += relocate(realize(*e).images()[0], z, j);
    }
    imgs.push_back(std::move(img));
  }
  return StdMap(y, z, std::move(imgs));
}

RefinedProjective RefinedProjective::of(const StdObject& dual) {
  RefinedProjective q;
  for (const auto& s : dual.summands) {
    if (s.kind != Kind::I) fail(ErrorKind::ObjectMismatch, "refined projectives are sums of I^r");
    ++q.multiplicity[s.degree];
  }
  return q;
}

std::uint32_t RefinedProjective::max_degree() const {
  return multiplicity.empty() ? 0 : multiplicity.rbegin()->first;
}

std::size_t RefinedProjective::level_dim(std::uint32_t N) const {
  std::size_t d = 0;
  for (const auto& [r, m] : multiplicity) d += m * binomial(N, r);
  return d;
}

bool CoverStep::certified() const {
  if (top_multiplicity != top_dimension || invariant_count != top_dimension) return false;
  for (const auto& c : checks) {
    if (!c.injective) return false;
  }
  for (const auto& [r, a] : kernel_class) {
    if (r >= n) return false;
  }
  return true;
}

CoverStep projective_cover_step(const Presentation& input) {
  Presentation p = input;
  p.validate();
  Stage0 s = build_stage0(p);
  CoverStep c;
  c.n = s.n;
  c.dual = s.E0;
  c.cover = RefinedProjective::of(s.E0);
  c.augmentation = s.gamma;
  c.top_multiplicity = s.d;
  TopEvaluation top = top_degree_evaluate(p);
  c.top_dimension = top.kept.size();
  c.invariant_count = c.top_dimension ? invariant_vectors(top.rep).size() : 0;
  auto [lo, hi] = check_window(p, 3);
  for (std::uint32_t N = lo; N <= hi; ++N) c.checks.push_back(check_level(p, s.R, s.gamma, {s.E0}, {}, N));
  c.kernel_class = fit_class(
                       [&](std::uint32_t N) { return s.E0.level_dim(N) - dual_level_dim(p, N); }, lo, s.n)
                       .cls;
  if (!c.certified()) fail(ErrorKind::CertificateFailure, "cover step certificate failed");
  return c;
}

bool Resolution::certified() const {
  if (!composites_zero || !degrees_ok) return false;
  for (const auto& c : checks) {
    if (!c.exact || c.euler != static_cast<long long>(c.dual_dim)) return false;
  }
  return true;
}

Resolution resolve(const Presentation& input, std::uint32_t D) {
  Presentation p = input;
  p.validate();
  const std::uint32_t n = p.max_degree();
  if (n > 2) fail(ErrorKind::DegreeBoundExceeded, "resolve supports maximal degree <= 2");
  Resolution res;
  res.n = n;
  std::vector<std::size_t> alive(p.rels.size());
  std::iota(alive.begin(), alive.end(), 0);
  Presentation cur = p;
  for (;;) {
    Stage0 s = build_stage0(cur);
    std::optional<std::size_t> drop;
    if (n == 2) drop = degree_one_redundant(s);
    Syzygies syz;
    if (!drop && !s.E1.summands.empty()) {
      syz = degree_zero_syzygies(s, D);
      for (const auto& sol : syz.sols) {
        for (std::size_t t = 0; t < s.E1.summands.size() && !drop; ++t) {
          if (syz.cidx[t] != SIZE_MAX && !sol.constants[syz.cidx[t]].is_zero()) drop = s.e1_relation[t];
        }
        if (drop) break;
      }
    }
    if (drop) {
      res.dropped.push_back(alive[*drop]);
      alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(*drop));
      cur = drop_relation(cur, *drop);
      continue;
    }
    res.used = cur;
    res.augmentation = s.gamma;
    res.rho = s.rho;
    res.duals.push_back(s.E0);
    std::vector<StdMap> diffs;
    if (!s.E1.summands.empty()) {
      res.duals.push_back(s.E1);
      diffs.push_back(s.beta);
      if (!syz.sols.empty()) {
        StdObject e2;
        for (std::size_t k = 0; k < syz.sols.size(); ++k) e2.summands.push_back({Kind::I, 0});
        std::vector<TruncElement> imgs;
        for (std::size_t t = 0; t < s.E1.summands.size(); ++t) {
          std::uint32_t deg = s.E1.summands[t].degree;
          TruncElement img(e2, deg);
          if (syz.fidx[t] != SIZE_MAX) {
            for (std::size_t k = 0; k < syz.sols.size(); ++k) {
              const RatFunc& b = syz.sols[k].functions[syz.fidx[t]];
              if (!b.is_zero()) img.add(k, {}, b);
            }
          }
          imgs.push_back(std::move(img));
        }
        res.duals.push_back(e2);
        diffs.push_back(StdMap(s.E1, e2, std::move(imgs)));
      }
    }
    res.differentials = diffs;
    for (const auto& e : res.duals) res.terms.push_back(RefinedProjective::of(e));
    res.composites_zero = compose(s.beta, s.gamma) == compose(s.rho, s.R) || s.E1.summands.empty();
    for (std::size_t i = 1; i < diffs.size(); ++i) {
      res.composites_zero = res.composites_zero && compose(diffs[i], diffs[i - 1]).is_zero();
    }
    res.degrees_ok = true;
    for (std::size_t i = 0; i < res.terms.size(); ++i) {
      if (!res.terms[i].empty() && res.terms[i].max_degree() + i > n) res.degrees_ok = false;
    }
    auto [lo, hi] = check_window(p, 4);
    for (std::uint32_t N = lo; N <= hi; ++N) res.checks.push_back(check_level(p, s.R, s.gamma, res.duals, diffs, N));
    break;
  }
  if (!res.certified()) {
    fail(ErrorKind::SyzygySearchExhausted, "no exact complex within coefficient degree " + std::to_string(D));
  }
  return res;
}

}  // namespace firwb
