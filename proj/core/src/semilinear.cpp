#include "firwb/semilinear.hpp"

#include <algorithm>

#include "firwb/error.hpp"

namespace firwb {

StdObject StdObject::operator+(const StdObject& o) const {
  if (base != o.base && !summands.empty() && !o.summands.empty())
    fail(ErrorKind::ObjectMismatch, "direct sum of objects over different base fields");
  StdObject r = *this;
  r.base = std::max(base, o.base);
  r.summands.insert(r.summands.end(), o.summands.begin(), o.summands.end());
  return r;
}

std::uint32_t StdObject::max_degree() const {
  std::uint32_t m = 0;
  for (const auto& s : summands) m = std::max(m, s.degree);
  return m;
}

std::size_t StdObject::level_dim(std::uint32_t N) const {
  std::size_t d = 0;
  for (const auto& s : summands) d += label_count(s, N);
  return d;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::uint64_t falling(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < k; ++i) r *= n - i;
  return r;
}

std::size_t label_count(const Summand& s, std::uint32_t N) {
  return s.kind == Kind::I ? binomial(N, s.degree) : falling(N, s.degree);
}

namespace {

void subsets(std::uint32_t N, std::uint32_t r, std::uint32_t start, Label& cur, std::vector<Label>& out) {
  if (cur.size() == r) {
    out.push_back(cur);
    return;
  }
  for (std::uint32_t i = start; i + (r - cur.size()) <= N + 1; ++i) {
    cur.push_back(i);
    subsets(N, r, i + 1, cur, out);
    cur.pop_back();
  }
}

void tuples(std::uint32_t N, std::uint32_t n, std::vector<bool>& used, Label& cur, std::vector<Label>& out) {
  if (cur.size() == n) {
    out.push_back(cur);
    return;
  }
  for (std::uint32_t i = 1; i <= N; ++i) {
    if (used[i]) continue;
    used[i] = true;
    cur.push_back(i);
    tuples(N, n, used, cur, out);
    cur.pop_back();
    used[i] = false;
  }
}

// xi_i -> xi_{label[i-1]} for i <= |label|.
RatFunc move_coefficient(const RatFunc& c, const Label& label) {
  if (c.is_constant()) return c;
  std::map<std::uint32_t, std::uint32_t> j;
  for (std::size_t i = 0; i < label.size(); ++i) {
    if (label[i] != i + 1) j[static_cast<std::uint32_t>(i + 1)] = label[i];
  }
  return j.empty() ? c : c.rename_indices(Family::xi, j);
}

Label move_label(const Label& l, const Label& by, Kind kind) {
  Label out(l.size());
  for (std::size_t i = 0; i < l.size(); ++i) out[i] = by[l[i] - 1];
  if (kind == Kind::I) std::sort(out.begin(), out.end());
  return out;
}

std::uint32_t max_xi(const RatFunc& c) {
  std::uint32_t m = 0;
  for (auto id : c.variables()) {
    Var v = Var::from_id(id);
    if (v.family() == Family::xi) m = std::max(m, v.index());
  }
  return m;
}

bool has_t_vars(const RatFunc& c) {
  for (auto id : c.variables()) {
    if (Var::from_id(id).family() == Family::t) return true;
  }
  return false;
}

}  // namespace

std::vector<Label> labels(const Summand& s, std::uint32_t N) {
  std::vector<Label> out;
  Label cur;
  if (s.kind == Kind::I) {
    subsets(N, s.degree, 1, cur, out);
  } else {
    std::vector<bool> used(N + 1, false);
    if (s.degree <= N) tuples(N, s.degree, used, cur, out);
  }
  return out;
}

bool valid_label(const Summand& s, const Label& l, std::uint32_t N) {
  if (l.size() != s.degree) return false;
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (l[i] < 1 || l[i] > N) return false;
    if (s.kind == Kind::I && i > 0 && l[i] <= l[i - 1]) return false;
  }
  if (s.kind == Kind::J) {
    Label c = l;
    std::sort(c.begin(), c.end());
    if (std::adjacent_find(c.begin(), c.end()) != c.end()) return false;
  }
  return true;
}

// ------------------------------------------------------------ TruncElement

TruncElement TruncElement::basis(const StdObject& object, std::uint32_t level, std::size_t summand, Label label) {
  TruncElement e(object, level);
  e.add(summand, std::move(label), RatFunc(1));
  return e;
}

RatFunc TruncElement::get(std::size_t summand, const Label& label) const {
  auto it = coords_.find({summand, label});
  return it == coords_.end() ? RatFunc() : it->second;
}

void TruncElement::add(std::size_t summand, Label label, const RatFunc& c) {
  if (summand >= obj_.summands.size()) fail(ErrorKind::InvalidLabel, "summand index out of range");
  if (!valid_label(obj_.summands[summand], label, level_)) fail(ErrorKind::InvalidLabel, "label not valid at this level");
  if (c.is_zero()) return;
  auto [it, inserted] = coords_.try_emplace({summand, std::move(label)}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coords_.erase(it);
  }
}

TruncElement& TruncElement::operator+=(const TruncElement& o) {
  if (!(o.obj_ == obj_)) fail(ErrorKind::ObjectMismatch, "adding elements of different objects");
  if (o.level_ > level_) level_ = o.level_;
  for (const auto& [k, c] : o.coords_) add(k.first, k.second, c);
  return *this;
}

TruncElement& TruncElement::operator-=(const TruncElement& o) { return *this += o.scaled(RatFunc(-1)); }

TruncElement TruncElement::scaled(const RatFunc& c) const {
  TruncElement r(obj_, level_);
  if (c.is_zero()) return r;
  for (const auto& [k, v] : coords_) r.coords_.emplace(k, v * c);
  return r;
}

TruncElement TruncElement::at_level(std::uint32_t N) const {
  if (N < level_) fail(ErrorKind::LevelTooSmall, "cannot lower the level of an element");
  TruncElement r = *this;
  r.level_ = N;
  return r;
}

TruncElement TruncElement::act(const Perm& sigma) const {
  TruncElement r(obj_, level_);
  for (const auto& [k, v] : coords_) {
    r.add(k.first, move_label(k.second, sigma, obj_.summands[k.first].kind), firwb::act(sigma, v));
  }
  return r;
}

TruncElement TruncElement::map_coefficients(const std::function<RatFunc(const RatFunc&)>& f) const {
  TruncElement r(obj_, level_);
  for (const auto& [k, v] : coords_) r.add(k.first, k.second, f(v));
  return r;
}

Vec TruncElement::to_vector() const {
  Vec v;
  v.reserve(obj_.level_dim(level_));
  for (std::size_t s = 0; s < obj_.summands.size(); ++s) {
    for (const auto& l : labels(obj_.summands[s], level_)) v.push_back(get(s, l));
  }
  return v;
}

TruncElement TruncElement::from_vector(const StdObject& object, std::uint32_t level, const Vec& v) {
  TruncElement e(object, level);
  std::size_t k = 0;
  for (std::size_t s = 0; s < object.summands.size(); ++s) {
    for (const auto& l : labels(object.summands[s], level)) {
      if (k >= v.size()) fail(ErrorKind::InvalidInput, "vector too short for the object");
      e.add(s, l, v[k++]);
    }
  }
  if (k != v.size()) fail(ErrorKind::InvalidInput, "vector length differs from the level dimension");
  return e;
}

bool check_invariance(const TruncElement& e, std::uint32_t r) {
  for (const auto& [k, c] : e.coords()) {
    for (auto x : k.second) {
      if (x > r) return false;
    }
    if (max_xi(c) > r) return false;
  }
  for (std::uint32_t i = 1; i < r; ++i) {
    if (e.act(transposition(r, i, i + 1)) != e) return false;
  }
  return true;
}

// ------------------------------------------------------------ StdMap

StdMap::StdMap(StdObject source, StdObject target, std::vector<TruncElement> images)
    : src_(std::move(source)), tgt_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != src_.summands.size()) fail(ErrorKind::ObjectMismatch, "one image per source summand expected");
  for (std::size_t s = 0; s < images_.size(); ++s) {
    const auto& sm = src_.summands[s];
    auto& img = images_[s];
    if (!(img.object() == tgt_)) fail(ErrorKind::ObjectMismatch, "generator image lies in the wrong object");
    if (img.level() != sm.degree) {
      if (img.level() > sm.degree) fail(ErrorKind::InvalidInput, "generator image level exceeds the source degree");
      img = img.at_level(sm.degree);
    }
    for (const auto& [k, c] : img.coords()) {
      if (max_xi(c) > sm.degree || has_t_vars(c))
        fail(ErrorKind::InvalidInput, "generator image uses variables beyond the source degree");
    }
    if (sm.kind == Kind::I && !check_invariance(img, sm.degree))
      fail(ErrorKind::InvalidInput, "image of an I generator is not invariant");
  }
}

StdMap StdMap::identity(const StdObject& obj) {
  std::vector<TruncElement> imgs;
  for (std::size_t s = 0; s < obj.summands.size(); ++s) {
    Label l(obj.summands[s].degree);
    for (std::uint32_t i = 0; i < l.size(); ++i) l[i] = i + 1;
    imgs.push_back(TruncElement::basis(obj, obj.summands[s].degree, s, l));
  }
  return StdMap(obj, obj, std::move(imgs));
}

StdMap StdMap::zero(const StdObject& source, const StdObject& target) {
  std::vector<TruncElement> imgs;
  for (const auto& s : source.summands) imgs.emplace_back(target, s.degree);
  return StdMap(source, target, std::move(imgs));
}

StdMap StdMap::operator+(const StdMap& o) const {
  if (!(src_ == o.src_ && tgt_ == o.tgt_)) fail(ErrorKind::ObjectMismatch, "adding maps between different objects");
  StdMap r = *this;
  for (std::size_t s = 0; s < images_.size(); ++s) r.images_[s] += o.images_[s];
  return r;
}

StdMap StdMap::operator-(const StdMap& o) const {
  if (!(src_ == o.src_ && tgt_ == o.tgt_)) fail(ErrorKind::ObjectMismatch, "subtracting maps between different objects");
  StdMap r = *this;
  for (std::size_t s = 0; s < images_.size(); ++s) r.images_[s] -= o.images_[s];
  return r;
}

bool StdMap::is_zero() const {
  return std::all_of(images_.begin(), images_.end(), [](const TruncElement& e) { return e.is_zero(); });
}

TruncElement apply(const StdMap& f, std::size_t summand, const Label& label, std::uint32_t N) {
  if (summand >= f.source().summands.size()) fail(ErrorKind::InvalidLabel, "summand index out of range");
  const Summand& sm = f.source().summands[summand];
  if (!valid_label(sm, label, N)) fail(ErrorKind::InvalidLabel, "label not valid at this level");
  TruncElement out(f.target(), N);
  for (const auto& [k, c] : f.images()[summand].coords()) {
    out.add(k.first, move_label(k.second, label, f.target().summands[k.first].kind), move_coefficient(c, label));
  }
  return out;
}

TruncElement apply(const StdMap& f, const TruncElement& x) {
  if (!(x.object() == f.source())) fail(ErrorKind::ObjectMismatch, "element is not in the source object");
  TruncElement out(f.target(), x.level());
  for (const auto& [k, c] : x.coords()) out += apply(f, k.first, k.second, x.level()).scaled(c);
  return out;
}

ExactMatrix level_matrix(const StdMap& f, std::uint32_t N) {
  if (N < f.source().max_degree() || N < f.target().max_degree())
    fail(ErrorKind::LevelTooSmall, "level below the degrees of the objects");
  std::map<Coord, std::size_t> row;
  for (std::size_t s = 0; s < f.target().summands.size(); ++s) {
    for (auto& l : labels(f.target().summands[s], N)) row.emplace(Coord{s, std::move(l)}, row.size());
  }
  ExactMatrix m(row.size(), f.source().level_dim(N));
  std::size_t col = 0;
  for (std::size_t s = 0; s < f.source().summands.size(); ++s) {
    for (const auto& l : labels(f.source().summands[s], N)) {
      TruncElement img = apply(f, s, l, N);
      for (const auto& [k, c] : img.coords()) m(row.at(k), col) = c;
      ++col;
    }
  }
  return m;
}

StdMap compose(const StdMap& g, const StdMap& f) {
  if (!(f.target() == g.source())) fail(ErrorKind::ObjectMismatch, "maps are not composable");
  std::vector<TruncElement> imgs;
  for (const auto& img : f.images()) imgs.push_back(apply(g, img));
  return StdMap(f.source(), g.target(), std::move(imgs));
}

StdMap direct_sum(const StdMap& a, const StdMap& b) {
  StdObject src = a.source() + b.source();
  StdObject tgt = a.target() + b.target();
  std::size_t off = a.target().summands.size();
  std::vector<TruncElement> imgs;
  for (const auto& img : a.images()) {
    TruncElement e(tgt, img.level());
    for (const auto& [k, c] : img.coords()) e.add(k.first, k.second, c);
    imgs.push_back(std::move(e));
  }
  for (const auto& img : b.images()) {
    TruncElement e(tgt, img.level());
    for (const auto& [k, c] : img.coords()) e.add(k.first + off, k.second, c);
    imgs.push_back(std::move(e));
  }
  return StdMap(src, tgt, std::move(imgs));
}

// ------------------------------------------------------------ hom spaces

namespace {

// Permutation representation of S_r on the labels of a summand at level r.
SemilinearRep label_permutation_rep(const Summand& sm, std::uint32_t r) {
  GroupAction g = GroupAction::symmetric(r);
  auto labs = labels(sm, r);
  std::map<Label, std::size_t> idx;
  for (std::size_t i = 0; i < labs.size(); ++i) idx[labs[i]] = i;
  std::vector<ExactMatrix> mats;
  for (const auto& sigma : g.elements()) {
    ExactMatrix m(labs.size(), labs.size());
    for (std::size_t i = 0; i < labs.size(); ++i) m(idx.at(move_label(labs[i], sigma, sm.kind)), i) = RatFunc(1);
    mats.push_back(std::move(m));
  }
  return SemilinearRep::from_elements(std::move(g), labs.size(), std::move(mats));
}

}  // namespace

HomBasis hom_basis(std::uint32_t r, std::uint32_t s) {
  HomBasis hb;
  StdObject target = StdObject::I(s);
  Summand sm{Kind::I, s};
  for (const auto& l : labels(sm, r)) hb.k_basis.push_back(TruncElement::basis(target, r, 0, l));
  if (hb.k_basis.empty()) return hb;
  SemilinearRep rep = label_permutation_rep(sm, r);
  for (const auto& v : invariant_vectors(rep)) hb.invariant.push_back(TruncElement::from_vector(target, r, v));
  return hb;
}

// ------------------------------------------------------------ shift

ShiftDecomposition::ShiftDecomposition(std::uint32_t r) : r_(r) {
  if (r < 1) fail(ErrorKind::InvalidInput, "shift decomposition needs r >= 1");
}

StdObject ShiftDecomposition::split_object() const {
  return StdObject{{{Kind::I, r_}, {Kind::I, r_ - 1}}, 1};
}

namespace {

RatFunc unshift_coefficient(const RatFunc& c) {
  return c.rename([](std::uint32_t id) {
    Var v = Var::from_id(id);
    if (v.family() == Family::xi) return v.index() == 1 ? uvar(1).id() : xi(v.index() - 1).id();
    if (v.family() == Family::u) fail(ErrorKind::InvalidInput, "element already uses u variables");
    return id;
  });
}

RatFunc shift_coefficient(const RatFunc& c) {
  return c.rename([](std::uint32_t id) {
    Var v = Var::from_id(id);
    if (v.family() == Family::u) {
      if (v.index() != 1) fail(ErrorKind::InvalidInput, "unexpected u variable");
      return xi(1).id();
    }
    if (v.family() == Family::xi) return xi(v.index() + 1).id();
    return id;
  });
}

}  // namespace

Perm ShiftDecomposition::sharp(const Perm& sigma) {
  Perm p(sigma.size() + 1);
  p[0] = 1;
  for (std::size_t i = 0; i < sigma.size(); ++i) p[i + 1] = sigma[i] + 1;
  return p;
}

TruncElement ShiftDecomposition::forward(const TruncElement& x) const {
  if (x.object().summands.size() != 1 || !(x.object().summands[0] == Summand{Kind::I, r_}))
    fail(ErrorKind::ObjectMismatch, "forward expects an element of I^r");
  if (x.level() < 1) fail(ErrorKind::LevelTooSmall, "shifted elements live at level >= 1");
  TruncElement y(split_object(), x.level() - 1);
  for (const auto& [k, c] : x.coords()) {
    const Label& s = k.second;
    bool has_one = !s.empty() && s[0] == 1;
    Label l;
    for (auto v : s) {
      if (v != 1) l.push_back(v - 1);
    }
    y.add(has_one ? 1 : 0, l, unshift_coefficient(c));
  }
  return y;
}

TruncElement ShiftDecomposition::backward(const TruncElement& y) const {
  if (!(y.object() == split_object())) fail(ErrorKind::ObjectMismatch, "backward expects an element of I^r + I^{r-1}");
  TruncElement x(StdObject::I(r_), y.level() + 1);
  for (const auto& [k, c] : y.coords()) {
    Label l;
    if (k.first == 1) l.push_back(1);
    for (auto v : k.second) l.push_back(v + 1);
    x.add(0, l, shift_coefficient(c));
  }
  return x;
}

ExactMatrix ShiftDecomposition::forward_matrix(std::uint32_t N) const {
  StdObject src = StdObject::I(r_);
  std::map<Coord, std::size_t> row;
  StdObject tgt = split_object();
  for (std::size_t s = 0; s < tgt.summands.size(); ++s) {
    for (auto& l : labels(tgt.summands[s], N)) row.emplace(Coord{s, std::move(l)}, row.size());
  }
  auto cols = labels(src.summands[0], N + 1);
  ExactMatrix m(row.size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    TruncElement img = forward(TruncElement::basis(src, N + 1, 0, cols[j]));
    for (const auto& [k, c] : img.coords()) m(row.at(k), j) = c;
  }
  return m;
}

ExactMatrix ShiftDecomposition::backward_matrix(std::uint32_t N) const {
  StdObject src = split_object();
  std::map<Label, std::size_t> row;
  for (auto& l : labels({Kind::I, r_}, N + 1)) row.emplace(std::move(l), row.size());
  ExactMatrix m(row.size(), src.level_dim(N));
  std::size_t j = 0;
  for (std::size_t s = 0; s < src.summands.size(); ++s) {
    for (const auto& l : labels(src.summands[s], N)) {
      TruncElement img = backward(TruncElement::basis(src, N, s, l));
      for (const auto& [k, c] : img.coords()) m(row.at(k.second), j) = c;
      ++j;
    }
  }
  return m;
}

ExactMatrix omega_to_sigma(const StdObject& m, std::uint32_t n, std::uint32_t N) {
  if (N < n + m.max_degree()) fail(ErrorKind::LevelTooSmall, "level below shift plus degree");
  std::map<Coord, std::size_t> row;
  for (std::size_t s = 0; s < m.summands.size(); ++s) {
    for (auto& l : labels(m.summands[s], N)) row.emplace(Coord{s, std::move(l)}, row.size());
  }
  ExactMatrix out(row.size(), m.level_dim(N - n));
  std::size_t j = 0;
  for (std::size_t s = 0; s < m.summands.size(); ++s) {
    for (auto l : labels(m.summands[s], N - n)) {
      for (auto& v : l) v += n;
      out(row.at({s, l}), j++) = RatFunc(1);
    }
  }
  return out;
}

StdMap phi_decomposed(std::uint32_t r) {
  ShiftDecomposition sd(r);
  Label top(r);
  for (std::uint32_t i = 0; i < r; ++i) top[i] = i + 2;
  TruncElement img = sd.forward(TruncElement::basis(StdObject::I(r), r + 1, 0, top));
  StdObject src{{{Kind::I, r}}, 1};
  return StdMap(src, sd.split_object(), {img});
}

bool generated_in_degree(const StdMap& f, std::uint32_t g, std::uint32_t N) {
  if (N < g + 2) fail(ErrorKind::LevelTooSmall, "generation test needs N >= g + 2");
  ExactMatrix F = level_matrix(f, N);
  const StdObject& t = f.target();
  // Rows covered by unit vectors are dropped; the rest must be filled by F.
  std::vector<std::size_t> keep;
  std::size_t r = 0;
  for (const auto& s : t.summands) {
    std::size_t cnt = label_count(s, N);
    if (s.degree > g) {
      for (std::size_t i = 0; i < cnt; ++i) keep.push_back(r + i);
    }
    r += cnt;
  }
  if (keep.empty()) return true;
  ExactMatrix sub(keep.size(), F.cols());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = 0; j < F.cols(); ++j) sub(i, j) = F(keep[i], j);
  }
  return rank(sub) == keep.size();
}

JStructure j_structure(std::uint32_t n) {
  Summand sm{Kind::J, n};
  SemilinearRep rep = label_permutation_rep(sm, n);
  auto b = invariant_vectors(rep);
  std::size_t m = b.size();
  StdObject jn = StdObject::J(n);
  StdObject is;
  for (std::size_t k = 0; k < m; ++k) is.summands.push_back({Kind::I, n});
  std::vector<TruncElement> to_imgs;
  for (const auto& v : b) to_imgs.push_back(TruncElement::from_vector(jn, n, v));
  ExactMatrix bm = ExactMatrix::from_columns(b, m);
  ExactMatrix binv = inverse(bm);
  Label top(n);
  for (std::uint32_t i = 0; i < n; ++i) top[i] = i + 1;
  TruncElement g(is, n);
  // the identity tuple is the first label in lexicographic order
  for (std::size_t k = 0; k < m; ++k) g.add(k, top, binv(k, 0));
  JStructure js;
  js.to_j = StdMap(is, jn, std::move(to_imgs));
  js.from_j = StdMap(jn, is, {g});
  return js;
}

}  // namespace firwb
