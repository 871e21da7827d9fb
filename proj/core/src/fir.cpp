#include "firwb/fir.hpp"

#include <algorithm>

#include "firwb/error.hpp"

namespace firwb {

std::vector<Label> injections(std::uint32_t n, std::uint32_t m) {
  if (n > m) return {};
  return labels({Kind::J, n}, m);
}

namespace {

RatFunc swap_family(const RatFunc& c, Family from, Family to) {
  if (c.is_constant()) return c;
  return c.rename([&](std::uint32_t id) {
    Var v = Var::from_id(id);
    return v.family() == from ? Var(to, v.index()).id() : id;
  });
}

}  // namespace

RatFunc t_to_xi(const RatFunc& c) { return swap_family(c, Family::t, Family::xi); }
RatFunc xi_to_t(const RatFunc& c) { return swap_family(c, Family::xi, Family::t); }

FirMorphism FirMorphism::identity(std::uint32_t n) {
  Label id(n);
  for (std::uint32_t i = 0; i < n; ++i) id[i] = i + 1;
  return single(n, n, id, RatFunc(1));
}

FirMorphism FirMorphism::single(std::uint32_t source, std::uint32_t target, Label phi, const RatFunc& c) {
  FirMorphism f(source, target);
  f.add_term(std::move(phi), c);
  return f;
}

RatFunc FirMorphism::coefficient(const Label& phi) const {
  auto it = terms_.find(phi);
  return it == terms_.end() ? RatFunc() : it->second;
}

void FirMorphism::add_term(Label phi, const RatFunc& c) {
  if (!valid_label({Kind::J, src_}, phi, tgt_)) {
    bool in_range = phi.size() == src_ && std::all_of(phi.begin(), phi.end(), [&](auto i) { return i >= 1 && i <= tgt_; });
    fail(in_range ? ErrorKind::NonInjectiveMap : ErrorKind::InvalidInput, "not an injection [n] -> [m]");
  }
  for (auto id : c.variables()) {
    Var v = Var::from_id(id);
    if (v.family() != Family::t || v.index() < 1 || v.index() > tgt_)
      fail(ErrorKind::InvalidInput, "coefficient uses a variable other than t_1..t_m");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(std::move(phi), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FirMorphism FirMorphism::operator+(const FirMorphism& o) const {
  if (src_ != o.src_ || tgt_ != o.tgt_) fail(ErrorKind::ObjectMismatch, "adding morphisms between different objects");
  FirMorphism r = *this;
  for (const auto& [phi, c] : o.terms_) r.add_term(phi, c);
  return r;
}

FirMorphism FirMorphism::operator-(const FirMorphism& o) const { return *this + o.scaled(RatFunc(-1)); }

FirMorphism FirMorphism::scaled(const RatFunc& c) const {
  FirMorphism r(src_, tgt_);
  for (const auto& [phi, d] : terms_) r.add_term(phi, d * c);
  return r;
}

FirMorphism compose(const FirMorphism& f, const FirMorphism& g) {
  if (f.target() != g.source()) fail(ErrorKind::ObjectMismatch, "morphisms are not composable");
  FirMorphism h(f.source(), g.target());
  for (const auto& [phi, c] : f.terms()) {
    for (const auto& [psi, d] : g.terms()) {
      Label comp(phi.size());
      for (std::size_t i = 0; i < phi.size(); ++i) comp[i] = psi[phi[i] - 1];
      std::map<std::uint32_t, std::uint32_t> j;
      for (std::size_t i = 0; i < psi.size(); ++i) j[static_cast<std::uint32_t>(i + 1)] = psi[i];
      h.add_term(std::move(comp), c.rename_indices(Family::t, j) * d);
    }
  }
  return h;
}

StdMap realize(const FirMorphism& f) {
  StdObject src = StdObject::J(f.target());
  StdObject tgt = StdObject::J(f.source());
  TruncElement img(tgt, f.target());
  for (const auto& [phi, c] : f.terms()) img.add(0, phi, t_to_xi(c));
  return StdMap(src, tgt, {img});
}

}  // namespace firwb
